#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "macaulay/gaussian.hpp"
#include "macaulay/monomial.hpp"

namespace macaulay {

/// Sparse homogeneous polynomial with exact coefficients. The zero
/// polynomial keeps an explicit degree tag; no zero coefficient is stored.
template <class Coeff>
class HomogPoly {
 public:
  using coeff_type = Coeff;
  using term_map = std::map<Monomial, Coeff>;

  HomogPoly(int n_vars, int degree) : n_vars_(n_vars), degree_(degree) {
    if (n_vars < 1) throw std::invalid_argument("HomogPoly: n_vars must be positive");
    if (degree < 0) throw std::invalid_argument("HomogPoly: degree must be nonnegative");
  }

  static HomogPoly monomial(const Monomial& m, Coeff c = Coeff(1)) {
    HomogPoly p(m.n_vars(), m.degree());
    p.add_term(m, c);
    return p;
  }
  static HomogPoly variable(int n_vars, int i) { return monomial(Monomial::variable(n_vars, i)); }
  static HomogPoly constant(int n_vars, Coeff c) { return monomial(Monomial::one(n_vars), std::move(c)); }

  int n_vars() const { return n_vars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// A polynomial that is a single monomial with any nonzero coefficient.
  bool is_monomial() const { return terms_.size() == 1; }

  Coeff coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  HomogPoly& add_term(const Monomial& m, const Coeff& c) {
    if (m.n_vars() != n_vars_) throw std::invalid_argument("HomogPoly: variable count mismatch");
    if (m.degree() != degree_)
      throw std::invalid_argument("HomogPoly: term " + m.to_string() + " has degree " +
                                  std::to_string(m.degree()) + ", expected " + std::to_string(degree_));
    if (macaulay::is_zero(c)) return *this;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (macaulay::is_zero(it->second)) terms_.erase(it);
    }
    return *this;
  }

  HomogPoly& operator+=(const HomogPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  HomogPoly& operator-=(const HomogPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Coeff(-c));
    return *this;
  }
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }

  HomogPoly scaled(const Coeff& c) const {
    HomogPoly r(n_vars_, degree_);
    if (macaulay::is_zero(c)) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, Coeff(x * c));
    return r;
  }

  friend HomogPoly operator*(const HomogPoly& f, const HomogPoly& g) {
    if (f.n_vars_ != g.n_vars_) throw std::invalid_argument("poly_multiply: variable count mismatch");
    HomogPoly r(f.n_vars_, f.degree_ + g.degree_);
    for (const auto& [mf, cf] : f.terms_)
      for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, Coeff(cf * cg));
    return r;
  }

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Coefficient row in the given basis (which must have this degree).
  std::vector<Coeff> coefficients_in(const MonomialBasis& basis) const {
    if (basis.degree() != degree_ || basis.n_vars() != n_vars_)
      throw std::invalid_argument("HomogPoly: basis does not match degree");
    std::vector<Coeff> row(basis.size(), Coeff(0));
    for (const auto& [m, c] : terms_) row[basis.index_of(m)] = c;
    return row;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += coeff_string(it->second) + "*" + it->first.to_string();
    }
    return out;
  }

 private:
  static std::string coeff_string(const Rational& c) { return c.get_str(); }
  static std::string coeff_string(const GaussianRational& c) { return c.to_string(); }

  void check_compatible(const HomogPoly& o) const {
    if (o.n_vars_ != n_vars_ || o.degree_ != degree_)
      throw std::invalid_argument("HomogPoly: operands differ in variables or degree");
  }

  int n_vars_;
  int degree_;
  term_map terms_;
};

using RationalPoly = HomogPoly<Rational>;
using ComplexPoly = HomogPoly<GaussianRational>;

template <class Coeff>
HomogPoly<Coeff> poly_multiply(const HomogPoly<Coeff>& f, const HomogPoly<Coeff>& g) {
  return f * g;
}

inline ComplexPoly to_complex(const RationalPoly& f) {
  ComplexPoly r(f.n_vars(), f.degree());
  for (const auto& [m, c] : f.terms()) r.add_term(m, GaussianRational(c));
  return r;
}

}  // namespace macaulay
