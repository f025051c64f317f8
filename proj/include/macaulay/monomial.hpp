#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace macaulay {

/// Exponent vector z_1^{e_1} ... z_n^{e_n}. Ordered lexicographically by
/// exponents (z_1 > z_2 > ...), which is the lex monomial order.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {
    for (int x : exponents)
      if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  static Monomial one(int n_vars) { return Monomial(std::vector<int>(static_cast<std::size_t>(n_vars), 0)); }
  static Monomial variable(int n_vars, int i) {
    Monomial m = one(n_vars);
    m.exponents.at(static_cast<std::size_t>(i)) = 1;
    return m;
  }

  int n_vars() const { return static_cast<int>(exponents.size()); }
  int degree() const {
    int d = 0;
    for (int x : exponents) d += x;
    return d;
  }

  bool divides(const Monomial& other) const {
    if (other.exponents.size() != exponents.size()) return false;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > other.exponents[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.exponents.size() != b.exponents.size())
      throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
    return r;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += "z" + std::to_string(i + 1);
      if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
  }
};

/// Graded reverse lexicographic comparison for monomials of equal degree:
/// a > b iff the last nonzero entry of a - b is negative.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.exponents.size(); i-- > 0;) {
    const int diff = a.exponents[i] - b.exponents[i];
    if (diff != 0) return diff < 0;
  }
  return false;
}

/// All monomials of degree d in n_vars variables, in descending grevlex
/// order (z1^d first, z_n^d last).
inline std::vector<Monomial> monomials_of_degree(int n_vars, int d) {
  if (n_vars < 1) throw std::invalid_argument("monomials_of_degree: n_vars must be positive");
  if (d < 0) return {};
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(n_vars), 0);
  // Enumerate compositions of d into n_vars parts.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n_vars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

/// Column index of each monomial within a fixed basis.
class MonomialBasis {
 public:
  MonomialBasis(int n_vars, int d) : n_vars_(n_vars), degree_(d), monomials_(monomials_of_degree(n_vars, d)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  int n_vars() const { return n_vars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("MonomialBasis: monomial " + m.to_string() + " not in basis");
    return it->second;
  }

 private:
  int n_vars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace macaulay
