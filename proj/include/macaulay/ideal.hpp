#pragma once

// Graded pieces of homogeneous ideals, Hilbert functions, and the Macaulay
// growth bounds in both their quotient (degree-dependent) and ideal
// (variable-count-dependent) forms.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "macaulay/binom.hpp"
#include "macaulay/elimination.hpp"
#include "macaulay/polynomial.hpp"

namespace macaulay {

template <class Coeff>
struct GradedIdeal {
  int n_vars = 1;
  std::vector<HomogPoly<Coeff>> generators;  // empty: the zero ideal

  GradedIdeal() = default;
  GradedIdeal(int n, std::vector<HomogPoly<Coeff>> gens) : n_vars(n), generators(std::move(gens)) { validate(); }

  void validate() const {
    if (n_vars < 1) throw std::invalid_argument("GradedIdeal: n_vars must be positive");
    for (const auto& g : generators) {
      if (g.n_vars() != n_vars) throw std::invalid_argument("GradedIdeal: generator variable count mismatch");
      if (g.is_zero()) throw std::invalid_argument("GradedIdeal: zero generator");
    }
  }

  bool is_monomial() const {
    return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.is_monomial(); });
  }
};

using RationalIdeal = GradedIdeal<Rational>;

struct HilbertRecord {
  int degree = 0;
  Integer h_ideal;
  Integer h_quotient;
};

enum class RankMode {
  exact,            // Bareiss over the integers
  modular,          // largest rank mod three primes >= 2^30 (probabilistic)
  modular_checked,  // modular rank confirmed against the exact rank
};

/// Rows m * g for every generator g of degree e <= d and monomial m of
/// degree d - e, expressed in the degree-d grevlex basis.
template <class Coeff>
DenseRows<Coeff> graded_piece_rows(const GradedIdeal<Coeff>& ideal, int d, const MonomialBasis& basis) {
  DenseRows<Coeff> rows;
  for (const auto& g : ideal.generators) {
    if (g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(ideal.n_vars, d - g.degree())) {
      std::vector<Coeff> row(basis.size(), Coeff(0));
      for (const auto& [gm, c] : g.terms()) row[basis.index_of(gm * m)] = c;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// Three distinct primes just above 2^30, chosen from the seed.
inline std::vector<std::uint64_t> modular_primes(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> primes;
  while (primes.size() < 3) {
    Integer candidate = Integer(1) << 30;
    candidate += static_cast<unsigned long>(gen() % (1u << 20));
    mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    const auto p = candidate.get_ui();
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  return primes;
}

/// Largest rank of the matrix over three random prime fields; a lower bound
/// for the rational rank that equals it with overwhelming probability.
inline std::size_t modular_rank_estimate(const DenseRows<Rational>& rows, std::uint64_t seed) {
  std::size_t best = 0;
  for (auto p : modular_primes(seed))
    if (auto r = modular_rank(rows, p)) best = std::max(best, *r);
  return best;
}

/// dim_k I_d.
template <class Coeff>
std::size_t graded_piece_dim(const GradedIdeal<Coeff>& ideal, int d, RankMode mode = RankMode::exact) {
  if (d < 0) return 0;
  const MonomialBasis basis(ideal.n_vars, d);
  const auto rows = graded_piece_rows(ideal, d, basis);
  if constexpr (std::is_same_v<Coeff, Rational>) {
    const auto seed = static_cast<std::uint64_t>(d) + 1;
    if (mode == RankMode::modular) return modular_rank_estimate(rows, seed);
    if (mode == RankMode::modular_checked) {
      const std::size_t exact = exact_rank(rows);
      if (modular_rank_estimate(rows, seed) != exact)
        throw std::logic_error("graded_piece_dim: modular and exact ranks disagree");
      return exact;
    }
  }
  return exact_rank(rows);
}

template <class Coeff>
HilbertRecord hilbert_record(const GradedIdeal<Coeff>& ideal, int d, RankMode mode = RankMode::exact) {
  HilbertRecord rec;
  rec.degree = d;
  rec.h_ideal = static_cast<unsigned long>(graded_piece_dim(ideal, d, mode));
  rec.h_quotient = binom_coeff(ideal.n_vars - 1 + d, d) - rec.h_ideal;
  return rec;
}

/// Largest H_{R/I}(d+1) permitted by H_{R/I}(d) = h_d: (h_d)_(d)|_1^1.
inline Integer macaulay_bound_quotient(const Integer& h_d, int d) {
  if (d < 1) throw std::invalid_argument("macaulay_bound_quotient: d must be positive");
  return shift_apply(h_d, d, {1, 1});
}

/// Smallest H_I(d+1) permitted by H_I(d) = h_d: (h_d)_(n-1)|_0^1. Depends on
/// the number of variables only, never on d.
inline Integer macaulay_bound_ideal(const Integer& h_d, int n_vars) {
  if (n_vars < 2) throw std::invalid_argument("macaulay_bound_ideal: n_vars must be at least 2");
  return shift_apply(h_d, n_vars - 1, {0, 1});
}

/// Largest H_I(d) compatible with H_I(d+1) = h_d1: (h_d1)_(n-1)|_0^{-1}.
inline Integer macaulay_reverse_bound_ideal(const Integer& h_d1, int n_vars) {
  if (n_vars < 2) throw std::invalid_argument("macaulay_reverse_bound_ideal: n_vars must be at least 2");
  return shift_apply(h_d1, n_vars - 1, {0, -1});
}

struct MacaulayCheck {
  int degree = 0;  // compares degree and degree + 1
  Integer h_ideal, h_ideal_next, h_quotient, h_quotient_next;
  Integer ideal_lower_bound, quotient_upper_bound, reverse_upper_bound;
  bool forward_ok = false;
  bool quotient_ok = false;
  bool reverse_ok = false;

  bool all_ok() const { return forward_ok && quotient_ok && reverse_ok; }
};

/// Checks every Macaulay bound between consecutive degrees 1 <= d < d_max.
inline std::vector<MacaulayCheck> verify_macaulay(const std::vector<HilbertRecord>& hilbert, int n_vars) {
  if (n_vars < 2) throw std::invalid_argument("verify_macaulay: n_vars must be at least 2");
  std::vector<MacaulayCheck> out;
  for (std::size_t i = 0; i + 1 < hilbert.size(); ++i) {
    const auto& cur = hilbert[i];
    const auto& next = hilbert[i + 1];
    if (cur.degree < 1 || next.degree != cur.degree + 1)
      throw std::invalid_argument("verify_macaulay: Hilbert records must be consecutive degrees >= 1");
    MacaulayCheck c;
    c.degree = cur.degree;
    c.h_ideal = cur.h_ideal;
    c.h_ideal_next = next.h_ideal;
    c.h_quotient = cur.h_quotient;
    c.h_quotient_next = next.h_quotient;
    c.ideal_lower_bound = macaulay_bound_ideal(cur.h_ideal, n_vars);
    c.quotient_upper_bound = macaulay_bound_quotient(cur.h_quotient, cur.degree);
    c.reverse_upper_bound = macaulay_reverse_bound_ideal(next.h_ideal, n_vars);
    c.forward_ok = next.h_ideal >= c.ideal_lower_bound;
    c.quotient_ok = next.h_quotient <= c.quotient_upper_bound;
    c.reverse_ok = cur.h_ideal <= c.reverse_upper_bound;
    out.push_back(std::move(c));
  }
  return out;
}

template <class Coeff>
std::vector<HilbertRecord> hilbert_function(const GradedIdeal<Coeff>& ideal, int d_from, int d_to,
                                                 RankMode mode = RankMode::exact) {
  std::vector<HilbertRecord> out;
  for (int d = d_from; d <= d_to; ++d) out.push_back(hilbert_record(ideal, d, mode));
  return out;
}

template <class Coeff>
std::vector<MacaulayCheck> verify_macaulay(const GradedIdeal<Coeff>& ideal, int d_max,
                                           RankMode mode = RankMode::exact) {
  if (d_max < 1) throw std::invalid_argument("verify_macaulay: d_max must be positive");
  return verify_macaulay(hilbert_function(ideal, 1, d_max, mode), ideal.n_vars);
}

/// For every split A + B = binomial(n-1+d, d):
///   A_(n-1)|_0^1 + B_(d)|_1^1 == binomial(n+d, d+1).
inline bool equivalence_bridge_check(int n_vars, int d) {
  if (n_vars < 2 || d < 1) throw std::invalid_argument("equivalence_bridge_check: need n_vars >= 2, d >= 1");
  const Integer total = binom_coeff(n_vars - 1 + d, d);
  const Integer target = binom_coeff(n_vars + d, d + 1);
  for (Integer a = 0; a <= total; ++a) {
    const Integer b = total - a;
    if (shift_apply(a, n_vars - 1, {0, 1}) + shift_apply(b, d, {1, 1}) != target) return false;
  }
  return true;
}

}  // namespace macaulay
