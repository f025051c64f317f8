#pragma once

// Brute-force reference implementations and seeded instance generators.
//
// Randomness: std::mt19937_64 seeded with the 64-bit seed; a value in
// [lo, hi] is lo + (x mod (hi - lo + 1)) for the next raw output x. Both
// steps are fully specified, so corpora are reproducible on any platform.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "macaulay/binom.hpp"
#include "macaulay/hermitian.hpp"
#include "macaulay/ideal.hpp"
#include "macaulay/polynomial.hpp"

namespace macaulay::oracle {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  long uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }
  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Macaulay representations by exhaustive search.

namespace detail {

inline std::uint64_t small_binom(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace detail

inline constexpr std::uint64_t kBruteRepMaxValue = 100000;
inline constexpr int kBruteRepMaxIndex = 8;

/// Enumerates every strictly decreasing (a_n, a_{n-1}, ..., a_delta) with
/// a_j >= j whose binomial sum is A, and returns the single solution.
/// Throws std::logic_error if the solution is not unique.
inline MacaulayRep brute_rep_oracle(std::uint64_t A, int n) {
  if (A > kBruteRepMaxValue || n < 1 || n > kBruteRepMaxIndex)
    throw std::invalid_argument("brute_rep_oracle: requires A <= 100000 and 1 <= n <= 8");
  std::vector<std::vector<std::uint64_t>> solutions;
  std::vector<std::uint64_t> tops;
  auto search = [&](auto&& self, int j, std::uint64_t upper, std::uint64_t remaining) -> void {
    if (remaining == 0) {
      solutions.push_back(tops);
      return;
    }
    if (j < 1) return;
    for (std::uint64_t a = static_cast<std::uint64_t>(j); a < upper; ++a) {
      const std::uint64_t c = detail::small_binom(a, static_cast<std::uint64_t>(j));
      if (c > remaining) break;
      tops.push_back(a);
      self(self, j - 1, a, remaining - c);
      tops.pop_back();
    }
  };
  search(search, n, A + static_cast<std::uint64_t>(n) + 1, A);
  if (solutions.size() != 1)
    throw std::logic_error("brute_rep_oracle: found " + std::to_string(solutions.size()) + " representations");
  MacaulayRep rep;
  rep.index = n;
  int j = n;
  for (auto a : solutions.front()) rep.terms.push_back({Integer(static_cast<unsigned long>(a)), j--});
  return rep;
}

// ---------------------------------------------------------------------------
// Monomial ideals.

/// Number of degree-d monomials divisible by some generator.
inline std::size_t brute_hilbert_monomial(const RationalIdeal& ideal, int d) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators) {
    if (!g.is_monomial()) throw std::invalid_argument("brute_hilbert_monomial: generator is not a monomial");
    gens.push_back(g.terms().begin()->first);
  }
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(ideal.n_vars, d))
    for (const auto& g : gens)
      if (g.divides(m)) {
        ++count;
        break;
      }
  return count;
}

/// Ideal generated by the k lex-largest monomials of degree d.
inline RationalIdeal lex_segment_ideal(int n_vars, int d, std::size_t k) {
  auto mons = monomials_of_degree(n_vars, d);
  if (k > mons.size()) throw std::invalid_argument("lex_segment_ideal: k exceeds the number of monomials");
  std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
  RationalIdeal ideal;
  ideal.n_vars = n_vars;
  for (std::size_t i = 0; i < k; ++i) ideal.generators.push_back(RationalPoly::monomial(mons[i]));
  return ideal;
}

/// Every monomial ideal in min_vars..max_vars variables with at most
/// max_gens distinct monomial generators of degree 1..max_degree (the zero
/// ideal included).
inline std::vector<RationalIdeal> exhaustive_monomial_corpus(int min_vars, int max_vars, int max_gens,
                                                             int max_degree) {
  std::vector<RationalIdeal> out;
  for (int n = min_vars; n <= max_vars; ++n) {
    std::vector<Monomial> pool;
    for (int e = 1; e <= max_degree; ++e)
      for (auto& m : monomials_of_degree(n, e)) pool.push_back(std::move(m));
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      RationalIdeal ideal;
      ideal.n_vars = n;
      for (auto i : pick) ideal.generators.push_back(RationalPoly::monomial(pool[i]));
      out.push_back(std::move(ideal));
      if (static_cast<int>(pick.size()) == max_gens) return;
      for (std::size_t i = start; i < pool.size(); ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

enum class CorpusKind { monomial, rational, mixed };

struct CorpusSpec {
  int min_vars = 2, max_vars = 4;
  int min_gens = 1, max_gens = 3;
  int min_degree = 1, max_degree = 3;
  int d_max = 6;
  std::size_t count = 200;
  CorpusKind kind = CorpusKind::rational;
  std::uint64_t seed = 42;

  void validate() const {
    if (min_vars < 1 || min_vars > max_vars || min_gens < 0 || min_gens > max_gens || min_degree < 1 ||
        min_degree > max_degree || d_max < 1)
      throw std::invalid_argument("CorpusSpec: empty or invalid range");
  }
};

/// Random nonzero rational p/q with |p| <= 5, 1 <= q <= 3.
inline Rational random_rational(Rng& rng) {
  long num = 0;
  while (num == 0) num = rng.uniform(-5, 5);
  Rational r(num, rng.uniform(1, 3));
  r.canonicalize();
  return r;
}

inline RationalPoly random_generator(Rng& rng, int n, int degree, bool monomial_only) {
  const auto mons = monomials_of_degree(n, degree);
  if (monomial_only)
    return RationalPoly::monomial(mons[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(mons.size()) - 1))]);
  RationalPoly g(n, degree);
  for (const auto& m : mons)
    if (rng.coin()) g.add_term(m, random_rational(rng));
  if (g.is_zero()) g.add_term(mons[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(mons.size()) - 1))],
                              random_rational(rng));
  return g;
}

/// spec.count ideals, each drawn independently: variable count, generator
/// count, then each generator's degree and coefficients.
inline std::vector<RationalIdeal> random_corpus(const CorpusSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<RationalIdeal> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    RationalIdeal ideal;
    ideal.n_vars = static_cast<int>(rng.uniform(spec.min_vars, spec.max_vars));
    const long k = rng.uniform(spec.min_gens, spec.max_gens);
    const bool monomial = spec.kind == CorpusKind::monomial || (spec.kind == CorpusKind::mixed && rng.coin());
    for (long g = 0; g < k; ++g) {
      const int degree = static_cast<int>(rng.uniform(spec.min_degree, spec.max_degree));
      ideal.generators.push_back(random_generator(rng, ideal.n_vars, degree, monomial));
    }
    out.push_back(std::move(ideal));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian instances.

inline GaussianRational random_gaussian(Rng& rng, long bound = 2) {
  return {Rational(rng.uniform(-bound, bound)), Rational(rng.uniform(-bound, bound))};
}

inline ComplexPoly random_complex_poly(Rng& rng, int n, int d) {
  ComplexPoly g(n, d);
  for (const auto& m : monomials_of_degree(n, d))
    if (rng.uniform(0, 2) != 0) g.add_term(m, random_gaussian(rng));
  if (g.is_zero()) {
    const auto mons = monomials_of_degree(n, d);
    g.add_term(mons[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(mons.size()) - 1))], GaussianRational(1));
  }
  return g;
}

/// Seeded sum of r random signed, weighted squares with Gaussian-integer
/// coefficients (weights 1, 1/2 or 1/3), r uniform in [1, dim].
inline HermitianBiform random_hermitian_instance(int n_vars, int d, std::uint64_t seed) {
  Rng rng(seed);
  const long dim = static_cast<long>(binom_coeff(n_vars - 1 + d, d).get_ui());
  const long r = rng.uniform(1, dim);
  std::vector<SignedSquare> squares;
  for (long i = 0; i < r; ++i) {
    ComplexPoly g(n_vars, d);
    for (const auto& m : monomials_of_degree(n_vars, d))
      if (rng.uniform(0, 2) != 0) g.add_term(m, random_gaussian(rng));
    if (g.is_zero()) continue;
    squares.push_back({rng.coin() ? 1 : -1, Rational(1, rng.uniform(1, 3)), std::move(g)});
  }
  return biform_from_squares(n_vars, d, squares);
}

/// Random Hermitian matrix; about a third of the seeds give a zero diagonal.
inline ComplexMatrix random_hermitian_matrix(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  const bool zero_diagonal = rng.uniform(0, 2) == 0;
  ComplexMatrix a(dim, std::vector<GaussianRational>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    if (!zero_diagonal && rng.uniform(0, 3) != 0) a[i][i] = GaussianRational(Rational(rng.uniform(-3, 3), rng.uniform(1, 2)));
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (rng.uniform(0, 2) == 0) continue;
      const GaussianRational x(Rational(rng.uniform(-3, 3), rng.uniform(1, 3)),
                               Rational(rng.uniform(-3, 3), rng.uniform(1, 3)));
      a[i][j] = x;
      a[j][i] = x.conj();
    }
  }
  return a;
}

/// Random invertible matrix L * U (unit lower triangular times upper
/// triangular with nonzero diagonal).
inline ComplexMatrix random_invertible_matrix(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix lower = identity_matrix(dim), upper(dim, std::vector<GaussianRational>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) lower[i][j] = random_gaussian(rng);
    GaussianRational diag;
    while (diag.is_zero()) diag = random_gaussian(rng);
    upper[i][i] = diag;
    for (std::size_t j = i + 1; j < dim; ++j) upper[i][j] = random_gaussian(rng);
  }
  ComplexMatrix c(dim, std::vector<GaussianRational>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k <= i; ++k)
      for (std::size_t j = k; j < dim; ++j) c[i][j] += lower[i][k] * upper[k][j];
  return c;
}

/// ||z||^{2d} as a biform of bidegree (d, d).
inline HermitianBiform norm_power_biform(int n_vars, int d) {
  ComplexMatrix one{{GaussianRational(1)}};
  return multiply_norm_power(HermitianBiform(n_vars, 0, std::move(one)), d);
}

/// A triple (M, l, F = M * ||z||^{2l}) with F a sum of squared norms.
struct SosInstance {
  HermitianBiform m;
  int l = 1;
  HermitianBiform f;
  SignaturePair signature;  // of M
  std::size_t product_rank = 0;
  bool pure = false;  // M itself is a sum of squares (q = 0)
};

namespace detail {

// multinomial(alpha) and max of |z^alpha|^2 on the unit sphere.
inline Rational multinomial(const Monomial& m) {
  Integer num = 1;
  int total = 0;
  for (int e : m.exponents) {
    total += e;
    num *= binom_coeff(total, e);
  }
  return Rational(num);
}

inline Rational sphere_max(const Monomial& m) {
  const int d = m.degree();
  Rational r(1);
  for (int e : m.exponents) {
    Rational share(e, d);
    share.canonicalize();
    for (int k = 0; k < e; ++k) r *= share;
  }
  return r;
}

}  // namespace detail

/// Builds an instance from the sum-of-squares side. Pure family:
/// M = sum w_i |g_i|^2 and any l works. Indefinite family (d >= 2):
/// M = ||z||^{2d} + sum w_i |g_i|^2 - c |z^alpha|^2 where c exceeds the
/// multinomial coefficient of alpha (so q >= 1) while c * max|z^alpha|^2 < 1
/// keeps M positive on the sphere; the smallest l <= l_max is then searched.
/// Returns nullopt when no l <= l_max works.
inline std::optional<SosInstance> sos_instance(int n_vars, int d, std::uint64_t seed, int l_max) {
  Rng rng(seed);
  const auto dim = static_cast<long>(binom_coeff(n_vars - 1 + d, d).get_ui());
  std::vector<SignedSquare> squares;

  std::vector<Monomial> mixed;
  for (auto& m : monomials_of_degree(n_vars, d))
    if (detail::multinomial(m) > 1) mixed.push_back(m);
  const bool pure = mixed.empty() || rng.uniform(0, 2) == 0;

  if (pure) {
    const long k = rng.uniform(1, dim);
    for (long i = 0; i < k; ++i)
      squares.push_back({1, Rational(1, rng.uniform(1, 3)), random_complex_poly(rng, n_vars, d)});
    SosInstance inst{biform_from_squares(n_vars, d, squares), static_cast<int>(rng.uniform(1, std::max(1, l_max))),
                     HermitianBiform(n_vars, d), {}, 0, true};
    inst.f = multiply_norm_power(inst.m, inst.l);
    inst.signature = biform_signature(inst.m);
    inst.product_rank = biform_rank(inst.f);
    if (!is_sum_of_squares(inst.f)) throw std::logic_error("sos_instance: pure instance is not SOS");
    return inst;
  }

  const long k = rng.uniform(0, 2);
  for (long i = 0; i < k; ++i) squares.push_back({1, Rational(1, rng.uniform(4, 8)), random_complex_poly(rng, n_vars, d)});
  HermitianBiform m = norm_power_biform(n_vars, d) + biform_from_squares(n_vars, d, squares);

  const auto& alpha = mixed[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(mixed.size()) - 1))];
  const Rational mult = detail::multinomial(alpha);
  const Rational cap = 1 / detail::sphere_max(alpha);
  // c = mult + frac * (cap - mult), frac in {1/8, ..., 5/8}
  const Rational frac(rng.uniform(1, 5), 8);
  Rational c = mult + frac * (cap - mult);
  c.canonicalize();
  const std::vector<SignedSquare> neg{{-1, c, ComplexPoly::monomial(alpha, GaussianRational(1))}};
  m = m + biform_from_squares(n_vars, d, neg);

  const auto l = find_min_sos_exponent(m, l_max);
  if (!l) return std::nullopt;
  SosInstance inst{m, *l, multiply_norm_power(m, *l), biform_signature(m), 0, false};
  inst.product_rank = biform_rank(inst.f);
  inst.pure = inst.signature.q == 0;
  return inst;
}

}  // namespace macaulay::oracle
