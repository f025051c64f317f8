#pragma once

// Bihomogeneous Hermitian polynomials
//
//   M(z, conj z) = Z_d^H * A * Z_d,
//
// where Z_d is the column of degree-d monomials in descending grevlex order
// and A is a Hermitian matrix over Q(i). Entry A(alpha, beta) is the
// coefficient of conj(z^alpha) * z^beta.
//
// Rank and signature are computed exactly: rank by fraction-free elimination
// over Z[i], signature by Hermitian congruence diagonalization (Sylvester's
// law of inertia), never via eigenvalues.

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "macaulay/binom.hpp"
#include "macaulay/elimination.hpp"
#include "macaulay/ideal.hpp"
#include "macaulay/polynomial.hpp"

namespace macaulay {

using ComplexMatrix = DenseRows<GaussianRational>;

inline ComplexMatrix identity_matrix(std::size_t n) {
  ComplexMatrix m(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = GaussianRational(1);
  return m;
}

inline bool is_hermitian(const ComplexMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = i; j < a.size(); ++j)
      if (!(a[i][j] == a[j][i].conj())) return false;
  }
  return true;
}

/// C^H * A * C
inline ComplexMatrix congruence_transform(const ComplexMatrix& a, const ComplexMatrix& c) {
  const std::size_t n = a.size(), k = c.empty() ? 0 : c.front().size();
  ComplexMatrix ac(n, std::vector<GaussianRational>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j) ac[i][j] += a[i][l] * c[l][j];
    }
  ComplexMatrix out(k, std::vector<GaussianRational>(k));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < k; ++i) {
      if (c[l][i].is_zero()) continue;
      const GaussianRational ci = c[l][i].conj();
      for (std::size_t j = 0; j < k; ++j) out[i][j] += ci * ac[l][j];
    }
  return out;
}

struct SignaturePair {
  std::size_t p = 0;
  std::size_t q = 0;

  std::size_t rank() const { return p + q; }
  friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
  friend SignaturePair operator+(const SignaturePair& a, const SignaturePair& b) { return {a.p + b.p, a.q + b.q}; }
};

/// ||z||^2_{s,t} = |z_1|^2 + ... + |z_s|^2 - |z_{s+1}|^2 - ... - |z_{s+t}|^2.
struct SignedNorm {
  int s = 0;
  int t = 0;

  int n_vars() const { return s + t; }
  int sign(int var) const { return var < s ? 1 : -1; }
};

struct BiformTerm {
  Monomial alpha;  // conjugated side
  Monomial beta;   // holomorphic side
  GaussianRational coeff;
};

class HermitianBiform {
 public:
  static constexpr unsigned long kMaxDimension = 4096;

  /// The zero form of bidegree (d, d).
  HermitianBiform(int n_vars, int half_degree) : n_vars_(n_vars), half_degree_(half_degree) {
    if (n_vars < 1) throw std::invalid_argument("HermitianBiform: n_vars must be positive");
    if (half_degree < 0) throw std::invalid_argument("HermitianBiform: degree must be nonnegative");
    const Integer size = binom_coeff(n_vars - 1 + half_degree, half_degree);
    if (size > kMaxDimension) throw std::length_error("HermitianBiform: coefficient matrix too large");
    const auto dim = size.get_ui();
    matrix_.assign(dim, std::vector<GaussianRational>(dim));
  }

  HermitianBiform(int n_vars, int half_degree, ComplexMatrix matrix) : HermitianBiform(n_vars, half_degree) {
    if (matrix.size() != matrix_.size())
      throw std::invalid_argument("HermitianBiform: matrix dimension " + std::to_string(matrix.size()) +
                                  " does not match basis size " + std::to_string(matrix_.size()));
    if (!is_hermitian(matrix)) throw std::invalid_argument("HermitianBiform: matrix is not Hermitian");
    matrix_ = std::move(matrix);
  }

  int n_vars() const { return n_vars_; }
  int half_degree() const { return half_degree_; }
  std::size_t dimension() const { return matrix_.size(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const GaussianRational& at(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
  MonomialBasis basis() const { return MonomialBasis(n_vars_, half_degree_); }

  bool is_zero() const {
    for (const auto& row : matrix_)
      for (const auto& x : row)
        if (!x.is_zero()) return false;
    return true;
  }

  /// Nonzero entries as (alpha, beta, coefficient) terms.
  std::vector<BiformTerm> terms() const {
    const MonomialBasis b = basis();
    std::vector<BiformTerm> out;
    for (std::size_t i = 0; i < dimension(); ++i)
      for (std::size_t j = 0; j < dimension(); ++j)
        if (!matrix_[i][j].is_zero()) out.push_back({b[i], b[j], matrix_[i][j]});
    return out;
  }

  friend bool operator==(const HermitianBiform& a, const HermitianBiform& b) {
    return a.n_vars_ == b.n_vars_ && a.half_degree_ == b.half_degree_ && a.matrix_ == b.matrix_;
  }

  friend HermitianBiform operator+(const HermitianBiform& a, const HermitianBiform& b) {
    a.check_same_shape(b);
    ComplexMatrix m = a.matrix_;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += b.matrix_[i][j];
    return {a.n_vars_, a.half_degree_, std::move(m)};
  }

  HermitianBiform scaled(const Rational& c) const {
    ComplexMatrix m = matrix_;
    for (auto& row : m)
      for (auto& x : row) x *= GaussianRational(c);
    return {n_vars_, half_degree_, std::move(m)};
  }

 private:
  void check_same_shape(const HermitianBiform& o) const {
    if (o.n_vars_ != n_vars_ || o.half_degree_ != half_degree_)
      throw std::invalid_argument("HermitianBiform: shape mismatch");
  }

  int n_vars_;
  int half_degree_;
  ComplexMatrix matrix_;
};

/// Builds a biform from its terms; unlisted entries are zero and repeated
/// (alpha, beta) pairs are summed. The result must be Hermitian.
inline HermitianBiform biform_from_terms(int n_vars, int d, std::span<const BiformTerm> terms) {
  HermitianBiform zero(n_vars, d);
  const MonomialBasis basis = zero.basis();
  ComplexMatrix m = zero.matrix();
  for (const auto& term : terms) {
    if (term.alpha.n_vars() != n_vars || term.beta.n_vars() != n_vars)
      throw std::invalid_argument("biform_from_terms: variable count mismatch");
    if (term.alpha.degree() != d || term.beta.degree() != d)
      throw std::invalid_argument("biform_from_terms: term (" + term.alpha.to_string() + ", " +
                                  term.beta.to_string() + ") is not of bidegree (" + std::to_string(d) + "," +
                                  std::to_string(d) + ")");
    m[basis.index_of(term.alpha)][basis.index_of(term.beta)] += term.coeff;
  }
  if (!is_hermitian(m)) throw std::invalid_argument("biform_from_terms: coefficients are not Hermitian");
  return {n_vars, d, std::move(m)};
}

/// Adds the conjugate mirror (beta, alpha, conj c) of every term whose mirror
/// is absent. Pairs given on both sides are left for Hermitian validation.
inline std::vector<BiformTerm> hermitian_completion(std::span<const BiformTerm> terms) {
  std::map<std::pair<Monomial, Monomial>, bool> present;
  for (const auto& t : terms) present[{t.alpha, t.beta}] = true;
  std::vector<BiformTerm> out(terms.begin(), terms.end());
  for (const auto& t : terms)
    if (!present.count({t.beta, t.alpha})) out.push_back({t.beta, t.alpha, t.coeff.conj()});
  return out;
}

/// sign * weight * |poly|^2 with weight > 0.
struct SignedSquare {
  int sign = 1;
  Rational weight{1};
  ComplexPoly poly;
};

/// sum_i sign_i * weight_i * |poly_i|^2 as a biform of bidegree (d, d).
inline HermitianBiform biform_from_squares(int n_vars, int d, std::span<const SignedSquare> squares) {
  HermitianBiform zero(n_vars, d);
  const MonomialBasis basis = zero.basis();
  ComplexMatrix m = zero.matrix();
  for (const auto& sq : squares) {
    if (sq.poly.n_vars() != n_vars || sq.poly.degree() != d)
      throw std::invalid_argument("biform_from_squares: polynomial shape mismatch");
    const GaussianRational w(Rational(sq.sign * sq.weight));
    for (const auto& [ma, ca] : sq.poly.terms())
      for (const auto& [mb, cb] : sq.poly.terms())
        m[basis.index_of(ma)][basis.index_of(mb)] += w * ca.conj() * cb;
  }
  return {n_vars, d, std::move(m)};
}

inline HermitianBiform biform_from_squares(int n_vars, int d, std::span<const ComplexPoly> positive,
                                           std::span<const ComplexPoly> negative = {}) {
  std::vector<SignedSquare> squares;
  for (const auto& p : positive) squares.push_back({1, Rational(1), p});
  for (const auto& p : negative) squares.push_back({-1, Rational(1), p});
  return biform_from_squares(n_vars, d, squares);
}

/// E * A * E^H = diag(diagonal), tracked through inverse_transform = E^{-1},
/// so that A = E^{-1} * D * E^{-H}.
struct CongruenceDiagonalization {
  std::vector<Rational> diagonal;
  ComplexMatrix inverse_transform;
};

inline CongruenceDiagonalization congruence_diagonalize(ComplexMatrix a, bool track_transform = true) {
  if (!is_hermitian(a)) throw std::invalid_argument("congruence_diagonalize: matrix is not Hermitian");
  const std::size_t n = a.size();
  ComplexMatrix einv = track_transform ? identity_matrix(n) : ComplexMatrix{};

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
    if (track_transform)
      for (auto& row : einv) std::swap(row[i], row[j]);
  };

  std::vector<Rational> diagonal(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pivot = n;
    for (std::size_t j = i; j < n && pivot == n; ++j)
      if (!a[j][j].is_zero()) pivot = j;

    if (pivot == n) {
      // Zero diagonal: R_x += u R_y, C_x += conj(u) C_y with u = a_xy turns
      // a_xx into 2|a_xy|^2 > 0.
      std::size_t x = n, y = n;
      for (std::size_t r = i; r < n && x == n; ++r)
        for (std::size_t c = i; c < n; ++c)
          if (r != c && !a[r][c].is_zero()) {
            x = r;
            y = c;
            break;
          }
      if (x == n) break;  // remaining block is zero
      const GaussianRational u = a[x][y];
      for (std::size_t c = 0; c < n; ++c) a[x][c] += u * a[y][c];
      const GaussianRational uc = u.conj();
      for (std::size_t r = 0; r < n; ++r) a[r][x] += uc * a[r][y];
      if (track_transform)
        for (std::size_t r = 0; r < n; ++r) einv[r][y] -= u * einv[r][x];
      pivot = x;
    }
    swap_index(i, pivot);

    const GaussianRational p = a[i][i];
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a[r][i].is_zero()) continue;
      const GaussianRational f = a[r][i] / p;
      // Schur complement on the trailing block.
      for (std::size_t c = i + 1; c < n; ++c)
        if (!a[i][c].is_zero()) a[r][c] -= f * a[i][c];
      if (track_transform)
        for (std::size_t row = 0; row < n; ++row)
          if (!einv[row][r].is_zero()) einv[row][i] += f * einv[row][r];
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      a[r][i] = GaussianRational();
      a[i][r] = GaussianRational();
    }
    diagonal[i] = p.re;
  }
  return {std::move(diagonal), std::move(einv)};
}

inline SignaturePair matrix_signature(const ComplexMatrix& a) {
  SignaturePair sig;
  for (const auto& x : congruence_diagonalize(a, false).diagonal) {
    if (sgn(x) > 0) ++sig.p;
    if (sgn(x) < 0) ++sig.q;
  }
  return sig;
}

inline std::size_t biform_rank(const HermitianBiform& f) { return exact_rank(f.matrix()); }

inline SignaturePair biform_signature(const HermitianBiform& f) { return matrix_signature(f.matrix()); }

/// M = sum sign_i * weight_i * |m_i|^2 with linearly independent m_i read off
/// the congruence diagonalization.
inline std::vector<SignedSquare> decompose(const HermitianBiform& f) {
  const auto diag = congruence_diagonalize(f.matrix(), true);
  const MonomialBasis basis = f.basis();
  std::vector<SignedSquare> out;
  for (std::size_t i = 0; i < diag.diagonal.size(); ++i) {
    const Rational& x = diag.diagonal[i];
    if (sgn(x) == 0) continue;
    ComplexPoly m(f.n_vars(), f.half_degree());
    for (std::size_t b = 0; b < basis.size(); ++b) m.add_term(basis[b], diag.inverse_transform[b][i].conj());
    out.push_back({sgn(x) > 0 ? 1 : -1, Rational(abs(x)), std::move(m)});
  }
  return out;
}

inline HermitianBiform recompose(int n_vars, int d, std::span<const SignedSquare> squares) {
  return biform_from_squares(n_vars, d, squares);
}

/// F = M * ||z||^2_{s,t}: F(a + e_j, b + e_j) += eps_j * M(a, b).
inline HermitianBiform multiply_signed_norm(const HermitianBiform& m, SignedNorm norm) {
  if (norm.s < 0 || norm.t < 0 || norm.n_vars() == 0)
    throw std::invalid_argument("multiply_signed_norm: need s, t >= 0 and (s, t) != (0, 0)");
  if (norm.n_vars() != m.n_vars())
    throw std::invalid_argument("multiply_signed_norm: s + t must equal the number of variables");
  const int n = m.n_vars();
  const MonomialBasis src = m.basis();
  HermitianBiform zero(n, m.half_degree() + 1);
  const MonomialBasis dst = zero.basis();
  ComplexMatrix f = zero.matrix();
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b) {
      const GaussianRational& c = m.at(a, b);
      if (c.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Monomial ej = Monomial::variable(n, j);
        GaussianRational& target = f[dst.index_of(src[a] * ej)][dst.index_of(src[b] * ej)];
        if (norm.sign(j) > 0)
          target += c;
        else
          target -= c;
      }
    }
  return {n, m.half_degree() + 1, std::move(f)};
}

/// M * ||z||^{2l} (the positive-definite norm applied l times).
inline HermitianBiform multiply_norm_power(const HermitianBiform& m, int l) {
  if (l < 0) throw std::invalid_argument("multiply_norm_power: l must be nonnegative");
  HermitianBiform f = m;
  for (int i = 0; i < l; ++i) f = multiply_signed_norm(f, {m.n_vars(), 0});
  return f;
}

namespace detail {

// Exact division by ||z||^2 using lex order on (alpha, beta): the leading
// term of ||z||^2 is z_1 * conj(z_1).
inline std::optional<HermitianBiform> divide_by_norm(const HermitianBiform& f) {
  if (f.half_degree() < 1) return std::nullopt;
  const int n = f.n_vars();
  std::map<std::pair<Monomial, Monomial>, GaussianRational> rest;
  for (auto& t : f.terms()) rest.emplace(std::make_pair(t.alpha, t.beta), t.coeff);
  HermitianBiform zero(n, f.half_degree() - 1);
  const MonomialBasis qb = zero.basis();
  ComplexMatrix q = zero.matrix();
  while (!rest.empty()) {
    const auto lead = std::prev(rest.end());
    const auto [alpha, beta] = lead->first;
    const GaussianRational c = lead->second;
    if (alpha.exponents[0] < 1 || beta.exponents[0] < 1) return std::nullopt;
    Monomial qa = alpha, qbeta = beta;
    --qa.exponents[0];
    --qbeta.exponents[0];
    q[qb.index_of(qa)][qb.index_of(qbeta)] += c;
    for (int j = 0; j < n; ++j) {
      const Monomial ej = Monomial::variable(n, j);
      auto key = std::make_pair(qa * ej, qbeta * ej);
      auto [it, inserted] = rest.try_emplace(key, GaussianRational());
      it->second -= c;
      if (it->second.is_zero()) rest.erase(it);
    }
  }
  if (!is_hermitian(q)) return std::nullopt;
  return HermitianBiform(n, f.half_degree() - 1, std::move(q));
}

}  // namespace detail

/// M with M * ||z||^{2l} = F, if F is divisible.
inline std::optional<HermitianBiform> divide_norm_power(const HermitianBiform& f, int l) {
  if (l < 0) throw std::invalid_argument("divide_norm_power: l must be nonnegative");
  std::optional<HermitianBiform> cur = f;
  for (int i = 0; i < l && cur; ++i) cur = detail::divide_by_norm(*cur);
  return cur;
}

/// M(z, conj z) at a point with Gaussian-rational coordinates (always real).
inline Rational evaluate(const HermitianBiform& f, std::span<const GaussianRational> z) {
  if (static_cast<int>(z.size()) != f.n_vars()) throw std::invalid_argument("evaluate: point dimension mismatch");
  const MonomialBasis basis = f.basis();
  std::vector<GaussianRational> zm;
  for (const auto& m : basis.monomials()) {
    GaussianRational v(1);
    for (std::size_t i = 0; i < z.size(); ++i)
      for (int e = 0; e < m.exponents[i]; ++e) v *= z[i];
    zm.push_back(v);
  }
  GaussianRational total;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (!f.at(a, b).is_zero()) total += zm[a].conj() * f.at(a, b) * zm[b];
  return total.re;
}

// ---------------------------------------------------------------------------
// Rank and signature inequalities.

struct IntegerInterval {
  Integer low;
  Integer high;

  bool contains(const Integer& x) const { return low <= x && x <= high; }
  friend bool operator==(const IntegerInterval&, const IntegerInterval&) = default;
};

/// 2 * r_(n-1)|_0^1 - r*n <= R <= r*n for the rank R of M * ||z||^2_{s,t}.
inline IntegerInterval signed_norm_rank_interval(const Integer& r, int n) {
  if (sgn(r) < 1) throw std::invalid_argument("signed_norm_rank_interval: rank must be positive");
  if (n < 2) throw std::invalid_argument("signed_norm_rank_interval: n must be at least 2");
  const Integer rn = r * n;
  return {Integer(2 * shift_apply(r, n - 1, {0, 1}) - rn), rn};
}

/// Closed form r*n - r(r-1) <= R <= r*n, valid for r <= n - 1.
inline IntegerInterval signed_norm_rank_interval_closed_form(const Integer& r, int n) {
  if (sgn(r) < 1) throw std::invalid_argument("signed_norm_rank_interval_closed_form: rank must be positive");
  if (r > n - 1) throw std::invalid_argument("signed_norm_rank_interval_closed_form: requires r <= n - 1");
  const Integer rn = r * n;
  return {Integer(rn - r * (r - 1)), rn};
}

/// r_(n-1)|_0^l / binomial(n-1+l, l): lower bound on p when M * ||z||^{2l}
/// is a sum of squares.
inline Rational p_lower_bound(const Integer& r, int n, int l) {
  if (n < 2 || l < 1) throw std::invalid_argument("p_lower_bound: need n >= 2, l >= 1");
  Rational x(shift_apply(r, n - 1, {0, l}), binom_coeff(n - 1 + l, l));
  x.canonicalize();
  return x;
}

/// p*C(n-1+l, l) - p - p_(n-1)|_{-1}^{l-1}: upper bound on q.
inline Integer q_upper_bound(const Integer& p, int n, int l) {
  if (n < 2 || l < 1 || sgn(p) < 1) throw std::invalid_argument("q_upper_bound: need p >= 1, n >= 2, l >= 1");
  return p * binom_coeff(n - 1 + l, l) - p - shift_apply(p, n - 1, {-1, l - 1});
}

/// Same bound with index pair (-l, l-1); reported for comparison only.
inline Integer q_upper_bound_shift_minus_l(const Integer& p, int n, int l) {
  if (n < 2 || l < 1 || sgn(p) < 1) throw std::invalid_argument("q_upper_bound: need p >= 1, n >= 2, l >= 1");
  return p * binom_coeff(n - 1 + l, l) - p - shift_apply(p, n - 1, {-l, l - 1});
}

/// (p+q)_(n-1)|_0^l - q*C(n-1+l, l) <= R <= p*C(n-1+l, l).
inline IntegerInterval sos_rank_interval(const Integer& p, const Integer& q, int n, int l) {
  if (sgn(p) < 0 || sgn(q) < 0 || sgn(Integer(p + q)) < 1)
    throw std::invalid_argument("sos_rank_interval: need p, q >= 0 and p + q >= 1");
  if (n < 2 || l < 1) throw std::invalid_argument("sos_rank_interval: need n >= 2, l >= 1");
  const Integer c = binom_coeff(n - 1 + l, l);
  return {Integer(shift_apply(Integer(p + q), n - 1, {0, l}) - q * c), Integer(p * c)};
}

/// A Hermitian form is a sum of squared norms iff its matrix is positive
/// semidefinite.
inline bool is_sum_of_squares(const HermitianBiform& f) { return biform_signature(f).q == 0; }

/// Smallest 1 <= l <= l_max with M * ||z||^{2l} a sum of squares.
inline std::optional<int> find_min_sos_exponent(const HermitianBiform& m, int l_max) {
  if (l_max < 1) throw std::invalid_argument("find_min_sos_exponent: l_max must be positive");
  HermitianBiform f = m;
  for (int l = 1; l <= l_max; ++l) {
    f = multiply_signed_norm(f, {m.n_vars(), 0});
    if (is_sum_of_squares(f)) return l;
  }
  return std::nullopt;
}

struct RankIntervalCheck {
  std::size_t r = 0;        // rank of M
  std::size_t product = 0;  // rank R of M * ||z||^2_{s,t}
  IntegerInterval interval;
  bool ok = false;
};

/// nullopt when the interval does not apply (M = 0 or n < 2).
inline std::optional<RankIntervalCheck> verify_rank_interval(const HermitianBiform& m, SignedNorm norm) {
  const std::size_t r = biform_rank(m);
  if (r == 0 || m.n_vars() < 2) return std::nullopt;
  RankIntervalCheck c;
  c.r = r;
  c.product = biform_rank(multiply_signed_norm(m, norm));
  c.interval = signed_norm_rank_interval(Integer(static_cast<unsigned long>(r)), m.n_vars());
  c.ok = c.interval.contains(Integer(static_cast<unsigned long>(c.product)));
  return c;
}

namespace detail {

inline std::size_t span_dim(int n_vars, int degree, const std::vector<ComplexPoly>& polys) {
  GradedIdeal<GaussianRational> ideal;
  ideal.n_vars = n_vars;
  for (const auto& p : polys)
    if (!p.is_zero()) ideal.generators.push_back(p);
  return graded_piece_dim(ideal, degree);
}

}  // namespace detail

/// Given M = sum (m+) - sum (m-) and M * ||z||^{2l} = sum |h|^2, checks at
/// degree d + l that I_{m-} and I_h are contained in I_{m+} (hence
/// I_m = I_{m+}). Throws if the identity itself does not hold.
inline bool verify_ideal_containment(int n_vars, std::span<const SignedSquare> m_squares,
                                     std::span<const SignedSquare> h_squares, int l) {
  if (l < 1) throw std::invalid_argument("verify_ideal_containment: l must be positive");
  if (m_squares.empty()) throw std::invalid_argument("verify_ideal_containment: M has no squares");
  const int d = m_squares.front().poly.degree();
  for (const auto& h : h_squares)
    if (h.sign < 0) throw std::invalid_argument("verify_ideal_containment: h must be a sum of squares");
  const HermitianBiform m = recompose(n_vars, d, m_squares);
  const HermitianBiform h = recompose(n_vars, d + l, h_squares);
  if (!(multiply_norm_power(m, l) == h))
    throw std::invalid_argument("verify_ideal_containment: M * ||z||^{2l} does not equal the sum of |h|^2");

  std::vector<ComplexPoly> plus, minus, hs;
  for (const auto& sq : m_squares) (sq.sign > 0 ? plus : minus).push_back(sq.poly);
  for (const auto& sq : h_squares) hs.push_back(sq.poly);
  const int top = d + l;
  const std::size_t dim_plus = detail::span_dim(n_vars, top, plus);
  auto joined = [&](const std::vector<ComplexPoly>& extra) {
    std::vector<ComplexPoly> all = plus;
    all.insert(all.end(), extra.begin(), extra.end());
    return detail::span_dim(n_vars, top, all);
  };
  const bool minus_inside = detail::span_dim(n_vars, top, minus) <= dim_plus && joined(minus) == dim_plus;
  const bool h_inside = joined(hs) == dim_plus;
  return minus_inside && h_inside;
}

inline bool verify_ideal_containment(std::span<const ComplexPoly> m_plus, std::span<const ComplexPoly> m_minus,
                                     std::span<const ComplexPoly> h, int l) {
  std::vector<SignedSquare> ms, hs;
  for (const auto& p : m_plus) ms.push_back({1, Rational(1), p});
  for (const auto& p : m_minus) ms.push_back({-1, Rational(1), p});
  for (const auto& p : h) hs.push_back({1, Rational(1), p});
  if (ms.empty()) throw std::invalid_argument("verify_ideal_containment: M has no squares");
  return verify_ideal_containment(ms.front().poly.n_vars(), ms, hs, l);
}

}  // namespace macaulay
