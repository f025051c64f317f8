#pragma once

// Exact binomial coefficients, n-th Macaulay representations and the shift
// operator A_(n)|_s^t, together with the combinatorial identities that link
// the two formulations of Macaulay's theorem.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace macaulay {

using Integer = mpz_class;
using Rational = mpq_class;

/// binomial(a, b) as a total function: 0 when b < 0 or a < b, 1 when b == 0
/// and a >= 0.
inline Integer binom_coeff(const Integer& a, long b) {
  if (b < 0 || a < b) return 0;
  if (b == 0) return 1;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return r;
}

inline Integer binom_coeff(long a, long b) { return binom_coeff(Integer(a), b); }

/// One summand binomial(top, bottom) of a Macaulay representation.
struct MacaulayTerm {
  Integer top;
  int bottom = 0;

  friend bool operator==(const MacaulayTerm& x, const MacaulayTerm& y) {
    return x.bottom == y.bottom && x.top == y.top;
  }
};

/// A = binomial(a_n, n) + binomial(a_{n-1}, n-1) + ... + binomial(a_delta, delta)
/// with a_n > a_{n-1} > ... > a_delta, a_j >= j and delta >= 1. Terms are
/// stored with bottom descending from n; the empty list represents 0.
struct MacaulayRep {
  int index = 1;
  std::vector<MacaulayTerm> terms;

  Integer value() const {
    Integer sum = 0;
    for (const auto& t : terms) sum += binom_coeff(t.top, t.bottom);
    return sum;
  }

  /// Checks the structural invariants (not uniqueness, which is a theorem).
  bool well_formed() const {
    if (index < 1) return false;
    int expected = index;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& t = terms[i];
      if (t.bottom != expected || t.bottom < 1 || t.top < t.bottom) return false;
      if (i > 0 && !(terms[i - 1].top > t.top)) return false;
      --expected;
    }
    return true;
  }

  /// Lexicographic comparison of (a_n, a_{n-1}, ...) padded with -infinity.
  friend std::strong_ordering operator<=>(const MacaulayRep& x, const MacaulayRep& y) {
    const std::size_t common = std::min(x.terms.size(), y.terms.size());
    for (std::size_t i = 0; i < common; ++i) {
      const int c = cmp(x.terms[i].top, y.terms[i].top);
      if (c < 0) return std::strong_ordering::less;
      if (c > 0) return std::strong_ordering::greater;
    }
    return x.terms.size() <=> y.terms.size();
  }

  friend bool operator==(const MacaulayRep& x, const MacaulayRep& y) {
    return x.index == y.index && x.terms == y.terms;
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
      if (!out.empty()) out += " + ";
      out += "C(" + t.top.get_str() + "," + std::to_string(t.bottom) + ")";
    }
    return out;
  }
};

/// Lower/upper index shift (s, t) of the operator A_(n)|_s^t.
struct ShiftSpec {
  long s = 0;
  long t = 0;
};

namespace detail {

// Largest a >= j with binomial(a, j) <= bound; requires bound >= 1.
inline Integer largest_top(const Integer& bound, int j) {
  if (j == 1) return bound;
  Integer lo = j;  // binomial(j, j) = 1 <= bound
  Integer step = 1;
  Integer hi = lo + step;
  while (binom_coeff(hi, j) <= bound) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  // invariant: binomial(lo) <= bound < binomial(hi)
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (binom_coeff(mid, j) <= bound)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace detail

/// Greedy construction of the n-th Macaulay representation of A.
inline MacaulayRep macaulay_rep(const Integer& A, int n) {
  if (sgn(A) < 0) throw std::invalid_argument("macaulay_rep: A must be nonnegative");
  if (n < 1) throw std::invalid_argument("macaulay_rep: index n must be positive");
  MacaulayRep rep;
  rep.index = n;
  Integer rest = A;
  for (int j = n; sgn(rest) > 0; --j) {
    // j cannot reach 0: at j == 1 the whole remainder is taken.
    Integer top = detail::largest_top(rest, j);
    rest -= binom_coeff(top, j);
    rep.terms.push_back({std::move(top), j});
  }
  return rep;
}

inline Integer rep_value(const MacaulayRep& rep) { return rep.value(); }

inline Integer shift_apply(const MacaulayRep& rep, ShiftSpec spec) {
  Integer sum = 0;
  for (const auto& term : rep.terms) sum += binom_coeff(term.top + spec.t, term.bottom + spec.s);
  return sum;
}

/// A_(n)|_s^t. Shifted terms follow the binom_coeff total-function conventions.
inline Integer shift_apply(const Integer& A, int n, ShiftSpec spec) {
  return shift_apply(macaulay_rep(A, n), spec);
}

/// A_(m)|_0^s + B_(d)|_s^s == binomial(m+d+s, d+s), given A + B = binomial(m+d, d).
inline bool split_identity_check(const Integer& A, const Integer& B, int m, int d, int s) {
  if (m < 1 || d < 1 || s < 1)
    throw std::invalid_argument("split_identity_check: m, d, s must be positive");
  if (sgn(A) < 0 || sgn(B) < 0)
    throw std::invalid_argument("split_identity_check: A, B must be nonnegative");
  if (A + B != binom_coeff(m + d, d))
    throw std::invalid_argument("split_identity_check: A + B must equal binomial(m+d, d)");
  const Integer lhs = shift_apply(A, m, {0, s}) + shift_apply(B, d, {s, s});
  return lhs == binom_coeff(m + d + s, d + s);
}

/// m_(n)|_0^l - m >= m_(n)|_{-1}^{l-1}
inline bool shift_gap_check(const Integer& m, int n, int l) {
  if (sgn(m) < 1 || n < 1 || l < 1)
    throw std::invalid_argument("shift_gap_check: m, n, l must be positive");
  const MacaulayRep rep = macaulay_rep(m, n);
  return shift_apply(rep, {0, l}) - m >= shift_apply(rep, {-1, l - 1});
}

/// m_(n)|_{-1}^k >= (m-1)_(n)|_{-1}^k
inline bool shift_monotone_check(const Integer& m, int n, int k) {
  if (sgn(m) < 1 || n < 1) throw std::invalid_argument("shift_monotone_check: m, n must be positive");
  return shift_apply(m, n, {-1, k}) >= shift_apply(Integer(m - 1), n, {-1, k});
}

}  // namespace macaulay
