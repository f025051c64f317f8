#pragma once

// Exact matrix rank. Rational (resp. Gaussian-rational) rows are scaled to
// integer (resp. Gaussian-integer) rows and reduced by fraction-free
// Bareiss elimination. A modular rank over Z/p is provided as an
// independent, probabilistic cross-check.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "macaulay/gaussian.hpp"

namespace macaulay {

template <class T>
using DenseRows = std::vector<std::vector<T>>;

inline std::vector<Integer> clear_denominators(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(divexact(Integer(x.get_num() * l), x.get_den()));
  return out;
}

inline std::vector<GaussianInteger> clear_denominators(std::span<const GaussianRational> row) {
  Integer l = 1;
  for (const auto& x : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im.get_den_mpz_t());
  }
  std::vector<GaussianInteger> out;
  out.reserve(row.size());
  for (const auto& x : row)
    out.push_back({divexact(Integer(x.re.get_num() * l), x.re.get_den()),
                   divexact(Integer(x.im.get_num() * l), x.im.get_den())});
  return out;
}

/// Rank of an integral-domain matrix by one-step fraction-free elimination.
/// Columns without a pivot are skipped; every division is exact because the
/// surviving entries are minors of the original matrix.
template <class Ring>
std::size_t bareiss_rank(DenseRows<Ring> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  Ring prev(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!is_zero(a[r][c])) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Ring& p = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Ring f = a[r][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (is_zero(f) && is_zero(a[r][j])) continue;
        a[r][j] = divexact(Ring(p * a[r][j] - f * a[rank][j]), prev);
      }
      a[r][c] = Ring{};
    }
    prev = p;
    ++rank;
  }
  return rank;
}

template <class Field>
std::size_t exact_rank(const DenseRows<Field>& rows) {
  using Ring = decltype(clear_denominators(std::span<const Field>{}))::value_type;
  DenseRows<Ring> ints;
  ints.reserve(rows.size());
  for (const auto& row : rows) {
    bool nonzero = false;
    for (const auto& x : row) nonzero = nonzero || !is_zero(x);
    if (nonzero) ints.push_back(clear_denominators(std::span<const Field>(row)));
  }
  return bareiss_rank(std::move(ints));
}

/// Rank over Z/p of the reduction of a rational matrix; nullopt when p
/// divides some denominator.
inline std::optional<std::size_t> modular_rank(const DenseRows<Rational>& rows, std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("modular_rank: prime out of range");
  const Integer P(std::to_string(p));
  auto reduce = [&](const Integer& x) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
    return static_cast<std::uint64_t>(std::stoull(r.get_str()));
  };
  auto mul = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  auto inv = [&](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  };
  std::vector<std::vector<std::uint64_t>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::uint64_t> r;
    r.reserve(row.size());
    for (const auto& x : row) {
      const std::uint64_t den = reduce(x.get_den());
      if (den == 0) return std::nullopt;
      r.push_back(mul(reduce(x.get_num()), inv(den)));
    }
    a.push_back(std::move(r));
  }
  if (a.empty()) return 0;
  const std::size_t n_rows = a.size(), n_cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n_cols && rank < n_rows; ++c) {
    std::size_t pivot = n_rows;
    for (std::size_t r = rank; r < n_rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == n_rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t pinv = inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < n_rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t f = mul(a[r][c], pinv);
      for (std::size_t j = c; j < n_cols; ++j) a[r][j] = (a[r][j] + p - mul(f, a[rank][j])) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace macaulay
