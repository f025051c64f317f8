#pragma once

// Gaussian rationals Q(i) and Gaussian integers Z[i] over GMP.

#include <stdexcept>
#include <string>

#include "macaulay/binom.hpp"

namespace macaulay {

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}  // NOLINT(implicit)
  GaussianRational(const Rational& r) : re(r), im(0) { re.canonicalize(); }  // NOLINT(implicit)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, Rational(-im)}; }
  /// |z|^2
  Rational norm() const { return Rational(re * re + im * im); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    const Rational n = b.norm();
    return {Rational((a.re * b.re + a.im * b.im) / n), Rational((a.im * b.re - a.re * b.im) / n)};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string to_string() const {
    if (is_real()) return re.get_str();
    return "(" + re.get_str() + (sgn(im) < 0 ? "-" : "+") + Rational(abs(im)).get_str() + "i)";
  }
};

struct GaussianInteger {
  Integer re{0};
  Integer im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {Integer(a.re + b.re), Integer(a.im + b.im)};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {Integer(a.re - b.re), Integer(a.im - b.im)};
  }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {Integer(a.re * b.re - a.im * b.im), Integer(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const GaussianInteger& x) { return x.is_zero(); }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

inline Rational conj(const Rational& x) { return x; }
inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }

/// a / b where b divides a exactly.
inline Integer divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline GaussianInteger divexact(const GaussianInteger& a, const GaussianInteger& b) {
  // a * conj(b) / |b|^2, each component divisible when b | a in Z[i].
  const Integer n = b.re * b.re + b.im * b.im;
  const Integer re = a.re * b.re + a.im * b.im;
  const Integer im = a.im * b.re - a.re * b.im;
  return {divexact(re, n), divexact(im, n)};
}

}  // namespace macaulay
