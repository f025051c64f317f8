#include <gtest/gtest.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "macaulay/hermitian.hpp"
#include "macaulay/oracle.hpp"

using namespace macaulay;

namespace {

using G = GaussianRational;

ComplexPoly zc(int n, int i) { return ComplexPoly::variable(n, i); }

ComplexPoly mono(std::vector<int> e, G c = G(1)) { return ComplexPoly::monomial(Monomial(std::move(e)), c); }

HermitianBiform diag2(long a, long b) { return {2, 1, ComplexMatrix{{G(a), G(0)}, {G(0), G(b)}}}; }

ComplexMatrix block_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.size() + b.size();
  ComplexMatrix out(n, std::vector<G>(n));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[a.size() + i][a.size() + j] = b[i][j];
  return out;
}

// Signature from the characteristic polynomial (Faddeev-LeVerrier) by
// Descartes' rule of signs, exact for real-rooted polynomials.
SignaturePair charpoly_signature(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);  // c[k] multiplies x^k
  c[n] = 1;
  ComplexMatrix m(n, std::vector<G>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next(n, std::vector<G>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * m[l][j];
      next[i][i] += G(c[n - k + 1]);
    }
    m = next;
    G trace;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    EXPECT_TRUE(trace.is_real());
    c[n - k] = -trace.re / static_cast<long>(k);
  }
  auto sign_changes = [&](bool negate) {
    std::size_t changes = 0;
    int prev = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      int s = sgn(c[k]);
      if (negate && k % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  };
  return {sign_changes(false), sign_changes(true)};
}

// M(a + e_j, b + e_j) contributions of one variable, built entry by entry.
HermitianBiform single_variable_product(const HermitianBiform& m, int j, int sign) {
  const int n = m.n_vars();
  const MonomialBasis src = m.basis(), dst(n, m.half_degree() + 1);
  ComplexMatrix out(dst.size(), std::vector<G>(dst.size()));
  const Monomial ej = Monomial::variable(n, j);
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b)
      out[dst.index_of(src[a] * ej)][dst.index_of(src[b] * ej)] += G(sign) * m.at(a, b);
  return {n, m.half_degree() + 1, std::move(out)};
}

Rational norm_value(std::span<const G> z, SignedNorm norm) {
  Rational r(0);
  for (int j = 0; j < norm.n_vars(); ++j) r += norm.sign(j) * z[static_cast<std::size_t>(j)].norm();
  return r;
}

std::vector<G> random_point(oracle::Rng& rng, int n) {
  std::vector<G> z;
  for (int i = 0; i < n; ++i) z.push_back(oracle::random_gaussian(rng, 3));
  return z;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

TEST(Biform, FromTerms) {
  const Monomial e1({1, 0}), e2({0, 1});
  const std::vector<BiformTerm> single{{e1, e1, G(1)}};
  const auto m = biform_from_terms(2, 1, single);
  EXPECT_EQ(m.matrix(), (ComplexMatrix{{G(1), G(0)}, {G(0), G(0)}}));

  const std::vector<BiformTerm> signed_norm{{e1, e1, G(1)}, {e2, e2, G(-1)}};
  EXPECT_EQ(biform_from_terms(2, 1, signed_norm), diag2(1, -1));

  const std::vector<BiformTerm> cross{{e1, e2, G(1)}, {e2, e1, G(1)}};
  const auto x = biform_from_terms(2, 1, cross);
  EXPECT_EQ(x.matrix(), (ComplexMatrix{{G(0), G(1)}, {G(1), G(0)}}));
  EXPECT_EQ(biform_signature(x), (SignaturePair{1, 1}));
}

TEST(Biform, RejectsInvalidTerms) {
  const Monomial e1({1, 0}), e2({0, 1});
  const std::vector<BiformTerm> lopsided{{e1, e2, G(1)}};
  EXPECT_THROW(biform_from_terms(2, 1, lopsided), std::invalid_argument);
  const std::vector<BiformTerm> complex_diag{{e1, e1, G(Rational(0), Rational(1))}};
  EXPECT_THROW(biform_from_terms(2, 1, complex_diag), std::invalid_argument);
  const std::vector<BiformTerm> wrong_degree{{Monomial({2, 0}), Monomial({2, 0}), G(1)}};
  EXPECT_THROW(biform_from_terms(2, 1, wrong_degree), std::invalid_argument);
  EXPECT_THROW(HermitianBiform(2, 1, ComplexMatrix{{G(0), G(1)}, {G(2), G(0)}}), std::invalid_argument);
}

TEST(Biform, HermitianCompletion) {
  const Monomial e1({1, 0}), e2({0, 1});
  const std::vector<BiformTerm> half{{e1, e2, G(Rational(1), Rational(2))}};
  const auto m = biform_from_terms(2, 1, hermitian_completion(half));
  EXPECT_EQ(m.at(0, 1), G(Rational(1), Rational(2)));
  EXPECT_EQ(m.at(1, 0), G(Rational(1), Rational(-2)));
}

TEST(Biform, DimensionCap) {
  EXPECT_THROW(HermitianBiform(8, 8), std::length_error);
}

// ---------------------------------------------------------------------------
// Rank and signature

TEST(Signature, Examples) {
  EXPECT_EQ(biform_rank(HermitianBiform(2, 1)), 0u);
  EXPECT_EQ(biform_rank(diag2(1, -1)), 2u);
  const std::vector<ComplexPoly> z1{zc(2, 0)};
  const auto product = multiply_norm_power(biform_from_squares(2, 1, z1), 1);
  EXPECT_EQ(biform_rank(product), 2u);

  EXPECT_EQ(biform_signature(diag2(1, -1)), (SignaturePair{1, 1}));
  EXPECT_EQ(matrix_signature(ComplexMatrix{{G(0), G(1)}, {G(1), G(0)}}), (SignaturePair{1, 1}));
  EXPECT_EQ(biform_signature(diag2(1, 1)), (SignaturePair{2, 0}));
  EXPECT_EQ(biform_signature(HermitianBiform(3, 2)), (SignaturePair{0, 0}));
}

TEST(Signature, ZeroDiagonalComplexEntries) {
  const G i(Rational(0), Rational(1));
  ComplexMatrix a{{G(0), i, G(0)}, {i.conj(), G(0), G(2)}, {G(0), G(2), G(0)}};
  EXPECT_EQ(matrix_signature(a), charpoly_signature(a));
}

TEST(Signature, AgreesWithCharacteristicPolynomial) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = oracle::random_hermitian_matrix(1 + seed % 7, seed);
    EXPECT_EQ(matrix_signature(a), charpoly_signature(a)) << "seed " << seed;
    EXPECT_EQ(matrix_signature(a).rank(), exact_rank(a));
  }
}

TEST(Signature, SylvesterInvariance) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t dim = 1 + seed % 8;
    const auto a = oracle::random_hermitian_matrix(dim, seed);
    const auto c = oracle::random_invertible_matrix(dim, seed + 1000);
    EXPECT_EQ(matrix_signature(congruence_transform(a, c)), matrix_signature(a)) << "seed " << seed;
  }
}

TEST(Signature, DirectSumAdditivity) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = oracle::random_hermitian_matrix(1 + seed % 4, seed);
    const auto b = oracle::random_hermitian_matrix(1 + seed % 5, seed + 500);
    EXPECT_EQ(matrix_signature(block_sum(a, b)), matrix_signature(a) + matrix_signature(b));
  }
}

TEST(Signature, DiagonalizationReconstructs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = oracle::random_hermitian_matrix(1 + seed % 6, seed);
    const auto dz = congruence_diagonalize(a);
    const std::size_t n = a.size();
    ComplexMatrix d(n, std::vector<G>(n));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = G(dz.diagonal[i]);
    // A = Einv * D * Einv^H
    ComplexMatrix einv_h(n, std::vector<G>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) einv_h[i][j] = dz.inverse_transform[j][i].conj();
    EXPECT_EQ(congruence_transform(d, einv_h), a) << "seed " << seed;
  }
}

// ---------------------------------------------------------------------------
// Decomposition

TEST(Decompose, Examples) {
  const auto sq = decompose(diag2(1, -1));
  ASSERT_EQ(sq.size(), 2u);
  EXPECT_EQ(sq[0].sign, 1);
  EXPECT_EQ(sq[0].poly, zc(2, 0));
  EXPECT_EQ(sq[1].sign, -1);
  EXPECT_EQ(sq[1].poly, zc(2, 1));

  const HermitianBiform x(2, 1, ComplexMatrix{{G(0), G(1)}, {G(1), G(0)}});
  const auto xs = decompose(x);
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_NE(xs[0].sign, xs[1].sign);
  EXPECT_EQ(recompose(2, 1, xs), x);

  EXPECT_TRUE(decompose(HermitianBiform(2, 2)).empty());
}

TEST(Decompose, RecomposeRoundTrip) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const int d = 1 + static_cast<int>(seed % 2);
    const auto m = oracle::random_hermitian_instance(n, d, seed);
    const auto squares = decompose(m);
    EXPECT_EQ(recompose(n, d, squares), m) << "seed " << seed;
    const auto sig = biform_signature(m);
    std::size_t pos = 0;
    std::vector<ComplexPoly> polys;
    for (const auto& s : squares) {
      pos += s.sign > 0;
      EXPECT_GT(s.weight, 0);
      polys.push_back(s.poly);
    }
    EXPECT_EQ(pos, sig.p);
    EXPECT_EQ(squares.size(), sig.rank());
    EXPECT_EQ(detail::span_dim(n, d, polys), squares.size());  // linearly independent
  }
}

TEST(Decompose, AgreesWithPointEvaluation) {
  oracle::Rng rng(17);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = oracle::random_hermitian_instance(3, 2, seed);
    const auto squares = decompose(m);
    const auto z = random_point(rng, 3);
    Rational sum(0);
    for (const auto& s : squares) {
      G v;
      for (const auto& [mono_, c] : s.poly.terms()) {
        G term = c;
        for (int i = 0; i < 3; ++i)
          for (int k = 0; k < mono_.exponents[static_cast<std::size_t>(i)]; ++k) term = term * z[static_cast<std::size_t>(i)];
        v += term;
      }
      sum += s.sign * s.weight * v.norm();
    }
    EXPECT_EQ(evaluate(m, z), sum);
  }
}

// ---------------------------------------------------------------------------
// Products with signed norms

TEST(SignedProduct, Examples) {
  const std::vector<ComplexPoly> z1{zc(2, 0)};
  const auto m = biform_from_squares(2, 1, z1);
  const auto f = multiply_signed_norm(m, {2, 0});
  EXPECT_EQ(f.matrix(), (ComplexMatrix{{G(1), G(0), G(0)}, {G(0), G(1), G(0)}, {G(0), G(0), G(0)}}));
  EXPECT_TRUE(multiply_signed_norm(HermitianBiform(2, 1), {1, 1}).is_zero());
  const auto g = multiply_signed_norm(m, {1, 1});
  EXPECT_EQ(g.matrix(), (ComplexMatrix{{G(1), G(0), G(0)}, {G(0), G(-1), G(0)}, {G(0), G(0), G(0)}}));
  EXPECT_EQ(biform_signature(g), (SignaturePair{1, 1}));
}

TEST(SignedProduct, RejectsMismatchedNorm) {
  EXPECT_THROW(multiply_signed_norm(diag2(1, 1), {1, 0}), std::invalid_argument);
  EXPECT_THROW(multiply_signed_norm(diag2(1, 1), {2, 1}), std::invalid_argument);
}

TEST(SignedProduct, NormPowerExamples) {
  const std::vector<ComplexPoly> z1{zc(2, 0)};
  EXPECT_EQ(biform_rank(multiply_norm_power(biform_from_squares(2, 1, z1), 1)), 2u);
  EXPECT_TRUE(multiply_norm_power(HermitianBiform(3, 1), 3).is_zero());
  const auto f = multiply_norm_power(diag2(1, -1), 1);
  EXPECT_EQ(f.matrix(), (ComplexMatrix{{G(1), G(0), G(0)}, {G(0), G(0), G(0)}, {G(0), G(0), G(-1)}}));
  EXPECT_EQ(biform_signature(f), (SignaturePair{1, 1}));
  EXPECT_EQ(biform_rank(f), 2u);
}

TEST(SignedProduct, SumOfSingleVariableShifts) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto m = oracle::random_hermitian_instance(n, 1 + static_cast<int>(seed % 2), seed);
    for (int s = 0; s <= n; ++s) {
      const SignedNorm norm{s, n - s};
      HermitianBiform sum(n, m.half_degree() + 1);
      for (int j = 0; j < n; ++j) sum = sum + single_variable_product(m, j, norm.sign(j));
      EXPECT_EQ(multiply_signed_norm(m, norm), sum);
    }
  }
}

TEST(SignedProduct, LinearInM) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = oracle::random_hermitian_instance(3, 1, seed);
    const auto b = oracle::random_hermitian_instance(3, 1, seed + 77);
    const SignedNorm norm{2, 1};
    EXPECT_EQ(multiply_signed_norm(a + b, norm), multiply_signed_norm(a, norm) + multiply_signed_norm(b, norm));
    EXPECT_EQ(multiply_signed_norm(a.scaled(Rational(-3, 2)), norm), multiply_signed_norm(a, norm).scaled(Rational(-3, 2)));
  }
}

TEST(SignedProduct, PointEvaluation) {
  oracle::Rng rng(3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto m = oracle::random_hermitian_instance(n, 1 + static_cast<int>(seed % 2), seed);
    const SignedNorm norm{static_cast<int>(seed % static_cast<std::uint64_t>(n + 1)), 0};
    const SignedNorm full{norm.s, n - norm.s};
    const auto z = random_point(rng, n);
    EXPECT_EQ(evaluate(multiply_signed_norm(m, full), z), evaluate(m, z) * norm_value(z, full));
  }
}

TEST(SignedProduct, DivideNormPower) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = oracle::random_hermitian_instance(3, 1, seed);
    for (int l = 0; l <= 2; ++l) {
      const auto back = divide_norm_power(multiply_norm_power(m, l), l);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, m);
    }
  }
  const std::vector<ComplexPoly> z1{mono({2, 0})};
  EXPECT_FALSE(divide_norm_power(biform_from_squares(2, 2, z1), 1).has_value());
  EXPECT_FALSE(divide_norm_power(multiply_signed_norm(diag2(1, 2), {1, 1}), 1).has_value());
}

// ---------------------------------------------------------------------------
// Rank intervals

TEST(RankInterval, Examples) {
  EXPECT_EQ(signed_norm_rank_interval(3, 4), (IntegerInterval{6, 12}));
  EXPECT_EQ(signed_norm_rank_interval(1, 2), (IntegerInterval{2, 2}));
  EXPECT_THROW(signed_norm_rank_interval(0, 3), std::invalid_argument);
  EXPECT_EQ(signed_norm_rank_interval_closed_form(3, 4), (IntegerInterval{6, 12}));
  EXPECT_EQ(signed_norm_rank_interval_closed_form(1, 5), (IntegerInterval{5, 5}));
  EXPECT_THROW(signed_norm_rank_interval_closed_form(5, 4), std::invalid_argument);
}

TEST(RankInterval, ClosedFormAgrees) {
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r <= n - 1; ++r) EXPECT_EQ(signed_norm_rank_interval(r, n), signed_norm_rank_interval_closed_form(r, n));
}

TEST(RankInterval, VerifyExamples) {
  const std::vector<ComplexPoly> z1{zc(2, 0)};
  const auto c = verify_rank_interval(biform_from_squares(2, 1, z1), {2, 0});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->product, 2u);
  EXPECT_EQ(c->interval, (IntegerInterval{2, 2}));
  EXPECT_TRUE(c->ok);
  EXPECT_FALSE(verify_rank_interval(HermitianBiform(2, 1), {2, 0}).has_value());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = verify_rank_interval(oracle::random_hermitian_instance(3, 2, seed), {2, 1});
    if (r) {
      EXPECT_TRUE(r->ok);
    }
  }
}

TEST(RankInterval, RandomBiforms) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const int d = 1 + static_cast<int>((seed / 3) % 2);
    const auto m = oracle::random_hermitian_instance(n, d, seed);
    for (int s = 0; s <= n; ++s) {
      const auto r = verify_rank_interval(m, {s, n - s});
      if (!r) continue;
      ++checked;
      EXPECT_TRUE(r->ok) << "seed " << seed << " s=" << s;
    }
  }
  EXPECT_GT(checked, 150u);
}

// ---------------------------------------------------------------------------
// Sum-of-squares bounds

TEST(SosBounds, Examples) {
  EXPECT_EQ(p_lower_bound(3, 4, 1), Rational(9, 4));
  EXPECT_EQ(p_lower_bound(1, 2, 1), Rational(1));
  EXPECT_EQ(p_lower_bound(0, 3, 2), Rational(0));
  EXPECT_EQ(q_upper_bound(1, 2, 1), 0);
  EXPECT_EQ(q_upper_bound(3, 4, 1), 3);
  EXPECT_EQ(q_upper_bound(1, 3, 2), Integer(1 * 6 - 1) - shift_apply(1, 2, {-1, 1}));
  EXPECT_EQ(sos_rank_interval(1, 0, 2, 1), (IntegerInterval{2, 2}));
  EXPECT_EQ(sos_rank_interval(2, 1, 3, 1), (IntegerInterval{Integer(shift_apply(3, 2, {0, 1}) - 3), 6}));
  EXPECT_EQ(sos_rank_interval(0, 1, 3, 1).high, 0);
}

TEST(SosBounds, AlternativeShiftDiffers) {
  // At l = 1 the two forms shift the lower index by -1 either way.
  for (int n = 2; n <= 5; ++n)
    for (long p = 1; p <= 10; ++p) EXPECT_EQ(q_upper_bound(p, n, 1), q_upper_bound_shift_minus_l(p, n, 1));
  bool differs = false;
  for (int n = 2; n <= 5; ++n)
    for (long p = 1; p <= 10; ++p) differs = differs || q_upper_bound(p, n, 3) != q_upper_bound_shift_minus_l(p, n, 3);
  EXPECT_TRUE(differs);
}

TEST(SosBounds, IsSumOfSquares) {
  EXPECT_TRUE(is_sum_of_squares(HermitianBiform(2, 2, ComplexMatrix{{G(1), G(0), G(0)}, {G(0), G(1), G(0)}, {G(0), G(0), G(0)}})));
  EXPECT_FALSE(is_sum_of_squares(diag2(1, -1)));
  EXPECT_FALSE(is_sum_of_squares(multiply_norm_power(diag2(1, -1), 1)));
}

TEST(SosBounds, MinimalExponent) {
  EXPECT_EQ(find_min_sos_exponent(diag2(1, 1), 3), 1);
  EXPECT_FALSE(find_min_sos_exponent(diag2(1, -1), 5).has_value());
  HermitianBiform f = diag2(1, -1);
  for (int l = 1; l <= 5; ++l) {
    f = multiply_norm_power(f, 1);
    EXPECT_GT(biform_signature(f).q, 0u);
  }
  // |z1^2|^2 + |z2^2|^2 - c|z1 z2|^2 is positive on the sphere for c < 2;
  // a larger c needs a higher power of the norm.
  auto quartic = [](Rational c) {
    ComplexMatrix m(3, std::vector<G>(3));
    m[0][0] = G(1);
    m[2][2] = G(1);
    m[1][1] = G(Rational(-c));
    return HermitianBiform(2, 2, m);
  };
  EXPECT_EQ(find_min_sos_exponent(quartic(1), 4), 1);
  EXPECT_EQ(find_min_sos_exponent(quartic(Rational(5, 4)), 10), 3);
  EXPECT_FALSE(find_min_sos_exponent(quartic(2), 12).has_value());
}

TEST(SosBounds, WorkedQuartic) {
  // ||z||^4 - 3|z1 z2|^2 times ||z||^2 is |z1|^6 + |z2|^6.
  ComplexMatrix mm(3, std::vector<G>(3));
  mm[0][0] = G(1);
  mm[1][1] = G(-1);
  mm[2][2] = G(1);
  const HermitianBiform m(2, 2, mm);
  const auto sig = biform_signature(m);
  EXPECT_EQ(sig, (SignaturePair{2, 1}));
  const auto f = multiply_norm_power(m, 1);
  EXPECT_EQ(biform_signature(f), (SignaturePair{2, 0}));
  EXPECT_EQ(biform_rank(f), 2u);
  EXPECT_GE(Rational(2), p_lower_bound(3, 2, 1));
  EXPECT_EQ(q_upper_bound(2, 2, 1), 1);
  EXPECT_TRUE(sos_rank_interval(2, 1, 2, 1).contains(2));
}

TEST(SosBounds, ConstructedInstances) {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; found < 30 && seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const int d = 1 + static_cast<int>((seed / 2) % 2);
    const auto inst = oracle::sos_instance(n, d, seed, 4);
    if (!inst) continue;
    ++found;
    const auto& [p, q] = inst->signature;
    const Integer P(static_cast<unsigned long>(p)), Q(static_cast<unsigned long>(q));
    const Integer r(static_cast<unsigned long>(biform_rank(inst->m)));
    const Integer R(static_cast<unsigned long>(inst->product_rank));
    EXPECT_GE(Rational(P), p_lower_bound(r, n, inst->l)) << "seed " << seed;
    EXPECT_LE(Q, q_upper_bound(P, n, inst->l)) << "seed " << seed;
    EXPECT_TRUE(sos_rank_interval(P, Q, n, inst->l).contains(R)) << "seed " << seed;
    if (inst->pure) {
      EXPECT_LE(shift_apply(P, n - 1, {0, inst->l}), R);
    }
    EXPECT_TRUE(is_sum_of_squares(multiply_norm_power(inst->f, 1)));
  }
  EXPECT_EQ(found, 30u);
}

TEST(SosBounds, Persistence) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto inst = oracle::sos_instance(2, 2, seed, 5);
    if (!inst) continue;
    HermitianBiform f = inst->f;
    for (int k = 1; k <= 2; ++k) {
      f = multiply_norm_power(f, 1);
      EXPECT_TRUE(is_sum_of_squares(f));
    }
  }
}

// ---------------------------------------------------------------------------
// Ideal containment

TEST(IdealContainment, Examples) {
  const std::vector<SignedSquare> m{{1, Rational(1), zc(2, 0)}, {1, Rational(1), zc(2, 1)}};
  const std::vector<SignedSquare> h{
      {1, Rational(1), mono({2, 0})}, {1, Rational(2), mono({1, 1})}, {1, Rational(1), mono({0, 2})}};
  EXPECT_TRUE(verify_ideal_containment(2, m, h, 1));

  const std::vector<ComplexPoly> plus{mono({2, 0}), mono({0, 2})}, minus{mono({1, 1})};
  const std::vector<ComplexPoly> witness{mono({3, 0}), mono({0, 3})};
  EXPECT_TRUE(verify_ideal_containment(plus, minus, witness, 1));

  const std::vector<ComplexPoly> wrong{mono({3, 0})};
  EXPECT_THROW(verify_ideal_containment(plus, minus, wrong, 1), std::invalid_argument);
}

TEST(IdealContainment, GeneratedInstances) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 40 && checked < 10; ++seed) {
    const auto inst = oracle::sos_instance(2, 2, seed, 4);
    if (!inst) continue;
    const auto m_sq = decompose(inst->m);
    const auto h_sq = decompose(inst->f);
    EXPECT_TRUE(verify_ideal_containment(2, m_sq, h_sq, inst->l)) << "seed " << seed;
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}
