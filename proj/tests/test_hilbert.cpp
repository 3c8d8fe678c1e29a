#include <cihilb/hilbert.hpp>

#include <gtest/gtest.h>

#include <random>

#include "golden.hpp"
#include "oracles.hpp"

using namespace cihilb;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::invalid_argument;
}

}  // namespace

TEST(Koszul, SharedPolynomials) {
  for (const auto& g : golden::shared()) {
    for (const auto& seq : g.sequences) {
      const HilbertPoly p = hilbert_koszul(seq, g.ambient);
      EXPECT_EQ(p.mu, g.mu) << seq.to_string() << " in P^" << g.ambient << ": " << p.to_string();
    }
  }
  EXPECT_EQ(hilbert_koszul({2, 5, 9}, 4).to_string(), "90*t - 495");
  EXPECT_EQ(hilbert_koszul({1, 1}, 3).to_string(), "t + 1");
}

TEST(Koszul, AgreesWithHilbertFunctionForLargeT) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 150; ++it) {
    const std::size_t c = 1 + it % 6;
    const std::size_t n = c + it % 5;
    auto a = oracle::random_sequence(rng, c, 9);
    const HilbertPoly p = hilbert_koszul(DegreeSequence(a), n);
    long sum = 0;
    for (long v : a) sum += v;
    // The Hilbert function equals P for t > sum a - n - 1.
    const long start = std::max(0L, sum - static_cast<long>(n));
    const auto hf = oracle::hilbert_function(a, n, static_cast<std::size_t>(start + 6));
    for (long t = start; t <= start + 6; ++t) EXPECT_EQ(p(Rational(t)), Rational(hf[t])) << it << " t=" << t;
  }
}

TEST(Koszul, AgreesWithMonomialCounting) {
  // (x_0^{a_1}, ..., x_{c-1}^{a_c}) is a complete intersection with these degrees
  const std::vector<std::pair<std::vector<long>, std::size_t>> cases{
      {{2, 3}, 3}, {{2, 2, 2}, 4}, {{3}, 2}, {{1, 4}, 2}, {{2, 5}, 4}};
  for (const auto& [a, n] : cases) {
    const HilbertPoly p = hilbert_koszul(DegreeSequence(a), n);
    long sum = 0;
    for (long v : a) sum += v;
    for (long t = sum; t <= sum + 4; ++t) EXPECT_EQ(p(Rational(t)), Rational(oracle::monomial_count(a, n, t)));
  }
}

TEST(Koszul, AddingALinearFormRaisesAmbient) {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 40; ++it) {
    const std::size_t c = 1 + it % 5;
    const std::size_t n = c + it % 4;
    auto a = oracle::random_sequence(rng, c, 12);
    auto b = a;
    b.push_back(1);
    EXPECT_EQ(hilbert_koszul(DegreeSequence(a), n).to_unipoly(), hilbert_koszul(DegreeSequence(b), n + 1).to_unipoly());
  }
}

TEST(Koszul, CodimensionTwoGenusFormula) {
  for (long a = 1; a <= 15; ++a)
    for (long b = a; b <= 15; ++b) {
      const HilbertPoly p = hilbert_koszul({a, b}, 3);
      const Rational pa = Rational(a * b * (a + b - 4), 2L) + Rational(1);
      EXPECT_EQ(p.mu[0], Rational(a * b));
      EXPECT_EQ(p.mu[1], Rational(1) - pa);
    }
}

TEST(Koszul, Errors) {
  EXPECT_EQ(code_of([] { hilbert_koszul({2, 3, 4}, 2); }), Errc::codim_exceeds_ambient);
  EXPECT_EQ(code_of([] { hilbert_hrr({2, 3, 4}, 2); }), Errc::codim_exceeds_ambient);
  EXPECT_EQ(code_of([] { DegreeSequence{0, 2}; }), Errc::invalid_argument);
}

TEST(Hrr, AgreesWithKoszul) {
  std::mt19937_64 rng(33);
  for (int it = 0; it < 100; ++it) {
    const std::size_t c = 1 + it % 7;
    const std::size_t n = c + it % 9;
    const DegreeSequence seq(oracle::random_sequence(rng, c, 20));
    EXPECT_EQ(hilbert_hrr(seq, n), hilbert_koszul(seq, n)) << seq.to_string() << " n=" << n;
  }
}

TEST(Transform, LambdaMuRoundTrip) {
  std::mt19937_64 rng(34);
  for (int it = 0; it < 50; ++it) {
    const std::size_t c = 1 + it % 6;
    const std::size_t n = c + it % 8;
    const DegreeSequence seq(oracle::random_sequence(rng, c, 15));
    const HilbertPoly p = hilbert_koszul(seq, n);
    const LambdaVector lv = lambda_from_mu(p);
    EXPECT_EQ(lv, lambda_numeric(seq, n - c));
    EXPECT_EQ(mu_from_lambda(lv, n), p);
  }
}

TEST(Transform, RejectsNonIntegralDegree) {
  HilbertPoly p{4, 3, {Rational(1, 2), Rational(3)}};
  EXPECT_EQ(code_of([&] { lambda_from_mu(p); }), Errc::not_ci_hilbert_polynomial);
  HilbertPoly q{4, 3, {Rational(-5), Rational(3)}};
  EXPECT_EQ(code_of([&] { lambda_from_mu(q); }), Errc::not_ci_hilbert_polynomial);
}

TEST(Numerator, Examples) {
  EXPECT_EQ(series_numerator({2, 3}).coeffs, (std::vector<Integer>{1, 0, -1, -1, 0, 1}));
  EXPECT_EQ(degrees_from_numerator(SeriesNumerator{{1, 0, -1, -1, 0, 1}}), (DegreeSequence{2, 3}));
  EXPECT_EQ(degrees_from_numerator(SeriesNumerator{{1, -2, 1}}), (DegreeSequence{1, 1}));
}

TEST(Numerator, Rejections) {
  EXPECT_EQ(code_of([] { degrees_from_numerator(SeriesNumerator{{1, 0, 1}}); }), Errc::not_ci_numerator);
  EXPECT_EQ(code_of([] { degrees_from_numerator(SeriesNumerator{{2, -2}}); }), Errc::not_ci_numerator);
  EXPECT_EQ(code_of([] { degrees_from_numerator(SeriesNumerator{{1}}); }), Errc::not_ci_numerator);
  EXPECT_EQ(code_of([] { degrees_from_numerator(SeriesNumerator{{1, -1, -1, 1, 1}}); }), Errc::not_ci_numerator);
}

TEST(Numerator, RoundTripSmall) {
  for (long a = 1; a <= 6; ++a)
    for (long b = a; b <= 6; ++b)
      for (long c = b; c <= 6; ++c) {
        DegreeSequence s{a, b, c};
        EXPECT_EQ(degrees_from_numerator(series_numerator(s)), s);
      }
}

TEST(Duality, HoldsOnRandomSequences) {
  std::mt19937_64 rng(35);
  for (int it = 0; it < 60; ++it) {
    const std::size_t c = 1 + it % 6;
    const std::size_t n = c + it % 7;
    const DegreeSequence seq(oracle::random_sequence(rng, c, 15));
    EXPECT_TRUE(duality_check(seq, n)) << seq.to_string();
    // the wrong twist fails unless P is constant
    if (n > c) EXPECT_FALSE(duality_check(hilbert_koszul(seq, n), Rational(seq.sum() - static_cast<long>(n))));
  }
}

TEST(Rigidity, OddCoefficientsFollowFromEvenOnes) {
  std::mt19937_64 rng(36);
  for (int it = 0; it < 60; ++it) {
    const std::size_t c = 1 + it % 6;
    const std::size_t n = c + 3 + it % 6;
    const DegreeSequence seq(oracle::random_sequence(rng, c, 15));
    const HilbertPoly p = hilbert_koszul(seq, n);
    const std::size_t d = p.dim();
    for (std::size_t ell = 1; ell <= d; ell += 2) {
      std::vector<Rational> prefix(p.mu.begin(), p.mu.begin() + static_cast<long>(std::max<std::size_t>(ell, 2)));
      EXPECT_EQ(odd_mu_from_even(prefix, d, ell), p.mu[ell]) << seq.to_string() << " ell=" << ell;
      const Rational k(seq.sum() - static_cast<long>(n) - 1);
      std::vector<Rational> pre(p.mu.begin(), p.mu.begin() + static_cast<long>(ell));
      EXPECT_EQ(odd_mu_from_twist(pre, d, ell, k), p.mu[ell]);
    }
  }
  EXPECT_THROW(odd_mu_from_twist({Rational(1)}, 3, 2, Rational(0)), Error);
  EXPECT_THROW(odd_mu_from_even({Rational(1)}, 3, 1), Error);
}

TEST(Regularity, RoundTrip) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 60; ++it) {
    const std::size_t c = 1 + it % 5;
    auto a = oracle::random_sequence(rng, c, 6);
    long sum = 0;
    for (long v : a) sum += v;
    const std::size_t n = static_cast<std::size_t>(sum) + it % 3;
    const DegreeSequence seq(a);
    EXPECT_EQ(recover_via_regularity(hilbert_koszul(seq, n)), seq);
  }
}

TEST(Regularity, DetectsViolation) {
  // (2,5,9) in P^4 has degree sum 16 > 4
  EXPECT_EQ(code_of([] { recover_via_regularity(hilbert_koszul({2, 5, 9}, 4)); }), Errc::regularity_violated);
}

TEST(HilbertPoly, FromUnipolyAndEval) {
  const HilbertPoly p = HilbertPoly::from_unipoly(4, 3, UniPoly({Rational(-495), Rational(90)}));
  EXPECT_EQ(p.mu, (std::vector<Rational>{Rational(90), Rational(-495)}));
  EXPECT_EQ(p(Rational(10)), Rational(405));
  EXPECT_THROW(HilbertPoly::from_unipoly(4, 3, UniPoly({Rational(0), Rational(0), Rational(1)})), Error);
}
