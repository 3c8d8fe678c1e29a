#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "sequence.hpp"
#include "todd.hpp"
#include "unipoly.hpp"

namespace cihilb {

// P(t) = mu_0 t^{n-c} + mu_1 t^{n-c-1} + ... + mu_{n-c}.
struct HilbertPoly {
  std::size_t ambient = 0;
  std::size_t codim = 0;
  std::vector<Rational> mu;

  std::size_t dim() const { return ambient - codim; }

  UniPoly to_unipoly() const { return UniPoly(std::vector<Rational>(mu.rbegin(), mu.rend())); }

  static HilbertPoly from_unipoly(std::size_t n, std::size_t c, const UniPoly& p) {
    if (c > n) throw Error(Errc::codim_exceeds_ambient);
    const std::size_t d = n - c;
    if (p.degree() > static_cast<long>(d))
      throw Error(Errc::invalid_argument, "polynomial degree exceeds n - c");
    HilbertPoly h{n, c, std::vector<Rational>(d + 1)};
    for (std::size_t i = 0; i <= d; ++i) h.mu[i] = p.coeff(d - i);
    return h;
  }

  Rational operator()(const Rational& t) const { return to_unipoly()(t); }
  std::string to_string() const { return to_unipoly().to_string(); }

  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
};

// Integer coefficients of prod_i (1 - t^{a_i}).
struct SeriesNumerator {
  std::vector<Integer> coeffs;
  friend bool operator==(const SeriesNumerator&, const SeriesNumerator&) = default;
};

inline SeriesNumerator series_numerator(const DegreeSequence& seq) {
  std::vector<Integer> c{Integer(1)};
  for (long a : seq.ascending()) {
    std::vector<Integer> next(c.size() + static_cast<std::size_t>(a), Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + static_cast<std::size_t>(a)] -= c[i];
    }
    c = std::move(next);
  }
  return SeriesNumerator{std::move(c)};
}

inline void require_codim(std::size_t c, std::size_t n) {
  if (c > n) throw Error(Errc::codim_exceeds_ambient,
                         "c = " + std::to_string(c) + ", n = " + std::to_string(n));
}

// Koszul resolution: P(t) = sum_S (-1)^{|S|} binom(t - sum_S a + n, n).
// The signed subset sums are exactly the coefficients of the series numerator.
inline HilbertPoly hilbert_koszul(const DegreeSequence& seq, std::size_t n) {
  require_codim(seq.codim(), n);
  const UniPoly base = binom_poly(static_cast<unsigned>(n));
  const SeriesNumerator num = series_numerator(seq);
  UniPoly p;
  for (std::size_t j = 0; j < num.coeffs.size(); ++j) {
    if (num.coeffs[j] == 0) continue;
    p += base.shifted(Rational(-static_cast<long>(j))) * Rational(num.coeffs[j]);
  }
  return HilbertPoly::from_unipoly(n, seq.codim(), p);
}

// mu_i = sum_{j<=i} q_{i-j} Lambda_j / (d - i)!, with Lambda_0 = Lt_0 and
// Lambda_j = Lt_0 * Lt_j.
inline HilbertPoly mu_from_lambda(const LambdaVector& lv, std::size_t n) {
  require_codim(lv.codim, n);
  const std::size_t d = n - lv.codim;
  if (lv.size() < d + 1) throw Error(Errc::invalid_argument, "lambda vector too short for this ambient dimension");
  const QVector q = ambient_todd_q(n, d);
  std::vector<Rational> big(d + 1);
  big[0] = lv[0];
  for (std::size_t j = 1; j <= d; ++j) big[j] = lv[0] * lv[j];
  HilbertPoly h{n, lv.codim, std::vector<Rational>(d + 1)};
  for (std::size_t i = 0; i <= d; ++i) {
    Rational acc;
    for (std::size_t j = 0; j <= i; ++j) acc += q[i - j] * big[j];
    h.mu[i] = acc / Rational(factorial(d - i));
  }
  return h;
}

// Forward substitution through the lower-triangular system above.
inline LambdaVector lambda_from_mu(const HilbertPoly& p) {
  const std::size_t d = p.dim();
  const QVector q = ambient_todd_q(p.ambient, d);
  std::vector<Rational> big(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    Rational acc = p.mu[i] * Rational(factorial(d - i));
    for (std::size_t j = 0; j < i; ++j) acc -= q[i - j] * big[j];
    big[i] = acc;
  }
  if (!big[0].is_integer() || big[0].sign() <= 0)
    throw Error(Errc::not_ci_hilbert_polynomial, "degree " + big[0].to_string() + " is not a positive integer");
  LambdaVector lv{p.codim, {}};
  lv.values.push_back(big[0]);
  for (std::size_t j = 1; j <= d; ++j) lv.values.push_back(big[j] / big[0]);
  return lv;
}

// Hirzebruch-Riemann-Roch route.
inline HilbertPoly hilbert_hrr(const DegreeSequence& seq, std::size_t n) {
  require_codim(seq.codim(), n);
  return mu_from_lambda(lambda_numeric(seq, n - seq.codim()), n);
}

// Peel off (1 - t^a) with a the smallest positive degree present, repeatedly.
inline DegreeSequence degrees_from_numerator(const SeriesNumerator& num) {
  std::vector<Integer> c = num.coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty() || c[0] != 1) throw Error(Errc::not_ci_numerator, "constant term must be 1");
  if (c.size() == 1) throw Error(Errc::not_ci_numerator, "numerator has no factors");
  std::vector<long> degrees;
  while (c.size() > 1) {
    std::size_t a = 1;
    while (c[a] == 0) ++a;  // terminates: c is trimmed
    // c = (1 - t^a) * q  <=>  q_i = c_i + q_{i-a}
    const std::size_t qdeg = c.size() - 1 - a;
    std::vector<Integer> q(qdeg + 1);
    for (std::size_t i = 0; i <= qdeg; ++i) q[i] = c[i] + (i >= a ? q[i - a] : Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      Integer v = (i <= qdeg ? q[i] : Integer(0)) - (i >= a && i - a <= qdeg ? q[i - a] : Integer(0));
      if (v != c[i]) throw Error(Errc::not_ci_numerator, "division by (1 - t^" + std::to_string(a) + ") leaves a remainder");
    }
    degrees.push_back(static_cast<long>(a));
    c = std::move(q);
  }
  return DegreeSequence(std::move(degrees));
}

// P(t) == (-1)^{n-c} P(k - t) with k = sum a_i - n - 1.
inline bool duality_check(const HilbertPoly& p, const Rational& k) {
  UniPoly f = p.to_unipoly();
  UniPoly g = f.reflected(k);
  if (p.dim() % 2 == 1) g *= Rational(-1);
  return f == g;
}

inline bool duality_check(const DegreeSequence& seq, std::size_t n) {
  const HilbertPoly p = hilbert_koszul(seq, n);
  return duality_check(p, Rational(seq.sum() - static_cast<long>(n) - 1));
}

// Odd-index rigidity for a given duality twist k:
//   2 (d-ell)! mu_ell = -sum_{i<ell} (d-i)!/(ell-i)! k^{ell-i} mu_i.
inline Rational odd_mu_from_twist(const std::vector<Rational>& mu_prefix, std::size_t d, std::size_t ell,
                                  const Rational& k) {
  if (ell % 2 == 0) throw Error(Errc::invalid_argument, "ell must be odd");
  if (ell > d) throw Error(Errc::invalid_argument, "ell exceeds the dimension");
  if (mu_prefix.size() < ell) throw Error(Errc::invalid_argument, "need mu_0 .. mu_{ell-1}");
  Rational acc;
  for (std::size_t i = 0; i < ell; ++i)
    acc += Rational(factorial(d - i), factorial(ell - i)) * pow(k, ell - i) * mu_prefix[i];
  return -acc / (Rational(2) * Rational(factorial(d - ell)));
}

// Same, with k recovered from mu_1 = -(d/2) mu_0 k. For ell = 1 this just
// returns mu_1, so the prefix must then hold mu_0 and mu_1.
inline Rational odd_mu_from_even(const std::vector<Rational>& mu_prefix, std::size_t d, std::size_t ell) {
  if (mu_prefix.empty() || mu_prefix[0].is_zero()) throw Error(Errc::invalid_argument, "mu_0 must be nonzero");
  if (mu_prefix.size() < 2) throw Error(Errc::invalid_argument, "mu_1 is needed to recover the twist");
  if (d == 0) throw Error(Errc::invalid_argument, "dimension must be positive");
  const Rational k = Rational(-2) * mu_prefix[1] / (Rational(static_cast<long>(d)) * mu_prefix[0]);
  return odd_mu_from_twist(mu_prefix, d, ell, k);
}

// Recovery when sum a_i <= n: P agrees with the Hilbert function for t >= 0,
// so (1 - t)^{n+1} times the Hilbert series gives the numerator directly.
inline DegreeSequence recover_via_regularity(const HilbertPoly& p) {
  const std::size_t n = p.ambient;
  const UniPoly f = p.to_unipoly();
  std::vector<Integer> num(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    Rational acc;
    for (std::size_t m = 0; m <= std::min(j, n + 1); ++m) {
      Rational term = Rational(binomial(n + 1, m)) * f(Rational(static_cast<long>(j - m)));
      if (m % 2 == 0) acc += term; else acc -= term;
    }
    if (!acc.is_integer()) throw Error(Errc::regularity_violated, "non-integral numerator coefficient");
    num[j] = acc.to_integer();
  }
  DegreeSequence seq;
  try {
    seq = degrees_from_numerator(SeriesNumerator{num});
  } catch (const Error& e) {
    throw Error(Errc::regularity_violated, e.what());
  }
  if (seq.codim() != p.codim) throw Error(Errc::regularity_violated, "codimension mismatch");
  if (seq.sum() > static_cast<long>(n)) throw Error(Errc::regularity_violated, "degree sum exceeds n");
  if (hilbert_koszul(seq, n) != p) throw Error(Errc::regularity_violated, "round trip mismatch");
  return seq;
}

}  // namespace cihilb
