#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "sequence.hpp"
#include "series.hpp"
#include "symfunc.hpp"

namespace cihilb {

// Normalized invariants: values[0] = e_c, values[i] = Lambda_i / deg X for
// i > 0.
struct LambdaVector {
  std::size_t codim = 0;
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values.at(i); }
  friend bool operator==(const LambdaVector&, const LambdaVector&) = default;
};

// Coefficients of Td((1+h)^{n+1}) = (h / (1 - e^{-h}))^{n+1}.
struct QVector {
  std::size_t ambient = 0;
  std::vector<Rational> values;

  const Rational& operator[](std::size_t i) const { return values.at(i); }
};

// C_0..C_m with 1/c(N) = prod 1/(1 + a_i h) = sum_j C_j h^j; C_j = (-1)^j h_j(a).
inline std::vector<Rational> inv_normal_chern_coeffs(const DegreeSequence& seq, std::size_t m) {
  TruncSeries acc = TruncSeries::one(m);
  for (long a : seq.ascending()) {
    TruncSeries f(m);
    f[0] = Rational(1);
    if (m >= 1) f[1] = Rational(a);
    acc = acc * series_inverse(f);
  }
  return acc.coeffs();
}

// T_j(eps_1..eps_j): the weight-j part of prod_i b_i/(1 - e^{-b_i}) over j
// formal variables, in their elementary symmetric functions. The truncated
// product is built orbit-by-orbit (the coefficient of M_lambda is
// prod_k t_{lambda_k} where t_k are the coefficients of x/(1-e^{-x})) and then
// reduced to the e-basis. Cached per j.
inline const EPoly& todd_T(std::size_t j) {
  static std::mutex lock;
  static std::map<std::size_t, EPoly> cache;
  std::lock_guard<std::mutex> guard(lock);
  if (auto it = cache.find(j); it != cache.end()) return it->second;
  const TruncSeries t = todd_generator(j);
  MPoly m(j);
  for (const Partition& lambda : partitions(static_cast<int>(j), static_cast<int>(j))) {
    Rational c(1);
    for (int part : lambda.parts()) c *= t[static_cast<std::size_t>(part)];
    m.add(lambda, c);
  }
  return cache.emplace(j, monomial_to_e(std::move(m))).first->second;
}

// Symbolic invariant in e_1..e_c: e_c for i = 0, T_i(C_1, ..., C_i) otherwise,
// where C_k = (-1)^k h_k is rewritten in the e-basis.
inline EPoly lambda_symbolic(std::size_t c, std::size_t i) {
  if (c < 1) throw Error(Errc::invalid_argument, "codimension must be positive");
  static std::mutex lock;
  static std::map<std::pair<std::size_t, std::size_t>, EPoly> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    if (auto it = cache.find({c, i}); it != cache.end()) return it->second;
  }
  EPoly result(c);
  if (i == 0) {
    result = EPoly::generator(c, c);
  } else {
    std::vector<EPoly> images;
    for (std::size_t k = 1; k <= i; ++k) {
      EPoly h = complete_homogeneous_epoly(k, c);
      images.push_back(k % 2 == 0 ? h : h * Rational(-1));
    }
    result = substitute(todd_T(i), images);
  }
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(std::make_pair(c, i), std::move(result)).first->second;
}

// Numeric invariants through index imax. Lambda_i is the coefficient of
// h^{i+c} in prod_j (1 - e^{-a_j h}), because Td is multiplicative and
// Td(1 + a h)^{-1} = (1 - e^{-a h}) / (a h).
inline LambdaVector lambda_numeric(const DegreeSequence& seq, std::size_t imax) {
  const std::size_t c = seq.codim();
  const std::size_t order = imax + c;
  TruncSeries acc = TruncSeries::one(order);
  for (long a : seq.ascending()) acc = acc * one_minus_exp_neg(a, order);
  const Rational deg(seq.product());
  LambdaVector lv{c, {}};
  lv.values.reserve(imax + 1);
  lv.values.push_back(deg);
  for (std::size_t i = 1; i <= imax; ++i) lv.values.push_back(acc[i + c] / deg);
  return lv;
}

inline QVector ambient_todd_q(std::size_t n, std::size_t m) {
  return QVector{n, series_pow(todd_generator(m), n + 1).coeffs()};
}

}  // namespace cihilb
