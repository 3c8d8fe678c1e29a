#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cihilb {

// Power series in h known through h^order. Binary operations truncate at the
// smaller of the two orders.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : c_(order + 1) {}
  TruncSeries(std::size_t order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
  }

  static TruncSeries one(std::size_t order) {
    TruncSeries s(order);
    s.c_[0] = Rational(1);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  TruncSeries& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  std::string to_string(const std::string& var = "h") const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[k].to_string() + ")";
      if (k > 0) out += "*" + var + "^" + std::to_string(k);
    }
    return (out.empty() ? "0" : out) + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
  }

 private:
  std::vector<Rational> c_;
};

inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

inline TruncSeries series_inverse(const TruncSeries& a) {
  if (a[0].is_zero()) throw Error(Errc::not_invertible, "series has zero constant term");
  const std::size_t n = a.order();
  TruncSeries b(n);
  const Rational inv0 = Rational(1) / a[0];
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc * inv0;
  }
  return b;
}

inline TruncSeries series_pow(const TruncSeries& a, unsigned long k) {
  TruncSeries result = TruncSeries::one(a.order());
  TruncSeries base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

// 1 - exp(-a h) = sum_{k>=1} (-1)^{k+1} a^k h^k / k!, through h^order.
inline TruncSeries one_minus_exp_neg(long a, std::size_t order) {
  TruncSeries s(order);
  Rational term(1);
  for (std::size_t k = 1; k <= order; ++k) {
    term = term * Rational(-a) / Rational(static_cast<long>(k));
    s[k] = -term;
  }
  return s;
}

// x / (1 - exp(-x)) = 1 + x/2 + x^2/12 - x^4/720 + ..., through x^order.
inline TruncSeries todd_generator(std::size_t order) {
  // (1 - exp(-x)) / x = sum_k (-1)^k x^k / (k+1)!
  TruncSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) {
    Rational v(Integer(1), factorial(k + 1));
    s[k] = (k % 2 == 0) ? v : -v;
  }
  return series_inverse(s);
}

}  // namespace cihilb
