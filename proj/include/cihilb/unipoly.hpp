#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cihilb {

// Dense univariate polynomial over Q; coeffs()[k] multiplies t^k.
// The highest stored coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& v) { return UniPoly({v}); }
  static UniPoly monomial(const Rational& v, std::size_t k) {
    std::vector<Rational> c(k + 1);
    c[k] = v;
    return UniPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
  Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

  Rational operator()(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // p(t + s), by Horner's scheme on the shifted variable.
  UniPoly shifted(const Rational& s) const {
    UniPoly acc;
    const UniPoly lin({s, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  // p(k - t).
  UniPoly reflected(const Rational& k) const {
    UniPoly acc;
    const UniPoly lin({k, Rational(-1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(r));
  }

  // Forward difference p(t + 1) - p(t).
  UniPoly difference() const { return shifted(Rational(1)) - *this; }

  // Descending-power rendering, e.g. "90*t - 495" or "1/2*t^2 + 3/2*t + 1".
  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
      const Rational& a = c_[static_cast<std::size_t>(k)];
      if (a.is_zero()) continue;
      Rational mag = a.sign() < 0 ? -a : a;
      if (out.empty()) {
        if (a.sign() < 0) out += "-";
      } else {
        out += a.sign() < 0 ? " - " : " + ";
      }
      bool unit = mag == Rational(1);
      if (k == 0) {
        out += mag.to_string();
      } else {
        if (!unit) out += mag.to_string() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// binom(t + m, m) = (t+1)(t+2)...(t+m) / m!, the Hilbert polynomial of P^m.
inline UniPoly binom_poly(unsigned m) {
  UniPoly p = UniPoly::constant(Rational(1));
  for (unsigned k = 1; k <= m; ++k) {
    p = p * UniPoly({Rational(static_cast<long>(k)), Rational(1)});
  }
  return p * Rational(Integer(1), factorial(m));
}

namespace detail {

// Integer ranges [a, b] covering [lo, hi] on each of which m -> p(m) is
// monotone. Found recursively through the forward difference: p is monotone
// wherever p(m+1) - p(m) keeps a weak sign.
inline std::vector<std::pair<Integer, Integer>> monotone_pieces(const UniPoly& p, const Integer& lo,
                                                                const Integer& hi) {
  if (p.degree() <= 1 || lo >= hi) return {{lo, hi}};
  const UniPoly q = p.difference();
  auto sgn = [&q](const Integer& m) { return q(Rational(m)).sign(); };
  std::vector<std::pair<Integer, Integer>> out;
  for (const auto& [a, b] : monotone_pieces(q, lo, hi - 1)) {
    int sa = sgn(a), sb = sgn(b);
    if (sa * sb >= 0) {
      out.emplace_back(a, b + 1);
      continue;
    }
    // q is monotone on [a, b] and flips sign: keeps sign sa on a prefix.
    Integer l = a, r = b;
    while (r - l > 1) {
      Integer mid = (l + r) / 2;
      if (sgn(mid) == sa) l = mid; else r = mid;
    }
    out.emplace_back(a, r);
    out.emplace_back(r, b + 1);
  }
  return out;
}

}  // namespace detail

// All integers r in [lo, hi] with p(r) == 0, ascending. p must be nonzero.
inline std::vector<Integer> integer_roots(const UniPoly& p, const Integer& lo, const Integer& hi) {
  if (p.is_zero()) throw Error(Errc::invalid_argument, "integer_roots of the zero polynomial");
  std::vector<Integer> roots;
  if (lo > hi) return roots;
  auto sgn = [&p](const Integer& m) { return p(Rational(m)).sign(); };
  for (const auto& [a, b] : detail::monotone_pieces(p, lo, hi)) {
    int sa = sgn(a), sb = sgn(b);
    if (sa * sb > 0) continue;
    Integer m = a;
    if (sa != 0) {
      Integer l = a, r = b;
      while (r - l > 1) {
        Integer mid = (l + r) / 2;
        if (sgn(mid) == sa) l = mid; else r = mid;
      }
      m = r;
    }
    while (m <= b && sgn(m) == 0) {
      roots.push_back(m);
      m += 1;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace cihilb
