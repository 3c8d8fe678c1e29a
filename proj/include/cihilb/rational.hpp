#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace cihilb {

using Integer = mpz_class;

// Exact rational number, always stored in lowest terms with a positive
// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}                    // NOLINT(implicit)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(const Integer& v) : q_(v) {}          // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw Error(Errc::invalid_argument, "cannot parse rational '" + s + "'");
    }
  }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Exact integer value; throws when the value is not integral.
  Integer to_integer() const {
    if (!is_integer()) throw Error(Errc::invalid_argument, to_string() + " is not an integer");
    return q_.get_num();
  }

  double to_double() const { return q_.get_d(); }
  const mpq_class& raw() const { return q_; }

  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_{0};
};

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
  Integer n = ipow(base.num(), e), d = ipow(base.den(), e);
  return Rational(n, d);
}

// Exact square root if `v` is a perfect square, otherwise -1.
inline Integer exact_sqrt(const Integer& v) {
  if (v < 0) return -1;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return -1;
  return sqrt(v);
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline bool fits_int64(const Integer& v) {
  static_assert(sizeof(long) == 8);
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

inline std::size_t hash_value(const Integer& v) {
  const auto* p = v.get_mpz_t();
  std::size_t h = std::hash<int>{}(p->_mp_size);
  int limbs = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
  for (int i = 0; i < limbs; ++i) h = h * 1000003u ^ static_cast<std::size_t>(p->_mp_d[i]);
  return h;
}

}  // namespace cihilb
