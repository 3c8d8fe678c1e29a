#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "sequence.hpp"

namespace cihilb {

// Exponent vector over a fixed number of variables (e_1..e_c or a_1..a_c).
using Exponent = std::vector<int>;

// Values e_1..e_c of the elementary symmetric polynomials at a point.
struct EVector {
  std::vector<Integer> values;  // values[k-1] = e_k

  std::size_t codim() const { return values.size(); }
  const Integer& e(std::size_t k) const { return values.at(k - 1); }
  friend bool operator==(const EVector&, const EVector&) = default;
};

inline EVector elementary_values(const DegreeSequence& seq) {
  const std::size_t c = seq.codim();
  std::vector<Integer> e(c + 1, Integer(0));
  e[0] = 1;
  for (long a : seq.ascending())
    for (std::size_t k = c; k >= 1; --k) e[k] += e[k - 1] * a;
  return EVector{std::vector<Integer>(e.begin() + 1, e.end())};
}

// -------------------------------------------------------------------------
// Polynomials in e_1..e_c.

class EPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit EPoly(std::size_t nvars) : nvars_(nvars) {}

  static EPoly constant(std::size_t nvars, const Rational& v) {
    EPoly p(nvars);
    p.add(Exponent(nvars, 0), v);
    return p;
  }
  // e_k as a polynomial, 1 <= k <= nvars.
  static EPoly generator(std::size_t nvars, std::size_t k) {
    if (k < 1 || k > nvars) throw Error(Errc::invalid_argument, "e_k index out of range");
    Exponent x(nvars, 0);
    x[k - 1] = 1;
    EPoly p(nvars);
    p.add(x, Rational(1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Exponent& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add(const Exponent& x, const Rational& v) {
    if (x.size() != nvars_) throw Error(Errc::invalid_argument, "exponent length mismatch");
    if (v.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(x, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static int weight(const Exponent& x) {
    int w = 0;
    for (std::size_t j = 0; j < x.size(); ++j) w += static_cast<int>(j + 1) * x[j];
    return w;
  }

  bool is_homogeneous(int w) const {
    return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return weight(t.first) == w; });
  }

  EPoly& operator+=(const EPoly& o) {
    check_same(o);
    for (const auto& [x, v] : o.terms_) add(x, v);
    return *this;
  }
  EPoly& operator-=(const EPoly& o) {
    check_same(o);
    for (const auto& [x, v] : o.terms_) add(x, -v);
    return *this;
  }
  EPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [x, v] : terms_) v *= s;
    return *this;
  }
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator*(EPoly a, const Rational& s) { return a *= s; }
  friend EPoly operator*(const Rational& s, EPoly a) { return a *= s; }
  friend EPoly operator*(const EPoly& a, const EPoly& b) {
    a.check_same(b);
    EPoly r(a.nvars_);
    Exponent z(a.nvars_);
    for (const auto& [x, u] : a.terms_)
      for (const auto& [y, v] : b.terms_) {
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = x[i] + y[i];
        r.add(z, u * v);
      }
    return r;
  }
  friend bool operator==(const EPoly& a, const EPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational evaluate(const std::vector<Rational>& e) const {
    if (e.size() != nvars_) throw Error(Errc::invalid_argument, "evaluation point length mismatch");
    Rational acc;
    for (const auto& [x, v] : terms_) {
      Rational m = v;
      for (std::size_t j = 0; j < nvars_; ++j)
        if (x[j] != 0) m *= pow(e[j], static_cast<unsigned long>(x[j]));
      acc += m;
    }
    return acc;
  }
  Rational evaluate(const EVector& e) const {
    std::vector<Rational> r(e.values.begin(), e.values.end());
    return evaluate(r);
  }

  // Terms in display order: weight, then total degree (both descending), then
  // reverse lexicographic among equal degree.
  std::vector<std::pair<Exponent, Rational>> ordered_terms() const {
    std::vector<std::pair<Exponent, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) {
      return display_before(p.first, q.first);
    });
    return v;
  }

  // Canonical text: "(2*e1^2 - e2) * (1/12)" when a rational content factor
  // exists, "e1*e2 - e3" when all coefficients are integers.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    auto ordered = ordered_terms();
    bool all_int = std::all_of(ordered.begin(), ordered.end(), [](const auto& t) { return t.second.is_integer(); });
    Rational content(1);
    if (!all_int) {
      Integer g = 0, l = 1;
      for (const auto& [x, v] : ordered) {
        g = gcd(g, v.num());
        l = lcm(l, v.den());
      }
      content = Rational(abs(g), l);
      if (ordered.front().second.sign() < 0) content = -content;
    }
    std::string body;
    for (const auto& [x, v] : ordered) {
      Rational a = v / content;
      Rational mag = a.sign() < 0 ? -a : a;
      if (body.empty()) {
        if (a.sign() < 0) body += "-";
      } else {
        body += a.sign() < 0 ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "e" + std::to_string(j + 1);
        if (x[j] > 1) mono += "^" + std::to_string(x[j]);
      }
      if (mono.empty()) body += mag.to_string();
      else if (mag == Rational(1)) body += mono;
      else body += mag.to_string() + "*" + mono;
    }
    if (all_int) return body;
    return "(" + body + ") * (" + content.to_string() + ")";
  }

 private:
  static bool display_before(const Exponent& a, const Exponent& b) {
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa > wb;
    int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
  void check_same(const EPoly& o) const {
    if (o.nvars_ != nvars_) throw Error(Errc::invalid_argument, "EPoly variable count mismatch");
  }

  std::size_t nvars_;
  Terms terms_;
};

// p(images[0], ..., images[k-1]) where p is a polynomial in k variables and
// every image lives in the same ring.
inline EPoly substitute(const EPoly& p, const std::vector<EPoly>& images) {
  if (images.size() != p.nvars()) throw Error(Errc::invalid_argument, "substitution arity mismatch");
  if (images.empty()) return p;
  const std::size_t target = images.front().nvars();
  std::vector<std::vector<EPoly>> powers(images.size());
  auto power = [&](std::size_t j, int k) -> const EPoly& {
    auto& v = powers[j];
    if (v.empty()) v.push_back(EPoly::constant(target, Rational(1)));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * images[j]);
    return v[static_cast<std::size_t>(k)];
  };
  EPoly out(target);
  for (const auto& [x, v] : p.terms()) {
    EPoly m = EPoly::constant(target, v);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] > 0) m = m * power(j, x[j]);
    out += m;
  }
  return out;
}

// Parses sums and products of terms like "3/2*e1^2*e3", parenthesized
// subexpressions, and the rendered "(body) * (content)" form.
inline EPoly parse_epoly(std::string_view text, std::size_t nvars) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> EPoly {
    throw Error(Errc::invalid_argument, "cannot parse '" + std::string(text) + "': " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };
  auto exponent = [&]() -> int {
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      std::string d = digits();
      if (d.empty()) fail("missing exponent");
      return std::stoi(d);
    }
    return 1;
  };
  auto power = [](EPoly base, int k) {
    EPoly r = EPoly::constant(base.nvars(), Rational(1));
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
  };
  std::function<EPoly()> expr;
  auto factor = [&]() -> EPoly {
    skip();
    if (pos >= text.size()) return fail("unexpected end");
    char ch = text[pos];
    if (ch == '(') {
      ++pos;
      EPoly inner = expr();
      skip();
      if (pos >= text.size() || text[pos] != ')') return fail("missing ')'");
      ++pos;
      return power(inner, exponent());
    }
    if (ch == 'e') {
      ++pos;
      std::string d = digits();
      if (d.empty()) return fail("bad generator");
      const std::size_t k = std::stoul(d);
      if (k < 1 || k > nvars) return fail("generator e" + d + " out of range");
      return power(EPoly::generator(nvars, k), exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num(digits());
      skip();
      Integer den(1);
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip();
        std::string d = digits();
        if (d.empty()) return fail("bad denominator");
        den = Integer(d);
      }
      return EPoly::constant(nvars, Rational(num, den));
    }
    return fail(std::string("unexpected '") + ch + "'");
  };
  auto term = [&]() -> EPoly {
    EPoly acc = factor();
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        acc = acc * factor();
      } else if (pos < text.size() && text[pos] == '(') {
        acc = acc * factor();  // juxtaposed factors
      } else {
        return acc;
      }
    }
  };
  expr = [&]() -> EPoly {
    skip();
    bool negate = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negate = text[pos++] == '-';
    EPoly acc = term();
    if (negate) acc *= Rational(-1);
    for (;;) {
      skip();
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) return acc;
      const bool minus = text[pos++] == '-';
      EPoly t = term();
      if (minus) acc -= t; else acc += t;
    }
  };
  EPoly result = expr();
  skip();
  if (pos != text.size()) return fail("trailing input");
  return result;
}

// h_j in the e-basis: h_j = sum_{i=1..min(j,c)} (-1)^{i-1} e_i h_{j-i}.
inline EPoly complete_homogeneous_epoly(std::size_t j, std::size_t c) {
  std::vector<EPoly> h{EPoly::constant(c, Rational(1))};
  for (std::size_t m = 1; m <= j; ++m) {
    EPoly acc(c);
    for (std::size_t i = 1; i <= std::min(m, c); ++i) {
      EPoly term = EPoly::generator(c, i) * h[m - i];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    h.push_back(std::move(acc));
  }
  return h[j];
}

// -------------------------------------------------------------------------
// Polynomials in the monomial symmetric basis M_lambda over c variables.

class MPoly {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly basis(std::size_t nvars, const Partition& lambda, const Rational& coeff = Rational(1)) {
    MPoly p(nvars);
    p.add(lambda, coeff);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add(const Partition& lambda, const Rational& v) {
    if (lambda.length() > nvars_)
      throw Error(Errc::invalid_argument, "partition has more parts than variables");
    if (v.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(lambda, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check_same(o);
    for (const auto& [l, v] : o.terms_) add(l, v);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_same(o);
    for (const auto& [l, v] : o.terms_) add(l, -v);
    return *this;
  }
  MPoly& operator*=(const Rational& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [l, v] : terms_) v *= s;
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Sum over the distinct monomials of each M_lambda at the given point.
  Rational evaluate(const std::vector<Rational>& a) const {
    if (a.size() != nvars_) throw Error(Errc::invalid_argument, "evaluation point length mismatch");
    Rational acc;
    for (const auto& [lambda, v] : terms_) {
      std::vector<int> x = lambda.padded(nvars_);
      std::sort(x.begin(), x.end());
      Rational m;
      do {
        Rational prod(1);
        for (std::size_t i = 0; i < nvars_; ++i)
          if (x[i] != 0) prod *= pow(a[i], static_cast<unsigned long>(x[i]));
        m += prod;
      } while (std::next_permutation(x.begin(), x.end()));
      acc += v * m;
    }
    return acc;
  }

  // "M[2,1] + 2*M[1,1,1]": weight descending, then lex descending.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Partition, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) {
      if (p.first.weight() != q.first.weight()) return p.first.weight() > q.first.weight();
      return p.first > q.first;
    });
    std::string out;
    for (const auto& [lambda, a] : v) {
      Rational mag = a.sign() < 0 ? -a : a;
      if (out.empty()) {
        if (a.sign() < 0) out += "-";
      } else {
        out += a.sign() < 0 ? " - " : " + ";
      }
      if (lambda.length() == 0) {
        out += mag.to_string();
        continue;
      }
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += "M[" + lambda.to_string() + "]";
    }
    return out;
  }

 private:
  void check_same(const MPoly& o) const {
    if (o.nvars_ != nvars_) throw Error(Errc::invalid_argument, "MPoly variable count mismatch");
  }

  std::size_t nvars_;
  Terms terms_;
};

namespace detail {

// M_lambda * M_mu in n variables, as integer M-coefficients. Fix the
// representative alpha = lambda and run beta over the distinct rearrangements
// of mu; a target nu is hit N_nu times, and its product coefficient is
// |orbit(lambda)| * N_nu / |orbit(nu)|.
inline std::map<Partition, Integer> basis_product(std::size_t n, const Partition& lambda, const Partition& mu) {
  using Key = std::tuple<std::size_t, Partition, Partition>;
  static std::mutex mu_lock;
  static std::map<Key, std::map<Partition, Integer>> cache;
  Key key{n, std::min(lambda, mu), std::max(lambda, mu)};
  {
    std::lock_guard<std::mutex> g(mu_lock);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Partition& l = std::get<1>(key);
  const Partition& m = std::get<2>(key);
  std::map<Partition, Integer> hits;
  std::vector<int> alpha = l.padded(n);
  std::vector<int> beta = m.padded(n);
  std::sort(beta.begin(), beta.end());
  std::vector<int> sum(n);
  do {
    for (std::size_t i = 0; i < n; ++i) sum[i] = alpha[i] + beta[i];
    hits[Partition(sum)] += 1;
  } while (std::next_permutation(beta.begin(), beta.end()));
  const Integer orbit_l = l.orbit_size(n);
  for (auto& [nu, count] : hits) count = orbit_l * count / nu.orbit_size(n);
  std::lock_guard<std::mutex> g(mu_lock);
  cache.emplace(key, hits);
  return hits;
}

}  // namespace detail

inline MPoly m_multiply(const MPoly& x, const MPoly& y) {
  if (x.nvars() != y.nvars()) throw Error(Errc::invalid_argument, "MPoly variable count mismatch");
  const std::size_t n = x.nvars();
  MPoly r(n);
  for (const auto& [l, u] : x.terms())
    for (const auto& [m, v] : y.terms())
      for (const auto& [nu, k] : detail::basis_product(n, l, m)) r.add(nu, u * v * Rational(k));
  return r;
}

namespace detail {

// prod_k e_k^{x_k} in the M basis (e_k = M_{1^k}).
inline MPoly e_monomial_in_m(std::size_t n, const Exponent& x) {
  static std::mutex lock;
  static std::map<std::pair<std::size_t, Exponent>, MPoly> cache;
  {
    std::lock_guard<std::mutex> g(lock);
    if (auto it = cache.find({n, x}); it != cache.end()) return it->second;
  }
  MPoly acc = MPoly::basis(n, Partition{});
  for (std::size_t k = 1; k <= x.size(); ++k) {
    const MPoly ek = MPoly::basis(n, Partition(std::vector<int>(k, 1)));
    for (int rep = 0; rep < x[k - 1]; ++rep) acc = m_multiply(acc, ek);
  }
  std::lock_guard<std::mutex> g(lock);
  cache.emplace(std::make_pair(n, x), acc);
  return acc;
}

}  // namespace detail

inline MPoly e_to_monomial(const EPoly& p) {
  MPoly r(p.nvars());
  for (const auto& [x, v] : p.terms()) r += detail::e_monomial_in_m(p.nvars(), x) * v;
  return r;
}

// Fundamental theorem on symmetric polynomials: repeatedly cancel the
// lex-leading M_lambda with c * e_1^{l1-l2} e_2^{l2-l3} ... e_c^{lc}. The
// leading partition strictly decreases, so this terminates.
inline EPoly monomial_to_e(MPoly p) {
  const std::size_t n = p.nvars();
  EPoly out(n);
  while (!p.is_zero()) {
    auto lead = std::prev(p.terms().end());
    const Partition lambda = lead->first;
    const Rational coeff = lead->second;
    Exponent x(n, 0);
    for (std::size_t k = 0; k < n; ++k) x[k] = lambda[k] - lambda[k + 1];
    out.add(x, coeff);
    p -= detail::e_monomial_in_m(n, x) * coeff;
  }
  return out;
}

// Sufficient criterion for p > 0 at every point with positive entries:
// all M-coefficients nonnegative and at least one positive.
inline bool is_positive_on_positive_integers(const MPoly& p) {
  if (p.is_zero()) return false;
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.sign() > 0; });
}

// -------------------------------------------------------------------------
// Polynomials in the raw variables a_1..a_c, optionally truncated.

class AVarPoly {
 public:
  using Terms = std::map<Exponent, Rational>;
  static constexpr int untruncated = -1;

  explicit AVarPoly(std::size_t nvars, int max_degree = untruncated) : nvars_(nvars), max_degree_(max_degree) {}

  static AVarPoly variable(std::size_t nvars, std::size_t i, int max_degree = untruncated) {
    Exponent x(nvars, 0);
    x.at(i) = 1;
    AVarPoly p(nvars, max_degree);
    p.add(x, Rational(1));
    return p;
  }
  static AVarPoly constant(std::size_t nvars, const Rational& v, int max_degree = untruncated) {
    AVarPoly p(nvars, max_degree);
    p.add(Exponent(nvars, 0), v);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponent& x, const Rational& v) {
    if (x.size() != nvars_) throw Error(Errc::invalid_argument, "exponent length mismatch");
    if (v.is_zero()) return;
    if (max_degree_ >= 0 && std::accumulate(x.begin(), x.end(), 0) > max_degree_) return;
    auto [it, fresh] = terms_.try_emplace(x, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AVarPoly& operator+=(const AVarPoly& o) {
    check_same(o);
    for (const auto& [x, v] : o.terms_) add(x, v);
    return *this;
  }
  AVarPoly& operator-=(const AVarPoly& o) {
    check_same(o);
    for (const auto& [x, v] : o.terms_) add(x, -v);
    return *this;
  }
  friend AVarPoly operator+(AVarPoly a, const AVarPoly& b) { return a += b; }
  friend AVarPoly operator-(AVarPoly a, const AVarPoly& b) { return a -= b; }
  friend AVarPoly operator*(const AVarPoly& a, const AVarPoly& b) {
    a.check_same(b);
    AVarPoly r(a.nvars_, combined_truncation(a.max_degree_, b.max_degree_));
    Exponent z(a.nvars_);
    for (const auto& [x, u] : a.terms_)
      for (const auto& [y, v] : b.terms_) {
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = x[i] + y[i];
        r.add(z, u * v);
      }
    return r;
  }
  friend AVarPoly operator*(AVarPoly a, const Rational& s) {
    AVarPoly r(a.nvars_, a.max_degree_);
    for (const auto& [x, v] : a.terms_) r.add(x, v * s);
    return r;
  }
  friend bool operator==(const AVarPoly& a, const AVarPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational evaluate(const std::vector<Rational>& a) const {
    if (a.size() != nvars_) throw Error(Errc::invalid_argument, "evaluation point length mismatch");
    Rational acc;
    for (const auto& [x, v] : terms_) {
      Rational m = v;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (x[i] != 0) m *= pow(a[i], static_cast<unsigned long>(x[i]));
      acc += m;
    }
    return acc;
  }

  // Collapse to the M basis, verifying that each orbit is complete and has a
  // single coefficient.
  MPoly to_monomial_basis() const {
    std::map<Partition, std::pair<Rational, Integer>> orbits;
    for (const auto& [x, v] : terms_) {
      Partition lambda(x);
      auto [it, fresh] = orbits.try_emplace(lambda, v, Integer(0));
      if (!fresh && it->second.first != v)
        throw Error(Errc::not_symmetric, "coefficients differ within the orbit of M[" + lambda.to_string() + "]");
      it->second.second += 1;
    }
    MPoly out(nvars_);
    for (const auto& [lambda, entry] : orbits) {
      if (entry.second != lambda.orbit_size(nvars_))
        throw Error(Errc::not_symmetric, "incomplete orbit of M[" + lambda.to_string() + "]");
      out.add(lambda, entry.first);
    }
    return out;
  }

 private:
  static int combined_truncation(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
  }
  void check_same(const AVarPoly& o) const {
    if (o.nvars_ != nvars_) throw Error(Errc::invalid_argument, "AVarPoly variable count mismatch");
  }

  std::size_t nvars_;
  int max_degree_;
  Terms terms_;
};

inline EPoly symmetrize_to_e(const AVarPoly& p) { return monomial_to_e(p.to_monomial_basis()); }

// Expand an e-basis polynomial back into the variables a_1..a_c.
inline AVarPoly expand_in_variables(const EPoly& p) {
  const std::size_t n = p.nvars();
  std::vector<AVarPoly> e;
  for (std::size_t k = 1; k <= n; ++k) {
    AVarPoly ek(n);
    std::vector<int> mask(n, 0);
    std::fill(mask.end() - static_cast<long>(k), mask.end(), 1);
    do {
      ek.add(mask, Rational(1));
    } while (std::next_permutation(mask.begin(), mask.end()));
    e.push_back(std::move(ek));
  }
  AVarPoly out(n);
  for (const auto& [x, v] : p.terms()) {
    AVarPoly m = AVarPoly::constant(n, v);
    for (std::size_t k = 0; k < n; ++k)
      for (int r = 0; r < x[k]; ++r) m = m * e[k];
    out += m;
  }
  return out;
}

}  // namespace cihilb
