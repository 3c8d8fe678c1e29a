#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "hilbert.hpp"
#include "rational.hpp"
#include "sequence.hpp"
#include "symfunc.hpp"
#include "todd.hpp"
#include "unipoly.hpp"

namespace cihilb {

enum class Firmness { known_firm, known_not_firm, unknown };

inline const char* to_string(Firmness f) {
  switch (f) {
    case Firmness::known_firm: return "known-firm";
    case Firmness::known_not_firm: return "known-not-firm";
    case Firmness::unknown: return "unknown";
  }
  return "unknown";
}

// Smallest ambient dimension at which the Hilbert polynomial determines the
// degree sequence, for the codimensions where it is known.
inline const std::map<std::size_t, std::size_t>& nc_table() {
  static const std::map<std::size_t, std::size_t> table{{1, 1}, {2, 3}, {3, 5}, {4, 8}, {5, 11}, {6, 14}};
  return table;
}

inline Firmness is_firm(std::size_t c, std::size_t n) {
  if (c < 1) throw Error(Errc::invalid_argument, "codimension must be positive");
  if (n < c) throw Error(Errc::no_complete_intersection, "n < c");
  if (c == 1) return Firmness::known_firm;
  auto it = nc_table().find(c);
  if (it == nc_table().end()) return Firmness::unknown;
  return n >= it->second ? Firmness::known_firm : Firmness::known_not_firm;
}

// Highest invariant index the closed-form solver reads for codimension c.
inline std::optional<std::size_t> closed_form_index(std::size_t c) {
  static const std::size_t need[] = {0, 0, 1, 2, 4, 6, 8};
  if (c < 1 || c > 6) return std::nullopt;
  return need[c];
}

// Intermediate quantities of the codimension 5 and 6 solvers.
//   K  = e4 - e1 e3
//   K' = e5 + e3^2 / (2 e1) - e2 e3
struct SolverScratch {
  std::optional<Integer> K;
  std::optional<Rational> Kprime;
  std::vector<Integer> e3_candidates;  // integer roots examined (c = 6)
};

// Positive integer roots of t^c - e1 t^{c-1} + e2 t^{c-2} - ... + (-1)^c e_c,
// by trial division over the divisors of e_c (each root is at most e1).
inline DegreeSequence roots_from_e(const EVector& ev) {
  const std::size_t c = ev.codim();
  if (c == 0) throw Error(Errc::not_realizable, "empty e-vector");
  std::vector<Integer> poly(c + 1);
  poly[0] = 1;
  for (std::size_t k = 1; k <= c; ++k) poly[k] = (k % 2 == 0) ? ev.e(k) : Integer(-ev.e(k));
  if (sgn(ev.e(c)) <= 0)
    throw Error(Errc::not_realizable, "e_c must be positive");
  std::vector<long> roots;
  Integer r = 1;
  while (poly.size() > 1) {
    const Integer root_sum = -poly[1];
    const Integer constant = poly.back();
    if (r > root_sum || constant == 0) throw Error(Errc::not_realizable, "polynomial does not split over positive integers");
    if (constant % r == 0) {
      std::vector<Integer> q(poly.size() - 1);
      q[0] = poly[0];
      for (std::size_t k = 1; k < q.size(); ++k) q[k] = poly[k] + r * q[k - 1];
      if (poly.back() + r * q.back() == 0) {
        roots.push_back(r.get_si());
        poly = std::move(q);
        continue;
      }
    }
    r += 1;
  }
  return DegreeSequence(std::move(roots));
}

namespace detail {

inline Integer require_integer(const Rational& v, const char* what) {
  if (!v.is_integer())
    throw Error(Errc::inconsistent_invariants, std::string(what) + " = " + v.to_string() + " is not an integer");
  return v.to_integer();
}

inline Integer codim_k_term(const Integer& e1, const Integer& e2) {
  return 6 * ipow(e1, 4) - 9 * e1 * e1 * e2 + 2 * e2 * e2;
}

// e3^2 - 2 e1 e2 e3 + const = 0, the codimension 5 quadratic after
// substituting e4 = e1 e3 + K into the weight-6 invariant. Coefficients are
// returned constant term first.
inline UniPoly codim5_quadratic(const Integer& e1, const Integer& e2, const Integer& e5, const Integer& K,
                                const Rational& lt6) {
  Rational c0 = Rational(Integer(12 * ipow(e1, 6) - 30 * ipow(e1, 4) * e2 + 24 * e1 * e1 * e2 * e2 -
                                 3 * ipow(e2, 3) + 12 * e1 * e1 * K + 2 * e1 * e5 - 5 * e2 * K)) -
                Rational(60480) * lt6;
  return UniPoly({c0, Rational(Integer(-2 * e1 * e2)), Rational(1)});
}

// K' from the weight-6 invariant in codimension 6 (linear in e5 after the
// e4 substitution).
inline Rational codim6_kprime(const Integer& e1, const Integer& e2, const Integer& e6, const Integer& K,
                              const Rational& lt6) {
  Rational rest = Rational(Integer(12 * ipow(e1, 6) - 30 * ipow(e1, 4) * e2 + 24 * e1 * e1 * e2 * e2 -
                                   3 * ipow(e2, 3) + 12 * e1 * e1 * K - 5 * e2 * K - 2 * e6));
  return (Rational(60480) * lt6 - rest) / Rational(Integer(2 * e1));
}

// F(e3) - f where f = 7257600 e1 Lt_8 and F is the weight-8 invariant after
// substituting e4 = e1 e3 + K and e5 = -e3^2/(2e1) + e2 e3 + K'.
inline UniPoly codim6_cubic(const Integer& e1, const Integer& e2, const Integer& e6, const Integer& K,
                            const Rational& Kp, const Rational& lt8) {
  const Rational E1(e1), E2(e2), k(K);
  Rational c0 = Rational(Integer(20 * ipow(e1, 9) - 70 * ipow(e1, 7) * e2 + 100 * ipow(e1, 5) * e2 * e2 -
                                 50 * ipow(e1, 3) * ipow(e2, 3) + 50 * ipow(e1, 5) * K + 4 * e1 * ipow(e2, 4) -
                                 84 * ipow(e1, 3) * e2 * K + 14 * e1 * e2 * e2 * K + 4 * e1 * K * K -
                                 34 * ipow(e1, 3) * e6 + 14 * e1 * e2 * e6));
  c0 += Rational(34) * pow(E1, 4) * Kp - Rational(8) * E1 * E1 * E2 * Kp;
  c0 -= Rational(7257600) * E1 * lt8;
  Rational c1 = Rational(6) * E1 * E1 * k - Rational(6) * E1 * Kp;
  Rational c2 = Rational(3) * pow(E1, 3) - Rational(6) * E1 * E2;
  return UniPoly({c0, c1, c2, Rational(3)});
}

// Root rule for the cubic: the true e3 is the positive real root lying left of
// the larger critical point (the other roots are negative or beyond it).
inline bool left_of_larger_critical_point(const UniPoly& cubic, const Integer& r) {
  const Rational a = cubic.coeff(3), b = cubic.coeff(2), c = cubic.coeff(1);
  // G'(t) = 3a t^2 + 2b t + c, larger root (-b + sqrt(b^2 - 3ac)) / (3a).
  const Rational disc = b * b - Rational(3) * a * c;
  if (disc.sign() < 0) return true;
  const Rational lhs = Rational(3) * a * Rational(r) + b;
  if (lhs.sign() < 0) return true;
  return lhs * lhs < disc;
}

// (e1 e2 - e3) e3 - e1 (e1 e4 - e5): positive at every positive point.
inline Integer codim6_sign_expression(const EVector& e) {
  return (e.e(1) * e.e(2) - e.e(3)) * e.e(3) - e.e(1) * (e.e(1) * e.e(4) - e.e(5));
}

}  // namespace detail

// e_1..e_c from the normalized invariants, for c <= 6.
inline EVector solve_e(const LambdaVector& lv, std::size_t c, SolverScratch* scratch = nullptr) {
  auto need = closed_form_index(c);
  if (!need) throw Error(Errc::invalid_argument, "closed-form recovery is only available for c <= 6");
  if (lv.size() <= *need)
    throw Error(Errc::invalid_argument, "need invariants through index " + std::to_string(*need));
  using detail::require_integer;
  const Integer ec = require_integer(lv[0], "e_c");
  if (ec <= 0) throw Error(Errc::inconsistent_invariants, "e_c must be positive");
  if (c == 1) {
    if (lv.size() > 1 && Rational(-2) * lv[1] != Rational(ec))
      throw Error(Errc::inconsistent_invariants, "e1 disagrees with the degree");
    return EVector{{ec}};
  }
  const Integer e1 = require_integer(Rational(-2) * lv[1], "e1");
  if (e1 < static_cast<long>(c)) throw Error(Errc::inconsistent_invariants, "e1 < c");
  if (c == 2) return EVector{{e1, ec}};
  const Integer e2 = require_integer(Rational(Integer(2 * e1 * e1)) - Rational(12) * lv[2], "e2");
  if (e2 <= 0) throw Error(Errc::inconsistent_invariants, "e2 must be positive");
  if (c == 3) return EVector{{e1, e2, ec}};

  const Integer ktail = detail::codim_k_term(e1, e2);
  if (c == 4) {
    Rational e3 = (Rational(Integer(ktail + ec)) - Rational(720) * lv[4]) / Rational(e1);
    return EVector{{e1, e2, require_integer(e3, "e3"), ec}};
  }
  const Integer K = require_integer(Rational(720) * lv[4] - Rational(ktail), "K");
  if (scratch) scratch->K = K;

  if (c == 5) {
    const UniPoly quad = detail::codim5_quadratic(e1, e2, ec, K, lv[6]);
    const Integer mid = e1 * e2;
    const Integer c0 = require_integer(quad.coeff(0), "quadratic constant term");
    const Integer root = exact_sqrt(mid * mid - c0);
    if (root < 0) throw Error(Errc::inconsistent_invariants, "quadratic in e3 has no integer roots");
    // The roots average to e1 e2 and the true e3 is below it.
    const Integer e3 = mid - root;
    const Integer e4 = e1 * e3 + K;
    if (e3 <= 0 || e4 <= 0) throw Error(Errc::inconsistent_invariants, "non-positive e3 or e4");
    return EVector{{e1, e2, e3, e4, ec}};
  }

  // c == 6
  const Rational Kp = detail::codim6_kprime(e1, e2, ec, K, lv[6]);
  if (scratch) scratch->Kprime = Kp;
  const UniPoly cubic = detail::codim6_cubic(e1, e2, ec, K, Kp, lv[8]);
  if (cubic.coeff(2).sign() <= 0)
    throw Error(Errc::inconsistent_invariants, "root sum of the e3 cubic is not negative");
  const Integer hi = e1 * e2 - 1;
  std::vector<Integer> candidates = integer_roots(cubic, Integer(1), hi);
  if (scratch) scratch->e3_candidates = candidates;

  std::vector<EVector> survivors;
  std::vector<Integer> by_rule;
  for (const Integer& e3 : candidates) {
    if (detail::left_of_larger_critical_point(cubic, e3)) by_rule.push_back(e3);
    const Rational e5 = -Rational(Integer(e3 * e3), Integer(2 * e1)) + Rational(Integer(e2 * e3)) + Kp;
    if (!e5.is_integer()) continue;
    const Integer e4 = e1 * e3 + K;
    EVector ev{{e1, e2, e3, e4, e5.to_integer(), ec}};
    if (e4 <= 0 || ev.e(5) <= 0) continue;
    DegreeSequence seq;
    try {
      seq = roots_from_e(ev);
    } catch (const Error&) {
      continue;
    }
    if (lambda_numeric(seq, lv.size() - 1) != lv) continue;
    survivors.push_back(std::move(ev));
  }
  if (survivors.empty()) throw Error(Errc::inconsistent_invariants, "no realizable root of the e3 cubic");
  if (survivors.size() > 1) throw Error(Errc::inconsistent_invariants, "several realizable roots of the e3 cubic");
  const EVector& found = survivors.front();
  if (by_rule.size() != 1 || by_rule.front() != found.e(3))
    throw Error(Errc::inconsistent_invariants, "critical-point root rule disagrees with verification");
  if (detail::codim6_sign_expression(found) <= 0)
    throw Error(Errc::inconsistent_invariants, "sign lemma fails for the recovered e3");
  return found;
}

namespace detail {

// Nondecreasing sequences of `slots` entries >= lo with the given product and,
// when `sum` is set, the given sum. Entries are bounded by `cap` if set.
inline void enumerate_factorizations(std::size_t slots, const Integer& product, const std::optional<Integer>& sum,
                                     const Integer& lo, const std::optional<Integer>& cap, std::vector<long>& cur,
                                     std::vector<DegreeSequence>& out) {
  if (slots == 1) {
    const Integer& last = product;
    if (last < lo) return;
    if (sum && *sum != last) return;
    if (cap && last > *cap) return;
    cur.push_back(last.get_si());
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (Integer a = lo;; a += 1) {
    if (cap && a > *cap) break;
    if (sum && a * static_cast<long>(slots) > *sum) break;
    if (ipow(a, slots) > product) break;
    if (product % a != 0) continue;
    cur.push_back(a.get_si());
    std::optional<Integer> rest_sum;
    if (sum) rest_sum = *sum - a;
    enumerate_factorizations(slots - 1, product / a, rest_sum, a, cap, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// Every sequence with this Hilbert polynomial. For n > c the degree sum e1 is
// fixed by the polynomial, bounding the search; for n == c an explicit cap on
// the entries is required.
inline std::vector<DegreeSequence> recover_all(const HilbertPoly& p, std::optional<long> cap = std::nullopt) {
  if (p.codim < 1) throw Error(Errc::invalid_argument, "codimension must be positive");
  require_codim(p.codim, p.ambient);
  if (p.ambient == p.codim && !cap) throw Error(Errc::unbounded_search, "n = c needs an entry cap");
  const LambdaVector lv = lambda_from_mu(p);
  const Integer ec = lv[0].to_integer();
  std::optional<Integer> sum;
  if (p.ambient > p.codim) {
    const Rational e1 = Rational(-2) * lv[1];
    if (!e1.is_integer() || e1 < Rational(static_cast<long>(p.codim))) return {};
    sum = e1.to_integer();
  }
  std::optional<Integer> capz;
  if (cap) capz = Integer(*cap);
  std::vector<DegreeSequence> found, out;
  std::vector<long> cur;
  detail::enumerate_factorizations(p.codim, ec, sum, Integer(1), capz, cur, found);
  for (auto& seq : found)
    if (hilbert_koszul(seq, p.ambient) == p) out.push_back(std::move(seq));
  std::sort(out.begin(), out.end());
  return out;
}

enum class RecoveryStatus { unique, multiple, none };

inline const char* to_string(RecoveryStatus s) {
  switch (s) {
    case RecoveryStatus::unique: return "unique";
    case RecoveryStatus::multiple: return "multiple";
    case RecoveryStatus::none: return "none";
  }
  return "none";
}

struct RecoveryOutcome {
  RecoveryStatus status = RecoveryStatus::none;
  std::vector<DegreeSequence> sequences;
  Firmness firmness = Firmness::unknown;
  std::size_t ambient = 0;
  std::size_t codim = 0;
  bool closed_form = false;  // true when the closed-form solver produced the answer
};

inline RecoveryOutcome recover(const HilbertPoly& p) {
  RecoveryOutcome out;
  out.ambient = p.ambient;
  out.codim = p.codim;
  out.firmness = is_firm(p.codim, p.ambient);
  const LambdaVector lv = lambda_from_mu(p);

  auto need = closed_form_index(p.codim);
  if (need && out.firmness == Firmness::known_firm && lv.size() > *need) {
    out.closed_form = true;
    try {
      DegreeSequence seq = roots_from_e(solve_e(lv, p.codim));
      if (hilbert_koszul(seq, p.ambient) == p) out.sequences.push_back(std::move(seq));
    } catch (const Error& e) {
      if (e.code() != Errc::inconsistent_invariants && e.code() != Errc::not_realizable) throw;
    }
  } else {
    std::optional<long> cap;
    if (p.ambient == p.codim) {
      const Integer ec = lv[0].to_integer();
      if (!fits_int64(ec)) throw Error(Errc::unbounded_search, "degree too large for a point search");
      cap = ec.get_si();
    }
    out.sequences = recover_all(p, cap);
  }
  out.status = out.sequences.empty() ? RecoveryStatus::none
               : out.sequences.size() == 1 ? RecoveryStatus::unique
                                           : RecoveryStatus::multiple;
  return out;
}

}  // namespace cihilb
