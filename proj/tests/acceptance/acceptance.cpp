// One [PASS]/[FAIL] line per acceptance criterion; exit status 1 if any fails.
#include <cihilb/cihilb.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "known_examples.hpp"
#include "oracles.hpp"

using namespace cihilb;

namespace {

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.check(false, std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) {
    std::ostringstream os;
    os << "took " << dt << " s, budget " << budget_s << " s";
    v.check(dt <= budget_s, os.str());
  }
  std::printf("[%s] %2d %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", id, name.c_str(), dt);
  for (const auto& n : v.notes) std::printf("       %s\n", n.c_str());
  std::fflush(stdout);
  if (!v.ok) ++failures;
}

std::vector<Rational> parse_mu(const std::vector<std::string>& mu) {
  std::vector<Rational> out;
  for (const auto& m : mu) out.push_back(Rational::parse(m));
  return out;
}

DegreeSequence seq_of(const std::vector<long>& v) { return DegreeSequence(v); }

bool contains(const std::vector<DegreeSequence>& v, const DegreeSequence& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

MPoly m_of(std::size_t n, std::initializer_list<std::pair<Partition, long>> terms) {
  MPoly p(n);
  for (const auto& [lambda, c] : terms) p.add(lambda, Rational(c));
  return p;
}

EPoly e(std::size_t n, std::size_t k) { return EPoly::generator(n, k); }

using GroupSet = std::set<std::set<DegreeSequence>>;

GroupSet brute_force_groups(std::size_t c, std::size_t n, long max_sum) {
  std::map<std::vector<Rational>, std::set<DegreeSequence>> by_poly;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long left, long top) -> void {
    if (cur.size() == c) {
      const DegreeSequence s(cur);
      by_poly[hilbert_koszul(s, n).mu].insert(s);
      return;
    }
    const long slots = static_cast<long>(c - cur.size());
    for (long a = 1; a <= std::min(top, left - (slots - 1)); ++a) {
      cur.push_back(a);
      self(self, left - a, a);
      cur.pop_back();
    }
  };
  rec(rec, max_sum, max_sum);
  GroupSet out;
  for (auto& [mu, seqs] : by_poly)
    if (seqs.size() > 1) out.insert(seqs);
  return out;
}

// partitions of s into exactly k positive parts, summed over s <= max_sum
std::uint64_t count_sequences(std::size_t k, long max_sum) {
  // p[j][s]: partitions of s into exactly j parts
  std::vector<std::vector<std::uint64_t>> p(k + 1, std::vector<std::uint64_t>(max_sum + 1, 0));
  p[0][0] = 1;
  for (std::size_t j = 1; j <= k; ++j)
    for (long s = 1; s <= max_sum; ++s) {
      p[j][s] = p[j - 1][s - 1];
      if (s >= static_cast<long>(j)) p[j][s] += p[j][s - j];
    }
  std::uint64_t total = 0;
  for (long s = 0; s <= max_sum; ++s) total += p[k][s];
  return total;
}

std::string group_text(const CollisionGroup& g) {
  std::string out = "sum " + std::to_string(g.sum) + ":";
  for (const auto& s : g.sequences) out += " " + s.to_string();
  return out;
}

}  // namespace

int main() {
  criterion(1, "reference Hilbert polynomials", 1.0, [](Verdict& v) {
    for (const auto& row : known::shared_polynomials()) {
      const auto want = parse_mu(row.mu);
      for (const auto& s : row.sequences) {
        const HilbertPoly p = hilbert_koszul(seq_of(s), row.ambient);
        v.check(p.mu == want, row.label + ": " + seq_of(s).to_string() + " gives " + p.to_string());
      }
    }
  });

  criterion(2, "symbolic Lambda-tilde listings", 5.0, [](Verdict& v) {
    for (const auto& l : known::lambda_listings()) {
      const EPoly got = lambda_symbolic(l.codim, l.index);
      const EPoly want = parse_epoly(l.text, l.codim);
      v.check(got == want, "c=" + std::to_string(l.codim) + " i=" + std::to_string(l.index) + ": " + got.to_string());
    }
  });

  criterion(3, "Koszul and HRR agree on 500 random cases", 30.0, [](Verdict& v) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> cd(1, 7), extra(0, 8);
    for (int it = 0; it < 500; ++it) {
      const std::size_t c = cd(rng);
      const std::size_t n = c + extra(rng);
      const DegreeSequence seq(oracle::random_sequence(rng, c, 20));
      v.check(hilbert_koszul(seq, n) == hilbert_hrr(seq, n), seq.to_string() + " n=" + std::to_string(n));
    }
  });

  criterion(4, "unique recovery at n = N_c for c = 1..6", 60.0, [](Verdict& v) {
    std::mt19937_64 rng(4);
    for (std::size_t c = 1; c <= 6; ++c) {
      const std::size_t n = nc_table().at(c);
      for (int it = 0; it < 500; ++it) {
        const DegreeSequence seq(oracle::random_sequence(rng, c, 30));
        const HilbertPoly p = hilbert_koszul(seq, n);
        const RecoveryOutcome r = recover(p);
        const bool ok = r.status == RecoveryStatus::unique && r.sequences.size() == 1 && r.sequences[0] == seq &&
                        hilbert_koszul(r.sequences[0], n) == p;
        v.check(ok, seq.to_string() + " in P^" + std::to_string(n) + ": " + to_string(r.status));
      }
    }
  });

  criterion(5, "non-firm boundary at n = N_c - 1", 10.0, [](Verdict& v) {
    const std::map<std::size_t, std::vector<std::vector<long>>> pairs{
        {3, {{2, 5, 9}, {3, 3, 10}}},
        {4, {{2, 6, 7, 15}, {3, 3, 10, 14}}},
        {5, {{4, 4, 15, 15, 22}, {3, 6, 11, 20, 20}}},
        {6, {{46, 36, 32, 15, 12, 5}, {45, 40, 24, 23, 8, 6}}}};
    for (const auto& [c, pair] : pairs) {
      const std::size_t nc = nc_table().at(c);
      const DegreeSequence a = seq_of(pair[0]), b = seq_of(pair[1]);
      const RecoveryOutcome below = recover(hilbert_koszul(a, nc - 1));
      v.check(below.status == RecoveryStatus::multiple && contains(below.sequences, a) && contains(below.sequences, b),
              "c=" + std::to_string(c) + " at n=" + std::to_string(nc - 1) + ": " + to_string(below.status));
      for (const auto& s : {a, b}) {
        const RecoveryOutcome at = recover(hilbert_koszul(s, nc));
        v.check(at.status == RecoveryStatus::unique && at.sequences == std::vector<DegreeSequence>{s},
                s.to_string() + " at n=" + std::to_string(nc) + ": " + to_string(at.status));
      }
    }
  });

  criterion(6, "duality and odd-coefficient rigidity on 300 cases", 10.0, [](Verdict& v) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::size_t> cd(1, 7), extra(3, 9);
    for (int it = 0; it < 300; ++it) {
      const std::size_t c = cd(rng);
      const std::size_t n = c + extra(rng);
      const DegreeSequence seq(oracle::random_sequence(rng, c, 20));
      v.check(duality_check(seq, n), "duality " + seq.to_string() + " n=" + std::to_string(n));
      const HilbertPoly p = hilbert_koszul(seq, n);
      for (std::size_t ell = 1; ell <= p.dim(); ell += 2) {
        std::vector<Rational> prefix(p.mu.begin(), p.mu.begin() + static_cast<long>(std::max<std::size_t>(ell, 2)));
        v.check(odd_mu_from_even(prefix, p.dim(), ell) == p.mu[ell],
                "mu_" + std::to_string(ell) + " " + seq.to_string() + " n=" + std::to_string(n));
      }
    }
  });

  criterion(7, "series and regularity recovery", 30.0, [](Verdict& v) {
    std::size_t count = 0;
    for (std::size_t c = 1; c <= 6; ++c) {
      std::vector<long> cur;
      auto rec = [&](auto&& self, long lo) -> void {
        if (cur.size() == c) {
          const DegreeSequence s(cur);
          ++count;
          v.check(degrees_from_numerator(series_numerator(s)) == s, "series " + s.to_string());
          return;
        }
        for (long a = lo; a <= 10; ++a) {
          cur.push_back(a);
          self(self, a);
          cur.pop_back();
        }
      };
      rec(rec, 1);
    }
    // sum_{c<=6} C(c+9, c)
    v.check(count == 8007, "enumerated " + std::to_string(count) + " multisets");
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> cd(1, 6), extra(0, 4);
    for (int it = 0; it < 100; ++it) {
      const DegreeSequence seq(oracle::random_sequence(rng, cd(rng), 6));
      const std::size_t n = static_cast<std::size_t>(seq.sum()) + extra(rng);
      v.check(recover_via_regularity(hilbert_koszul(seq, n)) == seq, "regularity " + seq.to_string());
    }
  });

  criterion(8, "monomial-basis identities as published", 1.0, [](Verdict& v) {
    const std::size_t n = 6;
    auto same = [&](const MPoly& got, const MPoly& printed, const std::string& what) {
      v.check(got == printed, what + ": computed " + got.to_string() + ", published " + printed.to_string());
    };
    same(m_multiply(MPoly::basis(n, {1, 1, 1}), MPoly::basis(n, {1, 1, 1})),
         m_of(n, {{Partition{1, 1, 1, 1, 1, 1}, 20}, {Partition{2, 1, 1, 1, 1}, 6}, {Partition{2, 2, 1, 1}, 2},
                  {Partition{2, 2, 2}, 1}}),
         "M[1,1,1]^2");
    same(m_multiply(MPoly::basis(n, {2, 1}), MPoly::basis(n, {1, 1, 1})),
         m_of(n, {{Partition{2, 1, 1, 1, 1}, 4}, {Partition{2, 2, 1, 1}, 2}, {Partition{3, 1, 1, 1}, 1},
                  {Partition{3, 2, 1}, 1}}),
         "M[2,1]*M[1,1,1]");
    same(m_multiply(MPoly::basis(n, {1}), MPoly::basis(n, {2, 1, 1, 1})),
         m_of(n, {{Partition{2, 1, 1, 1, 1}, 4}, {Partition{2, 2, 1, 1}, 2}, {Partition{3, 1, 1, 1}, 1}}),
         "M[1]*M[2,1,1,1]");
    const std::size_t n5 = 5;
    const MPoly c5 = e_to_monomial(e(n5, 1) * e(n5, 2) - e(n5, 3));
    same(c5, m_of(n5, {{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 2}}), "e1e2 - e3");
    v.check(is_positive_on_positive_integers(c5), "e1e2 - e3 not positive");
    const MPoly c6 = e_to_monomial((e(n, 1) * e(n, 2) - e(n, 3)) * e(n, 3) - e(n, 1) * (e(n, 1) * e(n, 4) - e(n, 5)));
    same(c6,
         m_of(n, {{Partition{1, 1, 1, 1, 1, 1}, 16}, {Partition{2, 1, 1, 1, 1}, 8}, {Partition{2, 2, 1, 1}, 4},
                  {Partition{2, 2, 2}, 2}, {Partition{3, 2, 1}, 1}}),
         "(e1e2 - e3)e3 - e1(e1e4 - e5)");
    v.check(is_positive_on_positive_integers(c6), "codim 6 sign expression not positive");
  });

  criterion(9, "small collision searches", 60.0, [](Verdict& v) {
    const CollisionReport r = collision_search(3, 4, 16);
    const std::vector<DegreeSequence> pair{DegreeSequence{10, 3, 3}, DegreeSequence{9, 5, 2}};
    bool at16 = false;
    for (const auto& g : r.groups)
      if (g.sum == 16 && std::set<DegreeSequence>(g.sequences.begin(), g.sequences.end()) ==
                             std::set<DegreeSequence>(pair.begin(), pair.end()))
        at16 = true;
    v.check(at16, "(3,4): no group {(2,5,9),(3,3,10)} at sum 16");
    v.check(!r.groups.empty() && r.groups.front().sequences == pair,
            "(3,4): minimal-sum group is " + (r.groups.empty() ? std::string("none") : group_text(r.groups.front())) +
                ", not {(2,5,9),(3,3,10)}");
    GroupSet got;
    for (const auto& g : collision_search(3, 4, 20).groups) got.insert({g.sequences.begin(), g.sequences.end()});
    v.check(got == brute_force_groups(3, 4, 20), "(3,4): disagrees with brute force through sum 20");
    const CollisionReport r4 = collision_search(4, 7, 30);
    const std::set<DegreeSequence> pair4{DegreeSequence{2, 6, 7, 15}, DegreeSequence{3, 3, 10, 14}};
    v.check(r4.groups.size() == 1 &&
                std::set<DegreeSequence>(r4.groups[0].sequences.begin(), r4.groups[0].sequences.end()) == pair4,
            "(4,7): expected exactly {(2,6,7,15),(3,3,10,14)}");
  });

  criterion(10, "flagship scan (6,12) through degree sum 146", 1800.0, [](Verdict& v) {
    const auto& row = known::flagship();
    const CollisionReport one = collision_search(6, 12, 146);
    const std::set<DegreeSequence> pair{seq_of(row.pair[0]), seq_of(row.pair[1])};
    v.check(!one.groups.empty() && one.groups.front().sum == 146 &&
                std::set<DegreeSequence>(one.groups.front().sequences.begin(), one.groups.front().sequences.end()) == pair,
            "first group is " + (one.groups.empty() ? std::string("none") : group_text(one.groups.front())));
    v.check(one.exhaustive, "scan not exhaustive");
    const std::uint64_t want = count_sequences(6, 146);
    v.check(one.sequences_examined == want,
            "examined " + std::to_string(one.sequences_examined) + ", partition count " + std::to_string(want));
    SearchOptions sharded;
    sharded.shards = 3;
    const CollisionReport three = collision_search(6, 12, 146, sharded);
    v.check(to_json(one).dump() == to_json(three).dump(), "report differs between 1 and 3 shards");
    std::printf("       %llu sequences examined, %zu group(s)\n",
                static_cast<unsigned long long>(one.sequences_examined), one.groups.size());
  });

  criterion(11, "static facts: N_c parity and ambient Todd coefficients", 0, [](Verdict& v) {
    for (std::size_t c = 3; c <= 6; ++c)
      v.check(nc_table().at(c) % 2 == c % 2, "N_" + std::to_string(c) + " parity");
    for (std::size_t n = 0; n <= 20; ++n) {
      const QVector q = ambient_todd_q(n, 1);
      v.check(q[0] == Rational(1) && q[1] == Rational(static_cast<long>(n + 1), 2L), "q for n=" + std::to_string(n));
    }
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
