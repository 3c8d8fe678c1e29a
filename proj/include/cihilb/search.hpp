#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "hilbert.hpp"
#include "rational.hpp"
#include "sequence.hpp"

namespace cihilb {

// Exact integer encoding of the Hilbert polynomial of X(a) in P^n.
// Full form: entry i = sum_j N_j j^{i+c} = (-1)^{i+c} (i+c)! Lambda_i, i = 0..n-c,
// where N is the series numerator. (Lambda_0..Lambda_{n-c}) and P determine
// each other. Reduced form, used where the odd invariants are forced and the
// even ones simplify: (e6, e1, e2, e1 e3 - e4, e3^2 - 2 e2 e4 + 2 e1 e5).
struct InvariantKey {
  std::size_t codim = 0;
  std::size_t ambient = 0;
  bool reduced = false;
  std::vector<Integer> entries;
  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
};

inline bool has_reduced_key(std::size_t c, std::size_t n) { return c == 6 && (n == 12 || n == 13); }

namespace detail {

using i128 = __int128;

inline Integer to_integer(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_word(std::uint64_t h, i128 v) {
  auto u = static_cast<unsigned __int128>(v);
  h = mix64(h ^ static_cast<std::uint64_t>(u));
  return mix64(h ^ static_cast<std::uint64_t>(u >> 64));
}

inline std::uint64_t hash_word(std::uint64_t h, const Integer& v) {
  return mix64(h ^ static_cast<std::uint64_t>(hash_value(v)));
}

// Key evaluators write `width` words for a sequence given as c ints.
struct ReducedKey {
  using word = i128;
  std::size_t c = 6;
  std::size_t width() const { return 5; }
  void operator()(const int* a, word* out) const {
    word e[7] = {1, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * a[i];
    out[0] = e[6];
    out[1] = e[1];
    out[2] = e[2];
    out[3] = e[1] * e[3] - e[4];
    out[4] = e[3] * e[3] - 2 * e[2] * e[4] + 2 * e[1] * e[5];
  }
};

// Full key from signed subset sums, in any ring type W.
template <class W>
struct FullKey {
  using word = W;
  std::size_t c = 0;
  std::size_t n = 0;
  std::size_t width() const { return n - c + 1; }
  void operator()(const int* a, word* out) const {
    const std::size_t w = width();
    for (std::size_t i = 0; i < w; ++i) out[i] = 0;
    const std::size_t subsets = std::size_t{1} << c;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      long sum = 0;
      int bits = 0;
      for (std::size_t i = 0; i < c; ++i)
        if (mask >> i & 1) {
          sum += a[i];
          ++bits;
        }
      if (sum == 0) continue;
      word p = 1;
      for (std::size_t k = 0; k < c; ++k) p *= word(sum);
      for (std::size_t i = 0; i < w; ++i) {
        if (bits % 2 == 0) out[i] += p; else out[i] -= p;
        p *= word(sum);
      }
    }
  }
};


// True when 2^c * max_sum^n, a bound on every full-key entry, stays well below 2^127.
inline bool full_key_fits_i128(std::size_t c, std::size_t n, long max_sum) {
  return static_cast<double>(c) + 1.0 + static_cast<double>(n) * std::log2(static_cast<double>(std::max(max_sum, 2L))) <
         124.0;
}

// Nonincreasing sequences of c entries in [1, max_entry] summing to s, in
// lex-descending order.
template <class F>
void for_each_with_sum(std::size_t c, long s, long max_entry, F&& f) {
  std::vector<int> a(c);
  auto rec = [&](auto&& self, std::size_t k, long remaining, long upper) -> void {
    const long slots = static_cast<long>(c - k);
    if (slots == 1) {
      if (remaining >= 1 && remaining <= upper) {
        a[k] = static_cast<int>(remaining);
        f(a.data());
      }
      return;
    }
    const long hi = std::min(upper, remaining - (slots - 1));
    const long lo = (remaining + slots - 1) / slots;
    for (long v = hi; v >= lo; --v) {
      a[k] = static_cast<int>(v);
      self(self, k + 1, remaining - v, v);
    }
  };
  if (c == 0) return;
  rec(rec, 0, s, max_entry);
}

}  // namespace detail

inline InvariantKey invariant_key(const DegreeSequence& seq, std::size_t n) {
  require_codim(seq.codim(), n);
  const std::size_t c = seq.codim();
  std::vector<int> a;
  for (long v : seq.descending()) a.push_back(static_cast<int>(v));
  InvariantKey key{c, n, has_reduced_key(c, n), {}};
  if (key.reduced) {
    detail::ReducedKey f;
    std::vector<detail::i128> w(f.width());
    f(a.data(), w.data());
    for (auto v : w) key.entries.push_back(detail::to_integer(v));
  } else {
    detail::FullKey<Integer> f{c, n};
    key.entries.resize(f.width());
    f(a.data(), key.entries.data());
  }
  return key;
}

struct CollisionGroup {
  long sum = 0;  // degree sum of the first member
  std::vector<std::string> key;
  std::vector<DegreeSequence> sequences;  // enumeration order
  friend bool operator==(const CollisionGroup&, const CollisionGroup&) = default;
};

struct SearchOptions {
  std::size_t shards = 1;
  std::optional<std::filesystem::path> checkpoint;
  std::optional<long> max_entry;
  bool stop_at_first = false;
};

struct CollisionReport {
  std::size_t codim = 0;
  std::size_t ambient = 0;
  long max_sum = 0;
  std::optional<long> max_entry;
  bool reduced_key = false;
  bool exhaustive = false;  // every sequence with sum <= max_sum was examined
  long searched_through = 0;  // largest sum fully examined
  std::uint64_t sequences_examined = 0;
  std::vector<CollisionGroup> groups;
  // Run metadata; excluded from the default serialization.
  std::size_t shards = 1;
  std::size_t sums_resumed = 0;
  double elapsed_seconds = 0;
};

namespace detail {

struct SumResult {
  long s = 0;
  std::uint64_t count = 0;
  std::vector<CollisionGroup> groups;
};

inline std::vector<std::string> key_strings(const DegreeSequence& seq, std::size_t n) {
  std::vector<std::string> out;
  for (const Integer& v : invariant_key(seq, n).entries) out.push_back(cihilb::to_string(v));
  return out;
}

inline DegreeSequence make_seq(const int* a, std::size_t c) {
  return DegreeSequence(std::vector<long>(a, a + c));
}

// Splits a run of equal keys by full Hilbert polynomial and keeps classes of
// size >= 2, each in enumeration order.
inline void verified_classes(const std::vector<DegreeSequence>& run, std::size_t n, std::vector<CollisionGroup>& out) {
  std::vector<HilbertPoly> polys;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < run.size(); ++i) {
    HilbertPoly p = hilbert_koszul(run[i], n);
    std::size_t k = 0;
    while (k < polys.size() && !(polys[k] == p)) ++k;
    if (k == polys.size()) {
      polys.push_back(std::move(p));
      classes.emplace_back();
    }
    classes[k].push_back(i);
  }
  for (const auto& cls : classes) {
    if (cls.size() < 2) continue;
    CollisionGroup g;
    for (std::size_t i : cls) g.sequences.push_back(run[i]);
    g.sum = g.sequences.front().sum();
    g.key = key_strings(g.sequences.front(), n);
    out.push_back(std::move(g));
  }
}

// All sequences of one degree sum, bucketed by a 64-bit digest of the exact
// key; equal digests are then compared on the exact key.
template <class KeyFn>
SumResult scan_sum(std::size_t c, std::size_t n, long s, long max_entry, const KeyFn& keyfn) {
  using W = typename KeyFn::word;
  const std::size_t width = keyfn.width();
  std::vector<int> flat;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> digests;
  std::vector<W> buf(width);
  for_each_with_sum(c, s, max_entry, [&](const int* a) {
    keyfn(a, buf.data());
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (const W& v : buf) h = hash_word(h, v);
    digests.emplace_back(h, static_cast<std::uint32_t>(digests.size()));
    flat.insert(flat.end(), a, a + c);
  });
  SumResult res;
  res.s = s;
  res.count = digests.size();
  std::sort(digests.begin(), digests.end());
  std::vector<W> ka(width), kb(width);
  std::vector<std::pair<std::uint32_t, CollisionGroup>> found;
  for (std::size_t i = 0; i < digests.size();) {
    std::size_t j = i + 1;
    while (j < digests.size() && digests[j].first == digests[i].first) ++j;
    if (j - i >= 2) {
      // exact regrouping inside the digest run
      std::vector<std::pair<std::vector<W>, std::uint32_t>> exact;
      for (std::size_t k = i; k < j; ++k) {
        keyfn(flat.data() + std::size_t{digests[k].second} * c, ka.data());
        exact.emplace_back(ka, digests[k].second);
      }
      std::sort(exact.begin(), exact.end());
      for (std::size_t u = 0; u < exact.size();) {
        std::size_t v = u + 1;
        while (v < exact.size() && exact[v].first == exact[u].first) ++v;
        if (v - u >= 2) {
          std::vector<DegreeSequence> run;
          for (std::size_t k = u; k < v; ++k) run.push_back(make_seq(flat.data() + std::size_t{exact[k].second} * c, c));
          std::vector<CollisionGroup> gs;
          verified_classes(run, n, gs);
          for (auto& g : gs) {
            // position of the first member in enumeration order
            std::uint32_t first = exact[u].second;
            for (std::size_t k = u; k < v; ++k)
              if (make_seq(flat.data() + std::size_t{exact[k].second} * c, c) == g.sequences.front()) {
                first = exact[k].second;
                break;
              }
            found.emplace_back(first, std::move(g));
          }
        }
        u = v;
      }
    }
    i = j;
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& f : found) res.groups.push_back(std::move(f.second));
  return res;
}

inline nlohmann::json group_to_json(const CollisionGroup& g) {
  nlohmann::json seqs = nlohmann::json::array();
  for (const auto& s : g.sequences) seqs.push_back(s.descending());
  return {{"sum", g.sum}, {"key", g.key}, {"sequences", seqs}};
}

inline CollisionGroup group_from_json(const nlohmann::json& j) {
  CollisionGroup g;
  g.sum = j.at("sum").get<long>();
  g.key = j.at("key").get<std::vector<std::string>>();
  for (const auto& s : j.at("sequences")) g.sequences.emplace_back(s.get<std::vector<long>>());
  return g;
}

inline nlohmann::json checkpoint_header(std::size_t c, std::size_t n, std::optional<long> max_entry, bool reduced) {
  nlohmann::json h{{"format", "cihilb-checkpoint"}, {"version", 1}, {"c", c}, {"n", n},
                   {"key", reduced ? "reduced" : "full"}};
  h["max_entry"] = max_entry ? nlohmann::json(*max_entry) : nlohmann::json(nullptr);
  return h;
}

// Completed sums from an existing checkpoint. A truncated final line (an
// interrupted write) is ignored; anything else malformed is an error.
inline std::map<long, SumResult> load_checkpoint(const std::filesystem::path& path, const nlohmann::json& header) {
  std::map<long, SumResult> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line)) return done;
  nlohmann::json h;
  try {
    h = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw Error(Errc::checkpoint_mismatch, "unreadable checkpoint header in " + path.string());
  }
  if (h != header) throw Error(Errc::checkpoint_mismatch, "checkpoint " + path.string() + " belongs to another search");
  std::vector<std::string> lines;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    nlohmann::json r;
    try {
      r = nlohmann::json::parse(lines[i]);
    } catch (const nlohmann::json::exception&) {
      if (i + 1 == lines.size()) break;
      throw Error(Errc::checkpoint_mismatch, "corrupt checkpoint record in " + path.string());
    }
    SumResult sr;
    sr.s = r.at("s").get<long>();
    sr.count = r.at("count").get<std::uint64_t>();
    for (const auto& g : r.at("groups")) sr.groups.push_back(group_from_json(g));
    done[sr.s] = std::move(sr);
  }
  return done;
}

template <class KeyFn>
CollisionReport run_by_sum(std::size_t c, std::size_t n, long max_sum, const SearchOptions& opt, const KeyFn& keyfn,
                           bool reduced) {
  const auto t0 = std::chrono::steady_clock::now();
  const long max_entry = opt.max_entry.value_or(max_sum);
  const nlohmann::json header = checkpoint_header(c, n, opt.max_entry, reduced);

  std::map<long, SumResult> results;
  std::ofstream log;
  if (opt.checkpoint) {
    results = load_checkpoint(*opt.checkpoint, header);
    const bool fresh = !std::filesystem::exists(*opt.checkpoint) || std::filesystem::file_size(*opt.checkpoint) == 0;
    if (fresh) {
      std::ofstream(*opt.checkpoint) << header.dump() << '\n';
    } else {
      // drop a torn final line before appending
      std::ifstream in(*opt.checkpoint);
      std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      if (!all.empty() && all.back() != '\n') {
        all.erase(all.find_last_of('\n') + 1);
        std::ofstream(*opt.checkpoint, std::ios::trunc) << all;
      }
    }
    log.open(*opt.checkpoint, std::ios::app);
  }
  for (auto it = results.begin(); it != results.end();)
    it = (it->first > max_sum || it->first < static_cast<long>(c)) ? results.erase(it) : std::next(it);
  const std::size_t resumed = results.size();

  std::vector<long> todo;
  for (long s = static_cast<long>(c); s <= max_sum; ++s)
    if (!results.count(s)) todo.push_back(s);

  // With stop_at_first, sums beyond the smallest hit are skipped.
  std::atomic<long> first_hit{LONG_MAX};
  if (opt.stop_at_first)
    for (const auto& [s, r] : results)
      if (!r.groups.empty()) first_hit = std::min(first_hit.load(), s);

  std::mutex merge;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= todo.size()) return;
        const long s = todo[idx];
        if (opt.stop_at_first && s > first_hit.load()) continue;
        SumResult r = scan_sum(c, n, s, max_entry, keyfn);
        std::lock_guard<std::mutex> guard(merge);
        if (log.is_open()) {
          nlohmann::json rec{{"s", r.s}, {"count", r.count}, {"groups", nlohmann::json::array()}};
          for (const auto& g : r.groups) rec["groups"].push_back(group_to_json(g));
          log << rec.dump() << '\n';
          log.flush();
        }
        if (!r.groups.empty()) {
          long cur = first_hit.load();
          while (s < cur && !first_hit.compare_exchange_weak(cur, s)) {}
        }
        results[s] = std::move(r);
      }
    } catch (...) {
      std::lock_guard<std::mutex> guard(merge);
      if (!failure) failure = std::current_exception();
      next = todo.size();
    }
  };
  const std::size_t shards = std::max<std::size_t>(1, opt.shards);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < shards; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  CollisionReport rep;
  rep.codim = c;
  rep.ambient = n;
  rep.max_sum = max_sum;
  rep.max_entry = opt.max_entry;
  rep.reduced_key = reduced;
  rep.shards = shards;
  rep.sums_resumed = resumed;
  const long limit = opt.stop_at_first ? std::min(first_hit.load(), max_sum) : max_sum;
  for (auto& [s, r] : results) {
    if (s > limit) break;
    rep.sequences_examined += r.count;
    for (auto& g : r.groups) rep.groups.push_back(std::move(g));
  }
  rep.searched_through = limit;
  rep.exhaustive = limit == max_sum;
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// n == c: the polynomial is the constant prod a_i, so collisions cross sums.
inline CollisionReport run_points(std::size_t c, long max_sum, const SearchOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (opt.checkpoint) throw Error(Errc::invalid_argument, "checkpoints are not supported when n = c");
  const long max_entry = *opt.max_entry;
  std::map<Integer, std::vector<DegreeSequence>> buckets;
  std::uint64_t count = 0;
  for (long s = static_cast<long>(c); s <= max_sum; ++s)
    for_each_with_sum(c, s, max_entry, [&](const int* a) {
      ++count;
      DegreeSequence seq = make_seq(a, c);
      buckets[seq.product()].push_back(std::move(seq));
    });
  std::vector<CollisionGroup> groups;
  for (auto& [prod, seqs] : buckets) {
    if (seqs.size() < 2) continue;
    CollisionGroup g;
    g.sequences = std::move(seqs);
    g.sum = g.sequences.front().sum();
    g.key = key_strings(g.sequences.front(), c);
    groups.push_back(std::move(g));
  }
  // bucket members are already in (sum, lex-descending) order
  std::sort(groups.begin(), groups.end(), [](const CollisionGroup& x, const CollisionGroup& y) {
    if (x.sum != y.sum) return x.sum < y.sum;
    return x.sequences.front().descending() > y.sequences.front().descending();
  });
  CollisionReport rep;
  rep.codim = c;
  rep.ambient = c;
  rep.max_sum = max_sum;
  rep.max_entry = opt.max_entry;
  rep.sequences_examined = count;
  rep.shards = 1;
  if (opt.stop_at_first && !groups.empty()) {
    const long s = groups.front().sum;
    std::erase_if(groups, [s](const CollisionGroup& g) { return g.sum > s; });
  }
  rep.groups = std::move(groups);
  rep.exhaustive = true;
  rep.searched_through = max_sum;
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace detail

// Distinct degree sequences of codimension c with one Hilbert polynomial in
// P^n, scanning degree sums c..max_sum in ascending order. Equal e1 is
// necessary for a collision when n > c, so each sum is bucketed on its own.
inline CollisionReport collision_search(std::size_t c, std::size_t n, long max_sum, const SearchOptions& opt = {}) {
  if (c < 1) throw Error(Errc::invalid_argument, "codimension must be positive");
  require_codim(c, n);
  if (c > 20) throw Error(Errc::invalid_argument, "codimension too large for subset enumeration");
  if (max_sum < static_cast<long>(c)) throw Error(Errc::invalid_argument, "max_sum must be at least c");
  if (opt.max_entry && *opt.max_entry < 1) throw Error(Errc::invalid_argument, "max_entry must be positive");
  if (n == c) {
    if (!opt.max_entry) throw Error(Errc::unbounded_search, "key is degree only; search unbounded without max_entry");
    return detail::run_points(c, max_sum, opt);
  }
  if (has_reduced_key(c, n)) return detail::run_by_sum(c, n, max_sum, opt, detail::ReducedKey{}, true);
  if (detail::full_key_fits_i128(c, n, max_sum))
    return detail::run_by_sum(c, n, max_sum, opt, detail::FullKey<detail::i128>{c, n}, false);
  return detail::run_by_sum(c, n, max_sum, opt, detail::FullKey<Integer>{c, n}, false);
}

// Bounded firmness evidence: an exhaustive collision search; no groups means
// no witness with degree sum <= max_sum.
inline CollisionReport firmness_scan(std::size_t c, std::size_t n, long max_sum, SearchOptions opt = {}) {
  opt.stop_at_first = false;
  return collision_search(c, n, max_sum, opt);
}

inline nlohmann::json to_json(const CollisionReport& r, bool with_runtime = false) {
  nlohmann::json j{{"version", 1},
                   {"c", r.codim},
                   {"n", r.ambient},
                   {"max_sum", r.max_sum},
                   {"key", r.reduced_key ? "reduced" : "full"},
                   {"exhaustive", r.exhaustive},
                   {"searched_through", r.searched_through},
                   {"sequences_examined", r.sequences_examined}};
  j["max_entry"] = r.max_entry ? nlohmann::json(*r.max_entry) : nlohmann::json(nullptr);
  j["groups"] = nlohmann::json::array();
  for (const auto& g : r.groups) j["groups"].push_back(detail::group_to_json(g));
  if (with_runtime)
    j["runtime"] = {{"elapsed_seconds", r.elapsed_seconds}, {"shards", r.shards}, {"sums_resumed", r.sums_resumed}};
  return j;
}

inline CollisionReport report_from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != 1) throw Error(Errc::invalid_argument, "unsupported report version");
  CollisionReport r;
  r.codim = j.at("c").get<std::size_t>();
  r.ambient = j.at("n").get<std::size_t>();
  r.max_sum = j.at("max_sum").get<long>();
  if (!j.at("max_entry").is_null()) r.max_entry = j.at("max_entry").get<long>();
  r.reduced_key = j.at("key").get<std::string>() == "reduced";
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.searched_through = j.at("searched_through").get<long>();
  r.sequences_examined = j.at("sequences_examined").get<std::uint64_t>();
  for (const auto& g : j.at("groups")) r.groups.push_back(detail::group_from_json(g));
  return r;
}

}  // namespace cihilb
