#include <cihilb/cihilb.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "known_examples.hpp"

using namespace cihilb;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_verify = 3;
constexpr int exit_math = 4;

int exit_code_for(Errc e) {
  switch (e) {
    case Errc::invalid_argument:
    case Errc::codim_exceeds_ambient:
    case Errc::no_complete_intersection:
    case Errc::unbounded_search:
    case Errc::checkpoint_mismatch:
      return exit_usage;
    default:
      return exit_math;
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::string json_seq(const DegreeSequence& s) { return nlohmann::json(s.descending()).dump(); }

std::string json_seqs(const std::vector<DegreeSequence>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : v) j.push_back(s.descending());
  return j.dump();
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Default checkpoint file under $CIHILB_CHECKPOINT_DIR, if that is set.
std::optional<std::filesystem::path> default_checkpoint(const std::string& cmd, std::size_t c, std::size_t n,
                                                        std::optional<long> max_entry) {
  const char* dir = std::getenv("CIHILB_CHECKPOINT_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::string name = cmd + "-c" + std::to_string(c) + "-n" + std::to_string(n);
  if (max_entry) name += "-e" + std::to_string(*max_entry);
  return std::filesystem::path(dir) / (name + ".jsonl");
}

void print_report_text(const CollisionReport& r, std::ostream& out) {
  for (const auto& g : r.groups) {
    out << "sum " << g.sum << ":";
    for (const auto& s : g.sequences) out << ' ' << s.to_string();
    out << '\n';
  }
  out << r.groups.size() << " group(s); " << r.sequences_examined << " sequences with degree sum <= "
      << r.searched_through << (r.exhaustive ? " (exhaustive)" : " (stopped at first hit)") << '\n';
}

struct Row {
  std::string label;
  bool ok;
  std::string detail;
};

std::vector<Row> reference_rows(bool with_flagship, std::size_t shards) {
  std::vector<Row> rows;
  auto check = [&](const std::string& label, const std::function<std::string()>& body) {
    try {
      std::string bad = body();
      rows.push_back({label, bad.empty(), bad});
    } catch (const std::exception& e) {
      rows.push_back({label, false, e.what()});
    }
  };

  for (const auto& ex : known::shared_polynomials()) {
    check(ex.label + ": shared Hilbert polynomial", [&]() -> std::string {
      std::vector<Rational> mu;
      for (const auto& m : ex.mu) mu.push_back(Rational::parse(m));
      for (const auto& s : ex.sequences) {
        DegreeSequence seq(s);
        HilbertPoly p = hilbert_koszul(seq, ex.ambient);
        if (p.mu != mu) return seq.to_string() + " gives " + p.to_string();
        if (!(hilbert_hrr(seq, ex.ambient) == p)) return "HRR disagrees for " + seq.to_string();
      }
      return "";
    });
  }

  check("codim 2 in P^3: P = deg*t + 1 - p_a and recovery is unique", []() -> std::string {
    for (long a = 1; a <= 12; ++a)
      for (long b = a; b <= 12; ++b) {
        HilbertPoly p = hilbert_koszul({a, b}, 3);
        Rational pa = Rational(a * b * (a + b - 4), 2L) + Rational(1);
        if (p.mu[0] != Rational(a * b) || p.mu[1] != Rational(1) - pa)
          return "genus formula fails for (" + std::to_string(a) + "," + std::to_string(b) + ")";
        RecoveryOutcome r = recover(p);
        if (r.status != RecoveryStatus::unique || r.sequences.front() != DegreeSequence{a, b})
          return "recovery fails for (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    return "";
  });

  for (const auto& l : known::lambda_listings()) {
    check("Lt_" + std::to_string(l.index) + " in codim " + std::to_string(l.codim), [&]() -> std::string {
      const EPoly got = lambda_symbolic(l.codim, l.index);
      if (!(got == parse_epoly(l.text, l.codim))) return "computed " + got.to_string();
      return "";
    });
  }

  check("N_c table and parity", []() -> std::string {
    const std::map<std::size_t, std::size_t> want{{1, 1}, {2, 3}, {3, 5}, {4, 8}, {5, 11}, {6, 14}};
    if (nc_table() != want) return "table differs";
    for (std::size_t c = 3; c <= 6; ++c)
      if (nc_table().at(c) % 2 != c % 2) return "parity fails at c = " + std::to_string(c);
    if (is_firm(7, 20) != Firmness::unknown) return "c = 7 should be unknown";
    return "";
  });

  // Each shared pair is ambiguous one step below N_c and resolved at N_c.
  struct Boundary {
    std::vector<std::vector<long>> pair;
    std::size_t below;
  };
  const std::vector<Boundary> boundaries{{{{2, 5, 9}, {3, 3, 10}}, 4},
                                         {{{2, 6, 7, 15}, {3, 3, 10, 14}}, 7},
                                         {{{4, 4, 15, 15, 22}, {3, 6, 11, 20, 20}}, 10},
                                         {{{46, 36, 32, 15, 12, 5}, {45, 40, 24, 23, 8, 6}}, 13}};
  for (const auto& b : boundaries) {
    const std::size_t c = b.pair.front().size();
    check("codim " + std::to_string(c) + ": ambiguous in P^" + std::to_string(b.below) + ", recoverable in P^" +
              std::to_string(b.below + 1),
          [&]() -> std::string {
            DegreeSequence x(b.pair[0]), y(b.pair[1]);
            RecoveryOutcome lo = recover(hilbert_koszul(x, b.below));
            if (lo.status != RecoveryStatus::multiple) return std::string("status ") + to_string(lo.status);
            for (const auto& s : {x, y})
              if (std::find(lo.sequences.begin(), lo.sequences.end(), s) == lo.sequences.end())
                return s.to_string() + " missing below the boundary";
            for (const auto& s : {x, y}) {
              RecoveryOutcome hi = recover(hilbert_koszul(s, b.below + 1));
              if (hi.status != RecoveryStatus::unique || hi.sequences.front() != s)
                return s.to_string() + " not recovered at the boundary";
            }
            return "";
          });
  }

  auto search_check = [&](const known::SearchRow& row) {
    check(row.label, [&]() -> std::string {
      SearchOptions opt;
      opt.shards = shards;
      CollisionReport r = collision_search(row.codim, row.ambient, row.max_sum, opt);
      std::vector<DegreeSequence> want;
      for (const auto& s : row.pair) want.emplace_back(s);
      for (const auto& g : r.groups)
        if (g.sum == row.max_sum && g.sequences == want) return "";
      return "pair not found among " + std::to_string(r.groups.size()) + " group(s)";
    });
  };
  for (const auto& row : known::search_rows()) search_check(row);
  if (with_flagship) {
    check(known::flagship().label + " (minimal)", [&]() -> std::string {
      SearchOptions opt;
      opt.shards = shards;
      const auto& row = known::flagship();
      CollisionReport r = collision_search(row.codim, row.ambient, row.max_sum, opt);
      if (r.groups.empty()) return "no collision found";
      std::vector<DegreeSequence> want;
      for (const auto& s : row.pair) want.emplace_back(s);
      if (r.groups.front().sum != row.max_sum || r.groups.front().sequences != want)
        return "first group is at sum " + std::to_string(r.groups.front().sum);
      return "";
    });
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert polynomials of complete intersections and degree-sequence recovery"};
  app.require_subcommand(1);

  // hilbert
  std::string h_seq;
  std::size_t h_n = 0;
  std::string h_method = "koszul";
  bool h_json = false;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial of X(a_1..a_c) in P^n");
  hilbert->add_option("degrees", h_seq, "comma-separated degrees, e.g. 2,5,9")->required();
  hilbert->add_option("--n,--ambient", h_n, "ambient dimension")->required();
  hilbert->add_option("--method", h_method, "koszul | hrr | both")
      ->check(CLI::IsMember({"koszul", "hrr", "both"}));
  hilbert->add_flag("--json", h_json, "print JSON");

  // todd-poly
  std::size_t t_c = 0, t_n = 0;
  bool t_indexed = false;
  auto* todd = app.add_subcommand("todd-poly", "print Lt_i^c for 0 <= i <= n - c");
  todd->add_option("c", t_c, "codimension")->required();
  todd->add_option("n", t_n, "ambient dimension")->required();
  todd->add_flag("--indexed", t_indexed, "prefix each line with its index");

  // recover
  std::string r_mu, r_file;
  std::size_t r_c = 0, r_n = 0;
  bool r_json = false;
  auto* rec = app.add_subcommand("recover", "degree sequences with a given Hilbert polynomial");
  auto* mu_opt = rec->add_option("--mu", r_mu, "coefficients, leading first, e.g. 90,-495 or 1/2,3/2,1");
  auto* file_opt = rec->add_option("--json-file", r_file, "Hilbert polynomial JSON ('-' for stdin)");
  rec->add_option("--codim,-c", r_c, "codimension");
  rec->add_option("--ambient,-n", r_n, "ambient dimension");
  rec->add_flag("--json", r_json, "print JSON");
  mu_opt->excludes(file_opt);

  // series-recover
  std::string s_coeffs;
  auto* srec = app.add_subcommand("series-recover", "degrees from the numerator of the Hilbert series");
  srec->add_option("coeffs", s_coeffs, "numerator coefficients, constant term first")->required();

  // collide / firm-scan
  struct SearchArgs {
    std::size_t c = 0, n = 0, shards = 1;
    long max_sum = 0;
    std::optional<long> max_entry;
    std::string checkpoint;
    bool json = false, timing = false, first = false, no_checkpoint = false;
  };
  SearchArgs col, scan;
  auto add_search = [](CLI::App* sub, SearchArgs& a) {
    sub->add_option("--codim,-c", a.c, "codimension")->required();
    sub->add_option("--ambient,-n", a.n, "ambient dimension")->required();
    sub->add_option("--max-sum", a.max_sum, "largest degree sum examined")->required();
    sub->add_option("--shards", a.shards, "worker threads (0 = all cores)");
    sub->add_option("--checkpoint", a.checkpoint, "JSONL checkpoint file (resumed if present)");
    sub->add_flag("--no-checkpoint", a.no_checkpoint, "ignore CIHILB_CHECKPOINT_DIR");
    sub->add_option("--max-entry", a.max_entry, "largest degree allowed (required when n = c)");
    sub->add_flag("--json", a.json, "print the report as JSON");
    sub->add_flag("--timing", a.timing, "include run metadata in the JSON report");
  };
  auto* collide = app.add_subcommand("collide", "exhaustive search for sequences sharing a Hilbert polynomial");
  add_search(collide, col);
  collide->add_flag("--first", col.first, "stop after the smallest degree sum with a collision");
  auto* firm = app.add_subcommand("firm-scan", "bounded firmness check: collision search without early exit");
  add_search(firm, scan);

  // verify-paper
  bool v_flagship = false;
  std::size_t v_shards = 0;
  auto* verify = app.add_subcommand("verify-paper", "check every published reference example");
  verify->add_flag("--flagship", v_flagship, "include the full codim 6 search (seconds to minutes)");
  verify->add_option("--shards", v_shards, "worker threads for searches (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*hilbert) {
      const DegreeSequence seq = DegreeSequence::parse(h_seq);
      HilbertPoly p;
      bool agree = true;
      if (h_method == "koszul") {
        p = hilbert_koszul(seq, h_n);
      } else if (h_method == "hrr") {
        p = hilbert_hrr(seq, h_n);
      } else {
        p = hilbert_koszul(seq, h_n);
        agree = hilbert_hrr(seq, h_n) == p;
      }
      if (h_json) {
        nlohmann::json j = to_json(p);
        j["text"] = p.to_string();
        if (h_method == "both") j["methods_agree"] = agree;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << p.to_string() << '\n';
        if (h_method == "both") std::cout << (agree ? "koszul and hrr agree" : "koszul and hrr DISAGREE") << '\n';
      }
      return agree ? exit_ok : exit_verify;
    }

    if (*todd) {
      is_firm(t_c, t_n);  // validates c >= 1 and n >= c
      for (std::size_t i = 0; i + t_c <= t_n; ++i) {
        if (t_indexed) std::cout << i << '\t';
        std::cout << lambda_symbolic(t_c, i).to_string() << '\n';
      }
      return exit_ok;
    }

    if (*rec) {
      HilbertPoly p;
      if (!r_file.empty()) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(read_input(r_file));
        } catch (const nlohmann::json::parse_error& e) {
          throw Error(Errc::invalid_argument, e.what());
        }
        p = hilbert_from_json(j);
      } else {
        if (r_mu.empty()) throw Error(Errc::invalid_argument, "give --mu or --json-file");
        if (r_c == 0 || r_n == 0) throw Error(Errc::invalid_argument, "--mu needs --codim and --ambient");
        require_codim(r_c, r_n);
        p.ambient = r_n;
        p.codim = r_c;
        for (const auto& m : split_commas(r_mu)) p.mu.push_back(Rational::parse(m));
        if (p.mu.size() != p.dim() + 1)
          throw Error(Errc::invalid_argument, "expected " + std::to_string(p.dim() + 1) + " coefficients for n - c = " +
                                                  std::to_string(p.dim()));
      }
      const RecoveryOutcome r = recover(p);
      if (r_json) {
        std::cout << to_json(r).dump() << '\n';
      } else {
        std::cout << to_string(r.status) << ": " << json_seqs(r.sequences) << '\n';
        std::cout << "firmness: " << to_string(r.firmness) << '\n';
      }
      return r.status == RecoveryStatus::none ? exit_math : exit_ok;
    }

    if (*srec) {
      SeriesNumerator num;
      for (const auto& item : split_commas(s_coeffs)) {
        try {
          num.coeffs.emplace_back(item);
        } catch (const std::invalid_argument&) {
          throw Error(Errc::invalid_argument, "bad coefficient '" + item + "'");
        }
      }
      std::cout << json_seq(degrees_from_numerator(num)) << '\n';
      return exit_ok;
    }

    if (*collide || *firm) {
      SearchArgs& a = *collide ? col : scan;
      const std::string cmd = *collide ? "collide" : "firm-scan";
      SearchOptions opt;
      opt.shards = a.shards == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.shards;
      opt.max_entry = a.max_entry;
      opt.stop_at_first = a.first;
      if (!a.checkpoint.empty()) opt.checkpoint = a.checkpoint;
      else if (!a.no_checkpoint && a.n > a.c) opt.checkpoint = default_checkpoint(cmd, a.c, a.n, a.max_entry);
      const CollisionReport r = *collide ? collision_search(a.c, a.n, a.max_sum, opt)
                                         : firmness_scan(a.c, a.n, a.max_sum, opt);
      if (a.json) std::cout << to_json(r, a.timing).dump() << '\n';
      else print_report_text(r, std::cout);
      return exit_ok;
    }

    if (*verify) {
      const std::size_t shards = v_shards == 0 ? std::max(1u, std::thread::hardware_concurrency()) : v_shards;
      bool all = true;
      for (const auto& row : reference_rows(v_flagship, shards)) {
        std::cout << (row.ok ? "PASS  " : "FAIL  ") << row.label;
        if (!row.ok) std::cout << "  -- " << row.detail;
        std::cout << '\n';
        all = all && row.ok;
      }
      return all ? exit_ok : exit_verify;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
