#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "hilbert.hpp"
#include "rational.hpp"
#include "recover.hpp"
#include "sequence.hpp"

namespace cihilb {

// Integers are emitted as JSON numbers when they fit in 64 bits and as decimal
// strings otherwise; both forms are accepted on input.
inline nlohmann::json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return nlohmann::json(static_cast<std::int64_t>(v.get_si()));
  return nlohmann::json(v.get_str());
}

inline Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error(Errc::invalid_argument, "expected an integer, got " + j.dump());
}

// {"version":1,"n":4,"c":3,"mu":[[90,1],[-495,1]]}, leading coefficient first.
inline nlohmann::json to_json(const HilbertPoly& p) {
  nlohmann::json mu = nlohmann::json::array();
  for (const Rational& m : p.mu) mu.push_back({integer_to_json(m.num()), integer_to_json(m.den())});
  return {{"version", 1}, {"n", p.ambient}, {"c", p.codim}, {"mu", mu}};
}

inline HilbertPoly hilbert_from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != 1) throw Error(Errc::invalid_argument, "unsupported version");
    HilbertPoly p;
    p.ambient = j.at("n").get<std::size_t>();
    p.codim = j.at("c").get<std::size_t>();
    require_codim(p.codim, p.ambient);
    for (const auto& m : j.at("mu")) {
      if (m.is_array()) {
        if (m.size() != 2) throw Error(Errc::invalid_argument, "mu entries are [num, den] pairs");
        p.mu.emplace_back(integer_from_json(m[0]), integer_from_json(m[1]));
      } else if (m.is_string()) {
        p.mu.push_back(Rational::parse(m.get<std::string>()));
      } else {
        p.mu.emplace_back(integer_from_json(m));
      }
    }
    if (p.mu.size() != p.dim() + 1)
      throw Error(Errc::invalid_argument, "expected " + std::to_string(p.dim() + 1) + " coefficients");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed Hilbert polynomial JSON: ") + e.what());
  }
}

inline nlohmann::json to_json(const RecoveryOutcome& r) {
  nlohmann::json seqs = nlohmann::json::array();
  for (const auto& s : r.sequences) seqs.push_back(s.descending());
  return {{"version", 1},     {"status", to_string(r.status)},       {"firmness", to_string(r.firmness)},
          {"c", r.codim},     {"n", r.ambient},                       {"closed_form", r.closed_form},
          {"sequences", seqs}};
}

inline RecoveryOutcome recovery_from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != 1) throw Error(Errc::invalid_argument, "unsupported version");
    RecoveryOutcome r;
    const std::string status = j.at("status").get<std::string>();
    if (status == "unique") r.status = RecoveryStatus::unique;
    else if (status == "multiple") r.status = RecoveryStatus::multiple;
    else if (status == "none") r.status = RecoveryStatus::none;
    else throw Error(Errc::invalid_argument, "unknown status " + status);
    const std::string firm = j.at("firmness").get<std::string>();
    if (firm == "known-firm") r.firmness = Firmness::known_firm;
    else if (firm == "known-not-firm") r.firmness = Firmness::known_not_firm;
    else if (firm == "unknown") r.firmness = Firmness::unknown;
    else throw Error(Errc::invalid_argument, "unknown firmness " + firm);
    r.codim = j.at("c").get<std::size_t>();
    r.ambient = j.at("n").get<std::size_t>();
    r.closed_form = j.value("closed_form", false);
    for (const auto& s : j.at("sequences")) r.sequences.emplace_back(s.get<std::vector<long>>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed recovery JSON: ") + e.what());
  }
}

}  // namespace cihilb
