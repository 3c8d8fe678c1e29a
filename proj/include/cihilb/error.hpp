#pragma once

#include <stdexcept>
#include <string>

namespace cihilb {

enum class Errc {
  invalid_argument,
  not_invertible,
  not_symmetric,
  codim_exceeds_ambient,
  no_complete_intersection,
  not_ci_numerator,
  not_ci_hilbert_polynomial,
  regularity_violated,
  inconsistent_invariants,
  not_realizable,
  unbounded_search,
  checkpoint_mismatch,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::not_invertible: return "not invertible";
    case Errc::not_symmetric: return "not symmetric";
    case Errc::codim_exceeds_ambient: return "codimension exceeds ambient dimension";
    case Errc::no_complete_intersection: return "no complete intersection";
    case Errc::not_ci_numerator: return "not a complete-intersection numerator";
    case Errc::not_ci_hilbert_polynomial: return "not a complete-intersection Hilbert polynomial";
    case Errc::regularity_violated: return "regularity hypothesis violated";
    case Errc::inconsistent_invariants: return "inconsistent invariants";
    case Errc::not_realizable: return "not realizable";
    case Errc::unbounded_search: return "unbounded search";
    case Errc::checkpoint_mismatch: return "checkpoint mismatch";
  }
  return "unknown error";
}

// Every failure in the library is reported through this type; `code()` is
// what callers branch on, the message carries detail for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(detail.empty() ? std::string(errc_name(code))
                                          : std::string(errc_name(code)) + ": " + detail),
        code_(code) {}
  explicit Error(Errc code) : Error(code, "") {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cihilb
