#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Published reference data used by `cihilb verify-paper`.
namespace cihilb::known {

struct SharedPolynomial {
  std::string label;
  std::vector<std::vector<long>> sequences;
  std::size_t ambient;
  std::vector<std::string> mu;  // leading coefficient first
};

inline const std::vector<SharedPolynomial>& shared_polynomials() {
  static const std::vector<SharedPolynomial> rows{
      {"plane: conic pair vs line and quartic", {{2, 2}, {1, 4}}, 2, {"4"}},
      {"curves in P^4", {{2, 5, 9}, {3, 3, 10}}, 4, {"90", "-495"}},
      {"threefolds in P^7", {{2, 6, 7, 15}, {3, 3, 10, 14}}, 7, {"210", "-6930", "92295", "-456225"}},
      {"codim 5 in P^9",
       {{4, 4, 15, 15, 22}, {3, 6, 11, 20, 20}},
       9,
       {"3300", "-330000", "13952400", "-285120000", "2328530380"}},
      {"codim 5 in P^10",
       {{4, 4, 15, 15, 22}, {3, 6, 11, 20, 20}},
       10,
       {"660", "-80850", "4486900", "-135666300", "2188295670", "-14860251560"}},
      {"codim 6 in P^12",
       {{46, 36, 32, 15, 12, 5}, {45, 40, 24, 23, 8, 6}},
       12,
       {"66240", "-26429760", "4792795200", "-495690148800", "30434011089120", "-1041907113767520",
        "15429613604601120"}},
  };
  return rows;
}

struct Listing {
  std::size_t codim;
  std::size_t index;
  std::string text;
};

inline const std::vector<Listing>& lambda_listings() {
  static const std::vector<Listing> rows{
      {3, 0, "e3"},
      {3, 1, "(e1) * (-1/2)"},
      {3, 2, "(2*e1^2 - e2) * (1/12)"},
      {4, 0, "e4"},
      {4, 1, "(e1) * (-1/2)"},
      {4, 2, "(2*e1^2 - e2) * (1/12)"},
      {4, 3, "(e1) * (e1^2 - e2) * (-1/24)"},
      {4, 4, "(6*e1^4 - 9*e1^2*e2 + 2*e2^2 - e1*e3 + e4) * (1/720)"},
      {5, 0, "e5"},
      {5, 1, "(e1) * (-1/2)"},
      {5, 2, "(2*e1^2 - e2) * (1/12)"},
      {5, 4, "(6*e1^4 - 9*e1^2*e2 + 2*e2^2 - e1*e3 + e4) * (1/720)"},
      {5, 6,
       "(12*e1^6 - 30*e1^4*e2 + 24*e1^2*e2^2 - 12*e1^3*e3 - 3*e2^3 + 3*e1*e2*e3 + 12*e1^2*e4 + e3^2 - 5*e2*e4 + "
       "2*e1*e5) * (1/60480)"},
      {6, 0, "e6"},
      {6, 1, "(e1) * (-1/2)"},
      {6, 2, "(2*e1^2 - e2) * (1/12)"},
      {6, 4, "(6*e1^4 - 9*e1^2*e2 + 2*e2^2 - e1*e3 + e4) * (1/720)"},
      {6, 6,
       "(12*e1^6 - 30*e1^4*e2 + 24*e1^2*e2^2 - 12*e1^3*e3 - 3*e2^3 + 3*e1*e2*e3 + 12*e1^2*e4 + e3^2 - 5*e2*e4 + "
       "2*e1*e5 - 2*e6) * (1/60480)"},
      {6, 8,
       "(10*e1^8 - 35*e1^6*e2 + 50*e1^4*e2^2 - 25*e1^5*e3 - 25*e1^2*e2^3 + 25*e1^3*e2*e3 + 25*e1^4*e4 + 2*e2^4 - "
       "3*e1*e2^2*e3 + 9*e1^2*e3^2 - 42*e1^2*e2*e4 + 17*e1^3*e5 - 2*e2*e3^2 + 7*e2^2*e4 - e1*e3*e4 - 4*e1*e2*e5 - "
       "17*e1^2*e6 + 2*e4^2 - 3*e3*e5 + 7*e2*e6) * (1/3628800)"},
  };
  return rows;
}

struct SearchRow {
  std::string label;
  std::size_t codim;
  std::size_t ambient;
  long max_sum;
  std::vector<std::vector<long>> pair;
};

inline const std::vector<SearchRow>& search_rows() {
  static const std::vector<SearchRow> rows{
      {"search (3,4): curve pair at degree sum 16", 3, 4, 16, {{10, 3, 3}, {9, 5, 2}}},
      {"search (4,7): threefold pair at degree sum 30", 4, 7, 30, {{15, 7, 6, 2}, {14, 10, 3, 3}}},
      {"search (5,9): codim 5 pair at degree sum 60", 5, 9, 60, {{22, 15, 15, 4, 4}, {20, 20, 11, 6, 3}}},
  };
  return rows;
}

inline const SearchRow& flagship() {
  static const SearchRow row{"search (6,12): first collision at degree sum 146", 6, 12, 146,
                             {{46, 36, 32, 15, 12, 5}, {45, 40, 24, 23, 8, 6}}};
  return row;
}

}  // namespace cihilb::known
