// Hilbert polynomials of a few complete intersections, and what they say
// about the degrees that cut them out.
#include <cihilb/cihilb.hpp>

#include <iostream>

using namespace cihilb;

int main() {
  const DegreeSequence seq{2, 5, 9};
  for (std::size_t n : {4u, 5u}) {
    const HilbertPoly p = hilbert_koszul(seq, n);
    const RecoveryOutcome r = recover(p);
    std::cout << seq.to_string() << " in P^" << n << ": " << p.to_string() << "\n"
              << "  " << to_string(r.status) << " (" << to_string(r.firmness) << ")";
    for (const auto& s : r.sequences) std::cout << " " << s.to_string();
    std::cout << "\n";
  }

  // closed-form recovery in codimension 6
  const DegreeSequence big{46, 36, 32, 15, 12, 5};
  SolverScratch scratch;
  const EVector ev = solve_e(lambda_numeric(big, 8), 6, &scratch);
  std::cout << "e3 candidates:";
  for (const auto& c : scratch.e3_candidates) std::cout << " " << c;
  std::cout << "\nrecovered " << roots_from_e(ev).to_string() << "\n";

  // Hilbert series numerator route
  std::cout << "numerator of " << DegreeSequence{2, 3}.to_string() << ":";
  for (const auto& c : series_numerator({2, 3}).coeffs) std::cout << " " << c;
  std::cout << "\n";
}
