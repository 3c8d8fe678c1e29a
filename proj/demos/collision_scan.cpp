// Smallest pairs of degree sequences sharing a Hilbert polynomial.
#include <cihilb/cihilb.hpp>

#include <iostream>

using namespace cihilb;

int main(int argc, char** argv) {
  const std::size_t c = argc > 1 ? std::stoul(argv[1]) : 4;
  const std::size_t n = argc > 2 ? std::stoul(argv[2]) : 7;
  const long max_sum = argc > 3 ? std::stol(argv[3]) : 30;

  SearchOptions opt;
  opt.shards = 2;
  const CollisionReport r = collision_search(c, n, max_sum, opt);
  std::cout << "c=" << c << " n=" << n << " sum<=" << max_sum << ": " << r.sequences_examined << " sequences, "
            << r.groups.size() << " group(s)\n";
  for (const auto& g : r.groups) {
    std::cout << "  sum " << g.sum << ":";
    for (const auto& s : g.sequences) std::cout << " " << s.to_string();
    std::cout << "\n";
  }
  std::cout << to_json(r).dump(2) << "\n";
}
