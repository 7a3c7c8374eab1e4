// Prints the first few square values of (x+1) + (x+2) + ... + (lx) for
// l = 2..8, and checks that the cubic sums admit none in a small box.

#include <powersum/search.hpp>

#include <iostream>

int main() {
  namespace ps = powersum;
  for (unsigned l = 2; l <= 8; ++l) {
    const auto fam = ps::family_k1(l, 3);
    std::cout << "k=1 l=" << l << ':';
    for (const auto& r : fam.records) std::cout << " (" << r.x << ", " << r.y << ')';
    std::cout << '\n';
  }

  ps::SearchConfig cfg;
  cfg.k = 3;
  cfg.l = 2;
  cfg.x_max = 5000;
  cfg.n_max = 4;
  cfg.partitions = 4;
  std::cout << "k=3 l=2, x <= 5000, n <= 4: " << ps::search_solutions(cfg).size() << " solution(s)\n";
}
