// Prints the subgroup lattice size and fuzzy subgroup counts of U_6n for a
// few n, using only the public headers.

#include <iostream>

#include "u6n/u6n.hpp"

int main() {
  for (std::int64_t n : {1, 2, 3, 6, 12, 30}) {
    const u6n::GroupParams p(n);
    const auto lat = u6n::build_lattice(p, u6n::LatticeMode::all);
    const auto all = u6n::count_fuzzy_subgroups(p);
    const auto normal = u6n::count_normal_fuzzy_subgroups(p);
    std::cout << "U_" << p.order() << ": " << lat.size() + 1 << " subgroups, "
              << "height " << u6n::height(lat) << ", N_F = " << all.fuzzy_count
              << ", N_NF = " << normal.fuzzy_count << "\n";
  }
}
