#ifndef U6N_CHAIN_DP_HPP
#define U6N_CHAIN_DP_HPP

// Level-by-level count of proper subgroup chains ending at the whole group.
//
//   L(1, G) = 1,  L(1, H) = 0 for H != G
//   L(i + 1, H) = sum over K with H < K of L(i, K)
//
// The per-length totals L^G_i, their sum, and the resulting numbers of
// (normal) fuzzy subgroups up to equivalence follow directly.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "u6n/lattice.hpp"

namespace u6n {

using BigInt = boost::multiprecision::cpp_int;

struct ChainTable {
  std::size_t top = 0;
  // levels[k][j]: number of chains with k + 1 members from node j up to top.
  std::vector<std::vector<BigInt>> levels;
};

struct ChainCounts {
  std::vector<BigInt> per_length;  // per_length[k] counts (k + 1)-chains
  BigInt total;
  BigInt fuzzy_count;  // 2 * total
  BigInt mm_count;     // 2 * fuzzy_count - 1

  friend bool operator==(const ChainCounts&, const ChainCounts&) = default;
};

/// Worker threads used inside a single level; 0 or 1 runs sequentially.
struct DpOptions {
  unsigned threads = 1;
};

namespace detail {

inline void fill_level(const Lattice& lat, const std::vector<BigInt>& prev,
                       std::vector<BigInt>& next, std::size_t begin,
                       std::size_t end) {
  for (std::size_t j = begin; j < end; ++j) {
    BigInt sum = 0;
    for (auto k : lat.above(j)) sum += prev[k];
    next[j] = std::move(sum);
  }
}

}  // namespace detail

inline ChainTable compute_chain_table(const Lattice& lat,
                                      DpOptions options = {}) {
  ChainTable table;
  table.top = lat.top_index();
  std::vector<BigInt> level(lat.size(), 0);
  level[lat.top_index()] = 1;

  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, lat.size()));

  // Each chain step strictly grows the subgroup, so at most lat.size()
  // levels can be nonzero and the loop always terminates.
  while (true) {
    bool nonzero = false;
    for (const auto& c : level) {
      if (c != 0) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) break;
    table.levels.push_back(level);

    std::vector<BigInt> next(lat.size());
    if (workers == 1) {
      detail::fill_level(lat, table.levels.back(), next, 0, lat.size());
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (lat.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(lat.size(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
          detail::fill_level(lat, table.levels.back(), next, begin, end);
        });
      }
    }
    level = std::move(next);
  }
  return table;
}

inline ChainCounts chain_counts(const ChainTable& table) {
  ChainCounts out;
  out.per_length.reserve(table.levels.size());
  for (const auto& level : table.levels) {
    BigInt s = 0;
    for (const auto& c : level) s += c;
    out.total += s;
    out.per_length.push_back(std::move(s));
  }
  out.fuzzy_count = 2 * out.total;
  out.mm_count = 2 * out.fuzzy_count - 1;
  return out;
}

inline BigInt murali_makamba_count(const ChainCounts& counts) {
  return 2 * counts.fuzzy_count - 1;
}

inline ChainCounts count_chains(const GroupParams& p, LatticeMode mode,
                                DpOptions options = {}) {
  return chain_counts(compute_chain_table(build_lattice(p, mode), options));
}

inline ChainCounts count_fuzzy_subgroups(const GroupParams& p,
                                         DpOptions options = {}) {
  return count_chains(p, LatticeMode::all, options);
}

inline ChainCounts count_normal_fuzzy_subgroups(const GroupParams& p,
                                                DpOptions options = {}) {
  return count_chains(p, LatticeMode::normal, options);
}

}  // namespace u6n

#endif  // U6N_CHAIN_DP_HPP
