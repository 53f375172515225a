#ifndef U6N_LATTICE_HPP
#define U6N_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "u6n/group.hpp"
#include "u6n/subgroup.hpp"

namespace u6n {

enum class LatticeMode { all, normal };

inline std::string to_string(LatticeMode m) {
  return m == LatticeMode::all ? "all" : "normal";
}

inline LatticeMode parse_mode(const std::string& s) {
  if (s == "all") return LatticeMode::all;
  if (s == "normal") return LatticeMode::normal;
  throw std::invalid_argument("unknown lattice mode '" + s + "'");
}

/// Strict containment order on the nontrivial (normal) subgroups of U_6n.
///
/// Node order follows the descriptor order. above(i) lists every node that
/// strictly contains node i, in increasing index order; the whole relation is
/// stored, not only the covers, because chain counting sums over all strict
/// successors.
class Lattice {
 public:
  Lattice(GroupParams params, LatticeMode mode,
          std::vector<SubgroupDescriptor> nodes,
          std::vector<std::vector<std::size_t>> above)
      : params_(params),
        mode_(mode),
        nodes_(std::move(nodes)),
        above_(std::move(above)) {
    const auto it = std::find_if(nodes_.begin(), nodes_.end(), is_whole_group);
    if (it == nodes_.end()) throw std::logic_error("lattice without top node");
    top_ = static_cast<std::size_t>(it - nodes_.begin());
    if (above_.size() != nodes_.size()) {
      throw std::logic_error("adjacency size does not match node count");
    }
  }

  const GroupParams& params() const noexcept { return params_; }
  LatticeMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t top_index() const noexcept { return top_; }
  const std::vector<SubgroupDescriptor>& nodes() const noexcept {
    return nodes_;
  }
  const SubgroupDescriptor& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<std::size_t>& above(std::size_t i) const {
    return above_.at(i);
  }

  bool precedes(std::size_t i, std::size_t j) const {
    const auto& a = above_.at(i);
    return std::binary_search(a.begin(), a.end(), j);
  }

  std::size_t strict_pair_count() const {
    std::size_t c = 0;
    for (const auto& a : above_) c += a.size();
    return c;
  }

  std::int64_t order_of(std::size_t i) const {
    return subgroup_order(params_, nodes_.at(i));
  }

 private:
  GroupParams params_;
  LatticeMode mode_;
  std::vector<SubgroupDescriptor> nodes_;
  std::vector<std::vector<std::size_t>> above_;
  std::size_t top_ = 0;
};

inline Lattice build_lattice(const GroupParams& p, LatticeMode mode,
                             std::int64_t oracle_limit = default_oracle_limit) {
  auto all = mode == LatticeMode::all
                 ? enumerate_subgroups(p, oracle_limit)
                 : enumerate_normal_subgroups(p, oracle_limit);
  std::vector<SubgroupDescriptor> nodes;
  nodes.reserve(all.size());
  for (const auto& d : all) {
    if (!is_trivial(p, d)) nodes.push_back(d);
  }
  std::vector<std::vector<std::size_t>> above(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i != j && subgroup_leq(p, nodes[i], nodes[j])) above[i].push_back(j);
    }
  }
  return Lattice(p, mode, std::move(nodes), std::move(above));
}

/// Number of nodes on the longest chain ending at the top.
inline std::size_t height(const Lattice& lat) {
  // Strict containment strictly increases the subgroup order, so visiting
  // nodes by decreasing order is a topological order towards the top.
  std::vector<std::size_t> by_order(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return lat.order_of(x) > lat.order_of(y);
                   });
  std::vector<std::size_t> longest(lat.size(), 0);
  longest[lat.top_index()] = 1;
  std::size_t best = 1;
  for (auto i : by_order) {
    for (auto j : lat.above(i)) {
      if (longest[j] > 0) longest[i] = std::max(longest[i], longest[j] + 1);
    }
    best = std::max(best, longest[i]);
  }
  return best;
}

/// Covering pairs (i, j): i strictly below j with nothing strictly between.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const Lattice& lat) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    for (auto j : lat.above(i)) {
      bool covered = true;
      for (auto k : lat.above(i)) {
        if (k != j && lat.precedes(k, j)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

/// Graphviz digraph of the Hasse diagram, edges pointing subgroup to
/// supergroup.
inline std::string export_dot(const Lattice& lat) {
  std::ostringstream os;
  os << "digraph U" << lat.params().order() << "_" << to_string(lat.mode())
     << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    os << "  n" << i << " [label=\"" << to_string(lat.node(i))
       << "\\norder " << lat.order_of(i) << "\"];\n";
  }
  for (const auto& [i, j] : hasse_edges(lat)) {
    os << "  n" << i << " -> n" << j << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace u6n

#endif  // U6N_LATTICE_HPP
