#ifndef U6N_FUZZY_ORACLE_HPP
#define U6N_FUZZY_ORACLE_HPP

// Brute-force reference implementations working directly on the Cayley
// table: subgroup discovery by closure, normality by conjugation, chain
// counting by explicit listing, and fuzzy subgroups materialized as exact
// rational grade maps. Nothing here uses the closed forms of subgroup.hpp,
// so these results can be used to check them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "u6n/chain_dp.hpp"
#include "u6n/group.hpp"
#include "u6n/lattice.hpp"
#include "u6n/subgroup.hpp"

namespace u6n {

using Rational = boost::multiprecision::cpp_rational;
using SubgroupFamily = std::set<ElementSet>;

// ---------------------------------------------------------------------------
// Subgroups

namespace detail {

inline ElementSet close_under_product(const CayleyTable& table,
                                      std::vector<char>& member) {
  // member is the membership mask of a generating set; on return it marks
  // the generated subgroup. In a finite group closure under products is
  // enough, inverses come for free as powers.
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) frontier.push_back(i);
  }
  if (!member[0]) {
    member[0] = 1;
    frontier.push_back(0);
  }
  std::vector<std::size_t> current = frontier;
  while (!frontier.empty()) {
    std::vector<std::size_t> fresh;
    for (auto x : frontier) {
      for (std::size_t k = 0; k < current.size(); ++k) {
        const auto y = current[k];
        for (auto z : {table.product(x, y), table.product(y, x)}) {
          if (!member[z]) {
            member[z] = 1;
            fresh.push_back(z);
          }
        }
      }
    }
    current.insert(current.end(), fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  ElementSet out;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) out.insert(element_at(i));
  }
  return out;
}

}  // namespace detail

/// Subgroup generated by an arbitrary set of elements.
inline ElementSet oracle_closure(const CayleyTable& table,
                                 const ElementSet& generators) {
  std::vector<char> member(table.size(), 0);
  for (const auto& g : generators) member[element_index(g)] = 1;
  return detail::close_under_product(table, member);
}

inline bool is_closed_subgroup(const GroupParams& p, const ElementSet& h) {
  if (!h.contains(identity(p))) return false;
  for (const auto& x : h) {
    if (!h.contains(inverse(p, x))) return false;
    for (const auto& y : h) {
      if (!h.contains(multiply(p, x, y))) return false;
    }
  }
  return true;
}

/// Every subgroup, found as a fixpoint: start from the cyclic subgroups and
/// keep adjoining one outside element to a known subgroup until nothing new
/// appears.
inline SubgroupFamily oracle_all_subgroups(
    const GroupParams& p, std::int64_t limit = default_oracle_limit) {
  const CayleyTable table(p, limit);
  const auto elements = all_elements(p);
  SubgroupFamily found;
  std::vector<ElementSet> pending;
  auto add = [&](ElementSet s) {
    if (found.insert(s).second) pending.push_back(std::move(s));
  };
  for (const auto& g : elements) {
    ElementSet cyc;
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(p.order()); ++k) {
      cyc.insert(power(p, g, k));
    }
    add(std::move(cyc));
  }
  while (!pending.empty()) {
    const ElementSet h = std::move(pending.back());
    pending.pop_back();
    for (const auto& g : elements) {
      if (h.contains(g)) continue;
      ElementSet gens = h;
      gens.insert(g);
      add(oracle_closure(table, gens));
    }
  }
  return found;
}

inline bool oracle_is_normal(const GroupParams& p, const ElementSet& h) {
  for (const auto& g : all_elements(p)) {
    for (const auto& x : h) {
      if (!h.contains(conjugate(p, x, g))) return false;
    }
  }
  return true;
}

/// Normality of h inside a larger subgroup g, by conjugating with members of
/// g only.
inline bool oracle_is_normal_in(const GroupParams& p, const ElementSet& h,
                                const ElementSet& g) {
  for (const auto& y : g) {
    for (const auto& x : h) {
      if (!h.contains(conjugate(p, x, y))) return false;
    }
  }
  return true;
}

/// Subgroups whose element set is invariant under conjugation.
inline SubgroupFamily oracle_normal_subgroups(
    const GroupParams& p, std::int64_t limit = default_oracle_limit) {
  SubgroupFamily out;
  for (auto& h : oracle_all_subgroups(p, limit)) {
    if (oracle_is_normal(p, h)) out.insert(h);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chains

/// Strictly ascending list of subgroups ending at the whole group. The first
/// member may be the trivial subgroup.
struct Chain {
  std::vector<SubgroupDescriptor> members;
};

namespace detail {

template <class Visit>
void list_chains_down(const Lattice& lat,
                      const std::vector<std::vector<std::size_t>>& below,
                      std::vector<std::size_t>& stack, Visit& visit) {
  visit(stack);
  for (auto i : below[stack.back()]) {
    stack.push_back(i);
    list_chains_down(lat, below, stack, visit);
    stack.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> invert_relation(
    const Lattice& lat) {
  std::vector<std::vector<std::size_t>> below(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    for (auto j : lat.above(i)) below[j].push_back(i);
  }
  return below;
}

}  // namespace detail

/// Per-length chain counts by listing every chain ending at the top, one by
/// one; index k holds the number of (k + 1)-member chains.
inline std::vector<BigInt> oracle_count_chains(const Lattice& lat) {
  const auto below = detail::invert_relation(lat);
  std::vector<BigInt> counts;
  std::vector<std::size_t> stack{lat.top_index()};
  auto visit = [&](const std::vector<std::size_t>& chain) {
    if (counts.size() < chain.size()) counts.resize(chain.size(), 0);
    counts[chain.size() - 1] += 1;
  };
  detail::list_chains_down(lat, below, stack, visit);
  return counts;
}

/// Every chain of lattice nodes ending at the top, listed bottom-up.
inline std::vector<Chain> oracle_list_chains(const Lattice& lat) {
  const auto below = detail::invert_relation(lat);
  std::vector<Chain> out;
  std::vector<std::size_t> stack{lat.top_index()};
  auto visit = [&](const std::vector<std::size_t>& chain) {
    Chain c;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      c.members.push_back(lat.node(*it));
    }
    out.push_back(std::move(c));
  };
  detail::list_chains_down(lat, below, stack, visit);
  return out;
}

/// Every strictly ascending chain of sets from the family that ends at the
/// largest set, listed bottom-up. Containment is plain set inclusion.
inline std::vector<std::vector<ElementSet>> oracle_list_set_chains(
    const SubgroupFamily& family, bool include_trivial) {
  std::vector<const ElementSet*> sets;
  const ElementSet* whole = nullptr;
  for (const auto& s : family) {
    if (!include_trivial && s.size() == 1) continue;
    sets.push_back(&s);
    if (!whole || s.size() > whole->size()) whole = &s;
  }
  std::vector<std::vector<ElementSet>> out;
  if (!whole) return out;
  auto proper_subset = [](const ElementSet& a, const ElementSet& b) {
    return a.size() < b.size() &&
           std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<const ElementSet*> stack{whole};
  auto rec = [&](auto& self) -> void {
    std::vector<ElementSet> chain;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      chain.push_back(**it);
    }
    out.push_back(std::move(chain));
    for (const auto* s : sets) {
      if (proper_subset(*s, *stack.back())) {
        stack.push_back(s);
        self(self);
        stack.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

/// Per-length counts of the chains from oracle_list_set_chains.
inline std::vector<BigInt> oracle_count_set_chains(const SubgroupFamily& family,
                                                   bool include_trivial) {
  std::vector<BigInt> counts;
  for (const auto& c : oracle_list_set_chains(family, include_trivial)) {
    if (counts.size() < c.size()) counts.resize(c.size(), 0);
    counts[c.size() - 1] += 1;
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Fuzzy subgroups

/// Exact membership grades, indexed like all_elements().
class FuzzyMap {
 public:
  explicit FuzzyMap(const GroupParams& p, Rational fill = 1)
      : params_(p), grades_(static_cast<std::size_t>(p.order()), fill) {
    check_range(fill);
  }

  const GroupParams& params() const noexcept { return params_; }

  const Rational& operator()(const Element& x) const {
    return grades_.at(element_index(x));
  }

  void set(const Element& x, Rational grade) {
    check_range(grade);
    grades_.at(element_index(x)) = std::move(grade);
  }

  const std::vector<Rational>& grades() const noexcept { return grades_; }

 private:
  static void check_range(const Rational& g) {
    if (g < 0 || g > 1) throw std::invalid_argument("grade outside [0, 1]");
  }

  GroupParams params_;
  std::vector<Rational> grades_;
};

/// Grade levels[i] on the members of chain[i] not already in chain[i - 1].
/// levels must be strictly decreasing and inside [0, 1].
inline FuzzyMap chain_sets_to_representative(
    const GroupParams& p, const std::vector<ElementSet>& chain,
    const std::vector<Rational>& levels) {
  if (chain.empty() || levels.size() != chain.size()) {
    throw std::invalid_argument("need one level per chain member");
  }
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!(levels[i] < levels[i - 1])) {
      throw std::invalid_argument("levels must be strictly decreasing");
    }
  }
  if (chain.back().size() != static_cast<std::size_t>(p.order())) {
    throw std::invalid_argument("chain must end at the whole group");
  }
  FuzzyMap mu(p, levels.back());
  for (std::size_t i = chain.size(); i-- > 0;) {
    for (const auto& x : chain[i]) mu.set(x, levels[i]);
  }
  return mu;
}

/// The default levels 1, 1/2, ..., 1/k.
inline std::vector<Rational> harmonic_levels(std::size_t k) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i <= k; ++i) out.emplace_back(1, i);
  return out;
}

inline void require_chain(const GroupParams& p, const Chain& c) {
  if (c.members.empty() || !is_whole_group(c.members.back())) {
    throw std::invalid_argument("chain must end at the whole group");
  }
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    require_valid(p, c.members[i]);
    if (i > 0 && (c.members[i] == c.members[i - 1] ||
                  !subgroup_leq(p, c.members[i - 1], c.members[i]))) {
      throw std::invalid_argument("chain is not strictly ascending");
    }
  }
}

inline FuzzyMap chain_to_representative(const GroupParams& p, const Chain& c,
                                        const std::vector<Rational>& levels) {
  require_chain(p, c);
  std::vector<ElementSet> sets;
  for (const auto& d : c.members) sets.push_back(subgroup_elements(p, d));
  return chain_sets_to_representative(p, sets, levels);
}

inline FuzzyMap chain_to_representative(const GroupParams& p, const Chain& c) {
  return chain_to_representative(p, c, harmonic_levels(c.members.size()));
}

/// First pair violating mu(xy) >= min(mu(x), mu(y)), or (x, x^-1) violating
/// mu(x^-1) >= mu(x). Empty when mu is a fuzzy subgroup.
inline std::optional<std::pair<Element, Element>> fuzzy_violation(
    const FuzzyMap& mu) {
  const auto& p = mu.params();
  const auto elements = all_elements(p);
  for (const auto& x : elements) {
    const Element xi = inverse(p, x);
    if (mu(xi) < mu(x)) return std::make_pair(x, xi);
    for (const auto& y : elements) {
      if (mu(multiply(p, x, y)) < std::min(mu(x), mu(y))) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

inline bool is_fuzzy_subgroup(const FuzzyMap& mu) {
  return !fuzzy_violation(mu).has_value();
}

/// First pair with mu(xy) != mu(yx).
inline std::optional<std::pair<Element, Element>> normality_violation(
    const FuzzyMap& mu) {
  const auto& p = mu.params();
  const auto elements = all_elements(p);
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      if (mu(multiply(p, x, y)) != mu(multiply(p, y, x))) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

inline bool is_normal_fuzzy(const FuzzyMap& mu) {
  return !normality_violation(mu).has_value();
}

/// mu ~ nu iff mu(x) > mu(y) <=> nu(x) > nu(y) for every pair.
inline bool equivalent(const FuzzyMap& mu, const FuzzyMap& nu) {
  if (!(mu.params() == nu.params())) {
    throw std::invalid_argument("fuzzy maps over different groups");
  }
  const auto elements = all_elements(mu.params());
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      if ((mu(x) > mu(y)) != (nu(x) > nu(y))) return false;
    }
  }
  return true;
}

/// Dense rank of every grade (0 for the largest). Two maps are equivalent
/// exactly when their signatures coincide.
inline std::vector<std::size_t> rank_signature(const FuzzyMap& mu) {
  std::set<Rational, std::greater<>> distinct(mu.grades().begin(),
                                              mu.grades().end());
  std::map<Rational, std::size_t, std::greater<>> rank;
  std::size_t r = 0;
  for (const auto& g : distinct) rank.emplace(g, r++);
  std::vector<std::size_t> out;
  out.reserve(mu.grades().size());
  for (const auto& g : mu.grades()) out.push_back(rank.at(g));
  return out;
}

/// Number of ~-classes of fuzzy subgroups, computed from first principles.
///
/// Lists every chain of oracle subgroups ending at the whole group (the
/// trivial subgroup allowed), materializes a representative for each, and
/// throws std::logic_error unless every representative is a fuzzy subgroup,
/// representatives of distinct chains are pairwise inequivalent, and a
/// re-leveled representative stays equivalent. Returns the number of chains.
inline BigInt oracle_count_equivalence_classes(
    const GroupParams& p, std::int64_t limit = default_oracle_limit) {
  const auto family = oracle_all_subgroups(p, limit);
  const auto chains = oracle_list_set_chains(family, true);
  std::set<std::vector<std::size_t>> signatures;
  std::vector<FuzzyMap> reps;
  const bool all_pairs = p.n() <= 2;
  for (const auto& chain : chains) {
    const auto k = chain.size();
    FuzzyMap mu = chain_sets_to_representative(p, chain, harmonic_levels(k));
    if (!is_fuzzy_subgroup(mu)) {
      throw std::logic_error("chain representative violates FG1/FG2");
    }
    std::vector<Rational> shifted;
    for (std::size_t i = 0; i < k; ++i) {
      shifted.emplace_back(static_cast<long long>(k - i),
                           static_cast<long long>(k + 1));
    }
    const FuzzyMap releveled = chain_sets_to_representative(p, chain, shifted);
    if (rank_signature(mu) != rank_signature(releveled) ||
        (all_pairs && !equivalent(mu, releveled))) {
      throw std::logic_error("re-leveled representative is not equivalent");
    }
    if (!signatures.insert(rank_signature(mu)).second) {
      throw std::logic_error("two chains give equivalent representatives");
    }
    if (all_pairs) reps.push_back(std::move(mu));
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (equivalent(reps[i], reps[j])) {
        throw std::logic_error("two chains give equivalent representatives");
      }
    }
  }
  return BigInt(chains.size());
}

}  // namespace u6n

#endif  // U6N_FUZZY_ORACLE_HPP
