#ifndef U6N_VERIFY_HPP
#define U6N_VERIFY_HPP

// Cross-checks of every closed-form result against the brute-force oracle,
// one group at a time. Each check records the first counterexample it finds.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "u6n/chain_dp.hpp"
#include "u6n/fuzzy_oracle.hpp"
#include "u6n/group.hpp"
#include "u6n/lattice.hpp"
#include "u6n/subgroup.hpp"

namespace u6n {

struct CheckResult {
  std::int64_t n = 0;
  std::string name;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  std::string to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << "n=" << c.n << "  " << (c.passed ? "PASS" : "FAIL") << "  "
         << c.name;
      if (!c.passed) os << "  counterexample: " << c.counterexample;
      os << "\n";
    }
    std::size_t failed = 0;
    for (const auto& c : checks) failed += c.passed ? 0 : 1;
    os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j = {{"n", c.n}, {"check", c.name}, {"passed", c.passed}};
      if (!c.passed) j["counterexample"] = c.counterexample;
      arr.push_back(std::move(j));
    }
    return {{"passed", passed()}, {"checks", std::move(arr)}};
  }
};

inline std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    out += to_string(x);
    first = false;
  }
  return out + "}";
}

namespace detail {

inline std::string format_counts(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

inline std::optional<std::string> compare_families(
    const GroupParams& p, const std::vector<SubgroupDescriptor>& ds,
    const SubgroupFamily& oracle) {
  SubgroupFamily closed_form;
  for (const auto& d : ds) {
    auto s = subgroup_elements(p, d);
    if (!oracle.contains(s)) {
      return to_string(d) + " = " + to_string(s) + " not found by the oracle";
    }
    if (!closed_form.insert(std::move(s)).second) {
      return to_string(d) + " duplicates another descriptor";
    }
  }
  for (const auto& s : oracle) {
    if (!closed_form.contains(s)) {
      return "oracle subgroup " + to_string(s) + " has no descriptor";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_group_laws(const GroupParams& p) {
  const auto elems = all_elements(p);
  const Element e = identity(p);
  const Element a{1 % p.two_n(), 0};
  const Element b{0, 1};
  if (power(p, b, 3) != e) return "b^3 != e";
  if (power(p, a, static_cast<std::uint64_t>(p.two_n())) != e) {
    return "a^{2n} != e";
  }
  if (multiply(p, multiply(p, b, a), b) != a) return "bab != a";
  for (const auto& x : elems) {
    if (multiply(p, e, x) != x || multiply(p, x, e) != x) {
      return "identity law fails at " + to_string(x);
    }
    if (multiply(p, x, inverse(p, x)) != e) {
      return "inverse law fails at " + to_string(x);
    }
    Element iterated = e;
    for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(p.order()); ++k) {
      if (power(p, x, k) != iterated) {
        return "power(" + to_string(x) + ", " + std::to_string(k) +
               ") disagrees with repeated multiplication";
      }
      iterated = multiply(p, iterated, x);
    }
  }
  if (p.n() <= 4) {
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        const Element xy = multiply(p, x, y);
        for (const auto& z : elems) {
          if (multiply(p, xy, z) != multiply(p, x, multiply(p, y, z))) {
            return "associativity fails at (" + to_string(x) + ", " +
                   to_string(y) + ", " + to_string(z) + ")";
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_membership_and_order(
    const GroupParams& p, const std::vector<SubgroupDescriptor>& ds) {
  const auto elems = all_elements(p);
  std::vector<ElementSet> sets;
  for (const auto& d : ds) {
    auto s = subgroup_elements(p, d);
    if (static_cast<std::int64_t>(s.size()) != subgroup_order(p, d)) {
      return "order mismatch for " + to_string(d);
    }
    if (!is_closed_subgroup(p, s)) return to_string(d) + " is not closed";
    for (const auto& x : elems) {
      if (contains_element(p, d, x) != s.contains(x)) {
        return "membership of " + to_string(x) + " in " + to_string(d);
      }
    }
    sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < ds.size(); ++j) {
      const bool incl = std::includes(sets[j].begin(), sets[j].end(),
                                      sets[i].begin(), sets[i].end());
      if (subgroup_leq(p, ds[i], ds[j]) != incl) {
        return "containment " + to_string(ds[i]) + " <= " + to_string(ds[j]);
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_lattice_shape(const Lattice& lat) {
  const auto& p = lat.params();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.order_of(i) <= 1) return "trivial subgroup in lattice";
    if (i != lat.top_index() && !lat.precedes(i, lat.top_index())) {
      return to_string(lat.node(i)) + " not below the top";
    }
    if (lat.precedes(i, i)) return to_string(lat.node(i)) + " below itself";
    for (auto j : lat.above(i)) {
      if (lat.precedes(j, i)) return "antisymmetry fails";
      for (auto k : lat.above(j)) {
        if (!lat.precedes(i, k)) {
          return "transitivity fails at " + to_string(lat.node(i)) + " < " +
                 to_string(lat.node(j)) + " < " + to_string(lat.node(k));
        }
      }
    }
  }
  if (lat.mode() == LatticeMode::normal) {
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto hi = subgroup_elements(p, lat.node(i));
      for (auto j : lat.above(i)) {
        if (!oracle_is_normal_in(p, hi, subgroup_elements(p, lat.node(j)))) {
          return to_string(lat.node(i)) + " not normal in " +
                 to_string(lat.node(j));
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_fuzzy(const GroupParams& p,
                                              const ChainCounts& all_counts) {
  for (auto mode : {LatticeMode::all, LatticeMode::normal}) {
    const auto lat = build_lattice(p, mode);
    for (const auto& c : oracle_list_chains(lat)) {
      const auto mu = chain_to_representative(p, c);
      if (auto v = fuzzy_violation(mu)) {
        return "FG1/FG2 fails for a chain representative at (" +
               to_string(v->first) + ", " + to_string(v->second) + ")";
      }
      if (mode == LatticeMode::normal) {
        if (auto v = normality_violation(mu)) {
          return "normal chain representative has mu(xy) != mu(yx) at (" +
                 to_string(v->first) + ", " + to_string(v->second) + ")";
        }
      }
    }
  }
  try {
    const auto classes = oracle_count_equivalence_classes(p);
    if (classes != all_counts.fuzzy_count) {
      return "equivalence classes " + classes.str() + " vs fuzzy_count " +
             all_counts.fuzzy_count.str();
    }
  } catch (const std::logic_error& e) {
    return e.what();
  }
  return std::nullopt;
}

}  // namespace detail

struct VerifyOptions {
  std::int64_t n_min = 1;
  std::int64_t n_max = 12;
  std::int64_t oracle_limit = default_oracle_limit;
  std::int64_t fuzzy_n_max = 4;  // materializing representatives is costly
  std::int64_t volf_n_max = 6;
};

inline VerificationReport verify_range(const VerifyOptions& opt) {
  VerificationReport report;
  for (std::int64_t n = opt.n_min; n <= opt.n_max; ++n) {
    const GroupParams p(n);
    if (p.order() > opt.oracle_limit) {
      throw OracleLimitExceeded(p.order(), opt.oracle_limit);
    }
    auto record = [&](std::string name, std::optional<std::string> failure) {
      report.checks.push_back({n, std::move(name), !failure.has_value(),
                               failure.value_or("")});
    };

    record("group_laws", detail::check_group_laws(p));

    const auto subgroups = enumerate_subgroups(p, opt.oracle_limit);
    const auto normals = enumerate_normal_subgroups(p, opt.oracle_limit);
    const auto oracle_all = oracle_all_subgroups(p, opt.oracle_limit);
    SubgroupFamily oracle_normal;
    for (const auto& h : oracle_all) {
      if (oracle_is_normal(p, h)) oracle_normal.insert(h);
    }
    record("subgroups_match_oracle",
           detail::compare_families(p, subgroups, oracle_all));
    record("normal_subgroups_match_oracle",
           detail::compare_families(p, normals, oracle_normal));
    record("membership_and_containment",
           detail::check_membership_and_order(p, subgroups));

    ChainCounts all_counts;
    for (auto mode : {LatticeMode::all, LatticeMode::normal}) {
      const auto lat = build_lattice(p, mode, opt.oracle_limit);
      const std::string suffix = "_" + to_string(mode);
      record("lattice_order" + suffix, detail::check_lattice_shape(lat));

      const auto counts = chain_counts(compute_chain_table(lat));
      if (mode == LatticeMode::all) all_counts = counts;
      const auto dfs = oracle_count_set_chains(
          mode == LatticeMode::all ? oracle_all : oracle_normal, false);
      std::optional<std::string> dp_failure;
      if (counts.per_length != dfs) {
        dp_failure = "DP " + detail::format_counts(counts.per_length) +
                     " vs DFS " + detail::format_counts(dfs);
      } else if (oracle_count_chains(lat) != dfs) {
        dp_failure = "lattice DFS disagrees with set DFS";
      }
      record("dp_matches_dfs" + suffix, dp_failure);

      std::optional<std::string> mm_failure;
      if (counts.mm_count != 2 * counts.fuzzy_count - 1 ||
          murali_makamba_count(counts) != counts.mm_count ||
          counts.fuzzy_count != 2 * counts.total) {
        mm_failure = "derived counts inconsistent";
      }
      record("derived_counts" + suffix, mm_failure);
    }

    if (n <= opt.volf_n_max) {
      BigInt all_chains = 0;
      for (const auto& c : oracle_count_set_chains(oracle_all, true)) {
        all_chains += c;
      }
      std::optional<std::string> failure;
      if (all_chains != all_counts.fuzzy_count) {
        failure = "chains with trivial member allowed: " + all_chains.str() +
                  ", fuzzy_count " + all_counts.fuzzy_count.str();
      }
      record("factor_two_correspondence", failure);
    }
    if (n <= opt.fuzzy_n_max) {
      record("fuzzy_end_to_end", detail::check_fuzzy(p, all_counts));
    }
  }
  return report;
}

}  // namespace u6n

#endif  // U6N_VERIFY_HPP
