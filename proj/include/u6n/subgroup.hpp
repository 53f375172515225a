#ifndef U6N_SUBGROUP_HPP
#define U6N_SUBGROUP_HPP

// Symbolic subgroups of U_6n. Every subgroup is one of
//   Cyclic(t)     = < a^t >
//   Full(t)       = < a^t, b >
//   Twisted(t, s) = < a^t b^s >,  s in {1, 2}
// for a divisor t of 2n, where Twisted needs t odd or 3 | 2n/t. Below that
// condition < a^t b^s > already equals Full(t).

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "u6n/divisors.hpp"
#include "u6n/group.hpp"

namespace u6n {

enum class SubgroupKind { Cyclic = 0, Full = 1, Twisted = 2 };

struct SubgroupDescriptor {
  SubgroupKind kind = SubgroupKind::Cyclic;
  std::int64_t t = 1;
  int s = 0;  // b-exponent of the generator; only nonzero for Twisted

  static SubgroupDescriptor cyclic(std::int64_t t) {
    return {SubgroupKind::Cyclic, t, 0};
  }
  static SubgroupDescriptor full(std::int64_t t) {
    return {SubgroupKind::Full, t, 0};
  }
  static SubgroupDescriptor twisted(std::int64_t t, int s) {
    return {SubgroupKind::Twisted, t, s};
  }

  // Ordering by (kind, t, s) is the global node order everywhere.
  friend auto operator<=>(const SubgroupDescriptor&,
                          const SubgroupDescriptor&) = default;
};

using ElementSet = std::set<Element>;

inline bool twisted_allowed(const GroupParams& p, std::int64_t t) {
  return t % 2 == 1 || (p.two_n() / t) % 3 == 0;
}

inline bool is_valid(const GroupParams& p, const SubgroupDescriptor& d) {
  if (d.t < 1 || p.two_n() % d.t != 0) return false;
  switch (d.kind) {
    case SubgroupKind::Cyclic:
    case SubgroupKind::Full:
      return d.s == 0;
    case SubgroupKind::Twisted:
      return (d.s == 1 || d.s == 2) && twisted_allowed(p, d.t);
  }
  return false;
}

inline bool is_trivial(const GroupParams& p, const SubgroupDescriptor& d) {
  return d.kind == SubgroupKind::Cyclic && d.t == p.two_n();
}

inline bool is_whole_group(const SubgroupDescriptor& d) {
  return d.kind == SubgroupKind::Full && d.t == 1;
}

inline std::int64_t subgroup_order(const GroupParams& p,
                                   const SubgroupDescriptor& d) {
  const std::int64_t cyclic_part = p.two_n() / d.t;
  return d.kind == SubgroupKind::Full ? 3 * cyclic_part : cyclic_part;
}

/// Closed-form membership test; no element sets are built.
inline bool contains_element([[maybe_unused]] const GroupParams& p,
                             const SubgroupDescriptor& d,
                             const Element& x) {
  if (x.a_exp % d.t != 0) return false;
  const std::int64_t k = x.a_exp / d.t;
  switch (d.kind) {
    case SubgroupKind::Cyclic:
      return x.b_exp == 0;
    case SubgroupKind::Full:
      return true;
    case SubgroupKind::Twisted:
      // (a^t b^s)^k is a^{tk} b^{s (k mod 2)} for odd t and a^{tk} b^{sk}
      // for even t; 2n/t is a multiple of 2 (resp. 3) so k mod 2 (resp. 3)
      // is well defined on the residue a-exponent.
      if (d.t % 2 == 1) return x.b_exp == (d.s * static_cast<int>(k % 2)) % 3;
      return x.b_exp == (d.s * static_cast<int>(k % 3)) % 3;
  }
  return false;
}

inline ElementSet subgroup_elements(const GroupParams& p,
                                    const SubgroupDescriptor& d) {
  ElementSet out;
  const std::int64_t steps = p.two_n() / d.t;
  for (std::int64_t k = 1; k <= steps; ++k) {
    const std::int64_t u = (d.t * k) % p.two_n();
    switch (d.kind) {
      case SubgroupKind::Cyclic:
        out.insert(Element{u, 0});
        break;
      case SubgroupKind::Full:
        for (int v = 0; v < 3; ++v) out.insert(Element{u, v});
        break;
      case SubgroupKind::Twisted: {
        const int v = d.t % 2 == 1 ? (d.s * static_cast<int>(k % 2)) % 3
                                   : (d.s * static_cast<int>(k % 3)) % 3;
        out.insert(Element{u, v});
        break;
      }
    }
  }
  return out;
}

/// Containment by membership of the generators of d1 in d2.
inline bool subgroup_leq(const GroupParams& p, const SubgroupDescriptor& d1,
                         const SubgroupDescriptor& d2) {
  const Element a_gen = make_element(p, d1.t, 0);
  switch (d1.kind) {
    case SubgroupKind::Cyclic:
      return contains_element(p, d2, a_gen);
    case SubgroupKind::Full:
      return contains_element(p, d2, a_gen) &&
             contains_element(p, d2, Element{0, 1});
    case SubgroupKind::Twisted:
      return contains_element(p, d2, make_element(p, d1.t, d1.s));
  }
  return false;
}

/// Throws std::logic_error if two descriptors share an element set. Only
/// feasible when the group is small enough to materialize.
inline void assert_exclusive(const GroupParams& p,
                             const std::vector<SubgroupDescriptor>& ds) {
  std::set<ElementSet> seen;
  for (const auto& d : ds) {
    if (!seen.insert(subgroup_elements(p, d)).second) {
      throw std::logic_error("duplicate subgroup element set in enumeration");
    }
  }
}

/// All subgroups, trivial one (Cyclic(2n)) included, ordered by (kind, t, s).
inline std::vector<SubgroupDescriptor> enumerate_subgroups(
    const GroupParams& p, std::int64_t oracle_limit = default_oracle_limit) {
  const auto ts = divisors(p.two_n());
  std::vector<SubgroupDescriptor> out;
  for (auto t : ts) out.push_back(SubgroupDescriptor::cyclic(t));
  for (auto t : ts) out.push_back(SubgroupDescriptor::full(t));
  for (auto t : ts) {
    if (!twisted_allowed(p, t)) continue;
    out.push_back(SubgroupDescriptor::twisted(t, 1));
    out.push_back(SubgroupDescriptor::twisted(t, 2));
  }
  if (p.order() <= oracle_limit) assert_exclusive(p, out);
  return out;
}

inline std::vector<SubgroupDescriptor> enumerate_normal_subgroups(
    const GroupParams& p, std::int64_t oracle_limit = default_oracle_limit) {
  const auto ts = divisors(p.two_n());
  std::vector<SubgroupDescriptor> out;
  for (auto t : ts) {
    if (t % 2 == 0) out.push_back(SubgroupDescriptor::cyclic(t));
  }
  for (auto t : ts) out.push_back(SubgroupDescriptor::full(t));
  if (p.order() <= oracle_limit) assert_exclusive(p, out);
  return out;
}

inline std::string to_string(const SubgroupDescriptor& d) {
  switch (d.kind) {
    case SubgroupKind::Cyclic:
      return "C(" + std::to_string(d.t) + ")";
    case SubgroupKind::Full:
      return "F(" + std::to_string(d.t) + ")";
    case SubgroupKind::Twisted:
      return "T(" + std::to_string(d.t) + "," + std::to_string(d.s) + ")";
  }
  return "?";
}

/// Generator notation, e.g. "<a^2, b>" or "<a b^2>".
inline std::string generator_string(const GroupParams& p,
                                    const SubgroupDescriptor& d) {
  const Element a_gen = make_element(p, d.t, 0);
  switch (d.kind) {
    case SubgroupKind::Cyclic:
      return "<" + to_string(a_gen) + ">";
    case SubgroupKind::Full:
      return a_gen.a_exp == 0 ? std::string("<b>")
                              : "<" + to_string(a_gen) + ", b>";
    case SubgroupKind::Twisted:
      return "<" + to_string(make_element(p, d.t, d.s)) + ">";
  }
  return "?";
}

inline void require_valid(const GroupParams& p, const SubgroupDescriptor& d) {
  if (!is_valid(p, d)) {
    throw std::invalid_argument(to_string(d) + " is not a subgroup of U_" +
                                std::to_string(p.order()));
  }
}

/// Parses "C(t)", "F(t)" or "T(t,s)" (whitespace tolerated) and validates it
/// against the group.
inline SubgroupDescriptor parse_descriptor(const GroupParams& p,
                                           std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact += c;
  }
  auto fail = [&]() -> SubgroupDescriptor {
    throw std::invalid_argument("cannot parse subgroup descriptor '" +
                                std::string(text) + "'");
  };
  if (compact.size() < 4 || compact[1] != '(' || compact.back() != ')') {
    return fail();
  }
  const std::string inner = compact.substr(2, compact.size() - 3);
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || s.size() > 18 ||
        s.find_first_not_of("0123456789") != std::string::npos) {
      fail();
    }
    return std::stoll(s);
  };
  SubgroupDescriptor d;
  switch (compact[0]) {
    case 'C':
      d = SubgroupDescriptor::cyclic(parse_int(inner));
      break;
    case 'F':
      d = SubgroupDescriptor::full(parse_int(inner));
      break;
    case 'T': {
      const auto comma = inner.find(',');
      if (comma == std::string::npos) return fail();
      d = SubgroupDescriptor::twisted(
          parse_int(inner.substr(0, comma)),
          static_cast<int>(parse_int(inner.substr(comma + 1))));
      break;
    }
    default:
      return fail();
  }
  require_valid(p, d);
  return d;
}

}  // namespace u6n

#endif  // U6N_SUBGROUP_HPP
