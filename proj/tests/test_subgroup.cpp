#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "u6n/divisors.hpp"
#include "u6n/fuzzy_oracle.hpp"
#include "u6n/subgroup.hpp"

using namespace u6n;
using D = SubgroupDescriptor;

namespace {

std::vector<std::int64_t> trial_division_divisors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

SubgroupFamily sets_of(const GroupParams& p, const std::vector<D>& ds) {
  SubgroupFamily out;
  for (const auto& d : ds) out.insert(subgroup_elements(p, d));
  return out;
}

}  // namespace

TEST_CASE("divisors from the prime factorization", "[divisors]") {
  CHECK(divisors(2) == std::vector<std::int64_t>{1, 2});
  CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
  const auto d720 = divisors(720);
  CHECK(d720.size() == 30);
  CHECK(d720 == trial_division_divisors(720));
  for (std::int64_t m = 1; m <= 500; ++m) {
    const Factorization f(m);
    REQUIRE(divisors(f) == trial_division_divisors(m));
    REQUIRE(f.divisor_count() == static_cast<std::int64_t>(divisors(f).size()));
  }
  const Factorization big(720720);
  CHECK(big.factors() == std::vector<PrimePower>{
                             {2, 4}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}});
  CHECK(big.divisor_count() == 240);
  CHECK(Factorization(10).shape() == Factorization(14).shape());
  CHECK(Factorization(10).shape() != Factorization(6).shape());
}

TEST_CASE("enumerate_subgroups matches the closure oracle", "[subgroup]") {
  {
    const GroupParams p(1);
    const auto ds = enumerate_subgroups(p);
    CHECK(ds == std::vector<D>{D::cyclic(1), D::cyclic(2), D::full(1),
                               D::full(2), D::twisted(1, 1), D::twisted(1, 2)});
    CHECK(oracle_all_subgroups(p).size() == 6);
  }
  {
    const GroupParams p(3);
    const auto ds = enumerate_subgroups(p);
    CHECK(ds.size() == 14);
    CHECK(std::count_if(ds.begin(), ds.end(), [](const D& d) {
            return d.kind == SubgroupKind::Twisted;
          }) == 6);
    CHECK(oracle_all_subgroups(p).size() == 14);
  }
  {
    const GroupParams p(2);
    const auto ds = enumerate_subgroups(p);
    CHECK(ds.size() == 8);
    CHECK_FALSE(is_valid(p, D::twisted(2, 1)));
    CHECK_FALSE(is_valid(p, D::twisted(4, 2)));
    CHECK(oracle_all_subgroups(p).size() == 8);
  }
  for (std::int64_t n = 1; n <= 12; ++n) {
    const GroupParams p(n);
    REQUIRE(sets_of(p, enumerate_subgroups(p)) == oracle_all_subgroups(p));
  }
}

TEST_CASE("enumerate_normal_subgroups matches conjugation", "[subgroup]") {
  CHECK(enumerate_normal_subgroups(GroupParams(1)) ==
        std::vector<D>{D::cyclic(2), D::full(1), D::full(2)});
  CHECK(enumerate_normal_subgroups(GroupParams(2)) ==
        std::vector<D>{D::cyclic(2), D::cyclic(4), D::full(1), D::full(2),
                       D::full(4)});
  for (std::int64_t n = 1; n <= 12; ++n) {
    const GroupParams p(n);
    const auto normals = enumerate_normal_subgroups(p);
    const auto all = enumerate_subgroups(p);
    for (const auto& d : normals) {
      REQUIRE(std::find(all.begin(), all.end(), d) != all.end());
    }
    REQUIRE(sets_of(p, normals) == oracle_normal_subgroups(p));
  }
}

TEST_CASE("subgroup element sets", "[subgroup]") {
  const GroupParams p2(2);
  CHECK(subgroup_elements(p2, D::twisted(1, 1)) ==
        ElementSet{{1, 1}, {2, 0}, {3, 1}, {0, 0}});
  const GroupParams table_group(2);
  CHECK(subgroup_elements(p2, D::twisted(1, 1)) ==
        oracle_closure(cayley_table(table_group), ElementSet{{1, 1}}));
  for (std::int64_t n : {1, 4, 9}) {
    const GroupParams p(n);
    CHECK(subgroup_elements(p, D::cyclic(p.two_n())) == ElementSet{{0, 0}});
  }
  CHECK(subgroup_elements(GroupParams(1), D::full(2)) ==
        ElementSet{{0, 0}, {0, 1}, {0, 2}});
}

TEST_CASE("subgroup orders", "[subgroup]") {
  CHECK(subgroup_order(GroupParams(5), D::cyclic(2)) == 5);
  CHECK(subgroup_order(GroupParams(1), D::full(1)) == 6);
  CHECK(subgroup_order(GroupParams(2), D::twisted(1, 2)) == 4);
  for (std::int64_t n = 1; n <= 30; ++n) {
    const GroupParams p(n);
    for (const auto& d : enumerate_subgroups(p)) {
      REQUIRE(p.order() % subgroup_order(p, d) == 0);
      if (n <= 12) {
        REQUIRE(subgroup_order(p, d) ==
                static_cast<std::int64_t>(subgroup_elements(p, d).size()));
      }
    }
  }
}

TEST_CASE("closed-form membership", "[subgroup]") {
  const GroupParams p2(2);
  CHECK(contains_element(p2, D::twisted(1, 1), Element{2, 0}));
  CHECK_FALSE(contains_element(p2, D::twisted(1, 1), Element{2, 1}));
  CHECK_FALSE(contains_element(GroupParams(3), D::full(2), Element{3, 1}));
  for (std::int64_t n = 1; n <= 6; ++n) {
    const GroupParams p(n);
    for (const auto& d : enumerate_subgroups(p)) {
      REQUIRE(contains_element(p, d, identity(p)));
      const auto s = subgroup_elements(p, d);
      REQUIRE(is_closed_subgroup(p, s));
      for (const auto& x : all_elements(p)) {
        REQUIRE(contains_element(p, d, x) == s.contains(x));
      }
    }
  }
}

TEST_CASE("containment order", "[subgroup][property]") {
  const GroupParams p1(1);
  const GroupParams p2(2);
  CHECK(subgroup_leq(p2, D::cyclic(2), D::twisted(1, 1)));
  CHECK_FALSE(subgroup_leq(p2, D::cyclic(1), D::full(2)));
  CHECK_FALSE(subgroup_leq(p1, D::full(2), D::cyclic(1)));

  for (std::int64_t n = 1; n <= 6; ++n) {
    const GroupParams p(n);
    const auto ds = enumerate_subgroups(p);
    std::vector<ElementSet> sets;
    for (const auto& d : ds) sets.push_back(subgroup_elements(p, d));
    for (std::size_t i = 0; i < ds.size(); ++i) {
      REQUIRE(subgroup_leq(p, ds[i], ds[i]));
      REQUIRE(subgroup_leq(p, ds[i], D::full(1)));
      for (std::size_t j = 0; j < ds.size(); ++j) {
        const bool leq = subgroup_leq(p, ds[i], ds[j]);
        REQUIRE(leq == std::includes(sets[j].begin(), sets[j].end(),
                                     sets[i].begin(), sets[i].end()));
        if (i != j && leq) REQUIRE_FALSE(subgroup_leq(p, ds[j], ds[i]));
        for (std::size_t k = 0; k < ds.size(); ++k) {
          if (leq && subgroup_leq(p, ds[j], ds[k])) {
            REQUIRE(subgroup_leq(p, ds[i], ds[k]));
          }
        }
      }
    }
  }
}

TEST_CASE("subgroup count formula", "[subgroup]") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    const GroupParams p(n);
    const auto ts = divisors(p.two_n());
    std::int64_t twisted_ts = 0;
    std::int64_t even_ts = 0;
    for (auto t : ts) {
      if (t % 2 == 1 || (p.two_n() / t) % 3 == 0) ++twisted_ts;
      if (t % 2 == 0) ++even_ts;
    }
    const auto d = static_cast<std::int64_t>(ts.size());
    REQUIRE(static_cast<std::int64_t>(enumerate_subgroups(p).size()) ==
            2 * d + 2 * twisted_ts);
    REQUIRE(static_cast<std::int64_t>(enumerate_normal_subgroups(p).size()) ==
            d + even_ts);
  }
}

TEST_CASE("exclusivity is asserted under the oracle limit", "[subgroup]") {
  for (std::int64_t n = 1; n <= 50; ++n) {
    const GroupParams p(n);
    const auto ds = enumerate_subgroups(p);
    REQUIRE(sets_of(p, ds).size() == ds.size());
  }
  // Above the limit the theorem is trusted and nothing is materialized.
  CHECK(enumerate_subgroups(GroupParams(360360)).size() == 2 * 240 + 2 * 176);
}

TEST_CASE("descriptor text form", "[subgroup]") {
  const GroupParams p(3);
  CHECK(to_string(D::full(2)) == "F(2)");
  CHECK(to_string(D::cyclic(6)) == "C(6)");
  CHECK(to_string(D::twisted(3, 2)) == "T(3,2)");
  CHECK(generator_string(p, D::full(2)) == "<a^2, b>");
  CHECK(generator_string(p, D::full(6)) == "<b>");
  CHECK(generator_string(p, D::twisted(1, 2)) == "<a b^2>");
  CHECK(parse_descriptor(p, "T( 3 , 2 )") == D::twisted(3, 2));
  CHECK(parse_descriptor(p, "C(6)") == D::cyclic(6));
  CHECK_THROWS_AS(parse_descriptor(p, "F(4)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor(p, "X(1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor(p, "T(2,0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor(GroupParams(2), "T(2,1)"),
                  std::invalid_argument);
  for (const auto& d : enumerate_subgroups(p)) {
    CHECK(parse_descriptor(p, to_string(d)) == d);
  }
}
