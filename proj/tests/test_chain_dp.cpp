#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "u6n/chain_dp.hpp"
#include "u6n/divisors.hpp"
#include "u6n/fuzzy_oracle.hpp"
#include "u6n/json_io.hpp"

using namespace u6n;
using D = SubgroupDescriptor;

namespace {

std::vector<BigInt> big(std::initializer_list<int> xs) {
  std::vector<BigInt> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("chain table levels", "[chain_dp]") {
  const auto lat = build_lattice(GroupParams(1), LatticeMode::all);
  const auto table = compute_chain_table(lat);
  REQUIRE(table.levels.size() == 2);
  for (std::size_t j = 0; j < lat.size(); ++j) {
    CHECK(table.levels[0][j] == (j == lat.top_index() ? 1 : 0));
    CHECK(table.levels[1][j] == (j == lat.top_index() ? 0 : 1));
  }

  const Lattice single(GroupParams(1), LatticeMode::all, {D::full(1)}, {{}});
  const auto t1 = compute_chain_table(single);
  REQUIRE(t1.levels.size() == 1);
  CHECK(t1.levels[0] == big({1}));
  CHECK(chain_counts(t1).fuzzy_count == 2);
  CHECK(murali_makamba_count(chain_counts(t1)) == 3);
}

TEST_CASE("chain counts for U_6 and U_12", "[chain_dp]") {
  const auto c1 = count_fuzzy_subgroups(GroupParams(1));
  CHECK(c1.per_length == big({1, 4}));
  CHECK(c1.total == 5);
  CHECK(c1.fuzzy_count == 10);
  CHECK(c1.mm_count == 19);

  const auto n1 = count_normal_fuzzy_subgroups(GroupParams(1));
  CHECK(n1.per_length == big({1, 1}));
  CHECK(n1.fuzzy_count == 4);
  CHECK(murali_makamba_count(n1) == 7);

  const auto c2 = count_fuzzy_subgroups(GroupParams(2));
  CHECK(c2.per_length == big({1, 6, 5}));
  CHECK(c2.fuzzy_count == 24);

  const auto n2 = count_normal_fuzzy_subgroups(GroupParams(2));
  CHECK(n2.per_length == big({1, 3, 2}));
  CHECK(n2.total == 6);
  CHECK(n2.fuzzy_count == 12);

  // Frozen values above were read off the brute-force listings.
  CHECK(oracle_count_chains(build_lattice(GroupParams(1), LatticeMode::all)) ==
        big({1, 4}));
  CHECK(oracle_count_chains(build_lattice(GroupParams(2), LatticeMode::all)) ==
        big({1, 6, 5}));
  CHECK(oracle_count_chains(build_lattice(GroupParams(2),
                                          LatticeMode::normal)) ==
        big({1, 3, 2}));
}

TEST_CASE("DP agrees with exhaustive chain listing", "[chain_dp][property]") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const GroupParams p(n);
    for (auto mode : {LatticeMode::all, LatticeMode::normal}) {
      const auto lat = build_lattice(p, mode);
      const auto table = compute_chain_table(lat);
      const auto counts = chain_counts(table);
      REQUIRE(counts.per_length == oracle_count_chains(lat));
      REQUIRE(table.levels.size() <= height(lat));
      REQUIRE(table.levels.size() == height(lat));
      REQUIRE(counts.per_length.front() == 1);
      REQUIRE(counts.per_length.back() > 0);
      for (std::size_t k = 1; k < table.levels.size(); ++k) {
        REQUIRE(table.levels[k][lat.top_index()] == 0);
      }
      REQUIRE(counts.fuzzy_count % 2 == 0);
      REQUIRE(counts.mm_count % 2 == 1);
      REQUIRE(counts.mm_count == 2 * counts.fuzzy_count - 1);
      REQUIRE(counts.fuzzy_count >= 2);
    }
    REQUIRE(count_normal_fuzzy_subgroups(p).fuzzy_count <=
            count_fuzzy_subgroups(p).fuzzy_count);
  }
}

TEST_CASE("counts with the trivial subgroup allowed are doubled",
          "[chain_dp][property]") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    const GroupParams p(n);
    BigInt all_chains = 0;
    for (const auto& c : oracle_count_set_chains(oracle_all_subgroups(p), true)) {
      all_chains += c;
    }
    REQUIRE(all_chains == count_fuzzy_subgroups(p).fuzzy_count);
  }
}

TEST_CASE("counts depend only on the factorization shape of 2n",
          "[chain_dp][property]") {
  std::map<std::vector<int>, std::pair<ChainCounts, ChainCounts>> by_shape;
  std::size_t repeated = 0;
  for (std::int64_t n = 1; n <= 12; ++n) {
    const GroupParams p(n);
    const auto shape = Factorization(p.two_n()).shape();
    auto counts = std::make_pair(count_fuzzy_subgroups(p),
                                 count_normal_fuzzy_subgroups(p));
    const auto [it, fresh] = by_shape.emplace(shape, counts);
    if (!fresh) {
      ++repeated;
      REQUIRE(it->second.first == counts.first);
      REQUIRE(it->second.second == counts.second);
    }
  }
  CHECK(repeated >= 2);  // n = 5, 7, 11 share a shape
  CHECK(count_fuzzy_subgroups(GroupParams(5)) ==
        count_fuzzy_subgroups(GroupParams(7)));
}

TEST_CASE("parallel levels give identical tables", "[chain_dp]") {
  for (std::int64_t n : {12, 60, 2520}) {
    const auto lat = build_lattice(GroupParams(n), LatticeMode::all);
    const auto serial = compute_chain_table(lat);
    const auto parallel = compute_chain_table(lat, DpOptions{4});
    REQUIRE(serial.levels == parallel.levels);
  }
}

TEST_CASE("chain counts JSON", "[chain_dp]") {
  const auto c = count_fuzzy_subgroups(GroupParams(2));
  const auto j = counts_to_json(2, LatticeMode::all, c);
  CHECK(j.dump() ==
        R"({"fuzzy_count":"24","mm_count":"47","mode":"all","n":2,)"
        R"("per_length":["1","6","5"],"total":"12"})");
  CHECK(counts_from_json(j) == c);

  auto bad = j;
  bad["total"] = "13";
  CHECK_THROWS_AS(counts_from_json(bad), std::invalid_argument);
  bad = j;
  bad["per_length"][0] = "-1";
  CHECK_THROWS_AS(counts_from_json(bad), std::invalid_argument);
}

TEST_CASE("counts round-trip through JSON", "[chain_dp][property]") {
  for (std::int64_t n : {1, 3, 30, 360, 5040}) {
    for (auto mode : {LatticeMode::all, LatticeMode::normal}) {
      const auto c = count_chains(GroupParams(n), mode);
      REQUIRE(counts_from_json(counts_to_json(n, mode, c)) == c);
    }
  }
}
