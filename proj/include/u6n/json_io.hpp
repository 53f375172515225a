#ifndef U6N_JSON_IO_HPP
#define U6N_JSON_IO_HPP

// JSON views of lattices and chain counts. Counts are written as decimal
// strings so that consumers limited to 64-bit integers keep every digit.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "u6n/chain_dp.hpp"
#include "u6n/lattice.hpp"

namespace u6n {

inline nlohmann::json lattice_to_json(const Lattice& lat) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    nodes.push_back({{"id", i},
                     {"desc", to_string(lat.node(i))},
                     {"order", lat.order_of(i)}});
  }
  nlohmann::json strict = nlohmann::json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    for (auto j : lat.above(i)) strict.push_back({i, j});
  }
  nlohmann::json hasse = nlohmann::json::array();
  for (const auto& [i, j] : hasse_edges(lat)) hasse.push_back({i, j});
  return {{"n", lat.params().n()},
          {"mode", to_string(lat.mode())},
          {"nodes", std::move(nodes)},
          {"edges_strict", std::move(strict)},
          {"edges_hasse", std::move(hasse)}};
}

inline nlohmann::json counts_to_json(std::int64_t n, LatticeMode mode,
                                     const ChainCounts& c) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& x : c.per_length) per.push_back(x.str());
  return {{"n", n},
          {"mode", to_string(mode)},
          {"per_length", std::move(per)},
          {"total", c.total.str()},
          {"fuzzy_count", c.fuzzy_count.str()},
          {"mm_count", c.mm_count.str()}};
}

namespace detail {

inline BigInt parse_decimal(const nlohmann::json& j) {
  const auto s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a nonnegative decimal: '" + s + "'");
  }
  return BigInt(s);
}

}  // namespace detail

/// Inverse of counts_to_json; rejects records whose derived fields disagree
/// with per_length.
inline ChainCounts counts_from_json(const nlohmann::json& j) {
  ChainCounts c;
  for (const auto& x : j.at("per_length")) {
    c.per_length.push_back(detail::parse_decimal(x));
  }
  c.total = detail::parse_decimal(j.at("total"));
  c.fuzzy_count = detail::parse_decimal(j.at("fuzzy_count"));
  c.mm_count = detail::parse_decimal(j.at("mm_count"));
  BigInt sum = 0;
  for (const auto& x : c.per_length) sum += x;
  if (c.per_length.empty() || sum != c.total ||
      c.fuzzy_count != 2 * c.total || c.mm_count != 2 * c.fuzzy_count - 1) {
    throw std::invalid_argument("inconsistent chain count record");
  }
  return c;
}

}  // namespace u6n

#endif  // U6N_JSON_IO_HPP
