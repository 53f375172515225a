#ifndef U6N_TOOLS_APP_HPP
#define U6N_TOOLS_APP_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "u6n/group.hpp"
#include "u6n/lattice.hpp"

namespace u6n::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 1;
inline constexpr int exit_verification_failed = 2;

/// Environment variable naming the default cache file.
inline constexpr const char* cache_env_var = "U6N_CACHE";

enum class Command { subgroups, normal, chains, count, lattice, verify, batch };
enum class Relation { tarnauceanu, murali };
enum class Format { table, json, csv };

struct NRange {
  std::int64_t first = 1;
  std::int64_t last = 1;
};

struct RunConfig {
  Command command = Command::count;
  NRange range;
  LatticeMode mode = LatticeMode::all;
  Relation relation = Relation::tarnauceanu;
  Format format = Format::table;
  std::optional<std::string> dot_path;
  std::optional<std::string> cache_path;
  std::int64_t oracle_limit = default_oracle_limit;
  unsigned threads = 1;
};

/// Parses "A..B" (inclusive) or a single "A".
NRange parse_range(const std::string& text);

/// Executes one command. Output data goes to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and runs it.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace u6n::cli

#endif  // U6N_TOOLS_APP_HPP
