#ifndef U6N_CACHE_HPP
#define U6N_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "u6n/chain_dp.hpp"
#include "u6n/json_io.hpp"

namespace u6n {

/// Chain counts memoized in a single JSON file keyed by "n:mode".
///
/// Problems reading or writing the file never fail a computation: they are
/// reported on the warning stream and the cache is rebuilt from scratch.
class ResultCache {
 public:
  ResultCache(std::filesystem::path path, std::ostream& warnings)
      : path_(std::move(path)), warn_(warnings) {
    load();
  }

  static std::string key(std::int64_t n, LatticeMode mode) {
    return std::to_string(n) + ":" + to_string(mode);
  }

  std::optional<ChainCounts> lookup(std::int64_t n, LatticeMode mode) const {
    const auto it = entries_.find(key(n, mode));
    if (it == entries_.end()) return std::nullopt;
    try {
      return counts_from_json(*it);
    } catch (const std::exception& e) {
      warn_ << "warning: ignoring bad cache entry " << key(n, mode) << ": "
            << e.what() << "\n";
      return std::nullopt;
    }
  }

  void store(std::int64_t n, LatticeMode mode, const ChainCounts& counts) {
    entries_[key(n, mode)] = counts_to_json(n, mode, counts);
    save();
  }

  ChainCounts lookup_or_compute(std::int64_t n, LatticeMode mode,
                                const std::function<ChainCounts()>& compute) {
    if (auto hit = lookup(n, mode)) return *hit;
    auto fresh = compute();
    store(n, mode, fresh);
    return fresh;
  }

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  void load() {
    entries_ = nlohmann::json::object();
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec)) return;
    std::ifstream in(path_);
    if (!in) {
      warn_ << "warning: cannot read cache " << path_ << ", ignoring it\n";
      return;
    }
    try {
      auto parsed = nlohmann::json::parse(in);
      if (!parsed.is_object()) throw std::runtime_error("not a JSON object");
      entries_ = std::move(parsed);
    } catch (const std::exception& e) {
      warn_ << "warning: corrupt cache " << path_ << " (" << e.what()
            << "), rebuilding\n";
    }
  }

  void save() const {
    const auto tmp = path_.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) {
        warn_ << "warning: cannot write cache " << path_ << "\n";
        return;
      }
      out << entries_.dump(1) << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) warn_ << "warning: cannot update cache " << path_ << "\n";
  }

  std::filesystem::path path_;
  std::ostream& warn_;
  nlohmann::json entries_;
};

}  // namespace u6n

#endif  // U6N_CACHE_HPP
