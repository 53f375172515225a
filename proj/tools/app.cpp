#include "app.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "u6n/cache.hpp"
#include "u6n/chain_dp.hpp"
#include "u6n/json_io.hpp"
#include "u6n/lattice.hpp"
#include "u6n/subgroup.hpp"
#include "u6n/verify.hpp"

namespace u6n::cli {

namespace {

std::string group_name(const GroupParams& p) {
  return "U_" + std::to_string(p.order());
}

ChainCounts compute_counts(const RunConfig& cfg, std::int64_t n) {
  const GroupParams p(n);
  const auto lat = build_lattice(p, cfg.mode, cfg.oracle_limit);
  return chain_counts(compute_chain_table(lat, DpOptions{cfg.threads}));
}

std::optional<std::string> cache_path_for(const RunConfig& cfg) {
  if (cfg.cache_path) return cfg.cache_path;
  if (const char* env = std::getenv(cache_env_var); env && *env) {
    return std::string(env);
  }
  return std::nullopt;
}

// Counts for every n in the range, in ascending n. Cache misses are computed
// concurrently when threads > 1.
std::vector<ChainCounts> counts_for_range(const RunConfig& cfg,
                                          std::ostream& err) {
  const auto first = cfg.range.first;
  const auto count = static_cast<std::size_t>(cfg.range.last - first + 1);
  std::vector<std::optional<ChainCounts>> results(count);

  std::optional<ResultCache> cache;
  if (auto path = cache_path_for(cfg)) cache.emplace(*path, err);
  if (cache) {
    for (std::size_t i = 0; i < count; ++i) {
      results[i] = cache->lookup(first + static_cast<std::int64_t>(i), cfg.mode);
    }
  }

  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < count; ++i) {
    if (!results[i]) missing.push_back(i);
  }
  RunConfig inner = cfg;
  const unsigned workers =
      std::max(1u, std::min<unsigned>(cfg.threads,
                                      static_cast<unsigned>(missing.size())));
  if (workers > 1) inner.threads = 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < missing.size(); k = next++) {
      const auto i = missing[k];
      results[i] = compute_counts(inner, first + static_cast<std::int64_t>(i));
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  if (cache) {
    for (auto i : missing) {
      cache->store(first + static_cast<std::int64_t>(i), cfg.mode, *results[i]);
    }
  }
  std::vector<ChainCounts> out;
  out.reserve(count);
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

std::string join_counts(const std::vector<BigInt>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

void write_csv_header(std::ostream& out) {
  out << "n,mode,per_length,total,fuzzy_count,mm_count\n";
}

void write_csv_row(std::ostream& out, std::int64_t n, LatticeMode mode,
                   const ChainCounts& c) {
  out << n << ',' << to_string(mode) << ',' << join_counts(c.per_length, ';')
      << ',' << c.total << ',' << c.fuzzy_count << ',' << c.mm_count << '\n';
}

int list_subgroups(const RunConfig& cfg, bool normal_only, std::ostream& out) {
  const GroupParams p(cfg.range.first);
  const auto normals = enumerate_normal_subgroups(p, cfg.oracle_limit);
  const auto ds =
      normal_only ? normals : enumerate_subgroups(p, cfg.oracle_limit);
  auto is_normal = [&](const SubgroupDescriptor& d) {
    return std::find(normals.begin(), normals.end(), d) != normals.end();
  };
  switch (cfg.format) {
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& d : ds) {
        arr.push_back({{"desc", to_string(d)},
                       {"generators", generator_string(p, d)},
                       {"order", subgroup_order(p, d)},
                       {"normal", is_normal(d)}});
      }
      out << nlohmann::json{{"n", p.n()},
                            {"mode", normal_only ? "normal" : "all"},
                            {"subgroups", std::move(arr)}}
                 .dump(2)
          << "\n";
      break;
    }
    case Format::csv:
      out << "desc,generators,order,normal\n";
      for (const auto& d : ds) {
        out << '"' << to_string(d) << "\",\"" << generator_string(p, d)
            << "\"," << subgroup_order(p, d) << ','
            << (is_normal(d) ? "yes" : "no") << '\n';
      }
      break;
    case Format::table:
      out << group_name(p) << ": " << ds.size()
          << (normal_only ? " normal subgroups\n" : " subgroups\n");
      out << std::left << std::setw(10) << "desc" << std::setw(16)
          << "generators" << std::setw(8) << "order"
          << "normal\n";
      for (const auto& d : ds) {
        out << std::left << std::setw(10) << to_string(d) << std::setw(16)
            << generator_string(p, d) << std::setw(8) << subgroup_order(p, d)
            << (is_normal(d) ? "yes" : "no") << '\n';
      }
      break;
  }
  return exit_ok;
}

int show_chains(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto counts = counts_for_range(cfg, err);
  const auto n = cfg.range.first;
  const auto& c = counts.front();
  switch (cfg.format) {
    case Format::json:
      out << counts_to_json(n, cfg.mode, c).dump(2) << "\n";
      break;
    case Format::csv:
      write_csv_header(out);
      write_csv_row(out, n, cfg.mode, c);
      break;
    case Format::table: {
      const GroupParams p(n);
      out << group_name(p) << ", "
          << (cfg.mode == LatticeMode::all ? "all" : "normal")
          << " subgroups: proper chains ending in G\n";
      out << std::left << std::setw(8) << "length" << "count\n";
      for (std::size_t k = 0; k < c.per_length.size(); ++k) {
        out << std::left << std::setw(8) << k + 1 << c.per_length[k] << '\n';
      }
      out << "(count is 0 for every length >= " << c.per_length.size() + 1
          << ")\n";
      out << "total " << c.total << ", fuzzy subgroups " << c.fuzzy_count
          << '\n';
      break;
    }
  }
  return exit_ok;
}

int show_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto counts = counts_for_range(cfg, err);
  const auto n = cfg.range.first;
  const auto& c = counts.front();
  const BigInt value = cfg.relation == Relation::murali
                           ? murali_makamba_count(c)
                           : c.fuzzy_count;
  const std::string relation =
      cfg.relation == Relation::murali ? "murali" : "tarnauceanu";
  switch (cfg.format) {
    case Format::json: {
      auto j = counts_to_json(n, cfg.mode, c);
      j["relation"] = relation;
      j["value"] = value.str();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "n,mode,relation,value\n"
          << n << ',' << to_string(cfg.mode) << ',' << relation << ','
          << value << '\n';
      break;
    case Format::table: {
      const std::string label =
          cfg.mode == LatticeMode::all ? "N_F" : "N_NF";
      out << (cfg.relation == Relation::murali ? "2*" + label + "-1" : label)
          << "(" << group_name(GroupParams(n)) << ") = " << value << '\n';
      break;
    }
  }
  return exit_ok;
}

int show_lattice(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GroupParams p(cfg.range.first);
  const auto lat = build_lattice(p, cfg.mode, cfg.oracle_limit);
  if (cfg.dot_path && *cfg.dot_path == "-") {
    out << export_dot(lat);
    return exit_ok;
  }
  if (cfg.dot_path) {
    std::ofstream f(*cfg.dot_path);
    if (!f) {
      err << "error: cannot write " << *cfg.dot_path << "\n";
      return exit_invalid_input;
    }
    f << export_dot(lat);
  }
  out << lattice_to_json(lat).dump(2) << "\n";
  return exit_ok;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.n_min = cfg.range.first;
  opt.n_max = cfg.range.last;
  opt.oracle_limit = cfg.oracle_limit;
  const auto report = verify_range(opt);
  if (cfg.format == Format::json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.passed() ? exit_ok : exit_verification_failed;
}

int run_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto counts = counts_for_range(cfg, err);
  if (cfg.format == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < counts.size(); ++i) {
      arr.push_back(counts_to_json(cfg.range.first + static_cast<std::int64_t>(i),
                                   cfg.mode, counts[i]));
    }
    out << arr.dump(2) << "\n";
    return exit_ok;
  }
  write_csv_header(out);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    write_csv_row(out, cfg.range.first + static_cast<std::int64_t>(i), cfg.mode,
                  counts[i]);
  }
  return exit_ok;
}

}  // namespace

NRange parse_range(const std::string& text) {
  auto parse_n = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || s.size() > 15 ||
        s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad n value '" + s + "' in '" + text + "'");
    }
    const auto v = std::stoll(s);
    if (v < 1) throw std::invalid_argument("n must be at least 1");
    return v;
  };
  const auto dots = text.find("..");
  NRange r;
  if (dots == std::string::npos) {
    r.first = r.last = parse_n(text);
  } else {
    r.first = parse_n(text.substr(0, dots));
    r.last = parse_n(text.substr(dots + 2));
  }
  if (r.first > r.last) {
    throw std::invalid_argument("empty range '" + text + "'");
  }
  return r;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.range.first < 1 || cfg.range.first > cfg.range.last) {
      throw std::invalid_argument("invalid n range");
    }
    switch (cfg.command) {
      case Command::subgroups:
        return list_subgroups(cfg, false, out);
      case Command::normal:
        return list_subgroups(cfg, true, out);
      case Command::chains:
        return show_chains(cfg, out, err);
      case Command::count:
        return show_count(cfg, out, err);
      case Command::lattice:
        return show_lattice(cfg, out, err);
      case Command::verify:
        return run_verify(cfg, out);
      case Command::batch:
        return run_batch(cfg, out, err);
    }
  } catch (const OracleLimitExceeded& e) {
    err << "error: " << e.what()
        << "; brute-force checks need 6n <= --oracle-limit (raise the limit "
           "or choose a smaller n)\n";
    return exit_invalid_input;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  }
  return exit_invalid_input;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Subgroups, subgroup lattices and fuzzy subgroup counts of U_6n", "u6n"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::string n_text;
  std::string mode_text = "all";
  std::string relation_text = "tarnauceanu";
  std::string format_text = "table";
  std::string dot_path;
  std::string cache_path;
  std::int64_t n_min = 1;
  std::int64_t n_max = 12;

  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", n_text, "group parameter n (or A..B)");
    if (required) opt->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--oracle-limit", cfg.oracle_limit,
                    "largest group order materialized for brute-force checks")
        ->check(CLI::PositiveNumber);
  };
  auto add_counting = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_text, "all or normal")
        ->check(CLI::IsMember({"all", "normal"}));
    sub->add_option("--cache", cache_path,
                    std::string("result cache file (default: $") +
                        cache_env_var + ")");
    sub->add_option("--threads", cfg.threads, "worker threads")
        ->check(CLI::Range(1u, 256u));
  };

  auto* subgroups = app.add_subcommand("subgroups", "list all subgroups");
  add_n(subgroups, true);
  add_common(subgroups);

  auto* normal = app.add_subcommand("normal", "list normal subgroups");
  add_n(normal, true);
  add_common(normal);

  auto* chains = app.add_subcommand("chains", "proper chain counts by length");
  add_n(chains, true);
  add_common(chains);
  add_counting(chains);

  auto* count = app.add_subcommand("count", "number of fuzzy subgroups");
  add_n(count, true);
  add_common(count);
  add_counting(count);
  count->add_option("--relation", relation_text, "tarnauceanu or murali")
      ->check(CLI::IsMember({"tarnauceanu", "murali"}));

  auto* lattice = app.add_subcommand("lattice", "export the subgroup lattice");
  add_n(lattice, true);
  add_common(lattice);
  lattice->add_option("--mode", mode_text, "all or normal")
      ->check(CLI::IsMember({"all", "normal"}));
  lattice->add_option("--dot", dot_path, "write DOT to this file ('-' = stdout)");

  auto* verify = app.add_subcommand("verify", "cross-check against the oracle");
  add_common(verify);
  verify->add_option("--n-min", n_min, "first n")->check(CLI::PositiveNumber);
  verify->add_option("--n-max", n_max, "last n")->check(CLI::PositiveNumber);
  add_n(verify, false);

  auto* batch = app.add_subcommand("batch", "CSV sweep over a range of n");
  batch->add_option("--range,--n", n_text, "inclusive range A..B")->required();
  add_common(batch);
  add_counting(batch);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  }

  try {
    const CLI::App* chosen = app.get_subcommands().front();
    const std::map<std::string, Command> by_name = {
        {"subgroups", Command::subgroups}, {"normal", Command::normal},
        {"chains", Command::chains},       {"count", Command::count},
        {"lattice", Command::lattice},     {"verify", Command::verify},
        {"batch", Command::batch}};
    cfg.command = by_name.at(chosen->get_name());
    cfg.mode = parse_mode(mode_text);
    cfg.relation =
        relation_text == "murali" ? Relation::murali : Relation::tarnauceanu;
    cfg.format = format_text == "json"  ? Format::json
                 : format_text == "csv" ? Format::csv
                                        : Format::table;
    if (!dot_path.empty()) cfg.dot_path = dot_path;
    if (!cache_path.empty()) cfg.cache_path = cache_path;

    if (cfg.command == Command::verify) {
      cfg.range = n_text.empty() ? NRange{n_min, n_max} : parse_range(n_text);
      if (cfg.range.first > cfg.range.last) {
        throw std::invalid_argument("--n-min exceeds --n-max");
      }
    } else {
      cfg.range = parse_range(n_text);
      if (cfg.command != Command::batch && cfg.range.first != cfg.range.last) {
        throw std::invalid_argument("ranges are only accepted by batch and verify");
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  }
  return run(cfg, out, err);
}

}  // namespace u6n::cli
