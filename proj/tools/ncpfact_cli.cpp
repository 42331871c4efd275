// ncpfact command line: build catalog groups, enumerate factorizations and
// orbits, export lattices, run the verification suite, manage the cache.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ncpfact/cache.hpp"
#include "ncpfact/jsonout.hpp"

namespace {

using namespace ncpfact;

struct CliConfig {
  std::string catalog_path;  // empty: built-in catalog
  std::string cache_dir;     // empty: caching disabled
  std::string format = "table";
  std::string group = "all";
  unsigned n_max = 6;
  unsigned threads = 1;
  bool no_cache = false;
};

std::vector<GroupSpec> load_catalog(const CliConfig& cfg) {
  if (cfg.catalog_path.empty()) return builtin_catalog();
  std::ifstream is(cfg.catalog_path);
  if (!is) throw std::runtime_error("cannot open catalog file " + cfg.catalog_path);
  return parse_catalog(is);
}

std::vector<const GroupSpec*> resolve_groups(const std::vector<GroupSpec>& catalog,
                                             const std::string& selector) {
  std::vector<const GroupSpec*> out;
  if (selector == "all") {
    for (const auto& spec : catalog) out.push_back(&spec);
    return out;
  }
  if (const GroupSpec* spec = find_group(catalog, selector)) {
    out.push_back(spec);
    return out;
  }
  std::string names;
  for (const auto& spec : catalog) {
    if (!names.empty()) names += ", ";
    names += spec.name;
  }
  throw std::runtime_error("unknown group '" + selector + "'; catalog: " + names);
}

bool cache_enabled(const CliConfig& cfg) { return !cfg.cache_dir.empty() && !cfg.no_cache; }

ReflectionGroup obtain_group(const CliConfig& cfg, const GroupSpec& spec) {
  if (cache_enabled(cfg)) {
    auto path = cache_path(cfg.cache_dir, spec);
    if (auto cached = load_group_cache(path, spec)) return std::move(*cached);
    ReflectionGroup G = ReflectionGroup::build(spec);
    std::filesystem::create_directories(cfg.cache_dir);
    save_group_cache(path, G);
    return G;
  }
  return ReflectionGroup::build(spec);
}

void emit(const std::string& text) { std::cout << text; }

int cmd_info(const CliConfig& cfg) {
  auto catalog = load_catalog(cfg);
  auto groups = resolve_groups(catalog, cfg.group);
  Json all = Json::array();
  std::string csv, table;
  for (const GroupSpec* spec : groups) {
    ReflectionGroup G = obtain_group(cfg, *spec);
    NcpLattice L = build_ncp(G);
    auto reds = enumerate_red(G, G.coxeter());
    if (cfg.format == "json") {
      all.push_back(json_group_summary(G, L, reds.size()));
    } else if (cfg.format == "csv") {
      std::string block = csv_summary(G, L, reds.size());
      if (!csv.empty()) block = block.substr(block.find('\n') + 1);  // one header only
      csv += block;
    } else {
      table += table_summary(G, L, reds.size()) + '\n';
    }
  }
  if (cfg.format == "json")
    emit((groups.size() == 1 ? all[0] : all).dump(2) + "\n");
  else
    emit(cfg.format == "csv" ? csv : table);
  return 0;
}

int cmd_red(const CliConfig& cfg) {
  auto catalog = load_catalog(cfg);
  auto groups = resolve_groups(catalog, cfg.group);
  Json all = Json::array();
  std::string text;
  for (const GroupSpec* spec : groups) {
    ReflectionGroup G = obtain_group(cfg, *spec);
    auto reds = enumerate_red_factorizations(G, G.coxeter());
    if (cfg.format == "json") {
      all.push_back(json_red(G, reds));
    } else if (cfg.format == "csv") {
      if (text.empty()) text = "group,count,expected\n";
      text += csv_escape(G.name()) + ',' + std::to_string(reds.size()) + ',' +
              red_count_formula(G).str() + '\n';
    } else {
      text += G.name() + ": |Red(c)| = " + std::to_string(reds.size()) + " (formula " +
              red_count_formula(G).str() + ")\n";
    }
  }
  if (cfg.format == "json") emit((groups.size() == 1 ? all[0] : all).dump(2) + "\n");
  else emit(text);
  return 0;
}

int cmd_ncp(const CliConfig& cfg) {
  auto catalog = load_catalog(cfg);
  auto groups = resolve_groups(catalog, cfg.group);
  Json all = Json::array();
  std::string text;
  for (const GroupSpec* spec : groups) {
    ReflectionGroup G = obtain_group(cfg, *spec);
    NcpLattice L = build_ncp(G);
    if (cfg.format == "json") {
      all.push_back(json_lattice(L));
    } else if (cfg.format == "csv") {
      if (text.empty()) text = "group,position,element,length,class\n";
      for (std::uint32_t p = 0; p < L.size(); ++p)
        text += csv_escape(G.name()) + ',' + std::to_string(p) + ',' +
                std::to_string(L.element(p)) + ',' + std::to_string(L.rank_of(p)) + ',' +
                std::to_string(L.class_of(p)) + '\n';
    } else {
      std::vector<std::size_t> by_rank(G.rank() + 1, 0);
      for (std::uint32_t p = 0; p < L.size(); ++p) ++by_rank[L.rank_of(p)];
      text += G.name() + ": |NCP| = " + std::to_string(L.size()) + ", rank sizes";
      for (std::size_t k = 0; k <= G.rank(); ++k) text += ' ' + std::to_string(by_rank[k]);
      text += '\n';
    }
  }
  if (cfg.format == "json") emit((groups.size() == 1 ? all[0] : all).dump(2) + "\n");
  else emit(text);
  return 0;
}

int cmd_orbits(const CliConfig& cfg, const std::string& shape_text) {
  auto catalog = load_catalog(cfg);
  auto groups = resolve_groups(catalog, cfg.group);
  PartitionShape shape = PartitionShape::parse(shape_text);
  Json all = Json::array();
  std::string text;
  for (const GroupSpec* spec : groups) {
    ReflectionGroup G = obtain_group(cfg, *spec);
    if (shape.sum() != G.length(G.coxeter()))
      throw std::runtime_error("shape " + shape.to_string() + " is not a partition of " +
                               std::to_string(G.length(G.coxeter())) + " (group " + G.name() +
                               ")");
    auto facts = enumerate_fact_shape(G, G.coxeter(), shape);
    auto orbits = orbit_decomposition(G, facts);
    if (cfg.format == "json") all.push_back(json_orbit_report(G, shape, orbits));
    else if (cfg.format == "csv") text += csv_orbits(G, shape, orbits);
    else text += table_orbits(G, shape, orbits);
  }
  if (cfg.format == "json") emit((groups.size() == 1 ? all[0] : all).dump(2) + "\n");
  else emit(text);
  return 0;
}

int cmd_verify(const CliConfig& cfg) {
  auto catalog = load_catalog(cfg);
  auto groups = resolve_groups(catalog, cfg.group);
  SuiteOptions options;
  options.n_max = cfg.n_max;

  std::vector<SuiteReport> suites(groups.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::vector<std::string> errors;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= groups.size()) return;
      try {
        ReflectionGroup G = obtain_group(cfg, *groups[i]);
        suites[i] = run_full_suite(G, options);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        errors.push_back(groups[i]->name + ": " + e.what());
        suites[i].group = groups[i]->name;
        suites[i].pass = false;
      }
    }
  };
  unsigned thread_count = std::max(1u, cfg.threads);
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  bool all_pass = errors.empty();
  for (const auto& suite : suites) all_pass = all_pass && suite.pass;
  if (cfg.format == "json") {
    Json j;
    j["pass"] = all_pass;
    j["groups"] = Json::array();
    for (const auto& suite : suites) j["groups"].push_back(json_suite(suite));
    emit(j.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    emit(csv_suite(suites));
  } else {
    for (const auto& suite : suites) emit(table_suite(suite));
    emit(all_pass ? "all groups: PASS\n" : "all groups: FAIL\n");
  }
  for (const auto& e : errors) std::cerr << "error: " << e << '\n';
  return all_pass ? 0 : 1;
}

int cmd_cache(const CliConfig& cfg, bool clear) {
  if (cfg.cache_dir.empty())
    throw std::runtime_error("cache command needs --cache DIR");
  auto catalog = load_catalog(cfg);
  if (clear) {
    std::size_t removed = 0;
    if (std::filesystem::exists(cfg.cache_dir))
      for (const auto& entry : std::filesystem::directory_iterator(cfg.cache_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".ncpcache") {
          std::filesystem::remove(entry.path());
          ++removed;
        }
    emit("removed " + std::to_string(removed) + " cache file(s)\n");
    return 0;
  }
  auto entries = cache_status(cfg.cache_dir, catalog);
  if (cfg.format == "json") {
    Json j = Json::array();
    for (const auto& e : entries) {
      Json entry;
      entry["file"] = e.file;
      entry["valid"] = e.valid;
      entry["group"] = e.group;
      j.push_back(std::move(entry));
    }
    emit(j.dump(2) + "\n");
  } else {
    for (const auto& e : entries)
      emit(e.file + (e.valid ? "  valid (" + e.group + ")" : "  stale") + "\n");
    emit(std::to_string(entries.size()) + " cache file(s)\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for noncrossing partition lattices and Hurwitz orbits"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--catalog", cfg.catalog_path, "catalog file (default: built-in)")
      ->envname("NCPFACT_CATALOG");
  app.add_option("--cache", cfg.cache_dir, "cache directory")->envname("NCPFACT_CACHE");
  app.add_option("--format", cfg.format, "output format: json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->envname("NCPFACT_FORMAT");
  app.add_option("--group", cfg.group, "group name or 'all'")->envname("NCPFACT_GROUP");
  app.add_option("--n-max", cfg.n_max, "largest N for the chain identities")
      ->envname("NCPFACT_N_MAX");
  app.add_option("--threads", cfg.threads, "parallel per-group suites")
      ->envname("NCPFACT_THREADS");
  app.add_flag("--no-cache", cfg.no_cache, "ignore the cache even when --cache is set")
      ->envname("NCPFACT_NO_CACHE");

  auto* info = app.add_subcommand("info", "group summary (order, degrees, |NCP|, |Red|)");
  auto* orbits = app.add_subcommand("orbits", "Hurwitz orbit decomposition for a shape");
  std::string shape_text;
  orbits->add_option("--shape", shape_text, "partition of n, e.g. 2,1,1")->required();
  auto* red = app.add_subcommand("red", "reduced decompositions of the Coxeter element");
  auto* ncp = app.add_subcommand("ncp", "export the noncrossing partition lattice");
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  auto* cache = app.add_subcommand("cache", "inspect or clear the table cache");
  bool cache_clear = false;
  cache->add_flag("--clear", cache_clear, "delete cache files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(cfg);
    if (orbits->parsed()) return cmd_orbits(cfg, shape_text);
    if (red->parsed()) return cmd_red(cfg);
    if (ncp->parsed()) return cmd_ncp(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (cache->parsed()) return cmd_cache(cfg, cache_clear);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
