#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncpfact/group.hpp"

namespace ncpfact {

inline constexpr const char* kCacheHeader = "ncpfact-cache-v1";

/// Filesystem-safe group identifier.
inline std::string cache_slug(const std::string& name) {
  std::string s;
  for (char ch : name)
    s += (std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_');
  return s;
}

inline std::string cache_hash_hex(const GroupSpec& spec) {
  std::ostringstream os;
  os << std::hex << spec.content_hash();
  return os.str();
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const GroupSpec& spec) {
  return dir / (cache_slug(spec.name) + "-" + cache_hash_hex(spec) + ".ncpcache");
}

/// Writes the primary tables (element matrices in breadth-first order plus
/// the generator Cayley edges); everything else is derived on load.
inline void save_group_cache(const std::filesystem::path& path, const ReflectionGroup& G) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write cache file " + path.string());
  os << kCacheHeader << '\n';
  os << "hash " << cache_hash_hex(G.spec()) << '\n';
  os << "group " << G.name() << '\n';
  os << "elements " << G.size() << '\n';
  for (ElemIndex i = 0; i < G.size(); ++i) os << "E " << G.matrix_of(i).to_string() << '\n';
  os << "cayley " << G.size() << ' ' << G.rank() << '\n';
  const auto& table = G.cayley_table();
  for (ElemIndex i = 0; i < G.size(); ++i) {
    os << 'C';
    for (unsigned g = 0; g < G.rank(); ++g) os << ' ' << table[i][g];
    os << '\n';
  }
  os << "end\n";
  if (!os) throw std::runtime_error("short write to cache file " + path.string());
}

/// Loads a cache file; returns nullopt when the file is absent, malformed,
/// from another format version, or keyed by a different content hash.
inline std::optional<ReflectionGroup> load_group_cache(const std::filesystem::path& path,
                                                       const GroupSpec& spec) {
  std::ifstream is(path);
  if (!is) return std::nullopt;
  std::string line;
  if (!std::getline(is, line) || line != kCacheHeader) return std::nullopt;
  std::string expected_hash = cache_hash_hex(spec);
  std::size_t count = 0;
  std::vector<CycMatrix> elements;
  std::vector<std::vector<ElemIndex>> cayley;
  try {
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string key;
      ls >> key;
      if (key == "hash") {
        std::string h;
        ls >> h;
        if (h != expected_hash) return std::nullopt;  // stale: spec changed
      } else if (key == "group") {
        std::string name;
        ls >> std::ws;
        std::getline(ls, name);
        if (name != spec.name) return std::nullopt;
      } else if (key == "elements") {
        ls >> count;
        elements.reserve(count);
      } else if (key == "E") {
        ls >> std::ws;
        std::string body;
        std::getline(ls, body);
        elements.push_back(CycMatrix::parse(body));
      } else if (key == "cayley") {
        // row count and rank restated for readability; validated below
      } else if (key == "C") {
        std::vector<ElemIndex> row;
        ElemIndex v;
        while (ls >> v) row.push_back(v);
        if (row.size() != spec.rank) return std::nullopt;
        cayley.push_back(std::move(row));
      } else if (key == "end") {
        break;
      } else {
        return std::nullopt;
      }
    }
    if (elements.size() != count || cayley.size() != count || count == 0) return std::nullopt;
    return ReflectionGroup::from_tables(spec, std::move(elements), std::move(cayley));
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt cache is treated as a miss
  }
}

struct CacheEntryStatus {
  std::string file;
  bool valid = false;   // parseable header and matching a catalog entry
  std::string group;    // matched group name, when valid
};

/// Scans a cache directory against a catalog.
inline std::vector<CacheEntryStatus> cache_status(const std::filesystem::path& dir,
                                                  const std::vector<GroupSpec>& catalog) {
  std::vector<CacheEntryStatus> out;
  if (!std::filesystem::exists(dir)) return out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".ncpcache")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    CacheEntryStatus status;
    status.file = path.filename().string();
    for (const auto& spec : catalog) {
      if (cache_path(dir, spec).filename() == path.filename()) {
        status.valid = true;
        status.group = spec.name;
        break;
      }
    }
    out.push_back(std::move(status));
  }
  return out;
}

}  // namespace ncpfact
