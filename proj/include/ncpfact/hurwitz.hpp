#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ncpfact/factorization.hpp"

namespace ncpfact {

namespace hurwitz_detail {

inline std::string tuple_key(const std::vector<ElemIndex>& t) {
  std::string s(t.size() * sizeof(ElemIndex), '\0');
  std::memcpy(s.data(), t.data(), s.size());
  return s;
}

}  // namespace hurwitz_detail

/// One braid generator acting on a tuple. Forward sigma_i replaces
/// (g_i, g_{i+1}) by (g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}); the inverse
/// undoes it. Positions are 0-based, acting on (i, i+1).
inline Factorization hurwitz_step(const Factorization& f, unsigned i, bool inverse = false) {
  const ReflectionGroup& G = *f.group;
  if (i + 1 >= f.factors.size())
    throw std::invalid_argument("hurwitz_step index out of range");
  Factorization out = f;
  ElemIndex a = f.factors[i], b = f.factors[i + 1];
  if (!inverse) {
    out.factors[i] = b;
    out.factors[i + 1] = G.mul(G.inv(b), G.mul(a, b));
  } else {
    out.factors[i] = G.mul(a, G.mul(b, G.inv(a)));
    out.factors[i + 1] = a;
  }
  return out;
}

/// A Hurwitz orbit: canonical representative (lexicographically least
/// tuple), full member list, and for primitive shapes the conjugacy class
/// of the long factor.
struct HurwitzOrbit {
  std::vector<ElemIndex> representative;
  std::vector<std::vector<ElemIndex>> members;  // sorted
  PartitionShape shape;
  std::optional<std::uint32_t> long_factor_class;
  bool long_factor_class_constant = true;

  std::size_t size() const { return members.size(); }
};

/// Partitions a complete, action-closed set of same-length factorizations
/// into orbits under all sigma_i^{+-1}. Orbits are sorted by canonical
/// representative; members are sorted tuples.
inline std::vector<HurwitzOrbit> orbit_decomposition(const ReflectionGroup& G,
                                                     const std::vector<Factorization>& facts) {
  using hurwitz_detail::tuple_key;
  std::vector<HurwitzOrbit> orbits;
  if (facts.empty()) return orbits;
  const std::size_t p = facts[0].factors.size();
  std::unordered_set<std::string> universe;
  universe.reserve(facts.size() * 2);
  for (const auto& f : facts) {
    if (f.factors.size() != p)
      throw std::invalid_argument("orbit_decomposition requires equal block counts");
    universe.insert(tuple_key(f.factors));
  }
  std::unordered_set<std::string> visited;
  visited.reserve(universe.size() * 2);
  for (const auto& f : facts) {
    if (visited.count(tuple_key(f.factors))) continue;
    HurwitzOrbit orbit;
    orbit.shape = f.shape();
    std::deque<std::vector<ElemIndex>> queue{f.factors};
    visited.insert(tuple_key(f.factors));
    while (!queue.empty()) {
      std::vector<ElemIndex> t = std::move(queue.front());
      queue.pop_front();
      orbit.members.push_back(std::move(t));
      const auto& cur = orbit.members.back();
      Factorization base{&G, cur};
      for (unsigned i = 0; i + 1 < p; ++i) {
        for (bool inverse : {false, true}) {
          auto next = hurwitz_step(base, i, inverse).factors;
          std::string key = tuple_key(next);
          if (!universe.count(key))
            throw invariant_violation("Hurwitz step left the enumerated set; input not closed");
          if (visited.insert(std::move(key)).second) queue.push_back(std::move(next));
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = orbit.members.front();
    if (orbit.shape.is_primitive() && orbit.shape.parts[0] >= 2) {
      // label with the class of the unique long factor, and note whether it
      // is constant across the orbit
      bool first = true;
      for (const auto& tuple : orbit.members) {
        for (ElemIndex w : tuple) {
          if (G.length(w) < 2) continue;
          std::uint32_t cls = G.class_of(w);
          if (first) {
            orbit.long_factor_class = cls;
            first = false;
          } else if (orbit.long_factor_class != cls) {
            orbit.long_factor_class_constant = false;
          }
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const HurwitzOrbit& a, const HurwitzOrbit& b) {
              return a.representative < b.representative;
            });
  return orbits;
}

/// Braid relations as tuple transformations, checked on one tuple.
inline bool braid_relations_hold(const Factorization& f) {
  const std::size_t p = f.factors.size();
  for (unsigned i = 0; i + 2 < p; ++i) {
    auto lhs = hurwitz_step(hurwitz_step(hurwitz_step(f, i), i + 1), i);
    auto rhs = hurwitz_step(hurwitz_step(hurwitz_step(f, i + 1), i), i + 1);
    if (!(lhs == rhs)) return false;
  }
  for (unsigned i = 0; i + 1 < p; ++i)
    for (unsigned j = i + 2; j + 1 < p; ++j) {
      auto lhs = hurwitz_step(hurwitz_step(f, i), j);
      auto rhs = hurwitz_step(hurwitz_step(f, j), i);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

enum class ConjugatorSet { All, ReflectionsOnly };

/// Strong conjugacy on the lattice: the symmetric-transitive closure of
/// w ~ xwx^{-1} whenever xw lies in the lattice with additive lengths.
/// Returns one class id per lattice position, ids ordered by least member.
inline std::vector<std::uint32_t> strong_conjugacy_classes(const NcpLattice& L,
                                                           ConjugatorSet conjugators) {
  const ReflectionGroup& G = L.group();
  const std::uint32_t m = L.size();
  std::vector<std::uint32_t> parent(m);
  for (std::uint32_t i = 0; i < m; ++i) parent[i] = i;
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  const std::vector<ElemIndex>& xs_refl = G.reflections();
  for (std::uint32_t p = 0; p < m; ++p) {
    ElemIndex w = L.element(p);
    auto consider = [&](ElemIndex x) {
      ElemIndex xw = G.mul(x, w);
      if (!L.contains(xw)) return;
      if (G.length(xw) != G.length(x) + G.length(w)) return;
      ElemIndex image = G.conj(x, w);  // xw = (xwx^{-1}) x
      if (!L.contains(image)) return;
      unite(p, L.position(image));
    };
    if (conjugators == ConjugatorSet::All) {
      for (ElemIndex x = 0; x < G.size(); ++x) consider(x);
    } else {
      for (ElemIndex x : xs_refl) consider(x);
    }
  }

  std::vector<std::uint32_t> ids(m);
  std::unordered_map<std::uint32_t, std::uint32_t> relabel;
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint32_t root = find(i);
    auto it = relabel.find(root);
    if (it == relabel.end())
      it = relabel.emplace(root, static_cast<std::uint32_t>(relabel.size())).first;
    ids[i] = it->second;
  }
  return ids;
}

/// Reachability between factorizations with a marked position: each braid
/// generator transports the marker with the factor it moves. Implements the
/// "pure with respect to the marked strand" reachability test.
class MarkedOrbitExplorer {
 public:
  MarkedOrbitExplorer(const ReflectionGroup& G, const Factorization& start, unsigned marker)
      : group_(&G), width_(start.factors.size()) {
    if (marker >= width_) throw std::invalid_argument("marker out of range");
    std::deque<std::pair<std::vector<ElemIndex>, unsigned>> queue;
    queue.emplace_back(start.factors, marker);
    reached_.insert(state_key(start.factors, marker));
    while (!queue.empty()) {
      auto [tuple, mark] = std::move(queue.front());
      queue.pop_front();
      Factorization base{group_, tuple};
      for (unsigned i = 0; i + 1 < width_; ++i) {
        for (bool inverse : {false, true}) {
          auto next = hurwitz_step(base, i, inverse).factors;
          unsigned next_mark = mark;
          if (mark == i)
            next_mark = i + 1;
          else if (mark == i + 1)
            next_mark = i;
          std::string key = state_key(next, next_mark);
          if (reached_.insert(std::move(key)).second) queue.emplace_back(std::move(next), next_mark);
        }
      }
    }
  }

  bool reachable(const std::vector<ElemIndex>& tuple, unsigned marker) const {
    return reached_.count(state_key(tuple, marker)) != 0;
  }

  std::size_t state_count() const { return reached_.size(); }

 private:
  static std::string state_key(const std::vector<ElemIndex>& tuple, unsigned marker) {
    std::string s = hurwitz_detail::tuple_key(tuple);
    s.push_back(static_cast<char>(marker));
    return s;
  }

  const ReflectionGroup* group_;
  std::size_t width_;
  std::unordered_set<std::string> reached_;
};

/// True when (g, j) is reachable from (f, i) under marker-tracking braid
/// moves. Positions are 0-based.
inline bool marked_reachable(const Factorization& f, const Factorization& g, unsigned i,
                             unsigned j) {
  if (f.factors.size() != g.factors.size())
    throw std::invalid_argument("marked_reachable requires equal block counts");
  MarkedOrbitExplorer explorer(*f.group, f, i);
  return explorer.reachable(g.factors, j);
}

}  // namespace ncpfact
