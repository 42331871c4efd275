#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ncpfact/factorization.hpp"

namespace ncpfact {

/// Conjugacy class of a parabolic Coxeter element together with its length;
/// the combinatorial shadow of a stratum.
struct TypeLabel {
  std::uint32_t class_id = 0;
  unsigned length = 0;

  friend bool operator==(const TypeLabel& a, const TypeLabel& b) {
    return a.class_id == b.class_id && a.length == b.length;
  }
  friend bool operator<(const TypeLabel& a, const TypeLabel& b) {
    return a.class_id < b.class_id || (a.class_id == b.class_id && a.length < b.length);
  }
};

/// Pointwise fixator of a flat.
struct ParabolicSubgroup {
  const ReflectionGroup* group = nullptr;
  std::size_t flat_id = 0;
  std::vector<ElemIndex> members;  // sorted
  unsigned rank = 0;               // codim of the flat
};

/// Smallest subgroup of the tabulated group containing the seeds.
inline std::vector<ElemIndex> subgroup_closure(const ReflectionGroup& G,
                                               const std::vector<ElemIndex>& seeds) {
  std::vector<bool> in(G.size(), false);
  in[kIdentity] = true;
  std::vector<ElemIndex> members{kIdentity};
  std::deque<ElemIndex> queue{kIdentity};
  std::vector<ElemIndex> gens;
  for (ElemIndex s : seeds)
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
      queue.push_back(s);
      gens.push_back(s);
    }
  while (!queue.empty()) {
    ElemIndex w = queue.front();
    queue.pop_front();
    for (ElemIndex g : gens) {
      ElemIndex t = G.mul(w, g);
      if (!in[t]) {
        in[t] = true;
        members.push_back(t);
        queue.push_back(t);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

/// Index-level view of the flats and their fixators. Built once per group;
/// all queries afterwards are table lookups.
class ParabolicTable {
 public:
  explicit ParabolicTable(const ReflectionGroup& G) : group_(&G) {
    const std::size_t nf = G.flats().size();
    sub_.assign(nf, std::vector<bool>(nf, false));
    for (std::size_t a = 0; a < nf; ++a)
      for (std::size_t b = 0; b < nf; ++b)
        sub_[a][b] = rref_contains(G.flat(b).basis, G.flat(a).basis);
    members_.assign(nf, {});
    for (std::size_t f = 0; f < nf; ++f) {
      for (ElemIndex w = 0; w < G.size(); ++w)
        if (sub_[f][G.flat_of(w)]) members_[f].push_back(w);
    }
    flat_rep_.assign(nf, kIdentity);
    std::vector<bool> seen(nf, false);
    for (ElemIndex w = 0; w < G.size(); ++w) {
      std::size_t f = G.flat_of(w);
      if (!seen[f]) {
        seen[f] = true;
        flat_rep_[f] = w;
      }
    }
  }

  const ReflectionGroup& group() const { return *group_; }
  std::size_t flat_count() const { return members_.size(); }

  /// L_a is a subspace of L_b.
  bool flat_subset(std::size_t a, std::size_t b) const { return sub_[a][b]; }

  /// Fixator of the flat: every element whose fixed space contains it.
  const std::vector<ElemIndex>& fixator(std::size_t flat_id) const { return members_[flat_id]; }

  /// Some element whose fixed space is exactly this flat.
  ElemIndex flat_representative(std::size_t flat_id) const { return flat_rep_[flat_id]; }

  /// Fixator of Ker(w-1): the unique parabolic w is a Coxeter element of,
  /// when w is a parabolic Coxeter element.
  ParabolicSubgroup parabolic_of(ElemIndex w) const {
    const ReflectionGroup& G = *group_;
    std::size_t f = G.flat_of(w);
    return ParabolicSubgroup{&G, f, members_[f], G.flat(f).codim};
  }

  /// Image flat of the conjugation action a . L.
  std::size_t conjugate_flat(ElemIndex a, std::size_t flat_id) const {
    return group_->flat_of(group_->conj(a, flat_rep_[flat_id]));
  }

  /// Orbits of flats under the group action; orbit ids ordered by least
  /// flat id.
  std::vector<std::uint32_t> flat_orbits() const {
    const ReflectionGroup& G = *group_;
    const std::size_t nf = flat_count();
    std::vector<std::uint32_t> orbit(nf, static_cast<std::uint32_t>(-1));
    std::uint32_t next = 0;
    for (std::size_t f = 0; f < nf; ++f) {
      if (orbit[f] != static_cast<std::uint32_t>(-1)) continue;
      std::uint32_t id = next++;
      std::deque<std::size_t> queue{f};
      orbit[f] = id;
      while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (ElemIndex g : G.generator_elements()) {
          std::size_t image = conjugate_flat(g, cur);
          if (orbit[image] == static_cast<std::uint32_t>(-1)) {
            orbit[image] = id;
            queue.push_back(image);
          }
        }
      }
    }
    return orbit;
  }

  /// Reflection length inside the fixator, measured against its own
  /// reflections by a fresh breadth-first search.
  std::vector<unsigned> relative_lengths(std::size_t flat_id) const {
    const ReflectionGroup& G = *group_;
    const auto& P = members_[flat_id];
    std::vector<ElemIndex> refl;
    for (ElemIndex w : P)
      if (G.is_reflection(w)) refl.push_back(w);
    std::map<ElemIndex, unsigned> dist;
    dist[kIdentity] = 0;
    std::deque<ElemIndex> queue{kIdentity};
    while (!queue.empty()) {
      ElemIndex w = queue.front();
      queue.pop_front();
      for (ElemIndex r : refl) {
        ElemIndex t = G.mul(w, r);
        if (!dist.count(t)) {
          dist[t] = dist[w] + 1;
          queue.push_back(t);
        }
      }
    }
    std::vector<unsigned> out;
    out.reserve(P.size());
    for (ElemIndex w : P) {
      auto it = dist.find(w);
      out.push_back(it == dist.end() ? static_cast<unsigned>(-1) : it->second);
    }
    return out;
  }

 private:
  const ReflectionGroup* group_;
  std::vector<std::vector<bool>> sub_;
  std::vector<std::vector<ElemIndex>> members_;
  std::vector<ElemIndex> flat_rep_;
};

/// One irreducible component of a fixator subgroup: its reflections,
/// hyperplanes, the span of its root lines, and the Coxeter number
/// recovered from the duality identity |R| + |A| = rank * h.
struct ReflectionComponent {
  std::vector<ElemIndex> reflections;
  std::vector<std::size_t> hyperplane_flats;
  std::vector<CycVector> span;
  unsigned rank = 0;
  unsigned coxeter_number = 0;
};

/// Splits a reflection set into the irreducible components of the group it
/// generates: reflections sharing a hyperplane stay together, and so do
/// non-commuting pairs.
inline std::vector<ReflectionComponent> reflection_components(
    const ReflectionGroup& G, const std::vector<ElemIndex>& reflections) {
  std::vector<std::size_t> hyperplanes;  // distinct flat ids, ascending order of appearance
  std::vector<std::vector<ElemIndex>> refl_of;
  for (ElemIndex r : reflections) {
    std::size_t f = G.flat_of(r);
    auto it = std::find(hyperplanes.begin(), hyperplanes.end(), f);
    if (it == hyperplanes.end()) {
      hyperplanes.push_back(f);
      refl_of.push_back({r});
    } else {
      refl_of[static_cast<std::size_t>(it - hyperplanes.begin())].push_back(r);
    }
  }
  const std::size_t nh = hyperplanes.size();
  std::vector<std::size_t> comp(nh, static_cast<std::size_t>(-1));
  std::size_t comp_count = 0;
  for (std::size_t start = 0; start < nh; ++start) {
    if (comp[start] != static_cast<std::size_t>(-1)) continue;
    std::size_t id = comp_count++;
    std::deque<std::size_t> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < nh; ++j) {
        if (comp[j] != static_cast<std::size_t>(-1)) continue;
        ElemIndex a = refl_of[i][0], b = refl_of[j][0];
        if (G.mul(a, b) != G.mul(b, a)) {
          comp[j] = id;
          queue.push_back(j);
        }
      }
    }
  }
  std::vector<ReflectionComponent> out(comp_count);
  CycMatrix id_matrix = CycMatrix::identity(G.rank(), G.conductor());
  for (std::size_t i = 0; i < nh; ++i) {
    auto& c = out[comp[i]];
    c.hyperplane_flats.push_back(hyperplanes[i]);
    for (ElemIndex r : refl_of[i]) c.reflections.push_back(r);
  }
  for (auto& c : out) {
    // span of the root lines = column space of the stacked (r - 1)
    std::vector<CycVector> columns;
    for (ElemIndex r : c.reflections) {
      CycMatrix shifted = G.matrix_of(r) - id_matrix;
      for (unsigned col = 0; col < G.rank(); ++col) {
        CycVector v;
        v.reserve(G.rank());
        for (unsigned row = 0; row < G.rank(); ++row) v.push_back(shifted.at(row, col));
        columns.push_back(std::move(v));
      }
    }
    c.span = CycMatrix::rref_rows(std::move(columns), G.rank(), G.conductor());
    c.rank = static_cast<unsigned>(c.span.size());
    unsigned total = static_cast<unsigned>(c.reflections.size() + c.hyperplane_flats.size());
    if (total % c.rank != 0)
      throw invariant_violation("|R| + |A| is not divisible by the component rank");
    c.coxeter_number = total / c.rank;
  }
  return out;
}

/// Springer-regularity test for "w is a Coxeter element of the fixator of
/// its fixed space": on each irreducible component, the e^{2i pi / h_C}
/// eigenspace of w must contain a vector outside every hyperplane of the
/// component. Works in a conductor enlarged to reach zeta_{h_C}.
class ParabolicCoxeterTester {
 public:
  explicit ParabolicCoxeterTester(const ReflectionGroup& G) : group_(&G) {}

  bool is_coxeter_of_fixator(ElemIndex w) {
    const ReflectionGroup& G = *group_;
    if (G.length(w) != G.fix_codim(w)) return false;
    if (w == kIdentity) return true;
    const auto& comps = components_of(G.flat_of(w));
    for (const auto& c : comps) {
      unsigned m = std::lcm(G.conductor(), c.coxeter_number);
      CycMatrix wm = promoted_matrix(G.matrix_of(w), m);
      CyclotomicNumber mu = CyclotomicNumber::zeta(m, m / c.coxeter_number);
      auto eigen = wm.eigenspace(mu);
      if (eigen.empty()) return false;
      auto span_m = promoted_rows(c.span, m);
      auto inside = span_intersection(eigen, span_m, G.rank(), m);
      if (inside.empty()) return false;
      for (std::size_t hf : c.hyperplane_flats) {
        if (rref_contains(promoted_flat(hf, m), inside)) return false;
      }
    }
    return true;
  }

  const std::vector<ReflectionComponent>& components_of(std::size_t flat_id) {
    auto it = components_.find(flat_id);
    if (it != components_.end()) return it->second;
    const ReflectionGroup& G = *group_;
    std::vector<ElemIndex> refl;
    for (ElemIndex r : G.reflections())
      if (rref_contains(G.fixed_flat(r), G.flat(flat_id).basis)) refl.push_back(r);
    auto comps = reflection_components(G, refl);
    unsigned total_rank = 0;
    for (const auto& c : comps) total_rank += c.rank;
    if (total_rank != G.flat(flat_id).codim)
      throw invariant_violation("component ranks do not add up to the flat codimension");
    return components_.emplace(flat_id, std::move(comps)).first->second;
  }

 private:
  const std::vector<CycVector>& promoted_flat(std::size_t flat_id, unsigned conductor) {
    auto key = std::make_pair(flat_id, conductor);
    auto it = promoted_.find(key);
    if (it != promoted_.end()) return it->second;
    auto rows = promoted_rows(group_->flat(flat_id).basis, conductor);
    return promoted_.emplace(key, std::move(rows)).first->second;
  }

  const ReflectionGroup* group_;
  std::map<std::size_t, std::vector<ReflectionComponent>> components_;
  std::map<std::pair<std::size_t, unsigned>, std::vector<CycVector>> promoted_;
};

/// Criterion (iii): conjugate to a divisor of the chosen Coxeter element.
inline bool is_parabolic_coxeter(const NcpLattice& L, ElemIndex w) {
  const auto ids = L.class_ids();
  return std::binary_search(ids.begin(), ids.end(), L.group().class_of(w));
}

inline TypeLabel type_label_of(const NcpLattice& L, ElemIndex w) {
  if (!L.contains(w)) throw std::invalid_argument("type labels are defined on lattice elements");
  return TypeLabel{L.group().class_of(w), L.group().length(w)};
}

/// Steinberg: every fixator is generated by its reflections, its common
/// fixed space is the flat itself, and its rank is the codimension.
inline CheckReport steinberg_check(const ParabolicTable& PT) {
  const ReflectionGroup& G = PT.group();
  CheckReport report{"steinberg", G.name()};
  CycMatrix id = CycMatrix::identity(G.rank(), G.conductor());
  for (std::size_t f = 0; f < PT.flat_count(); ++f) {
    const auto& P = PT.fixator(f);
    std::vector<ElemIndex> refl;
    for (ElemIndex w : P)
      if (G.is_reflection(w)) refl.push_back(w);
    if (subgroup_closure(G, refl) != P) {
      report.fail("fixator of flat " + std::to_string(f) +
                  " is not generated by its reflections");
      continue;
    }
    // closure under the group table (subgroup property)
    bool closed = true;
    std::unordered_set<ElemIndex> set(P.begin(), P.end());
    for (ElemIndex a : P) {
      for (ElemIndex b : P)
        if (!set.count(G.mul(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) {
      report.fail("fixator of flat " + std::to_string(f) + " is not closed under multiplication");
      continue;
    }
    // common fixed space of the reflections equals the flat; rank = codim
    std::vector<CycMatrix> shifted;
    shifted.reserve(refl.size());
    for (ElemIndex r : refl) shifted.push_back(G.matrix_of(r) - id);
    std::vector<const CycMatrix*> blocks;
    for (const auto& b : shifted) blocks.push_back(&b);
    auto common = stacked_kernel(blocks, G.rank(), G.conductor());
    if (subspace_to_string(common) != G.flat(f).key) {
      report.fail("common fixed space of flat " + std::to_string(f) + " differs from the flat");
    }
  }
  report.detail = std::to_string(PT.flat_count()) + " flats checked";
  return report;
}

/// The three characterizations of parabolic Coxeter elements agree for
/// every element of the group: (i) Coxeter element of the fixator of its
/// fixed space (Springer regularity per irreducible component), (ii)
/// divisor of some Coxeter element, (iii) conjugate into the lattice.
inline CheckReport parabolic_coxeter_equivalence_check(const NcpLattice& L,
                                                       const ParabolicTable& PT) {
  const ReflectionGroup& G = L.group();
  (void)PT;
  CheckReport report{"parabolic_coxeter_equivalence", G.name()};
  const auto& cox_class = G.classes()[G.class_of(G.coxeter())].members;
  auto ncp_ids = L.class_ids();
  ParabolicCoxeterTester tester(G);
  std::size_t positives = 0;
  for (ElemIndex w = 0; w < G.size(); ++w) {
    bool crit1 = tester.is_coxeter_of_fixator(w);
    bool crit2 = false;
    for (ElemIndex c : cox_class)
      if (divides(G, w, c)) {
        crit2 = true;
        break;
      }
    bool crit3 = std::binary_search(ncp_ids.begin(), ncp_ids.end(), G.class_of(w));
    if (crit1 != crit2 || crit2 != crit3) {
      report.fail("criteria disagree at element " + std::to_string(w) + ": (" +
                  std::to_string(crit1) + "," + std::to_string(crit2) + "," +
                  std::to_string(crit3) + ")");
      if (report.counterexamples.size() > 8) return report;
    }
    if (crit3) ++positives;
  }
  report.detail = std::to_string(G.size()) + " elements, " + std::to_string(positives) +
                  " parabolic Coxeter elements";
  return report;
}

/// Every reduced decomposition of a lattice element generates its fixator
/// (full coverage for length <= 3, capped sample above).
inline CheckReport reduced_generation_check(const NcpLattice& L, const ParabolicTable& PT,
                                            std::size_t cap = 200) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"reduced_decomposition_generates", G.name()};
  std::size_t words = 0;
  for (std::uint32_t p = 0; p < L.size(); ++p) {
    ElemIndex w = L.element(p);
    if (w == kIdentity) {
      if (PT.fixator(G.flat_of(w)).size() != 1)
        report.fail("fixator of the identity flat is not trivial");
      continue;
    }
    const auto& expected = PT.fixator(G.flat_of(w));
    std::size_t effective_cap = G.length(w) <= 3 ? 0 : cap;
    for (const auto& word : enumerate_red(G, w, effective_cap)) {
      ++words;
      if (subgroup_closure(G, word) != expected) {
        report.fail("reduced decomposition of element " + std::to_string(w) +
                    " generates the wrong subgroup");
        if (report.counterexamples.size() > 8) return report;
      }
    }
  }
  report.detail = std::to_string(words) + " reduced decompositions checked";
  return report;
}

/// Every fixator subgroup is conjugate to a noncrossing one, i.e. to the
/// fixator of Ker(w-1) for some divisor w of c.
inline CheckReport nc_parabolic_conjugacy_check(const NcpLattice& L, const ParabolicTable& PT) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"nc_parabolic_conjugacy", G.name()};
  auto orbits = PT.flat_orbits();
  std::uint32_t orbit_count = 0;
  for (auto o : orbits) orbit_count = std::max(orbit_count, o + 1);
  std::vector<bool> orbit_has_nc(orbit_count, false);
  for (std::uint32_t p = 0; p < L.size(); ++p)
    orbit_has_nc[orbits[G.flat_of(L.element(p))]] = true;
  for (std::uint32_t o = 0; o < orbit_count; ++o)
    if (!orbit_has_nc[o])
      report.fail("flat orbit " + std::to_string(o) + " contains no noncrossing parabolic");
  report.detail = std::to_string(PT.flat_count()) + " flats in " + std::to_string(orbit_count) +
                  " orbits";
  return report;
}

/// The map {classes of parabolic Coxeter elements} -> {orbits of flats}
/// induced by w -> Ker(w-1) is a bijection.
inline CheckReport class_flat_bijection_check(const NcpLattice& L, const ParabolicTable& PT) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"class_flat_bijection", G.name()};
  auto orbits = PT.flat_orbits();
  std::uint32_t orbit_count = 0;
  for (auto o : orbits) orbit_count = std::max(orbit_count, o + 1);

  // classes meeting the lattice, mapped through the flat of any member
  std::map<std::uint32_t, std::uint32_t> class_to_orbit;
  for (const auto& cls : G.classes()) {
    bool meets = false;
    std::set<std::uint32_t> images;
    for (ElemIndex w : cls.members) {
      if (L.contains(w)) meets = true;
      images.insert(orbits[G.flat_of(w)]);
    }
    if (!meets) continue;
    if (images.size() != 1) {
      report.fail("class " + std::to_string(cls.id) + " maps to several flat orbits");
      continue;
    }
    auto [it, fresh] = class_to_orbit.emplace(cls.id, *images.begin());
    (void)it;
    (void)fresh;
  }
  std::set<std::uint32_t> hit;
  for (const auto& [cls, orbit] : class_to_orbit) {
    if (!hit.insert(orbit).second)
      report.fail("two parabolic Coxeter classes map to flat orbit " + std::to_string(orbit));
  }
  if (hit.size() != orbit_count)
    report.fail("flat orbits not exhausted: " + std::to_string(hit.size()) + " of " +
                std::to_string(orbit_count));
  report.detail = std::to_string(class_to_orbit.size()) + " parabolic Coxeter classes, " +
                  std::to_string(orbit_count) + " flat orbits";
  return report;
}

/// Inside any fixator, relative reflection length agrees with the global
/// one on lattice elements of the subgroup.
inline CheckReport parabolic_length_check(const NcpLattice& L, const ParabolicTable& PT) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"parabolic_length", G.name()};
  std::size_t compared = 0;
  for (std::size_t f = 0; f < PT.flat_count(); ++f) {
    const auto& P = PT.fixator(f);
    auto rel = PT.relative_lengths(f);
    for (std::size_t idx = 0; idx < P.size(); ++idx) {
      if (!L.contains(P[idx])) continue;
      ++compared;
      if (rel[idx] != G.length(P[idx])) {
        report.fail("relative length differs at element " + std::to_string(P[idx]) + " in flat " +
                    std::to_string(f));
        if (report.counterexamples.size() > 8) return report;
      }
    }
  }
  report.detail = std::to_string(compared) + " (flat, element) pairs compared";
  return report;
}

}  // namespace ncpfact
