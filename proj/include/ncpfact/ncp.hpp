#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ncpfact/group.hpp"
#include "ncpfact/report.hpp"

namespace ncpfact {

/// Absolute-order divisibility: u divides v iff the reflection lengths add.
inline bool divides(const ReflectionGroup& G, ElemIndex u, ElemIndex v) {
  return G.length(u) + G.length(G.mul(G.inv(u), v)) == G.length(v);
}

inline constexpr std::uint32_t kNotInLattice = std::numeric_limits<std::uint32_t>::max();

/// The divisor poset NCP_W(c) with its order matrix and meet/join tables.
/// Meets and joins are found by exhaustive bound search and verified to be
/// unique; a missing bound would contradict the lattice property and aborts.
class NcpLattice {
 public:
  static NcpLattice build(const ReflectionGroup& G, ElemIndex cox) {
    if (G.class_of(cox) != G.class_of(G.coxeter()))
      throw std::invalid_argument("build_ncp requires a Coxeter element");
    NcpLattice L;
    L.group_ = &G;
    L.cox_ = cox;
    for (ElemIndex w = 0; w < G.size(); ++w)
      if (divides(G, w, cox)) L.elems_.push_back(w);
    const std::uint32_t m = static_cast<std::uint32_t>(L.elems_.size());
    L.pos_of_.assign(G.size(), kNotInLattice);
    for (std::uint32_t p = 0; p < m; ++p) L.pos_of_[L.elems_[p]] = p;
    L.leq_.assign(std::size_t(m) * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j)
        L.leq_[std::size_t(i) * m + j] = divides(G, L.elems_[i], L.elems_[j]) ? 1 : 0;
    L.fill_meet_join();
    return L;
  }

  const ReflectionGroup& group() const { return *group_; }
  ElemIndex coxeter() const { return cox_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  const std::vector<ElemIndex>& elements() const { return elems_; }
  ElemIndex element(std::uint32_t pos) const { return elems_[pos]; }

  bool contains(ElemIndex w) const { return pos_of_[w] != kNotInLattice; }
  std::uint32_t position(ElemIndex w) const {
    std::uint32_t p = pos_of_[w];
    if (p == kNotInLattice) throw std::invalid_argument("element not in the lattice");
    return p;
  }

  bool leq(std::uint32_t i, std::uint32_t j) const { return leq_[std::size_t(i) * size() + j]; }
  std::uint32_t meet(std::uint32_t i, std::uint32_t j) const {
    return meet_[std::size_t(i) * size() + j];
  }
  std::uint32_t join(std::uint32_t i, std::uint32_t j) const {
    return join_[std::size_t(i) * size() + j];
  }

  unsigned rank_of(std::uint32_t pos) const { return group_->length(elems_[pos]); }
  std::uint32_t class_of(std::uint32_t pos) const { return group_->class_of(elems_[pos]); }

  /// Positions of the cover relations (Hasse diagram edges).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse_edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    const std::uint32_t m = size();
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) {
        if (i == j || !leq(i, j)) continue;
        if (rank_of(j) != rank_of(i) + 1) continue;  // covers in a graded poset
        edges.emplace_back(i, j);
      }
    return edges;
  }

  /// Conjugacy class ids present in the lattice, ascending.
  std::vector<std::uint32_t> class_ids() const {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t p = 0; p < size(); ++p) ids.push_back(class_of(p));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

 private:
  void fill_meet_join() {
    const std::uint32_t m = size();
    meet_.assign(std::size_t(m) * m, 0);
    join_.assign(std::size_t(m) * m, 0);
    std::vector<std::uint32_t> bucket;
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = i; j < m; ++j) {
        bucket.clear();
        for (std::uint32_t k = 0; k < m; ++k)
          if (leq(k, i) && leq(k, j)) bucket.push_back(k);
        std::uint32_t best = bound_of(bucket, /*lower=*/true, i, j);
        meet_[std::size_t(i) * m + j] = meet_[std::size_t(j) * m + i] = best;
        bucket.clear();
        for (std::uint32_t k = 0; k < m; ++k)
          if (leq(i, k) && leq(j, k)) bucket.push_back(k);
        best = bound_of(bucket, /*lower=*/false, i, j);
        join_[std::size_t(i) * m + j] = join_[std::size_t(j) * m + i] = best;
      }
  }

  std::uint32_t bound_of(const std::vector<std::uint32_t>& bucket, bool lower, std::uint32_t i,
                         std::uint32_t j) const {
    if (bucket.empty())
      throw invariant_violation("lattice property failed: no common bound for positions " +
                                std::to_string(i) + "," + std::to_string(j));
    std::uint32_t best = bucket[0];
    for (std::uint32_t k : bucket) {
      unsigned rk = rank_of(k), rb = rank_of(best);
      if (lower ? rk > rb : rk < rb) best = k;
    }
    for (std::uint32_t k : bucket)
      if (lower ? !leq(k, best) : !leq(best, k))
        throw invariant_violation("lattice property failed: bound not unique for positions " +
                                  std::to_string(i) + "," + std::to_string(j));
    return best;
  }

  const ReflectionGroup* group_ = nullptr;
  ElemIndex cox_ = 0;
  std::vector<ElemIndex> elems_;
  std::vector<std::uint32_t> pos_of_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> meet_, join_;
};

inline NcpLattice build_ncp(const ReflectionGroup& G, ElemIndex cox) {
  return NcpLattice::build(G, cox);
}

inline NcpLattice build_ncp(const ReflectionGroup& G) { return NcpLattice::build(G, G.coxeter()); }

/// Injectivity of w -> Ker(w-1) on the lattice, and the order reversal
/// u <= v iff Ker(u-1) contains Ker(v-1).
inline CheckReport brady_watt_check(const NcpLattice& L) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"brady_watt", G.name()};
  const std::uint32_t m = L.size();
  std::vector<std::size_t> flats(m);
  for (std::uint32_t p = 0; p < m; ++p) flats[p] = G.flat_of(L.element(p));
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) {
      if (i != j && flats[i] == flats[j]) {
        report.fail("fixed spaces coincide for elements " + std::to_string(L.element(i)) + " and " +
                    std::to_string(L.element(j)));
        return report;
      }
      bool order = L.leq(i, j);
      bool geometry = rref_contains(G.flat(flats[i]).basis, G.flat(flats[j]).basis);
      if (order != geometry) {
        report.fail("order/geometry mismatch at pair (" + std::to_string(L.element(i)) + "," +
                    std::to_string(L.element(j)) + ")");
        return report;
      }
    }
  report.detail = std::to_string(m) + " elements, " + std::to_string(std::size_t(m) * m) +
                  " ordered pairs compared";
  return report;
}

/// Left divisibility coincides with right divisibility on the whole group.
inline CheckReport left_right_divisibility_check(const ReflectionGroup& G) {
  CheckReport report{"left_right_divisibility", G.name()};
  const ElemIndex m = static_cast<ElemIndex>(G.size());
  for (ElemIndex u = 0; u < m; ++u)
    for (ElemIndex v = 0; v < m; ++v) {
      bool left = divides(G, u, v);
      bool right = G.length(G.mul(v, G.inv(u))) + G.length(u) == G.length(v);
      if (left != right) {
        report.fail("left/right divisibility differ at (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
        return report;
      }
    }
  report.detail = "all " + std::to_string(std::size_t(m) * m) + " pairs";
  return report;
}

/// Conjugating c maps the lattice onto the lattice of the conjugate,
/// order-isomorphically.
inline CheckReport ncp_conjugation_check(const NcpLattice& L, ElemIndex a) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"ncp_conjugation", G.name()};
  ElemIndex c2 = G.conj(a, L.coxeter());
  NcpLattice L2 = NcpLattice::build(G, c2);
  if (L2.size() != L.size()) {
    report.fail("conjugate lattice has different size");
    return report;
  }
  for (std::uint32_t p = 0; p < L.size(); ++p) {
    ElemIndex image = G.conj(a, L.element(p));
    if (!L2.contains(image)) {
      report.fail("conjugate of element " + std::to_string(L.element(p)) +
                  " is not a divisor of the conjugate Coxeter element");
      return report;
    }
  }
  for (std::uint32_t i = 0; i < L.size(); ++i)
    for (std::uint32_t j = 0; j < L.size(); ++j) {
      bool before = L.leq(i, j);
      bool after = L2.leq(L2.position(G.conj(a, L.element(i))),
                          L2.position(G.conj(a, L.element(j))));
      if (before != after) {
        report.fail("conjugation is not an order isomorphism at pair (" +
                    std::to_string(L.element(i)) + "," + std::to_string(L.element(j)) + ")");
        return report;
      }
    }
  report.detail = "conjugator " + std::to_string(a) + ", coxeter image " + std::to_string(c2);
  return report;
}

/// For each w in the lattice and each reduced decomposition (up to a cap),
/// Ker(w-1) equals the intersection of the reflection hyperplanes.
/// RedEnumerator: callable (ElemIndex w, cap) -> vector<vector<ElemIndex>>.
template <typename RedEnumerator>
CheckReport kernel_intersection_check(const NcpLattice& L, RedEnumerator&& reds,
                                      std::size_t cap = 64) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"kernel_intersection", G.name()};
  std::size_t decompositions = 0;
  for (std::uint32_t p = 0; p < L.size(); ++p) {
    ElemIndex w = L.element(p);
    const auto& flat_w = G.fixed_flat(w);
    for (const auto& word : reds(w, cap)) {
      ++decompositions;
      std::vector<const CycMatrix*> blocks;
      std::vector<CycMatrix> shifted;
      shifted.reserve(word.size());
      CycMatrix id = CycMatrix::identity(G.rank(), G.conductor());
      for (ElemIndex r : word) shifted.push_back(G.matrix_of(r) - id);
      for (const auto& b : shifted) blocks.push_back(&b);
      auto intersection = stacked_kernel(blocks, G.rank(), G.conductor());
      if (subspace_to_string(intersection) != subspace_to_string(flat_w)) {
        report.fail("kernel mismatch for element " + std::to_string(w));
        if (report.counterexamples.size() > 8) return report;
      }
    }
  }
  report.detail = std::to_string(decompositions) + " reduced decompositions checked";
  return report;
}

}  // namespace ncpfact
