#pragma once

// Test-only permutation arithmetic, independent of the matrix engine. Used
// as the oracle for symmetric-group facts (lengths, cycle types, specific
// elements like the S6 witnesses) against which the built A-series groups
// are checked.

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ncpfact/group.hpp"

namespace oracle {

struct Perm {
  std::vector<unsigned> img;  // 0-based one-line: img[i] = sigma(i)

  static Perm identity(unsigned n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0u);
    return p;
  }

  // 1-based disjoint cycles, e.g. from_cycles(6, {{2,3},{1,5,6}})
  static Perm from_cycles(unsigned n, std::initializer_list<std::initializer_list<unsigned>> cycles) {
    Perm p = identity(n);
    for (const auto& cycle : cycles) {
      std::vector<unsigned> c(cycle.begin(), cycle.end());
      for (std::size_t i = 0; i < c.size(); ++i)
        p.img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    }
    return p;
  }

  unsigned size() const { return static_cast<unsigned>(img.size()); }

  unsigned operator()(unsigned x) const { return img[x]; }

  // function composition: (a*b)(x) = a(b(x))
  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.img.size());
    for (unsigned i = 0; i < a.img.size(); ++i) r.img[i] = a.img[b.img[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (unsigned i = 0; i < img.size(); ++i) r.img[img[i]] = i;
    return r;
  }

  bool is_identity() const {
    for (unsigned i = 0; i < img.size(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }

  std::vector<unsigned> cycle_type() const {
    std::vector<bool> seen(img.size(), false);
    std::vector<unsigned> type;
    for (unsigned i = 0; i < img.size(); ++i) {
      if (seen[i]) continue;
      unsigned len = 0, j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = img[j];
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<unsigned>());
    return type;
  }

  // absolute reflection length in S_n: n minus the number of cycles
  unsigned reflection_length() const {
    return size() - static_cast<unsigned>(cycle_type().size());
  }
};

// Maps a permutation of {1..n+1} into the built A_n group by sorting its
// one-line form with adjacent swaps (generator i is the transposition
// (i+1, i+2)). The mapping is a homomorphism for function composition.
inline ncpfact::ElemIndex elem_of_perm(const ncpfact::ReflectionGroup& G, const Perm& p) {
  if (p.size() != G.rank() + 1)
    throw std::invalid_argument("permutation degree does not match the group");
  std::vector<unsigned> line = p.img;
  std::vector<unsigned> word;
  for (;;) {
    bool sorted = true;
    for (unsigned i = 0; i + 1 < line.size(); ++i) {
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        word.push_back(i);
        sorted = false;
        break;
      }
    }
    if (sorted) break;
  }
  ncpfact::ElemIndex e = ncpfact::kIdentity;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    e = G.mul(e, G.generator_elements()[*it]);
  return e;
}

}  // namespace oracle
