#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "ncpfact/ncp.hpp"

namespace ncpfact {

/// An ordered list of positive parts summing to the length of the factored
/// element; the lengths of the blocks, in order.
struct Composition {
  std::vector<unsigned> parts;

  unsigned sum() const { return std::accumulate(parts.begin(), parts.end(), 0u); }
  std::size_t block_count() const { return parts.size(); }

  void validate(unsigned n) const {
    if (parts.empty()) throw std::invalid_argument("composition must have at least one part");
    for (unsigned p : parts)
      if (p == 0) throw std::invalid_argument("composition parts must be positive");
    if (sum() != n)
      throw std::invalid_argument("composition parts must sum to " + std::to_string(n));
  }
};

/// The unordered multiset of block lengths, canonically sorted decreasing.
struct PartitionShape {
  std::vector<unsigned> parts;  // descending

  static PartitionShape of(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
    return PartitionShape{std::move(parts)};
  }

  static PartitionShape primitive(unsigned k, unsigned n) {
    // k^1 1^(n-k)
    std::vector<unsigned> parts{k};
    for (unsigned i = k; i < n; ++i) parts.push_back(1);
    return PartitionShape{std::move(parts)};
  }

  unsigned sum() const { return std::accumulate(parts.begin(), parts.end(), 0u); }
  std::size_t block_count() const { return parts.size(); }

  bool is_primitive() const {
    return !parts.empty() && parts[0] >= 2 && (parts.size() == 1 || parts[1] == 1);
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts[i]);
    }
    return s;
  }

  static PartitionShape parse(std::string_view text) {
    std::vector<unsigned> parts;
    unsigned value = 0;
    bool have = false;
    for (char ch : text) {
      if (ch >= '0' && ch <= '9') {
        value = value * 10 + static_cast<unsigned>(ch - '0');
        have = true;
      } else if (ch == ',' || ch == ' ') {
        if (have) parts.push_back(value);
        value = 0;
        have = false;
      } else {
        throw std::invalid_argument("malformed shape: '" + std::string(text) + "'");
      }
    }
    if (have) parts.push_back(value);
    if (parts.empty()) throw std::invalid_argument("empty shape");
    return of(std::move(parts));
  }

  friend bool operator==(const PartitionShape& a, const PartitionShape& b) {
    return a.parts == b.parts;
  }
};

/// All compositions of n into exactly k positive parts, lexicographic.
inline std::vector<Composition> compositions_of(unsigned n, unsigned k) {
  std::vector<Composition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned slots) {
    if (slots == 1) {
      cur.push_back(rest);
      out.push_back(Composition{cur});
      cur.pop_back();
      return;
    }
    for (unsigned first = 1; first + (slots - 1) <= rest; ++first) {
      cur.push_back(first);
      rec(rest - first, slots - 1);
      cur.pop_back();
    }
  };
  if (k >= 1 && k <= n) rec(n, k);
  return out;
}

/// The distinct orderings of a shape's parts, lexicographic.
inline std::vector<Composition> compositions_of_shape(const PartitionShape& shape) {
  std::vector<unsigned> parts = shape.parts;
  std::sort(parts.begin(), parts.end());
  std::vector<Composition> out;
  do {
    out.push_back(Composition{parts});
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

/// An ordered tuple of non-identity elements whose product is the target
/// and whose reflection lengths add up to the target's length.
struct Factorization {
  const ReflectionGroup* group = nullptr;
  std::vector<ElemIndex> factors;

  ElemIndex product() const {
    ElemIndex p = kIdentity;
    for (ElemIndex f : factors) p = group->mul(p, f);
    return p;
  }

  unsigned length_sum() const {
    unsigned s = 0;
    for (ElemIndex f : factors) s += group->length(f);
    return s;
  }

  PartitionShape shape() const {
    std::vector<unsigned> lengths;
    lengths.reserve(factors.size());
    for (ElemIndex f : factors) lengths.push_back(group->length(f));
    return PartitionShape::of(std::move(lengths));
  }

  Composition composition() const {
    std::vector<unsigned> lengths;
    lengths.reserve(factors.size());
    for (ElemIndex f : factors) lengths.push_back(group->length(f));
    return Composition{std::move(lengths)};
  }

  void validate(ElemIndex target) const {
    for (ElemIndex f : factors)
      if (f == kIdentity) throw std::invalid_argument("factorization contains the identity");
    if (product() != target) throw std::invalid_argument("factor product mismatch");
    if (length_sum() != group->length(target))
      throw std::invalid_argument("factor lengths do not add up");
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.factors == b.factors;
  }
  friend bool operator<(const Factorization& a, const Factorization& b) {
    return a.factors < b.factors;
  }
};

namespace fact_detail {

// Depth-first enumeration along the divisor interval: pick the first block
// u of the prescribed length with u dividing the remaining target, recurse
// on u^{-1} t. The length telescopes, so the last block is forced.
template <typename Visitor>
void enumerate(const ReflectionGroup& G, ElemIndex target, const std::vector<unsigned>& mu,
               std::size_t step, std::vector<ElemIndex>& prefix, Visitor&& visit,
               bool& keep_going) {
  if (!keep_going) return;
  if (step + 1 == mu.size()) {
    if (G.length(target) != mu[step])
      throw invariant_violation("length bookkeeping failed in factorization enumeration");
    prefix.push_back(target);
    keep_going = visit(prefix);
    prefix.pop_back();
    return;
  }
  for (ElemIndex u : G.elements_of_length(mu[step])) {
    if (!keep_going) return;
    if (!divides(G, u, target)) continue;
    prefix.push_back(u);
    enumerate(G, G.mul(G.inv(u), target), mu, step + 1, prefix, visit, keep_going);
    prefix.pop_back();
  }
}

}  // namespace fact_detail

/// Visits every factorization of `target` with block lengths `mu`, in
/// lexicographic order of the factor index tuples. The visitor returns
/// false to stop early.
template <typename Visitor>
void for_each_factorization(const ReflectionGroup& G, ElemIndex target, const Composition& mu,
                            Visitor&& visit) {
  mu.validate(G.length(target));
  std::vector<ElemIndex> prefix;
  bool keep_going = true;
  fact_detail::enumerate(G, target, mu.parts, 0, prefix,
                         [&](const std::vector<ElemIndex>& factors) {
                           return visit(factors);
                         },
                         keep_going);
}

/// FACT_mu(target): complete, duplicate-free, deterministic order.
inline std::vector<Factorization> enumerate_fact(const ReflectionGroup& G, ElemIndex target,
                                                 const Composition& mu) {
  std::vector<Factorization> out;
  for_each_factorization(G, target, mu, [&](const std::vector<ElemIndex>& factors) {
    out.push_back(Factorization{&G, factors});
    return true;
  });
  return out;
}

/// FACT_lambda(target): the disjoint union over the orderings of the shape.
inline std::vector<Factorization> enumerate_fact_shape(const ReflectionGroup& G, ElemIndex target,
                                                       const PartitionShape& shape) {
  std::vector<Factorization> out;
  for (const auto& mu : compositions_of_shape(shape)) {
    auto part = enumerate_fact(G, target, mu);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline Integer count_fact(const ReflectionGroup& G, ElemIndex target, const Composition& mu) {
  Integer n = 0;
  for_each_factorization(G, target, mu, [&](const std::vector<ElemIndex>&) {
    ++n;
    return true;
  });
  return n;
}

/// |FACT_k(target)| summed over all compositions into k blocks.
inline Integer count_fact_blocks(const ReflectionGroup& G, ElemIndex target, unsigned k) {
  Integer total = 0;
  for (const auto& mu : compositions_of(G.length(target), k)) total += count_fact(G, target, mu);
  return total;
}

/// The predicted |Red(c)| = n! h^n / |W| for the chosen Coxeter element.
inline Integer red_count_formula(const ReflectionGroup& G) {
  unsigned n = G.rank();
  Integer num = factorial(n) * int_pow(G.coxeter_number(), n);
  Integer den = static_cast<long>(G.size());
  if (num % den != 0)
    throw invariant_violation("n! h^n is not divisible by |W|");
  return num / den;
}

/// Red(w): all minimal reflection words for w, lexicographic; cap = 0 means
/// no cap. For the Coxeter element the count is validated against n!h^n/|W|.
inline std::vector<std::vector<ElemIndex>> enumerate_red(const ReflectionGroup& G, ElemIndex w,
                                                         std::size_t cap = 0) {
  std::vector<std::vector<ElemIndex>> out;
  unsigned len = G.length(w);
  if (len == 0) {
    out.push_back({});
    return out;
  }
  Composition mu{std::vector<unsigned>(len, 1u)};
  for_each_factorization(G, w, mu, [&](const std::vector<ElemIndex>& factors) {
    out.push_back(factors);
    return cap == 0 || out.size() < cap;
  });
  if (w == G.coxeter() && cap == 0) {
    Integer expected = red_count_formula(G);
    if (Integer(out.size()) != expected)
      throw invariant_violation("|Red(c)| = " + std::to_string(out.size()) +
                                " does not match n!h^n/|W| = " + expected.str());
  }
  return out;
}

inline std::vector<Factorization> enumerate_red_factorizations(const ReflectionGroup& G,
                                                               ElemIndex w) {
  std::vector<Factorization> out;
  for (auto& word : enumerate_red(G, w)) out.push_back(Factorization{&G, std::move(word)});
  return out;
}

}  // namespace ncpfact
