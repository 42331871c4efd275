#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncpfact/catalog.hpp"
#include "ncpfact/report.hpp"

namespace ncpfact {

using ElemIndex = std::uint32_t;
inline constexpr ElemIndex kIdentity = 0;

struct ConjClass {
  std::uint32_t id = 0;
  ElemIndex min_element = 0;
  std::vector<ElemIndex> members;  // ascending
  unsigned length = 0;             // class functions, validated during build
  unsigned fix_codim = 0;
  unsigned element_order = 0;
};

/// A flat realized as the fixed space Ker(w-1) of at least one element,
/// stored as its unique RREF basis.
struct Flat {
  std::vector<CycVector> basis;
  std::string key;
  unsigned codim = 0;
};

struct BuildOptions {
  std::size_t element_cap = 10000;
};

/// Fully tabulated finite reflection group: element matrices, index-level
/// multiplication, reflection lengths, fixed flats, conjugacy classes and a
/// chosen Coxeter element. Immutable once built; queries are thread-safe.
class ReflectionGroup {
 public:
  static ReflectionGroup build(GroupSpec spec, BuildOptions options = {}) {
    return ReflectionGroup(std::move(spec), options);
  }

  const GroupSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  std::size_t size() const { return elements_.size(); }
  unsigned rank() const { return spec_.rank; }
  unsigned conductor() const { return spec_.conductor; }
  unsigned coxeter_number() const { return spec_.coxeter_number(); }

  const CycMatrix& matrix_of(ElemIndex i) const { return elements_[i]; }
  std::string element_key(ElemIndex i) const { return elements_[i].to_string(); }

  ElemIndex mul(ElemIndex a, ElemIndex b) const { return mul_table_[std::size_t(a) * size() + b]; }
  ElemIndex inv(ElemIndex a) const { return inv_table_[a]; }
  /// a x a^{-1}
  ElemIndex conj(ElemIndex a, ElemIndex x) const { return mul(mul(a, x), inv(a)); }
  ElemIndex cayley(ElemIndex a, unsigned gen) const { return cayley_[a][gen]; }

  ElemIndex power(ElemIndex a, long e) const {
    unsigned o = order_of(a);
    long r = e % static_cast<long>(o);
    if (r < 0) r += o;
    ElemIndex acc = kIdentity;
    for (long k = 0; k < r; ++k) acc = mul(acc, a);
    return acc;
  }

  unsigned length(ElemIndex i) const { return length_[i]; }
  unsigned fix_codim(ElemIndex i) const { return fix_codim_[i]; }
  unsigned order_of(ElemIndex i) const { return order_[i]; }

  const std::vector<ElemIndex>& reflections() const { return reflections_; }
  bool is_reflection(ElemIndex i) const { return fix_codim_[i] == 1 && length_[i] == 1; }

  std::uint32_t class_of(ElemIndex i) const { return class_of_[i]; }
  const std::vector<ConjClass>& classes() const { return classes_; }

  ElemIndex coxeter() const { return cox_; }

  const std::vector<ElemIndex>& generator_elements() const { return generator_elements_; }

  std::size_t flat_of(ElemIndex i) const { return flat_of_[i]; }
  const Flat& flat(std::size_t fid) const { return flats_[fid]; }
  const std::vector<Flat>& flats() const { return flats_; }

  /// Basis of Ker(w - 1) in canonical RREF form.
  const std::vector<CycVector>& fixed_flat(ElemIndex i) const { return flats_[flat_of_[i]].basis; }

  const std::vector<ElemIndex>& elements_of_length(unsigned k) const {
    static const std::vector<ElemIndex> empty;
    return k < length_buckets_.size() ? length_buckets_[k] : empty;
  }

  unsigned max_length() const { return static_cast<unsigned>(length_buckets_.size() - 1); }

  /// Rebuilds a group from cached tables (see cache.hpp). The caller is
  /// responsible for having validated the content hash.
  static ReflectionGroup from_tables(GroupSpec spec, std::vector<CycMatrix> elements,
                                     std::vector<std::vector<ElemIndex>> cayley) {
    return ReflectionGroup(std::move(spec), std::move(elements), std::move(cayley));
  }

 private:
  ReflectionGroup(GroupSpec spec, BuildOptions options) : spec_(std::move(spec)) {
    validate_spec();
    close_by_breadth_first(options.element_cap);
    finish_tables();
  }

  ReflectionGroup(GroupSpec spec, std::vector<CycMatrix> elements,
                  std::vector<std::vector<ElemIndex>> cayley)
      : spec_(std::move(spec)), elements_(std::move(elements)), cayley_(std::move(cayley)) {
    validate_spec();
    if (elements_.empty() || cayley_.size() != elements_.size())
      throw std::invalid_argument("inconsistent cached tables");
    rebuild_bfs_tree_from_cayley();
    finish_tables();
  }

  void validate_spec() const {
    if (spec_.rank == 0) throw std::invalid_argument("group rank must be positive");
    if (spec_.generators.size() != spec_.rank)
      throw std::invalid_argument("well-generated catalog entry needs rank-many generators");
    if (spec_.degrees.size() != spec_.rank)
      throw std::invalid_argument("catalog entry needs rank-many degrees");
    for (std::size_t i = 1; i < spec_.degrees.size(); ++i)
      if (spec_.degrees[i - 1] > spec_.degrees[i])
        throw std::invalid_argument("degrees must be ascending");
    for (const auto& g : spec_.generators) {
      if (g.rows() != spec_.rank || g.cols() != spec_.rank)
        throw std::invalid_argument("generator dimension does not match rank");
      if (g.conductor() != spec_.conductor)
        throw std::invalid_argument("generator conductor does not match spec");
      CycMatrix shifted = g - CycMatrix::identity(spec_.rank, spec_.conductor);
      if (shifted.rank() != 1)
        throw std::invalid_argument("catalog generator is not a reflection");
    }
  }

  void close_by_breadth_first(std::size_t cap) {
    std::unordered_map<std::string, ElemIndex> index_of;
    elements_.push_back(CycMatrix::identity(spec_.rank, spec_.conductor));
    index_of.emplace(elements_[0].to_string(), 0);
    cayley_.push_back(std::vector<ElemIndex>(spec_.rank, 0));
    parent_.push_back(0);
    last_gen_.push_back(0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (unsigned g = 0; g < spec_.rank; ++g) {
        CycMatrix product = elements_[i] * spec_.generators[g];
        std::string key = product.to_string();
        auto it = index_of.find(key);
        ElemIndex j;
        if (it == index_of.end()) {
          j = static_cast<ElemIndex>(elements_.size());
          if (elements_.size() >= cap)
            throw std::runtime_error("group too large or spec wrong (cap " +
                                     std::to_string(cap) + " exceeded)");
          index_of.emplace(std::move(key), j);
          elements_.push_back(std::move(product));
          cayley_.push_back(std::vector<ElemIndex>(spec_.rank, 0));
          parent_.push_back(static_cast<ElemIndex>(i));
          last_gen_.push_back(g);
        } else {
          j = it->second;
        }
        cayley_[i][g] = j;
      }
    }
  }

  void rebuild_bfs_tree_from_cayley() {
    parent_.assign(size(), 0);
    last_gen_.assign(size(), 0);
    std::vector<bool> seen(size(), false);
    seen[0] = true;
    std::deque<ElemIndex> queue{0};
    std::size_t reached = 1;
    while (!queue.empty()) {
      ElemIndex i = queue.front();
      queue.pop_front();
      for (unsigned g = 0; g < spec_.rank; ++g) {
        ElemIndex j = cayley_[i][g];
        if (j >= size()) throw std::invalid_argument("cached cayley table out of range");
        if (!seen[j]) {
          seen[j] = true;
          if (j <= i) throw std::invalid_argument("cached cayley table is not in BFS order");
          parent_[j] = i;
          last_gen_[j] = g;
          queue.push_back(j);
          ++reached;
        }
      }
    }
    if (reached != size()) throw std::invalid_argument("cached cayley table is not connected");
  }

  void finish_tables() {
    const std::size_t m = size();
    if (Integer(m) != spec_.degree_product())
      throw std::invalid_argument("catalog validation error: product of degrees " +
                                  spec_.degree_product().str() + " != group order " +
                                  std::to_string(m));

    // Multiplication by index only: right factors decompose along the BFS
    // spanning tree, so each column is two table lookups per row.
    mul_table_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) mul_table_[i * m + 0] = static_cast<ElemIndex>(i);
    for (std::size_t j = 1; j < m; ++j) {
      ElemIndex p = parent_[j];
      unsigned g = last_gen_[j];
      for (std::size_t i = 0; i < m; ++i)
        mul_table_[i * m + j] = cayley_[mul_table_[i * m + p]][g];
    }

    inv_table_.assign(m, 0);
    std::vector<ElemIndex> gen_inverse(spec_.rank);
    generator_elements_.resize(spec_.rank);
    for (unsigned g = 0; g < spec_.rank; ++g) {
      ElemIndex ge = cayley_[0][g];
      generator_elements_[g] = ge;
      ElemIndex acc = ge, prev = kIdentity;
      while (acc != kIdentity) {
        prev = acc;
        acc = cayley_[acc][g];
      }
      gen_inverse[g] = prev;
    }
    for (std::size_t j = 1; j < m; ++j)
      inv_table_[j] = mul(gen_inverse[last_gen_[j]], inv_table_[parent_[j]]);
    for (std::size_t j = 0; j < m; ++j)
      if (mul(static_cast<ElemIndex>(j), inv_table_[j]) != kIdentity)
        throw invariant_violation("inverse table inconsistent");

    // Fixed spaces; their RREF bases are shared through the flat table.
    fix_codim_.assign(m, 0);
    flat_of_.assign(m, 0);
    std::unordered_map<std::string, std::size_t> flat_index;
    CycMatrix id = CycMatrix::identity(spec_.rank, spec_.conductor);
    for (std::size_t i = 0; i < m; ++i) {
      auto basis = (elements_[i] - id).kernel_basis();
      std::string key = subspace_to_string(basis);
      auto it = flat_index.find(key);
      std::size_t fid;
      if (it == flat_index.end()) {
        fid = flats_.size();
        flat_index.emplace(key, fid);
        unsigned codim = spec_.rank - static_cast<unsigned>(basis.size());
        flats_.push_back(Flat{std::move(basis), std::move(key), codim});
      } else {
        fid = it->second;
      }
      flat_of_[i] = fid;
      fix_codim_[i] = flats_[fid].codim;
    }

    for (std::size_t i = 0; i < m; ++i)
      if (fix_codim_[i] == 1) reflections_.push_back(static_cast<ElemIndex>(i));
    if (reflections_.size() != spec_.reflection_count_from_degrees())
      throw std::invalid_argument("catalog validation error: sum of (d_i - 1) = " +
                                  std::to_string(spec_.reflection_count_from_degrees()) +
                                  " != reflection count " + std::to_string(reflections_.size()));

    // Reflection length by BFS over the Cayley graph generated by all of R.
    length_.assign(m, static_cast<unsigned>(-1));
    length_[kIdentity] = 0;
    std::deque<ElemIndex> queue{kIdentity};
    while (!queue.empty()) {
      ElemIndex w = queue.front();
      queue.pop_front();
      for (ElemIndex r : reflections_) {
        ElemIndex next = mul(w, r);
        if (length_[next] == static_cast<unsigned>(-1)) {
          length_[next] = length_[w] + 1;
          queue.push_back(next);
        }
      }
    }
    unsigned max_len = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (length_[i] == static_cast<unsigned>(-1))
        throw invariant_violation("reflections do not generate the group");
      if (fix_codim_[i] > length_[i])
        throw invariant_violation("fixed-space codimension exceeds reflection length at element " +
                                  std::to_string(i));
      max_len = std::max(max_len, length_[i]);
    }
    length_buckets_.assign(max_len + 1, {});
    for (std::size_t i = 0; i < m; ++i)
      length_buckets_[length_[i]].push_back(static_cast<ElemIndex>(i));

    order_.assign(m, 1);
    for (std::size_t i = 1; i < m; ++i) {
      unsigned o = 1;
      ElemIndex acc = static_cast<ElemIndex>(i);
      while (acc != kIdentity) {
        acc = mul(acc, static_cast<ElemIndex>(i));
        ++o;
      }
      order_[i] = o;
    }

    build_conjugacy_classes();
    cox_ = find_coxeter_element();
  }

  void build_conjugacy_classes() {
    const std::size_t m = size();
    class_of_.assign(m, static_cast<std::uint32_t>(-1));
    for (std::size_t i = 0; i < m; ++i) {
      if (class_of_[i] != static_cast<std::uint32_t>(-1)) continue;
      std::uint32_t id = static_cast<std::uint32_t>(classes_.size());
      ConjClass cls;
      cls.id = id;
      cls.min_element = static_cast<ElemIndex>(i);
      std::deque<ElemIndex> queue{static_cast<ElemIndex>(i)};
      class_of_[i] = id;
      while (!queue.empty()) {
        ElemIndex w = queue.front();
        queue.pop_front();
        cls.members.push_back(w);
        for (ElemIndex g : generator_elements_) {
          ElemIndex t = conj(g, w);
          if (class_of_[t] == static_cast<std::uint32_t>(-1)) {
            class_of_[t] = id;
            queue.push_back(t);
          }
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      cls.length = length_[cls.min_element];
      cls.fix_codim = fix_codim_[cls.min_element];
      cls.element_order = order_[cls.min_element];
      for (ElemIndex w : cls.members) {
        if (length_[w] != cls.length)
          throw invariant_violation("reflection length is not constant on a conjugacy class");
        if (order_[w] != cls.element_order)
          throw invariant_violation("element order is not constant on a conjugacy class");
      }
      classes_.push_back(std::move(cls));
    }
  }

  // Least-index element of order h whose zeta_h-eigenspace is nonzero and
  // not contained in any reflecting hyperplane (Springer regularity, tested
  // exactly via RREF bases).
  ElemIndex find_coxeter_element() const {
    unsigned h = spec_.coxeter_number();
    if (spec_.conductor % h != 0)
      throw std::invalid_argument("conductor must be divisible by the Coxeter number");
    CyclotomicNumber zeta_h = CyclotomicNumber::zeta(spec_.conductor, spec_.conductor / h);
    for (std::size_t i = 0; i < size(); ++i) {
      if (order_[i] != h) continue;
      auto eigen = elements_[i].eigenspace(zeta_h);
      if (eigen.empty()) continue;
      bool regular = true;
      for (ElemIndex r : reflections_) {
        if (rref_contains(fixed_flat(r), eigen)) {
          regular = false;
          break;
        }
      }
      if (regular) return static_cast<ElemIndex>(i);
    }
    throw std::runtime_error("no regular element of order h found (catalog/conductor error)");
  }

  GroupSpec spec_;
  std::vector<CycMatrix> elements_;
  std::vector<std::vector<ElemIndex>> cayley_;
  std::vector<ElemIndex> parent_;
  std::vector<unsigned> last_gen_;
  std::vector<ElemIndex> mul_table_;
  std::vector<ElemIndex> inv_table_;
  std::vector<ElemIndex> generator_elements_;
  std::vector<unsigned> length_;
  std::vector<unsigned> fix_codim_;
  std::vector<unsigned> order_;
  std::vector<ElemIndex> reflections_;
  std::vector<std::vector<ElemIndex>> length_buckets_;
  std::vector<std::uint32_t> class_of_;
  std::vector<ConjClass> classes_;
  std::vector<Flat> flats_;
  std::vector<std::size_t> flat_of_;
  ElemIndex cox_ = 0;

 public:
  const std::vector<std::vector<ElemIndex>>& cayley_table() const { return cayley_; }
};

/// Lightweight handle to one group element.
struct GroupElement {
  const ReflectionGroup* group = nullptr;
  ElemIndex index = 0;

  GroupElement() = default;
  GroupElement(const ReflectionGroup& g, ElemIndex i) : group(&g), index(i) {
    if (i >= g.size()) throw std::invalid_argument("element index out of range");
  }
  const CycMatrix& matrix() const { return group->matrix_of(index); }
  unsigned length() const { return group->length(index); }
};

}  // namespace ncpfact
