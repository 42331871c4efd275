#pragma once

#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncpfact/matrix.hpp"

namespace ncpfact {

/// Catalog entry for one well-generated irreducible reflection group:
/// generator matrices plus the invariant degrees (catalog data, validated
/// against the built group by the two Shephard-Todd identities).
struct GroupSpec {
  std::string name;
  unsigned rank = 0;
  unsigned conductor = 1;
  std::vector<unsigned> degrees;  // ascending; degrees.back() is the Coxeter number
  std::vector<CycMatrix> generators;
  std::string source;

  unsigned coxeter_number() const { return degrees.empty() ? 0 : degrees.back(); }

  Integer degree_product() const {
    Integer p = 1;
    for (unsigned d : degrees) p *= d;
    return p;
  }

  unsigned reflection_count_from_degrees() const {
    unsigned s = 0;
    for (unsigned d : degrees) s += d - 1;
    return s;
  }

  /// Deterministic text form; also the hashing base for the table cache.
  std::string canonical_string() const {
    std::string s = "group " + name + "\nrank " + std::to_string(rank) + "\nconductor " +
                    std::to_string(conductor) + "\ndegrees";
    for (unsigned d : degrees) s += ' ' + std::to_string(d);
    s += "\nsource " + source + '\n';
    for (const auto& g : generators) s += "gen " + g.to_string() + '\n';
    return s;
  }

  std::uint64_t content_hash() const {
    // FNV-1a over the canonical string, seeded with the format version.
    std::uint64_t h = 14695981039346656037ull ^ 0x76312eu;  // "v1."
    for (unsigned char ch : canonical_string()) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    return h;
  }
};

namespace catalog_detail {

inline unsigned lcm(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

inline CycMatrix from_rationals(unsigned n, unsigned conductor,
                                const std::vector<std::vector<Rational>>& rows) {
  CycMatrix m(n, n, conductor);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) m.at(r, c) = CyclotomicNumber(conductor, rows[r][c]);
  return m;
}

inline CycMatrix permutation_swap(unsigned n, unsigned conductor, unsigned i, unsigned j) {
  CycMatrix m = CycMatrix::identity(n, conductor);
  m.at(i, i) = CyclotomicNumber(conductor, 0);
  m.at(j, j) = CyclotomicNumber(conductor, 0);
  m.at(i, j) = CyclotomicNumber(conductor, 1);
  m.at(j, i) = CyclotomicNumber(conductor, 1);
  return m;
}

// Type A_{n}: simple reflections in the simple-root basis of the essential
// n-dimensional representation of the symmetric group S_{n+1}.
inline GroupSpec type_a(unsigned n) {
  GroupSpec spec;
  spec.name = "A" + std::to_string(n);
  spec.rank = n;
  spec.conductor = lcm(n + 1, 2);
  for (unsigned d = 2; d <= n + 1; ++d) spec.degrees.push_back(d);
  spec.source = "symmetric group S" + std::to_string(n + 1) + ", simple-root basis";
  for (unsigned i = 0; i < n; ++i) {
    // s_i(alpha_i) = -alpha_i, s_i(alpha_j) = alpha_j + alpha_i for |i-j| = 1.
    CycMatrix m = CycMatrix::identity(n, spec.conductor);
    m.at(i, i) = CyclotomicNumber(spec.conductor, -1);
    if (i > 0) m.at(i, i - 1) = CyclotomicNumber(spec.conductor, 1);
    if (i + 1 < n) m.at(i, i + 1) = CyclotomicNumber(spec.conductor, 1);
    spec.generators.push_back(std::move(m));
  }
  return spec;
}

// Type B_n in the standard orthonormal basis: adjacent coordinate swaps
// plus the sign change on the last coordinate.
inline GroupSpec type_b(unsigned n) {
  GroupSpec spec;
  spec.name = "B" + std::to_string(n);
  spec.rank = n;
  spec.conductor = 2 * n;
  for (unsigned d = 1; d <= n; ++d) spec.degrees.push_back(2 * d);
  spec.source = "hyperoctahedral group, coordinate basis";
  for (unsigned i = 0; i + 1 < n; ++i)
    spec.generators.push_back(permutation_swap(n, spec.conductor, i, i + 1));
  CycMatrix sign = CycMatrix::identity(n, spec.conductor);
  sign.at(n - 1, n - 1) = CyclotomicNumber(spec.conductor, -1);
  spec.generators.push_back(std::move(sign));
  return spec;
}

inline GroupSpec type_d4() {
  GroupSpec spec;
  spec.name = "D4";
  spec.rank = 4;
  spec.conductor = 6;
  spec.degrees = {2, 4, 4, 6};
  spec.source = "even-signed permutations of 4 coordinates";
  for (unsigned i = 0; i + 1 < 4; ++i)
    spec.generators.push_back(permutation_swap(4, spec.conductor, i, i + 1));
  // reflection in e3 + e4: e3 -> -e4, e4 -> -e3
  CycMatrix m = CycMatrix::identity(4, spec.conductor);
  m.at(2, 2) = CyclotomicNumber(spec.conductor, 0);
  m.at(3, 3) = CyclotomicNumber(spec.conductor, 0);
  m.at(2, 3) = CyclotomicNumber(spec.conductor, -1);
  m.at(3, 2) = CyclotomicNumber(spec.conductor, -1);
  spec.generators.push_back(std::move(m));
  return spec;
}

// Dihedral group I2(m) acting on C^2 diagonalizing the rotation:
// generators swap the eigenlines, one of them twisted by zeta_m.
inline GroupSpec type_i2(unsigned m) {
  GroupSpec spec;
  spec.name = "I2(" + std::to_string(m) + ")";
  spec.rank = 2;
  spec.conductor = lcm(m, 2);
  spec.degrees = {2, m};
  spec.source = "dihedral group of order " + std::to_string(2 * m) + ", rotation eigenbasis";
  CyclotomicNumber zm = CyclotomicNumber::zeta(spec.conductor, spec.conductor / m);
  CyclotomicNumber zm_inv = CyclotomicNumber::zeta(spec.conductor,
                                                   -static_cast<long>(spec.conductor / m));
  CycMatrix r1(2, 2, spec.conductor);
  r1.at(0, 1) = CyclotomicNumber(spec.conductor, 1);
  r1.at(1, 0) = CyclotomicNumber(spec.conductor, 1);
  CycMatrix r2(2, 2, spec.conductor);
  r2.at(0, 1) = zm_inv;
  r2.at(1, 0) = zm;
  spec.generators.push_back(std::move(r1));
  spec.generators.push_back(std::move(r2));
  return spec;
}

inline GroupSpec type_h3() {
  GroupSpec spec;
  spec.name = "H3";
  spec.rank = 3;
  spec.conductor = 10;
  spec.degrees = {2, 6, 10};
  spec.source = "icosahedral group, simple-root basis (diagram 5-3)";
  // golden ratio (1+sqrt5)/2 = 1 + zeta10^2 - zeta10^3
  CyclotomicNumber phi(10, 1);
  phi += CyclotomicNumber::zeta(10, 2);
  phi -= CyclotomicNumber::zeta(10, 3);
  auto one = CyclotomicNumber(10, 1);
  auto minus_one = CyclotomicNumber(10, -1);
  CycMatrix s1 = CycMatrix::identity(3, 10);
  s1.at(0, 0) = minus_one;
  s1.at(0, 1) = phi;
  CycMatrix s2 = CycMatrix::identity(3, 10);
  s2.at(1, 1) = minus_one;
  s2.at(1, 0) = phi;
  s2.at(1, 2) = one;
  CycMatrix s3 = CycMatrix::identity(3, 10);
  s3.at(2, 2) = minus_one;
  s3.at(2, 1) = one;
  spec.generators.push_back(std::move(s1));
  spec.generators.push_back(std::move(s2));
  spec.generators.push_back(std::move(s3));
  return spec;
}

inline GroupSpec type_f4() {
  GroupSpec spec;
  spec.name = "F4";
  spec.rank = 4;
  spec.conductor = 12;
  spec.degrees = {2, 6, 8, 12};
  spec.source = "F4 root system, coordinate basis";
  spec.generators.push_back(permutation_swap(4, 12, 1, 2));
  spec.generators.push_back(permutation_swap(4, 12, 2, 3));
  CycMatrix sign = CycMatrix::identity(4, 12);
  sign.at(3, 3) = CyclotomicNumber(12, -1);
  spec.generators.push_back(std::move(sign));
  Rational h(1, 2);
  spec.generators.push_back(from_rationals(4, 12,
      {{h, h, h, h}, {h, h, -h, -h}, {h, -h, h, -h}, {h, -h, -h, h}}));
  return spec;
}

// G4: the smallest genuinely complex case, two reflections of order 3
// satisfying the braid relation sts = tst.
inline GroupSpec type_g4() {
  GroupSpec spec;
  spec.name = "G4";
  spec.rank = 2;
  spec.conductor = 6;
  spec.degrees = {4, 6};
  spec.source = "Shephard-Todd G4 (binary tetrahedral), order-3 reflections";
  CyclotomicNumber z = CyclotomicNumber::zeta(6);  // zeta_6
  CyclotomicNumber z3 = CyclotomicNumber::zeta(6, 2);
  CyclotomicNumber one(6, 1);
  CyclotomicNumber third(6, Rational(1, 3));
  CycMatrix s(2, 2, 6);
  s.at(0, 0) = z3;
  s.at(1, 1) = one;
  CycMatrix t(2, 2, 6);
  t.at(0, 0) = (one + z) * third;                          // (1 + zeta6)/3
  t.at(0, 1) = one;
  t.at(1, 0) = (CyclotomicNumber(6, 2) - z - z) * third;   // (2 - 2 zeta6)/3
  t.at(1, 1) = (z + z - one) * third;                      // (2 zeta6 - 1)/3
  spec.generators.push_back(std::move(s));
  spec.generators.push_back(std::move(t));
  return spec;
}

inline GroupSpec type_g333() {
  GroupSpec spec;
  spec.name = "G(3,3,3)";
  spec.rank = 3;
  spec.conductor = 6;
  spec.degrees = {3, 3, 6};
  spec.source = "imprimitive G(3,3,3), twisted transposition generators";
  CyclotomicNumber z3 = CyclotomicNumber::zeta(6, 2);
  CyclotomicNumber z3_inv = CyclotomicNumber::zeta(6, 4);
  CycMatrix t = CycMatrix::identity(3, 6);
  t.at(0, 0) = CyclotomicNumber(6, 0);
  t.at(1, 1) = CyclotomicNumber(6, 0);
  t.at(0, 1) = z3_inv;
  t.at(1, 0) = z3;
  spec.generators.push_back(std::move(t));
  spec.generators.push_back(permutation_swap(3, 6, 0, 1));
  spec.generators.push_back(permutation_swap(3, 6, 1, 2));
  return spec;
}

}  // namespace catalog_detail

/// The shipped catalog: every entry is irreducible and well generated, and
/// small enough that full enumeration stays in seconds. Built once; the
/// returned reference stays valid for the program lifetime.
inline const std::vector<GroupSpec>& builtin_catalog() {
  static const std::vector<GroupSpec> catalog = [] {
    using namespace catalog_detail;
    std::vector<GroupSpec> cat;
    for (unsigned n = 1; n <= 5; ++n) cat.push_back(type_a(n));
    for (unsigned n = 2; n <= 4; ++n) cat.push_back(type_b(n));
    cat.push_back(type_d4());
    for (unsigned m = 3; m <= 12; ++m) cat.push_back(type_i2(m));
    cat.push_back(type_h3());
    cat.push_back(type_f4());
    cat.push_back(type_g4());
    cat.push_back(type_g333());
    return cat;
  }();
  return catalog;
}

inline const GroupSpec* find_group(const std::vector<GroupSpec>& catalog, std::string_view name) {
  for (const auto& spec : catalog)
    if (spec.name == name) return &spec;
  return nullptr;
}

inline constexpr const char* kCatalogHeader = "ncpfact-catalog-v1";

inline void write_catalog(std::ostream& os, const std::vector<GroupSpec>& catalog) {
  os << kCatalogHeader << '\n';
  for (const auto& spec : catalog) {
    os << spec.canonical_string() << "end\n";
  }
}

/// Parses the versioned catalog text format produced by write_catalog.
inline std::vector<GroupSpec> parse_catalog(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCatalogHeader)
    throw std::invalid_argument("not an ncpfact catalog (bad header)");
  std::vector<GroupSpec> catalog;
  GroupSpec current;
  bool open = false;
  auto expect_open = [&](const char* field) {
    if (!open)
      throw std::invalid_argument(std::string("catalog field '") + field + "' outside group");
  };
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "group") {
      if (open) throw std::invalid_argument("nested group at line " + std::to_string(line_no));
      open = true;
      current = GroupSpec{};
      ls >> std::ws;
      std::getline(ls, current.name);
    } else if (key == "rank") {
      expect_open("rank");
      ls >> current.rank;
    } else if (key == "conductor") {
      expect_open("conductor");
      ls >> current.conductor;
    } else if (key == "degrees") {
      expect_open("degrees");
      unsigned d;
      while (ls >> d) current.degrees.push_back(d);
    } else if (key == "source") {
      expect_open("source");
      ls >> std::ws;
      std::getline(ls, current.source);
    } else if (key == "gen") {
      expect_open("gen");
      ls >> std::ws;
      std::string body;
      std::getline(ls, body);
      current.generators.push_back(CycMatrix::parse(body));
    } else if (key == "end") {
      expect_open("end");
      catalog.push_back(std::move(current));
      open = false;
    } else {
      throw std::invalid_argument("unknown catalog key '" + key + "' at line " +
                                  std::to_string(line_no));
    }
  }
  if (open) throw std::invalid_argument("unterminated group entry in catalog");
  return catalog;
}

}  // namespace ncpfact
