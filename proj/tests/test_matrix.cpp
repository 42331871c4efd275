#include <catch2/catch_amalgamated.hpp>

#include "ncpfact/group.hpp"

using namespace ncpfact;

namespace {

// brute-force 2x2 characteristic polynomial: x^2 - tr x + det
struct CharPoly2 {
  CyclotomicNumber trace, det;
  CyclotomicNumber eval(const CyclotomicNumber& x) const { return x * x - trace * x + det; }
};

CharPoly2 char_poly_2x2(const CycMatrix& m) {
  return CharPoly2{m.at(0, 0) + m.at(1, 1),
                   m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)};
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
  CHECK(CycMatrix::identity(3, 4).rank() == 3);
  CHECK(CycMatrix(3, 3, 4).rank() == 0);
}

TEST_CASE("reflection generators have rank(g - 1) = 1, cross-checked by kernels") {
  for (const char* name : {"A3", "G4", "H3"}) {
    const GroupSpec* spec = find_group(builtin_catalog(), name);
    REQUIRE(spec);
    CycMatrix id = CycMatrix::identity(spec->rank, spec->conductor);
    for (const auto& g : spec->generators) {
      CycMatrix shifted = g - id;
      CHECK(shifted.rank() == 1);
      auto kernel = shifted.kernel_basis();
      CHECK(kernel.size() == spec->rank - 1);  // rank-nullity
      for (const auto& v : kernel) {           // independent check: (g-1)v = 0
        for (const auto& entry : shifted.apply(v)) CHECK(entry.is_zero());
      }
    }
  }
}

TEST_CASE("eigenspaces") {
  CycMatrix id = CycMatrix::identity(3, 4);
  auto full = id.eigenspace(CyclotomicNumber(4, 1));
  CHECK(full.size() == 3);  // identity fixes everything

  // Coxeter element of A2 as a 2x2 matrix: the zeta_3 eigenspace is a line.
  auto G = ReflectionGroup::build(*find_group(builtin_catalog(), "A2"));
  const CycMatrix& c = G.matrix_of(G.coxeter());
  CyclotomicNumber z3 = CyclotomicNumber::zeta(6, 2);
  auto eigen = c.eigenspace(z3);
  CHECK(eigen.size() == 1);
  // oracle: zeta_3 is a simple root of the brute-force characteristic polynomial
  auto poly = char_poly_2x2(c);
  CHECK(poly.eval(z3).is_zero());
  CyclotomicNumber other_root = poly.det / z3;  // product of roots = det
  CHECK_FALSE(other_root == z3);
}

TEST_CASE("rank-nullity across a whole group") {
  auto G = ReflectionGroup::build(*find_group(builtin_catalog(), "B2"));
  CycMatrix id = CycMatrix::identity(2, 4);
  for (ElemIndex w = 0; w < G.size(); ++w) {
    CycMatrix shifted = G.matrix_of(w) - id;
    CHECK(shifted.rank() + shifted.kernel_basis().size() == 2);
    CHECK(shifted.rank() == G.fix_codim(w));
  }
}

TEST_CASE("matrix text form round-trips") {
  const GroupSpec* spec = find_group(builtin_catalog(), "H3");
  REQUIRE(spec);
  for (const auto& g : spec->generators) {
    std::string text = g.to_string();
    CHECK(CycMatrix::parse(text).to_string() == text);
    CHECK(CycMatrix::parse(text) == g);
  }
}

TEST_CASE("subspace utilities") {
  unsigned N = 4;
  auto unit = [&](unsigned i) {
    CycVector v(3, CyclotomicNumber(N));
    v[i] = CyclotomicNumber(N, 1);
    return v;
  };
  auto plane12 = CycMatrix::rref_rows({unit(0), unit(1)}, 3, N);
  auto plane23 = CycMatrix::rref_rows({unit(1), unit(2)}, 3, N);
  auto line = span_intersection(plane12, plane23, 3, N);
  REQUIRE(line.size() == 1);
  CHECK(line[0] == unit(1));
  CHECK(rref_contains(plane12, line));
  CHECK(rref_contains(plane23, line));
  CHECK_FALSE(rref_contains(line, plane12));
  CHECK(subspace_to_string(std::vector<CycVector>{}) == "0");
}

TEST_CASE("stacked kernels intersect fixed spaces") {
  auto G = ReflectionGroup::build(*find_group(builtin_catalog(), "A3"));
  CycMatrix id = CycMatrix::identity(3, 4);
  ElemIndex r1 = G.reflections()[0], r2 = G.reflections()[1];
  CycMatrix a = G.matrix_of(r1) - id, b = G.matrix_of(r2) - id;
  auto intersection = stacked_kernel({&a, &b}, 3, 4);
  CHECK(rref_contains(G.fixed_flat(r1), intersection));
  CHECK(rref_contains(G.fixed_flat(r2), intersection));
}
