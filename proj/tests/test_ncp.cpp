#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ncpfact/factorization.hpp"
#include "support/permutation_oracle.hpp"

using namespace ncpfact;
using oracle::Perm;

namespace {

ReflectionGroup build(const char* name) {
  const GroupSpec* spec = find_group(builtin_catalog(), name);
  REQUIRE(spec != nullptr);
  return ReflectionGroup::build(*spec);
}

}  // namespace

TEST_CASE("divisibility basics") {
  auto G = build("A3");
  for (ElemIndex w = 0; w < G.size(); ++w) {
    CHECK(divides(G, kIdentity, w));
    CHECK(divides(G, w, w));
  }
}

TEST_CASE("divides in S3 against the brute-force length table") {
  auto G = build("A2");
  ElemIndex t12 = oracle::elem_of_perm(G, Perm::from_cycles(3, {{1, 2}}));
  ElemIndex t13 = oracle::elem_of_perm(G, Perm::from_cycles(3, {{1, 3}}));
  // (12)^{-1}(13) = (132) is a 3-cycle of length 2, so 1 + 2 != l((13)) = 1
  CHECK(G.length(t12) == 1);
  CHECK(G.length(G.mul(G.inv(t12), t13)) == 2);
  CHECK_FALSE(divides(G, t12, t13));
}

TEST_CASE("prefixes of reduced decompositions divide") {
  auto G = build("B3");
  auto words = enumerate_red(G, G.coxeter(), 10);
  for (const auto& word : words) {
    ElemIndex prefix = kIdentity;
    for (ElemIndex r : word) {
      prefix = G.mul(prefix, r);
      CHECK(divides(G, prefix, G.coxeter()));
      CHECK(divides(G, r, G.coxeter()));
    }
  }
}

TEST_CASE("A2 lattice is {1, three reflections, c}") {
  auto G = build("A2");
  auto L = build_ncp(G);
  CHECK(L.size() == 5);
  std::set<ElemIndex> expected{kIdentity, G.coxeter()};
  for (ElemIndex r : G.reflections()) expected.insert(r);
  std::set<ElemIndex> actual(L.elements().begin(), L.elements().end());
  CHECK(actual == expected);

  // meets and joins by hand: two distinct reflections meet at 1, join at c
  std::uint32_t p = L.position(G.reflections()[0]);
  std::uint32_t q = L.position(G.reflections()[1]);
  CHECK(L.element(L.meet(p, q)) == kIdentity);
  CHECK(L.element(L.join(p, q)) == G.coxeter());
  CHECK(L.hasse_edges().size() == 6);  // 1 -> r (x3), r -> c (x3)

  // five distinct fixed spaces (Brady-Watt injectivity, directly)
  std::set<std::size_t> flats;
  for (ElemIndex w : L.elements()) flats.insert(G.flat_of(w));
  CHECK(flats.size() == 5);
}

TEST_CASE("catalan counts for small groups") {
  auto a3 = build("A3");
  CHECK(build_ncp(a3).size() == 14);
  auto b2 = build("B2");
  CHECK(build_ncp(b2).size() == 6);
}

TEST_CASE("order relation is a bounded partial order") {
  auto G = build("B3");
  auto L = build_ncp(G);
  std::uint32_t bottom = L.position(kIdentity), top = L.position(G.coxeter());
  for (std::uint32_t i = 0; i < L.size(); ++i) {
    CHECK(L.leq(i, i));
    CHECK(L.leq(bottom, i));
    CHECK(L.leq(i, top));
    for (std::uint32_t j = 0; j < L.size(); ++j) {
      if (L.leq(i, j) && L.leq(j, i)) CHECK(i == j);
      for (std::uint32_t k = 0; k < L.size(); ++k)
        if (L.leq(i, j) && L.leq(j, k)) CHECK(L.leq(i, k));
    }
  }
}

TEST_CASE("Brady-Watt order isomorphism") {
  for (const char* name : {"A2", "A3", "B2", "G4", "I2(6)"}) {
    INFO(name);
    auto G = build(name);
    auto L = build_ncp(G);
    auto report = brady_watt_check(L);
    CHECK(report.pass);
  }
  // bottom/top: Ker(1-1) = V contains Ker(c-1) = 0
  auto G = build("A2");
  CHECK(rref_contains(G.fixed_flat(kIdentity), G.fixed_flat(G.coxeter())));
}

TEST_CASE("kernels equal hyperplane intersections along reduced decompositions") {
  auto G = build("A3");
  auto L = build_ncp(G);
  auto report = kernel_intersection_check(
      L, [&](ElemIndex w, std::size_t cap) { return enumerate_red(G, w, cap); }, 64);
  CHECK(report.pass);
}

TEST_CASE("conjugating the Coxeter element transports the lattice") {
  for (const char* name : {"A2", "B2", "G4"}) {
    INFO(name);
    auto G = build(name);
    auto L = build_ncp(G);
    CHECK(ncp_conjugation_check(L, G.reflections().front()).pass);
  }
}

TEST_CASE("left and right divisibility coincide") {
  auto G = build("G(3,3,3)");
  CHECK(left_right_divisibility_check(G).pass);
}

TEST_CASE("build_ncp rejects non-Coxeter top elements") {
  auto G = build("B2");
  CHECK_THROWS_AS(build_ncp(G, G.reflections().front()), std::invalid_argument);
}
