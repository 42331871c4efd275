#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "ncpfact/factorization.hpp"

using namespace ncpfact;

namespace {

ReflectionGroup build(const char* name) {
  const GroupSpec* spec = find_group(builtin_catalog(), name);
  REQUIRE(spec != nullptr);
  return ReflectionGroup::build(*spec);
}

}  // namespace

TEST_CASE("composition and shape validation") {
  Composition zero_part{{2, 0, 1}};
  CHECK_THROWS_AS(zero_part.validate(3), std::invalid_argument);
  Composition wrong_sum{{2, 2}};
  CHECK_THROWS_AS(wrong_sum.validate(3), std::invalid_argument);
  Composition fine{{2, 1}};
  CHECK_NOTHROW(fine.validate(3));

  auto shape = PartitionShape::parse("1,2,1");
  CHECK(shape.parts == std::vector<unsigned>{2, 1, 1});
  CHECK(shape.to_string() == "2,1,1");
  CHECK(shape.is_primitive());
  CHECK_FALSE(PartitionShape::parse("2,2").is_primitive());
  CHECK(PartitionShape::parse("1,1,1").sum() == 3);
  CHECK(PartitionShape::primitive(3, 5).parts == std::vector<unsigned>{3, 1, 1});
  CHECK_THROWS_AS(PartitionShape::parse("abc"), std::invalid_argument);

  CHECK(compositions_of(4, 2).size() == 3);      // 1+3, 2+2, 3+1
  CHECK(compositions_of_shape(PartitionShape::parse("2,1,1")).size() == 3);
}

TEST_CASE("reduced decompositions of small Coxeter elements") {
  auto a2 = build("A2");
  auto red_a2 = enumerate_red(a2, a2.coxeter());  // validates against 2! 3^2 / 6 = 3
  CHECK(red_a2.size() == 3);

  auto b2 = build("B2");
  CHECK(enumerate_red(b2, b2.coxeter()).size() == 4);  // 2! 4^2 / 8

  auto a3 = build("A3");
  CHECK(enumerate_red(a3, a3.coxeter()).size() == 16);  // 3! 4^3 / 24

  auto h3 = build("H3");
  CHECK(enumerate_red(h3, h3.coxeter()).size() == 50);  // 3! 10^3 / 120

  auto g4 = build("G4");
  CHECK(enumerate_red(g4, g4.coxeter()).size() == 3);  // 2! 6^2 / 24
}

TEST_CASE("single-block factorization is the element itself") {
  auto G = build("B3");
  auto facts = enumerate_fact(G, G.coxeter(), Composition{{3}});
  REQUIRE(facts.size() == 1);
  CHECK(facts[0].factors == std::vector<ElemIndex>{G.coxeter()});
}

TEST_CASE("enumeration is complete, duplicate-free and deterministic") {
  auto G = build("A3");
  for (const auto& mu : compositions_of(3, 2)) {
    auto facts = enumerate_fact(G, G.coxeter(), mu);
    std::set<std::vector<ElemIndex>> as_set;
    for (const auto& f : facts) {
      f.validate(G.coxeter());
      as_set.insert(f.factors);
    }
    CHECK(as_set.size() == facts.size());
    CHECK(std::is_sorted(facts.begin(), facts.end()));
    auto again = enumerate_fact(G, G.coxeter(), mu);
    CHECK(again == facts);
  }
}

TEST_CASE("compositions of the same shape are equinumerous") {
  for (const char* name : {"A3", "B3", "G(3,3,3)"}) {
    INFO(name);
    auto G = build(name);
    for (unsigned k = 2; k <= G.rank(); ++k) {
      std::map<std::vector<unsigned>, std::set<Integer>> counts_by_shape;
      for (const auto& mu : compositions_of(G.rank(), k)) {
        auto shape = PartitionShape::of(mu.parts);
        counts_by_shape[shape.parts].insert(count_fact(G, G.coxeter(), mu));
      }
      for (const auto& [shape, counts] : counts_by_shape) CHECK(counts.size() == 1);
    }
  }
}

TEST_CASE("shape enumeration is the union over orderings") {
  auto G = build("A3");
  auto shape = PartitionShape::parse("2,1");
  auto all = enumerate_fact_shape(G, G.coxeter(), shape);
  Integer by_parts = 0;
  for (const auto& mu : compositions_of_shape(shape))
    by_parts += count_fact(G, G.coxeter(), mu);
  CHECK(Integer(all.size()) == by_parts);
  CHECK(count_fact_blocks(G, G.coxeter(), 2) == Integer(all.size()));
}

TEST_CASE("factorizations of non-Coxeter lattice elements") {
  auto G = build("A3");
  auto L = build_ncp(G);
  for (std::uint32_t p = 0; p < L.size(); ++p) {
    ElemIndex w = L.element(p);
    if (G.length(w) != 2) continue;
    auto words = enumerate_red(G, w);
    CHECK(!words.empty());
    for (const auto& word : words) {
      CHECK(word.size() == 2);
      CHECK(G.mul(word[0], word[1]) == w);
    }
  }
}

TEST_CASE("red cap stops enumeration early") {
  auto G = build("A3");
  CHECK(enumerate_red(G, G.coxeter(), 5).size() == 5);
}
