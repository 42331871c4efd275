#include <catch2/catch_amalgamated.hpp>

#include "ncpfact/verification.hpp"

using namespace ncpfact;

namespace {

ReflectionGroup build(const char* name) {
  const GroupSpec* spec = find_group(builtin_catalog(), name);
  REQUIRE(spec != nullptr);
  return ReflectionGroup::build(*spec);
}

// independent multichain count: direct nested scan over the order matrix
Integer multichains_by_scan(const NcpLattice& L, unsigned N) {
  REQUIRE(N >= 2);
  std::vector<std::vector<std::uint32_t>> chains{{}};
  for (unsigned slot = 0; slot + 1 < N; ++slot) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& chain : chains)
      for (std::uint32_t p = 0; p < L.size(); ++p) {
        if (!chain.empty() && !L.leq(chain.back(), p)) continue;
        auto extended = chain;
        extended.push_back(p);
        next.push_back(std::move(extended));
      }
    chains = std::move(next);
  }
  return Integer(chains.size());
}

}  // namespace

TEST_CASE("zeta formula values") {
  const auto catalog = builtin_catalog();
  CHECK(zeta_formula(*find_group(catalog, "A3"), 2) == 14);  // (6/2)(7/3)(8/4)
  CHECK(zeta_formula(*find_group(catalog, "B2"), 3) == 15);  // (10/2)(12/4)
  CHECK(zeta_formula(*find_group(catalog, "A2"), 3) == 12);  // (8/2)(9/3)
  for (const auto& spec : catalog) CHECK(zeta_formula(spec, 1) == 1);
  CHECK(catalan_number(*find_group(catalog, "A3")) == 14);
  CHECK_THROWS_AS(zeta_formula(*find_group(catalog, "A3"), 0), std::invalid_argument);
}

TEST_CASE("multichain counts against the direct scan") {
  auto G = build("A2");
  auto L = build_ncp(G);
  CHECK(count_multichains(L, 2) == Integer(L.size()));
  CHECK(count_multichains(L, 3) == 12);  // pairs u <= v in the 5-element lattice
  CHECK(count_multichains(L, 3) == multichains_by_scan(L, 3));
  CHECK(count_multichains(L, 4) == multichains_by_scan(L, 4));

  auto b2 = build("B2");
  auto Lb = build_ncp(b2);
  CHECK(count_multichains(Lb, 3) == 15);
  CHECK(count_multichains(Lb, 3) == multichains_by_scan(Lb, 3));

  // monotone in N
  auto a3 = build("A3");
  auto La = build_ncp(a3);
  Integer prev = 0;
  for (unsigned N = 2; N <= 6; ++N) {
    Integer cur = count_multichains(La, N);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("the three chain counts agree exactly") {
  for (const char* name : {"A2", "A3", "B2", "B3", "G4", "G(3,3,3)", "I2(10)", "H3"}) {
    INFO(name);
    auto G = build(name);
    auto L = build_ncp(G);
    auto counts = fact_counts(G);
    REQUIRE(counts.size() == G.rank());
    CHECK(counts[0] == 1);                             // FACT_1 = {(c)}
    CHECK(counts.back() == red_count_formula(G));      // FACT_n = Red(c)
    CHECK(chain_fact_identity_check(L, counts, 6).pass);
  }
}

TEST_CASE("corrupted catalog degrees are reported as degree errors first") {
  GroupSpec bad = *find_group(builtin_catalog(), "A2");
  bad.degrees = {2, 4};
  CHECK_THROWS_WITH(ReflectionGroup::build(bad),
                    Catch::Matchers::ContainsSubstring("product of degrees"));
  // the zeta formula also rejects non-integral degree data
  GroupSpec odd = bad;
  odd.degrees = {3, 5};  // (3+5)(5+5)/15 is not an integer
  CHECK_THROWS_AS(zeta_formula(odd, 2), std::invalid_argument);
}

TEST_CASE("full suite on A2 passes quickly") {
  auto G = build("A2");
  auto t0 = std::chrono::steady_clock::now();
  auto suite = run_full_suite(G);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  CHECK(suite.pass);
  for (const auto& c : suite.checks) {
    INFO(c.report.name);
    CHECK(c.report.pass);
  }
  CHECK(elapsed < 1000);  // well under a second
}

TEST_CASE("suite checks carry group names and details") {
  auto G = build("A2");
  auto L = build_ncp(G);
  auto report = catalan_count_check(L);
  CHECK(report.name == "catalan_count");
  CHECK(report.group == "A2");
  CHECK(report.pass);
  CHECK_FALSE(report.detail.empty());
}
