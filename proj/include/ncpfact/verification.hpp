#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ncpfact/hurwitz.hpp"
#include "ncpfact/parabolic.hpp"

namespace ncpfact {

/// Chapoton's product formula Z_W(N) = prod (d_i + (N-1)h) / d_i, exact.
inline Integer zeta_formula(const GroupSpec& spec, unsigned N) {
  if (N == 0) throw std::invalid_argument("zeta polynomial argument must be positive");
  unsigned h = spec.coxeter_number();
  Integer num = 1, den = 1;
  for (unsigned d : spec.degrees) {
    num *= Integer(d) + Integer(N - 1) * h;
    den *= d;
  }
  if (num % den != 0)
    throw std::invalid_argument("zeta product is not integral (catalog degree error)");
  return num / den;
}

inline Integer catalan_number(const GroupSpec& spec) { return zeta_formula(spec, 2); }

/// Number of multichains w_1 <= ... <= w_{N-1} in the lattice, computed by
/// exact powers of the reflexive incidence matrix.
inline Integer count_multichains(const NcpLattice& L, unsigned N) {
  if (N < 2) throw std::invalid_argument("multichain count needs N >= 2");
  const std::uint32_t m = L.size();
  // ones * M^(N-2) * ones
  std::vector<Integer> v(m, 1);
  for (unsigned step = 0; step + 2 < N; ++step) {
    std::vector<Integer> next(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      const Integer& vi = v[i];
      if (vi == 0) continue;
      for (std::uint32_t j = 0; j < m; ++j)
        if (L.leq(i, j)) next[j] += vi;
    }
    v = std::move(next);
  }
  Integer total = 0;
  for (const auto& x : v) total += x;
  return total;
}

/// |FACT_k(c)| for k = 1..n.
inline std::vector<Integer> fact_counts(const ReflectionGroup& G) {
  unsigned n = G.length(G.coxeter());
  std::vector<Integer> counts;
  for (unsigned k = 1; k <= n; ++k)
    counts.push_back(count_fact_blocks(G, G.coxeter(), k));
  return counts;
}

/// Exact agreement of the three counts: the product formula, the multichain
/// count, and sum_k |FACT_k(c)| C(N,k), for N = 1..n_max.
inline CheckReport chain_fact_identity_check(const NcpLattice& L,
                                             const std::vector<Integer>& counts,
                                             unsigned n_max = 6) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"chapoton_identities", G.name()};
  for (unsigned N = 1; N <= n_max; ++N) {
    Integer formula = zeta_formula(G.spec(), N);
    Integer from_facts = 0;
    for (unsigned k = 1; k <= counts.size(); ++k)
      from_facts += counts[k - 1] * binomial(N, k);
    if (from_facts != formula) {
      report.fail("N=" + std::to_string(N) + ": sum |FACT_k| C(N,k) = " + from_facts.str() +
                  " but formula gives " + formula.str());
    }
    if (N >= 2) {
      Integer chains = count_multichains(L, N);
      if (chains != formula)
        report.fail("N=" + std::to_string(N) + ": multichain count " + chains.str() +
                    " but formula gives " + formula.str());
    }
  }
  std::string counts_text;
  for (const auto& c : counts) {
    if (!counts_text.empty()) counts_text += ',';
    counts_text += c.str();
  }
  report.detail = "N=1.." + std::to_string(n_max) + "; |FACT_k| = " + counts_text;
  return report;
}

struct SuiteOptions {
  unsigned n_max = 6;                   // Chapoton identity range
  std::size_t kernel_red_cap = 64;      // reduced decompositions per element
  std::size_t generation_cap = 200;     // for reduced_generation_check
  std::size_t marked_sample = 500;      // random pairs when Red(c) is large
  std::size_t marked_exhaustive_limit = 200;
  std::uint64_t seed = 0x5eed;          // fixed: reports must be reproducible
};

struct SuiteCheck {
  CheckReport report;
  std::int64_t millis = 0;
};

struct SuiteReport {
  std::string group;
  std::vector<SuiteCheck> checks;
  bool pass = true;

  void add(CheckReport r, std::int64_t ms) {
    pass = pass && r.pass;
    checks.push_back(SuiteCheck{std::move(r), ms});
  }
};

/// Catalog validation identities (also enforced during the build; restated
/// here so the consolidated report shows them explicitly).
inline CheckReport catalog_validation_check(const ReflectionGroup& G) {
  CheckReport report{"catalog_validation", G.name()};
  if (G.spec().degree_product() != Integer(G.size()))
    report.fail("product of degrees != |W|");
  if (G.spec().reflection_count_from_degrees() != G.reflections().size())
    report.fail("sum of (d_i - 1) != |R|");
  report.detail = "|W| = " + std::to_string(G.size()) + ", |R| = " +
                  std::to_string(G.reflections().size());
  return report;
}

/// Random associativity triples plus full identity/inverse rows.
inline CheckReport group_axioms_check(const ReflectionGroup& G, std::uint64_t seed,
                                      std::size_t triples = 2000) {
  CheckReport report{"group_axioms", G.name()};
  const ElemIndex m = static_cast<ElemIndex>(G.size());
  for (ElemIndex a = 0; a < m; ++a) {
    if (G.mul(a, kIdentity) != a || G.mul(kIdentity, a) != a) {
      report.fail("identity row/column broken at " + std::to_string(a));
      break;
    }
    if (G.mul(a, G.inv(a)) != kIdentity || G.mul(G.inv(a), a) != kIdentity) {
      report.fail("inverse row broken at " + std::to_string(a));
      break;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElemIndex> pick(0, m - 1);
  for (std::size_t t = 0; t < triples; ++t) {
    ElemIndex a = pick(rng), b = pick(rng), c = pick(rng);
    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
      report.fail("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + ")");
      break;
    }
  }
  report.detail = std::to_string(triples) + " random triples";
  return report;
}

/// Reflections are closed under conjugation.
inline CheckReport reflection_conjugation_check(const ReflectionGroup& G) {
  CheckReport report{"reflection_conjugation", G.name()};
  for (ElemIndex r : G.reflections())
    for (ElemIndex g : G.generator_elements())
      if (!G.is_reflection(G.conj(g, r))) {
        report.fail("conjugate of reflection " + std::to_string(r) + " is not a reflection");
        return report;
      }
  report.detail = std::to_string(G.reflections().size()) + " reflections";
  return report;
}

/// length = codim of fixed space on the lattice.
inline CheckReport length_codim_check(const NcpLattice& L) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"length_equals_codim_on_ncp", G.name()};
  for (std::uint32_t p = 0; p < L.size(); ++p) {
    ElemIndex w = L.element(p);
    if (G.length(w) != G.fix_codim(w))
      report.fail("element " + std::to_string(w) + ": l = " + std::to_string(G.length(w)) +
                  ", codim = " + std::to_string(G.fix_codim(w)));
  }
  report.detail = std::to_string(L.size()) + " lattice elements";
  return report;
}

inline CheckReport catalan_count_check(const NcpLattice& L) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"catalan_count", G.name()};
  Integer expected = catalan_number(G.spec());
  if (Integer(L.size()) != expected)
    report.fail("|NCP| = " + std::to_string(L.size()) + " but formula gives " + expected.str());
  report.detail = "|NCP| = " + std::to_string(L.size());
  return report;
}

inline CheckReport red_count_check(const ReflectionGroup& G,
                                   const std::vector<Factorization>& reds) {
  CheckReport report{"red_count", G.name()};
  Integer expected = red_count_formula(G);
  if (Integer(reds.size()) != expected)
    report.fail("|Red(c)| = " + std::to_string(reds.size()) + " but n!h^n/|W| = " +
                expected.str());
  report.detail = "|Red(c)| = " + std::to_string(reds.size());
  return report;
}

inline CheckReport hurwitz_transitivity_check(const ReflectionGroup& G,
                                              const std::vector<Factorization>& reds) {
  CheckReport report{"hurwitz_transitivity", G.name()};
  auto orbits = orbit_decomposition(G, reds);
  if (orbits.size() != 1)
    report.fail("Red(c) splits into " + std::to_string(orbits.size()) + " orbits");
  report.detail = std::to_string(reds.size()) + " reduced decompositions";
  return report;
}

/// Primitive Hurwitz orbits are classified by the conjugacy class of the
/// long factor, for each k.
inline CheckReport primitive_orbit_check(const ReflectionGroup& G, const NcpLattice& L,
                                         unsigned k) {
  CheckReport report{"primitive_orbits_k" + std::to_string(k), G.name()};
  unsigned n = G.length(G.coxeter());
  auto facts = enumerate_fact_shape(G, G.coxeter(), PartitionShape::primitive(k, n));
  auto orbits = orbit_decomposition(G, facts);
  std::set<std::uint32_t> length_k_classes;
  for (std::uint32_t p = 0; p < L.size(); ++p)
    if (L.rank_of(p) == k) length_k_classes.insert(L.class_of(p));
  if (orbits.size() != length_k_classes.size())
    report.fail(std::to_string(orbits.size()) + " orbits but " +
                std::to_string(length_k_classes.size()) + " classes of length-" +
                std::to_string(k) + " divisors");
  std::set<std::uint32_t> seen;
  for (const auto& orbit : orbits) {
    if (!orbit.long_factor_class_constant) {
      report.fail("long-factor class not constant on an orbit");
      continue;
    }
    if (!orbit.long_factor_class) {
      report.fail("orbit without a long factor");
      continue;
    }
    if (!seen.insert(*orbit.long_factor_class).second)
      report.fail("two orbits share long-factor class " +
                  std::to_string(*orbit.long_factor_class));
    if (!length_k_classes.count(*orbit.long_factor_class))
      report.fail("orbit long factor lies in an unexpected class");
  }
  report.detail = std::to_string(facts.size()) + " factorizations in " +
                  std::to_string(orbits.size()) + " orbits";
  return report;
}

/// Strong conjugacy coincides with group conjugacy on the lattice, and the
/// reflection-only conjugator variant produces the identical partition.
inline CheckReport strong_conjugacy_check(const NcpLattice& L) {
  const ReflectionGroup& G = L.group();
  CheckReport report{"strong_conjugacy", G.name()};
  auto all = strong_conjugacy_classes(L, ConjugatorSet::All);
  auto refl = strong_conjugacy_classes(L, ConjugatorSet::ReflectionsOnly);
  if (all != refl) report.fail("reflection-only conjugators give a different partition");
  // compare with W-conjugacy restricted to the lattice
  std::map<std::uint32_t, std::set<std::uint32_t>> by_class;
  for (std::uint32_t p = 0; p < L.size(); ++p) by_class[L.class_of(p)].insert(all[p]);
  std::set<std::uint32_t> strong_ids(all.begin(), all.end());
  for (const auto& [cls, strong] : by_class)
    if (strong.size() != 1)
      report.fail("W-class " + std::to_string(cls) + " splits into " +
                  std::to_string(strong.size()) + " strong classes");
  if (by_class.size() != strong_ids.size())
    report.fail("strong classes merge distinct W-classes");
  report.detail = std::to_string(strong_ids.size()) + " strong classes on " +
                  std::to_string(L.size()) + " elements";
  return report;
}

/// Reflection case: between reduced decompositions whose first factors are
/// conjugate reflections there is a braid pure with respect to the first
/// strand; different classes are never connected this way.
inline CheckReport marked_reflection_check(const ReflectionGroup& G,
                                           const std::vector<Factorization>& reds,
                                           const SuiteOptions& options) {
  CheckReport report{"marked_reflection_reachability", G.name()};
  if (reds.empty()) {
    report.detail = "no reduced decompositions";
    return report;
  }
  // one breadth-first sweep per first-factor class, then O(1) pair queries
  std::map<std::uint32_t, std::size_t> sweep_of_class;
  std::vector<MarkedOrbitExplorer> sweeps;
  std::map<std::uint32_t, std::vector<std::size_t>> reds_by_class;
  for (std::size_t i = 0; i < reds.size(); ++i)
    reds_by_class[G.class_of(reds[i].factors[0])].push_back(i);
  for (const auto& [cls, indices] : reds_by_class) {
    sweep_of_class.emplace(cls, sweeps.size());
    sweeps.emplace_back(G, reds[indices.front()], 0u);
  }
  auto reachable_from_class = [&](std::uint32_t cls, const Factorization& g) {
    return sweeps[sweep_of_class.at(cls)].reachable(g.factors, 0);
  };

  std::size_t checked = 0;
  if (reds.size() <= options.marked_exhaustive_limit) {
    for (const auto& [cls, indices] : reds_by_class)
      for (std::size_t j : indices) {
        ++checked;
        if (!reachable_from_class(cls, reds[j]))
          report.fail("pair with conjugate first reflections not connected (class " +
                      std::to_string(cls) + ")");
      }
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, reds.size() - 1);
    for (std::size_t t = 0; t < options.marked_sample; ++t) {
      std::size_t i = pick(rng), j = pick(rng);
      std::uint32_t ci = G.class_of(reds[i].factors[0]);
      std::uint32_t cj = G.class_of(reds[j].factors[0]);
      if (ci != cj) continue;
      ++checked;
      if (!reachable_from_class(ci, reds[j]))
        report.fail("sampled pair with conjugate first reflections not connected");
    }
  }
  // negative direction: distinct classes must never be connected
  for (const auto& [cls, indices] : reds_by_class)
    for (const auto& [other, other_indices] : reds_by_class) {
      if (cls == other) continue;
      if (reachable_from_class(cls, reds[other_indices.front()]))
        report.fail("marker connected different reflection classes " + std::to_string(cls) +
                    " and " + std::to_string(other));
    }
  report.detail = std::to_string(checked) + " positive pairs, " +
                  std::to_string(reds_by_class.size()) + " first-factor classes";
  return report;
}

/// Runs every structural and counting check for one group, in a fixed
/// order, and aggregates the outcome.
inline SuiteReport run_full_suite(const ReflectionGroup& G, const SuiteOptions& options = {}) {
  SuiteReport suite;
  suite.group = G.name();
  auto timed = [&suite](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = fn();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    suite.add(std::move(r), ms);
  };

  NcpLattice L = build_ncp(G);
  ParabolicTable PT(G);
  auto reds = enumerate_red_factorizations(G, G.coxeter());

  timed([&] { return catalog_validation_check(G); });
  timed([&] { return group_axioms_check(G, options.seed); });
  timed([&] { return reflection_conjugation_check(G); });
  timed([&] { return length_codim_check(L); });
  timed([&] { return catalan_count_check(L); });
  timed([&] { return left_right_divisibility_check(G); });
  timed([&] { return brady_watt_check(L); });
  timed([&] {
    return kernel_intersection_check(
        L, [&](ElemIndex w, std::size_t cap) { return enumerate_red(G, w, cap); },
        options.kernel_red_cap);
  });
  timed([&] {
    ElemIndex conjugator = G.reflections().empty() ? kIdentity : G.reflections().front();
    return ncp_conjugation_check(L, conjugator);
  });
  timed([&] { return steinberg_check(PT); });
  timed([&] { return parabolic_coxeter_equivalence_check(L, PT); });
  timed([&] { return reduced_generation_check(L, PT, options.generation_cap); });
  timed([&] { return nc_parabolic_conjugacy_check(L, PT); });
  timed([&] { return class_flat_bijection_check(L, PT); });
  timed([&] { return parabolic_length_check(L, PT); });
  timed([&] { return red_count_check(G, reds); });
  timed([&] { return hurwitz_transitivity_check(G, reds); });
  for (unsigned k = 2; k <= G.rank(); ++k)
    timed([&] { return primitive_orbit_check(G, L, k); });
  timed([&] { return strong_conjugacy_check(L); });
  timed([&] { return marked_reflection_check(G, reds, options); });
  timed([&] { return chain_fact_identity_check(L, fact_counts(G), options.n_max); });
  return suite;
}

}  // namespace ncpfact
