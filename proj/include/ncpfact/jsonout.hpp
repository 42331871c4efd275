#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncpfact/verification.hpp"

namespace ncpfact {

// Insertion-ordered JSON keeps the emitted bytes deterministic.
using Json = nlohmann::ordered_json;

inline Json json_check(const CheckReport& r) {
  Json j;
  j["check_name"] = r.name;
  j["group"] = r.group;
  j["pass"] = r.pass;
  j["counterexamples"] = r.counterexamples;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

/// Timings are deliberately omitted: JSON output is byte-identical across
/// runs with a fixed configuration.
inline Json json_suite(const SuiteReport& suite) {
  Json j;
  j["group"] = suite.group;
  j["pass"] = suite.pass;
  j["checks"] = Json::array();
  for (const auto& c : suite.checks) j["checks"].push_back(json_check(c.report));
  return j;
}

inline Json json_group_summary(const ReflectionGroup& G, const NcpLattice& L,
                               std::size_t red_count) {
  Json j;
  j["group"] = G.name();
  j["rank"] = G.rank();
  j["order"] = G.size();
  j["degrees"] = G.spec().degrees;
  j["conductor"] = G.conductor();
  j["coxeter_number"] = G.coxeter_number();
  j["reflections"] = G.reflections().size();
  j["conjugacy_classes"] = G.classes().size();
  j["ncp_size"] = L.size();
  j["red_count"] = red_count;
  j["coxeter_element"] = G.element_key(G.coxeter());
  return j;
}

inline Json json_factorization(const ReflectionGroup& G, const std::vector<ElemIndex>& factors) {
  Json j = Json::array();
  for (ElemIndex f : factors) j.push_back(G.element_key(f));
  return j;
}

inline Json json_red(const ReflectionGroup& G, const std::vector<Factorization>& reds) {
  Json j;
  j["group"] = G.name();
  j["target"] = G.element_key(G.coxeter());
  j["count"] = reds.size();
  j["expected"] = red_count_formula(G).str();
  j["factorizations"] = Json::array();
  for (const auto& f : reds) {
    Json entry;
    entry["indices"] = f.factors;
    entry["factors"] = json_factorization(G, f.factors);
    j["factorizations"].push_back(std::move(entry));
  }
  return j;
}

inline Json json_orbit_report(const ReflectionGroup& G, const PartitionShape& shape,
                              const std::vector<HurwitzOrbit>& orbits) {
  Json j;
  j["group"] = G.name();
  j["shape"] = shape.to_string();
  j["orbit_count"] = orbits.size();
  j["orbits"] = Json::array();
  for (const auto& orbit : orbits) {
    Json o;
    o["size"] = orbit.size();
    if (orbit.long_factor_class)
      o["long_factor_class"] = *orbit.long_factor_class;
    else
      o["long_factor_class"] = nullptr;
    o["representative_indices"] = orbit.representative;
    o["representative"] = json_factorization(G, orbit.representative);
    j["orbits"].push_back(std::move(o));
  }
  return j;
}

inline Json json_lattice(const NcpLattice& L) {
  const ReflectionGroup& G = L.group();
  Json j;
  j["group"] = G.name();
  j["coxeter_element"] = G.element_key(L.coxeter());
  j["size"] = L.size();
  j["elements"] = Json::array();
  for (std::uint32_t p = 0; p < L.size(); ++p) {
    Json e;
    e["index"] = L.element(p);
    e["matrix"] = G.element_key(L.element(p));
    e["length"] = L.rank_of(p);
    e["class"] = L.class_of(p);
    j["elements"].push_back(std::move(e));
  }
  j["hasse_edges"] = Json::array();
  for (const auto& [a, b] : L.hasse_edges()) j["hasse_edges"].push_back(Json::array({a, b}));
  Json meets = Json::array(), joins = Json::array();
  for (std::uint32_t i = 0; i < L.size(); ++i) {
    Json mrow = Json::array(), jrow = Json::array();
    for (std::uint32_t k = 0; k < L.size(); ++k) {
      mrow.push_back(L.meet(i, k));
      jrow.push_back(L.join(i, k));
    }
    meets.push_back(std::move(mrow));
    joins.push_back(std::move(jrow));
  }
  j["meet"] = std::move(meets);
  j["join"] = std::move(joins);
  return j;
}

// -- CSV ------------------------------------------------------------------

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string csv_suite(const std::vector<SuiteReport>& suites) {
  std::string out = "group,check,pass,detail\n";
  for (const auto& suite : suites)
    for (const auto& c : suite.checks)
      out += csv_escape(suite.group) + ',' + csv_escape(c.report.name) + ',' +
             (c.report.pass ? "1" : "0") + ',' + csv_escape(c.report.detail) + '\n';
  return out;
}

inline std::string csv_summary(const ReflectionGroup& G, const NcpLattice& L,
                               std::size_t red_count) {
  std::string degrees;
  for (std::size_t i = 0; i < G.spec().degrees.size(); ++i) {
    if (i) degrees += ' ';
    degrees += std::to_string(G.spec().degrees[i]);
  }
  std::string out = "group,rank,order,degrees,coxeter_number,reflections,ncp_size,red_count\n";
  out += csv_escape(G.name()) + ',' + std::to_string(G.rank()) + ',' + std::to_string(G.size()) +
         ',' + csv_escape(degrees) + ',' + std::to_string(G.coxeter_number()) + ',' +
         std::to_string(G.reflections().size()) + ',' + std::to_string(L.size()) + ',' +
         std::to_string(red_count) + '\n';
  return out;
}

inline std::string csv_orbits(const ReflectionGroup& G, const PartitionShape& shape,
                              const std::vector<HurwitzOrbit>& orbits) {
  std::string out = "group,shape,orbit,size,long_factor_class\n";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    out += csv_escape(G.name()) + ',' + csv_escape(shape.to_string()) + ',' + std::to_string(i) +
           ',' + std::to_string(orbits[i].size()) + ',';
    out += orbits[i].long_factor_class ? std::to_string(*orbits[i].long_factor_class)
                                       : std::string("-");
    out += '\n';
  }
  return out;
}

// -- human-readable table --------------------------------------------------

inline std::string table_suite(const SuiteReport& suite) {
  std::ostringstream os;
  os << "== " << suite.group << " ==\n";
  for (const auto& c : suite.checks) {
    os << (c.report.pass ? "  PASS  " : "  FAIL  ") << std::left << std::setw(34) << c.report.name
       << std::right << std::setw(7) << c.millis << " ms";
    if (!c.report.detail.empty()) os << "  " << c.report.detail;
    os << '\n';
    for (const auto& ce : c.report.counterexamples) os << "        ! " << ce << '\n';
  }
  os << (suite.pass ? "  suite: PASS\n" : "  suite: FAIL\n");
  return os.str();
}

inline std::string table_summary(const ReflectionGroup& G, const NcpLattice& L,
                                 std::size_t red_count) {
  std::ostringstream os;
  os << "group           " << G.name() << '\n'
     << "rank            " << G.rank() << '\n'
     << "order           " << G.size() << '\n';
  os << "degrees         ";
  for (std::size_t i = 0; i < G.spec().degrees.size(); ++i)
    os << (i ? " " : "") << G.spec().degrees[i];
  os << '\n'
     << "coxeter number  " << G.coxeter_number() << '\n'
     << "conductor       " << G.conductor() << '\n'
     << "reflections     " << G.reflections().size() << '\n'
     << "classes         " << G.classes().size() << '\n'
     << "|NCP|           " << L.size() << '\n'
     << "|Red(c)|        " << red_count << '\n';
  return os.str();
}

inline std::string table_orbits(const ReflectionGroup& G, const PartitionShape& shape,
                                const std::vector<HurwitzOrbit>& orbits) {
  std::ostringstream os;
  os << "group " << G.name() << ", shape " << shape.to_string() << ": " << orbits.size()
     << " Hurwitz orbit(s)\n";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    os << "  orbit " << i << ": size " << orbits[i].size();
    if (orbits[i].long_factor_class)
      os << ", long factor class " << *orbits[i].long_factor_class;
    os << ", representative (";
    for (std::size_t k = 0; k < orbits[i].representative.size(); ++k)
      os << (k ? " " : "") << orbits[i].representative[k];
    os << ")\n";
  }
  return os.str();
}

}  // namespace ncpfact
