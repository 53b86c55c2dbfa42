#include "ekr/json_io.hpp"

#include <json.hpp>

#include "ekr/perm_io.hpp"

namespace ekr {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", r.num}, {"den", r.den}};
}

ordered_json family_json(const PermGroup& g,
                         const std::vector<std::uint32_t>& indices) {
  ordered_json arr = ordered_json::array();
  for (std::uint32_t i : indices) arr.push_back(to_cycle_string(g.element(i)));
  return arr;
}

}  // namespace

std::string group_info_json(const PermGroup& g) {
  ordered_json j;
  j["name"] = g.name();
  j["degree"] = g.degree();
  j["order"] = g.order();
  ordered_json gens = ordered_json::array();
  for (const Perm& p : g.generators()) gens.push_back(to_cycle_string(p));
  j["generators"] = gens;
  j["transitive"] = is_transitive(g);
  j["two_transitive"] = is_2_transitive(g);
  j["primitive"] = is_transitive(g) && is_primitive(g);
  ordered_json orbs = ordered_json::array();
  for (const auto& orbit : orbits(g)) {
    ordered_json o = ordered_json::array();
    for (Point v : orbit) o.push_back(v + 1);  // 1-based like cycle notation
    orbs.push_back(o);
  }
  j["orbits"] = orbs;
  j["stabilizer_order"] = max_stabilizer_order(g);
  j["derangements"] = derangement_indices(g).size();
  return finish(j);
}

std::string density_report_json(const PermGroup& g, const DensityResult& r) {
  ordered_json j;
  j["name"] = g.name();
  j["degree"] = r.degree;
  j["order"] = r.order;
  j["stabilizer_order"] = r.stabilizer_order;
  j["alpha"] = r.alpha;
  j["rho"] = rational_json(r.rho);
  j["rho_display"] = to_string(r.rho);
  j["is_ekr"] = r.is_ekr;
  if (r.strict_ekr)
    j["is_strict_ekr"] = *r.strict_ekr;
  else
    j["is_strict_ekr"] = "not computed";
  j["family"] = family_json(g, r.family);
  j["bound_clique"] = family_json(g, r.bound_clique);
  j["method"] = r.method;
  j["nodes"] = r.nodes;
  return finish(j);
}

std::string classification_json(const PermGroup& g, const Classification2p& c) {
  ordered_json j;
  j["name"] = g.name();
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["p"] = c.p;
  j["class"] = to_string(c.cls);
  j["primitive"] = c.primitive;
  j["predicted_rho"] = rational_json(c.predicted_rho);
  j["detail"] = c.detail;
  return finish(j);
}

std::string suite_report_json(const SuiteReport& rep) {
  ordered_json j;
  j["suite"] = rep.suite;
  j["passed"] = rep.passed;
  j["failed"] = rep.failed;
  j["skipped"] = rep.skipped;
  j["ok"] = rep.ok();
  ordered_json checks = ordered_json::array();
  for (const SuiteCheck& c : rep.checks) {
    ordered_json e;
    e["subject"] = c.subject;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return finish(j);
}

std::string spectrum_json(const SpectrumReport& rep) {
  ordered_json j;
  ordered_json entries = ordered_json::array();
  for (const SpectrumEntry& e : rep.entries) {
    ordered_json g;
    g["name"] = e.name;
    g["degree"] = e.degree;
    g["order"] = e.order;
    g["rho"] = rational_json(e.rho);
    g["is_ekr"] = e.is_ekr;
    entries.push_back(g);
  }
  j["groups"] = entries;
  ordered_json counts = ordered_json::array();
  for (const auto& [value, count] : rep.counts) {
    ordered_json c;
    c["rho"] = rational_json(value);
    c["count"] = count;
    counts.push_back(c);
  }
  j["counts"] = counts;
  return finish(j);
}

}  // namespace ekr
