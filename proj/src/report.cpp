#include "frontlab/report.hpp"

#include <sstream>

#include "frontlab/invariants.hpp"

namespace frontlab {

Json laurent_json(const LaurentHalf& p) {
  Json terms = Json::array();
  for (const auto& [e, c2] : p.terms2())
    terms.push_back({e, Half::of_twice(c2).str()});
  return terms;
}

Json invariants_report(const Front& f) {
  Json j;
  int h = index_of(f);
  auto cd = cusp_data(f);
  LaurentHalf ql = lq(f), sl = s_lambda(f), sk = sk_polynomial(f);
  j["ind"] = h;
  j["C_plus"] = cd.c_plus.str();
  j["C_minus"] = cd.c_minus.str();
  j["l"] = bennequin(f);
  j["l_q"] = laurent_json(ql);
  j["S_lambda"] = laurent_json(sl);
  j["l_F"] = l_f_plane(f).str();
  Json skj = Json::array();
  for (const auto& [e, c2] : sk.terms2()) {
    Half c = Half::of_twice(c2);
    skj.push_back({e, c.as_integer()});
  }
  j["S_prime_K"] = skj;
  j["identities"] = check_split_identities(f).ok() ? "pass" : "fail";
  Json pretty;
  pretty["l_q"] = ql.str("q");
  pretty["S_lambda"] = sl.str("f");
  pretty["S_prime_K"] = sk.str("t");
  j["pretty"] = pretty;
  return j;
}

Json info_report(const Front& f) {
  Json j;
  j["vertices"] = f.size();
  j["cusps"] = f.cusp_count();
  j["ind"] = index_of(f);
  auto cd = cusp_data(f);
  Json signs = Json::array();
  for (int s : cd.signs) signs.push_back(s);
  j["cusp_signs"] = signs;
  j["C_plus"] = cd.c_plus.str();
  j["C_minus"] = cd.c_minus.str();
  Json dps = Json::array();
  for (const auto& dp : double_points(f)) {
    Json d;
    d["id"] = dp.id;
    d["x"] = rat_str(dp.pos.x);
    d["y"] = rat_str(dp.pos.y);
    d["edges"] = {dp.edge_a, dp.edge_b};
    d["eps"] = dp.eps;
    dps.push_back(d);
  }
  j["double_points"] = dps;
  Arrangement arr(f);
  Json regions = Json::array();
  for (const auto& r : arr.regions()) {
    Json rj;
    rj["id"] = r.id;
    rj["compact"] = r.compact;
    rj["ind"] = arr.region_index(r.id);
    rj["chi"] = r.stats.chi;
    rj["cusps_in"] = r.stats.c_in;
    rj["cusps_out"] = r.stats.c_out;
    rj["v_corners"] = r.stats.v_corners;
    rj["corners"] = r.stats.corner_visits;
    regions.push_back(rj);
  }
  j["regions"] = regions;
  return j;
}

Json shadow_report(const Front& f, const Shadow& s) {
  Json j;
  Json regions = Json::array();
  for (const auto& r : s.regions) {
    Json rj;
    rj["id"] = r.id;
    rj["compact"] = r.compact;
    if (r.gleam)
      rj["gleam"] = r.gleam->str();
    else
      rj["gleam"] = nullptr;
    rj["ind"] = r.ind;
    regions.push_back(rj);
  }
  j["regions"] = regions;
  j["sigma"] = sigma(s);
  j["index"] = index_of(f);
  j["parity"] = parity_check(s);
  j["total_compact_gleam"] = s.total_compact_gleam.str();
  return j;
}

Json orbifold_report(const Front& f, const OrbifoldDisk& o) {
  Json j;
  auto res = s_lambda_orbifold(f, o);
  const auto& g = *res.context.homology.group;
  auto coords_json = [&](const GroupElement& e) {
    Json c = Json::array();
    for (const auto& v : e.coords()) c.push_back(v.get_str());
    return c;
  };
  j["group"] = g.describe();
  j["class"] = coords_json(res.lambda_class);
  Json terms = Json::array();
  for (const auto& [e, c2] : res.value.terms2())
    terms.push_back({coords_json(e), Half::of_twice(c2).str()});
  j["S_lambda"] = terms;
  Json rels = Json::array();
  for (const auto& r : res.context.relations) rels.push_back(r.str());
  j["relations"] = rels;
  Json checks;
  // Every relation generator must vanish in the quotient.
  bool rels_vanish = true;
  for (const auto& r : res.context.relations)
    if (!equal_in_J(r, GroupRingHalf(&g), res.context)) rels_vanish = false;
  checks["relation_generators_vanish"] = rels_vanish;
  checks["value_equals_itself"] =
      equal_in_J(res.value, res.value, res.context);
  j["quotient_equal_checks"] = checks;
  return j;
}

std::string verify_report_text(const std::vector<SuiteResult>& suites) {
  std::ostringstream os;
  for (const auto& s : suites) {
    os << "suite " << s.name << ": " << s.cases << " cases, "
       << s.failures.size() << " failures " << (s.ok() ? "[ok]" : "[FAIL]")
       << "\n";
    for (const auto& f : s.failures) {
      os << "  " << f.id << ": " << f.message << "\n";
      if (!f.repro.empty()) os << "    repro: " << f.repro << "\n";
    }
  }
  return os.str();
}

}  // namespace frontlab
