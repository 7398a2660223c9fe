#include "skolemlab/report.hpp"

namespace skolemlab::report {

std::string check_status_name(skolem::CheckStatus s) {
  switch (s) {
    case skolem::CheckStatus::Pass: return "pass";
    case skolem::CheckStatus::Fail: return "fail";
    case skolem::CheckStatus::Evidence: return "evidence";
    case skolem::CheckStatus::TheoremLevel: return "theorem-level";
  }
  return "fail";
}

json rat_json(const Rat& r) { return rat_to_string(r); }

json report_json(const skolem::SuiteReport& rep,
                 const std::string& scene_digest, uint64_t seed) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"status", check_status_name(c.status)},
                      {"details", c.details}});
  return {{"suite", rep.suite},
          {"scene", scene_digest},
          {"checks", checks},
          {"seed", seed},
          {"version", kVersion}};
}

json plfunction_json(const valgroup::PLFunction& f) {
  json lines = json::array();
  const auto& src =
      f.source_lines().empty() ? f.pieces() : f.source_lines();
  for (const auto& l : src)
    lines.push_back(json::array({l.slope, rat_json(l.intercept)}));
  json breaks = json::array();
  for (const auto& b : f.breakpoints()) breaks.push_back(rat_json(b));
  return {{"lines", lines}, {"breakpoints", breaks}};
}

json valat_json(const ratfunc::ValAt& v) {
  if (ratfunc::val_is_pole(v)) return "POLE";
  if (ratfunc::val_is_infinite(v)) return "INFINITY";
  return rat_json(ratfunc::val_value(v));
}

json exactness_json(const newton::ExactnessReport& r) {
  return {{"predicted", rat_json(r.predicted)},
          {"actual", r.actual ? json(rat_json(*r.actual)) : json("INFINITY")},
          {"exact", r.exact},
          {"witness_root", r.witness_root}};
}

json skreport_json(const skolem::SkReport& r) {
  std::string member;
  switch (r.member) {
    case skolem::SkReport::Member::True: member = "true"; break;
    case skolem::SkReport::Member::False: member = "false"; break;
    case skolem::SkReport::Member::Inconclusive:
      member = "inconclusive";
      break;
  }
  json points = json::array();
  for (const auto& p : r.per_point) {
    json ideal;
    if (p.value_ideal.kind == domains::ValueIdeal::Kind::ValuationIdeal) {
      ideal = p.value_ideal.gamma ? json(rat_json(*p.value_ideal.gamma))
                                  : json("zero-ideal");
    } else {
      json gens = json::array();
      for (const auto& g : p.value_ideal.generators)
        gens.push_back(g.to_string());
      ideal = gens;
    }
    points.push_back({{"point", p.a.to_string()},
                      {"value_ideal", ideal},
                      {"psi_valuation", valat_json(p.psi_value)},
                      {"pass", p.pass}});
  }
  return {{"member", member},
          {"per_point", points},
          {"psi_poles", r.psi_poles},
          {"note", r.note}};
}

static json branch_json(const skolem::BranchNode& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(branch_json(c));
  return {{"center", n.center.field() ? n.center.to_string() : "0"},
          {"level", n.level},
          {"status", n.status},
          {"children", children}};
}

json certificate_json(const skolem::Certificate& c) {
  std::string outcome;
  switch (c.outcome) {
    case skolem::Certificate::Outcome::Certified: outcome = "CERTIFIED"; break;
    case skolem::Certificate::Outcome::Counterexample:
      outcome = "COUNTEREXAMPLE";
      break;
    case skolem::Certificate::Outcome::Unknown: outcome = "UNKNOWN"; break;
  }
  json j = {{"outcome", outcome},
            {"depth_used", c.depth_used},
            {"branch_tree", branch_json(c.tree)}};
  if (c.counterexample) j["counterexample"] = c.counterexample->to_string();
  return j;
}

}  // namespace skolemlab::report
