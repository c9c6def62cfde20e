#include "ctsp/report.hpp"

#include "ctsp/graph_io.hpp"

namespace ctsp {

using nlohmann::json;

json rational_json(const Rational& q) {
  return {{"exact", q.str()}, {"value", static_cast<double>(q)}};
}

namespace {

json audit_json(const AuditReport& a) {
  json failures = json::array();
  for (const auto& f : a.failures)
    failures.push_back({{"check", f.check},
                        {"vertex", f.vertex},
                        {"value", f.value.str()},
                        {"bound", f.bound.str()},
                        {"detail", f.detail}});
  return {{"ok", a.ok()},
          {"checked", a.checked},
          {"failures", failures},
          {"inequality", a.inequality.str()},
          {"final_cost", a.final_cost.str()},
          {"final_bound", a.final_bound.str()}};
}

}  // namespace

json pipeline_json(const Graph& g, const PipelineResult& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = r.n;
  j["graph6"] = serialize_graph(g, GraphFormat::graph6);
  j["ok"] = r.ok();
  j["tour"] = {{"walk", r.tour.walk},
               {"length", r.tour.length},
               {"bound", rational_json(r.report.bound)},
               {"factor_cost", r.tour.factor_cost}};
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["certificates"] = certs;

  json red = json::array();
  for (std::size_t i = 0; i < r.chain.steps.size(); ++i) {
    const auto& s = r.chain.steps[i];
    // expansions run in reverse order
    const auto& e = r.expansions[r.expansions.size() - 1 - i];
    red.push_back({{"type", s.record.type()},
                   {"n_before", s.before.order()},
                   {"n_after", s.after.order()},
                   {"expansion_case", e.case_name},
                   {"cost_delta", e.cost_after - e.cost_before}});
  }
  j["reductions"] = red;
  j["core"] = {{"n", r.chain.core.order()},
               {"solved_small", r.core_solved_small},
               {"required_edge_met", r.required_edge_met},
               {"cost", r.core_cost}};
  if (r.selection) {
    const auto& c = r.selection->certificate;
    j["selection"] = {{"mode", mode_name(c.mode)},
                      {"matching", c.matching.edges},
                      {"f_value", rational_json(c.f_value)},
                      {"average_bound", rational_json(c.average_bound)},
                      {"inequality", rational_json(c.inequality)},
                      {"candidates", c.candidates},
                      {"cut_check", c.cut_check},
                      {"cuts_checked", c.cuts_checked},
                      {"circuits", r.selection->factor.circuits}};
  }
  j["swaps"] = {{"phase1", r.phase1_swaps}, {"phase2", r.phase2_swaps}, {"total", r.swap_count()}};
  if (r.audit) j["audit"] = audit_json(*r.audit);
  return j;
}

json reductions_json(const ReductionChain& chain) {
  json out = json::array();
  for (const auto& s : chain.steps) {
    const auto& r = s.record;
    json att = json::array();
    for (const auto& [in, o] : r.attachments) att.push_back({in, o});
    json inner = json::array();
    for (const auto& [a, b] : r.inner_edges) inner.push_back({a, b});
    out.push_back({{"type", r.type()},
                   {"roles", r.instance.roles},
                   {"n_before", r.n_before},
                   {"removed", r.removed},
                   {"vertex_map", r.vertex_map},
                   {"merged", r.merged},
                   {"added_edge", r.added_edge},
                   {"attachments", att},
                   {"inner_edges", inner},
                   {"path", r.path},
                   {"chain_length", r.instance.chain_length()}});
  }
  return out;
}

json structure_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  const auto v = validate(g);
  j["valid"] = {{"connected", v.connected}, {"cubic", v.cubic}, {"simple", v.simple}, {"bridgeless", v.bridgeless}};
  if (!v.simple || !v.cubic) return j;
  json diamonds = json::array();
  for (const auto& d : find_diamonds(g)) diamonds.push_back({{"kind", diamond_name(d.kind)}, {"vertices", d.vertices}});
  j["diamonds"] = diamonds;
  json reducible = json::array();
  for (int t = 1; t <= 4; ++t)
    for (const auto& inst : find_reducible_of_type(g, t))
      reducible.push_back({{"type", t}, {"roles", inst.roles}, {"vertices", inst.vertices}});
  j["reducible"] = reducible;
  if (g.order() <= 24 && v.connected) j["three_edge_cuts"] = enumerate_3_edge_cuts(g).size();
  if (reducible.empty() && v.all()) {
    json cols = json::array();
    for (const auto& c : build_collections(g)) {
      json members = json::array();
      for (const auto& m : c.members) members.push_back(m.vertices);
      cols.push_back({{"kind", collection_name(c.kind)},
                      {"n_H", c.params.n},
                      {"b_H", c.params.b},
                      {"A_H", c.weight.str()},
                      {"members", members}});
    }
    j["collections"] = cols;
  }
  return j;
}

}  // namespace ctsp
