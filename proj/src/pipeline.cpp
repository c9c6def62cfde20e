#include "ctsp/pipeline.hpp"

#include <sstream>

#include "ctsp/error.hpp"
#include "ctsp/swaps.hpp"

namespace ctsp {

int PipelineResult::swap_count() const {
  int s = 0;
  for (const auto& [k, v] : phase1_swaps) s += v;
  for (const auto& [k, v] : phase2_swaps) s += v;
  return s;
}

bool PipelineResult::ok() const {
  for (const auto& c : certificates)
    if (!c.pass) return false;
  return report.ok();
}

void require_pipeline_input(const Graph& g) {
  const auto v = validate(g);
  if (!v.simple) throw ContractViolation("input is not simple");
  if (!v.connected) throw ContractViolation("input is not connected");
  if (!v.cubic) throw ContractViolation("input is not cubic");
  if (!v.bridgeless) throw ContractViolation("input is not bridgeless");
}

namespace {

// Cost change a reduction case is allowed: exact for types 1 and 2, an upper
// bound for types 3 and 4.
std::pair<int, bool> allowed_delta(const Reduction& step, const std::string& case_name) {
  const int size = static_cast<int>(step.record.removed.size());
  switch (step.record.type()) {
    case 1: return {case_name == "v isolated" ? 5 : 4, true};
    case 2: return {case_name == "add C^k" ? size + 2 : size, true};
    case 3: return {7, false};
    default: return {2, false};
  }
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts) {
  auto trace = [&](const std::string& s) {
    if (opts.trace) opts.trace(s);
  };
  require_pipeline_input(g);
  PipelineResult out;
  out.n = g.order();
  auto certify = [&](std::string name, bool pass, std::string detail) {
    out.certificates.push_back({std::move(name), pass, std::move(detail)});
  };

  EvenFactor factor;
  if (g.order() <= 8) {
    out.chain.core = g;
    factor = solve_small(g);
    out.core_solved_small = true;
    trace("n <= 8: Hamiltonian circuit");
  } else {
    out.chain = reduce_to_irreducible(g);
    trace("reductions: " + std::to_string(out.chain.steps.size()) + ", core n = " +
          std::to_string(out.chain.core.order()));
    const Graph& core = out.chain.core;
    if (core.order() <= 8) {
      std::optional<EdgeId> req;
      if (!out.chain.steps.empty()) req = required_core_edge(out.chain.steps.back());
      factor = solve_small(core, req, &out.required_edge_met);
      out.core_solved_small = true;
      trace(std::string("core solved by a Hamiltonian circuit") +
            (out.required_edge_met ? "" : " (required edge unavailable)"));
    } else {
      const auto collections = build_collections(core);
      out.selection = select_two_factor(core, collections, opts.mode, opts.exec);
      const auto& cert = out.selection->certificate;
      certify("selection-inequality", cert.inequality <= 0, cert.inequality.str());
      certify("selection-average", cert.f_value <= cert.average_bound,
              cert.f_value.str() + " <= " + cert.average_bound.str());
      certify("cut-condition", true, cert.cut_check + ", " + std::to_string(cert.cuts_checked) + " cuts");
      if (cert.mode == SelectMode::decomposition) {
        const auto problem = check_decomposition(core, decompose_uniform_third(core));
        certify("decomposition-exact", !problem, problem.value_or("sum 1, every edge 1/3"));
      }
      trace("2-factor selected (" + std::string(mode_name(cert.mode)) + "), circuits " +
            std::to_string(out.selection->factor.circuits.size()));

      FactorState s(core, out.selection->factor);
      s.run_phase1();
      s.assign_c1();
      s.run_phase2();
      for (const auto& a : s.history())
        ++(a.phase == 1 ? out.phase1_swaps : out.phase2_swaps)[std::string(swap_name(a.kind))];
      trace("swaps: " + std::to_string(s.history().size()) + ", cost " + std::to_string(s.cost()));
      const auto consistency = s.check_consistency();
      certify("swap-state-consistent", !consistency, consistency.value_or("binding and circuits re-derived"));
      certify("ledger-sum", s.cost_sum() == Rational(s.cost()), s.cost_sum().str());
      const Rational core_bound = frac(13 * core.order(), 10);
      certify("core-cost", Rational(s.cost()) <= core_bound,
              std::to_string(s.cost()) + " <= " + core_bound.str());
      out.audit = audit_bounds(s, collections, out.selection->factor.in_factor);
      factor = EvenFactor{s.in_factor()};
    }
  }
  out.core_cost = factor.cost(out.chain.core);

  // Expand in reverse order of reduction.
  bool deltas_ok = true;
  std::string delta_detail = "none";
  for (auto it = out.chain.steps.rbegin(); it != out.chain.steps.rend(); ++it) {
    ExpansionStep info;
    factor = expand_factor(*it, factor, &info);
    const int d = info.cost_after - info.cost_before;
    const auto [limit, exact] = allowed_delta(*it, info.case_name);
    if (exact ? d != limit : d > limit) {
      deltas_ok = false;
      delta_detail = "type " + std::to_string(info.type) + " (" + info.case_name + "): " + std::to_string(d);
    }
    out.expansions.push_back(info);
  }
  if (!out.chain.steps.empty()) {
    if (deltas_ok) delta_detail = std::to_string(out.chain.steps.size()) + " steps";
    certify("expansion-deltas", deltas_ok, delta_detail);
  }
  const auto problem = even_factor_problem(g, factor);
  certify("even-factor", !problem, problem.value_or("degrees 0 or 2"));

  out.tour = build_tour(g, factor);
  out.tour.swaps = out.swap_count();
  out.tour.reductions = static_cast<int>(out.chain.steps.size());
  out.report = validate_tour(g, out.tour, tour_bound(g.order()));
  certify("tour-length-identity", out.tour.length == out.tour.factor_cost - 2,
          std::to_string(out.tour.length) + " = " + std::to_string(out.tour.factor_cost) + " - 2");
  certify("tour-valid", out.report.ok(), out.report.detail);
  trace("tour length " + std::to_string(out.tour.length) + ", bound " + out.report.bound.str());
  return out;
}

}  // namespace ctsp
