#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctsp/audit.hpp"
#include "ctsp/factor_select.hpp"
#include "ctsp/graph.hpp"
#include "ctsp/kernels.hpp"
#include "ctsp/reduce.hpp"
#include "ctsp/tour.hpp"

namespace ctsp {

struct PipelineOptions {
  SelectMode mode = SelectMode::automatic;
  kernels::Exec exec = kernels::Exec::serial;
  /// Called with one line per stage when set.
  std::function<void(const std::string&)> trace;
};

struct Certificate {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PipelineResult {
  int n = 0;
  Tour tour;
  TourReport report;
  ReductionChain chain;
  std::vector<ExpansionStep> expansions;
  bool core_solved_small = false;
  /// False when the core's Hamiltonian circuit could not use the edge the
  /// last reduction asked for.
  bool required_edge_met = true;
  int core_cost = 0;
  std::optional<Selection> selection;
  std::map<std::string, int> phase1_swaps;
  std::map<std::string, int> phase2_swaps;
  /// Per-vertex cost argument, checked on the irreducible core. Reported but
  /// not part of the certificates: the tour does not depend on it.
  std::optional<AuditReport> audit;
  std::vector<Certificate> certificates;

  int swap_count() const;
  bool ok() const;
};

/// Rejects inputs that are not simple, connected, cubic and bridgeless with a
/// ContractViolation naming the first failed predicate.
void require_pipeline_input(const Graph& g);

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts = {});

}  // namespace ctsp
