#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ctsp/factor_select.hpp"
#include "ctsp/graph.hpp"
#include "ctsp/rational.hpp"
#include "ctsp/structure.hpp"

namespace ctsp {

enum class SwapKind { swap4, swap5_t1, swap5_t2, swap6 };
std::string_view swap_name(SwapKind k);
/// Cost reduction of each operation: 2, 1, 3, 4.
int swap_saving(SwapKind k);

struct SwapCandidate {
  SwapKind kind;
  /// Host circuit labelled v1..vk as in the operation definitions: for swap4
  /// and swap6 the factor edges are v1v2, v3v4 (, v5v6); for both 5-swaps v5
  /// is the vertex whose boundary edge is outside the factor.
  std::vector<Vertex> host;
  /// X-circuit ids taking part.
  std::vector<int> participants;
  std::vector<EdgeId> removed;
  std::vector<EdgeId> added;
};

/// A circuit of the factor together with the isolated vertices bound to it.
struct XCircuit {
  bool alive = true;
  std::vector<Vertex> circuit;
  VertexSet isolated;
  int j4 = 0, j5 = 0, j6 = 0;

  int swaps() const { return j4 + j5 + j6; }
  VertexSet vertices() const;
};

struct AppliedSwap {
  int phase = 0;
  SwapKind kind;
  std::vector<Vertex> host;
  std::vector<int> participants;
  int merged = -1;
  int saving = 0;
};

/// Bounded even factor under swaps. Vertex costs exist after assign_c1().
class FactorState {
 public:
  /// Throws ContractViolation when the 2-factor has a triangle.
  FactorState(const Graph& g, const TwoFactor& f);

  const Graph& graph() const { return *g_; }
  const std::vector<char>& in_factor() const { return in_factor_; }
  const std::vector<XCircuit>& xs() const { return xs_; }
  std::vector<int> alive_ids() const;
  int x_of(Vertex v) const { return x_of_[v]; }
  bool isolated(Vertex v) const { return isolated_[v] != 0; }
  bool in_diamond(Vertex v) const { return diamond_of_[v] >= 0; }
  /// Index of the 4-diamond containing v, or -1.
  int diamond_of(Vertex v) const { return diamond_of_[v]; }
  int circuit_count() const;
  int isolated_count() const;
  /// n + 2 * circuits + isolated.
  int cost() const;
  /// |V(X)| + |V_X| + 2.
  int x_cost(int id) const;
  /// Number of distinct 4-diamonds meeting X.
  int diamonds_in(int id) const;
  int diamond_vertices_in(int id) const;

  /// Every currently applicable swap of the phase, in preference order
  /// (6-swaps, 4-swaps, 5-swaps; then by canonical host circuit).
  std::vector<SwapCandidate> candidates(int phase) const;
  std::optional<SwapCandidate> next_candidate(int phase) const;

  /// Applies a candidate after re-checking it; returns the saving. Throws
  /// ContractViolation on a stale candidate. In phase 2 the cost ledger is
  /// updated.
  int apply(const SwapCandidate& c, int phase);

  void run_phase1();
  void assign_c1();
  void run_phase2();

  const std::vector<Rational>& costs() const { return cost_; }
  bool has_costs() const { return !cost_.empty(); }
  Rational cost_sum() const;

  const std::vector<AppliedSwap>& history() const { return history_; }
  /// X-circuits as they stood when phase 1 ended.
  const std::vector<XCircuit>& phase1_xs() const { return phase1_xs_; }
  const std::vector<Rational>& c1() const { return c1_; }

  /// Isolated vertex -> X id, recomputed from the definition of "bounded" by
  /// a least fixpoint; -1 for an isolated vertex bound to nothing.
  std::vector<int> derive_binding() const;
  /// Empty when derived binding equals the incremental one and circuits
  /// match the factor edges; otherwise a description.
  std::optional<std::string> check_consistency() const;

  /// Trace the current factor as an even factor (circuits and isolated vertices).
  std::vector<std::vector<Vertex>> circuits() const;

 private:
  std::optional<SwapCandidate> check_host(const CircuitPattern& host, int phase) const;
  bool touches_short_factor_circuit(const CircuitPattern& host) const;

  const Graph* g_;
  std::vector<char> in_factor_;
  std::vector<char> isolated_;
  std::vector<int> x_of_;
  std::vector<XCircuit> xs_;
  std::vector<int> diamond_of_;
  std::vector<CircuitPattern> hosts_;  // chordless circuits of length 4..6
  std::vector<Rational> cost_;
  std::vector<Rational> c1_;
  std::vector<XCircuit> phase1_xs_;
  std::vector<AppliedSwap> history_;
};

/// For an X-circuit without isolated vertices and a circuit of G touching it,
/// some other factor circuit meets that circuit. Returns the first host
/// circuit violating this, if any.
std::optional<CircuitPattern> swap_availability_violation(const FactorState& s);

}  // namespace ctsp
