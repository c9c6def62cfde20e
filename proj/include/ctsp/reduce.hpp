#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctsp/even_factor.hpp"
#include "ctsp/graph.hpp"
#include "ctsp/structure.hpp"

namespace ctsp {

/// Undo information for one reduction. Vertex labels in `instance`, `removed`,
/// `inner_edges`, `attachments` and `path` refer to the graph before the step.
struct ReductionRecord {
  ReducibleInstance instance;
  int n_before = 0;
  /// Vertices that disappear (the whole subgraph for types 1, 3, 4 which is
  /// replaced by one new vertex; S^k for type 2).
  VertexSet removed;
  /// before-vertex -> after-vertex; removed vertices map to `merged` or -1.
  std::vector<Vertex> vertex_map;
  /// The contracted vertex (types 1, 3, 4), last in the reduced graph.
  Vertex merged = -1;
  /// Type 2: the added edge v1^k v2^k in the reduced graph.
  EdgeId added_edge = -1;
  /// Edges with both ends in `removed`.
  std::vector<std::pair<Vertex, Vertex>> inner_edges;
  /// Boundary edges (inside vertex, outside vertex), in the order they appear
  /// at the merged vertex (types 1, 3, 4) or (v1 side, v2 side) for type 2.
  std::vector<std::pair<Vertex, Vertex>> attachments;
  /// after-edge -> before-edge; -1 for the added type-2 edge.
  std::vector<EdgeId> edge_map;
  /// Type 2: Hamiltonian path of S^k joining the two attachment vertices.
  std::vector<Vertex> path;

  int type() const { return instance.type; }
};

struct Reduction {
  ReductionRecord record;
  Graph before;
  Graph after;
};

struct ReductionChain {
  std::vector<Reduction> steps;  // application order
  Graph core;
  /// Set when a reducible subgraph remained but every reduction of it gave an
  /// invalid intermediate graph.
  bool stopped_on_invalid = false;
  std::string stop_reason;
};

/// Applies one reduction. Returns nullopt when the result is not a valid
/// input for the next stage: simple, cubic, connected and bridgeless when it
/// has more than 8 vertices; cubic, connected, bridgeless with at most one
/// parallel pair otherwise.
std::optional<Reduction> reduce_once(const Graph& g, const ReducibleInstance& inst, std::string* why = nullptr);

/// Reduces while n > 8 and a reducible subgraph exists, trying instances in
/// detection order until one yields a valid graph.
ReductionChain reduce_to_irreducible(const Graph& g);

/// Rebuilds the graph before a step from the record and the reduced graph.
Graph restore_graph(const ReductionRecord& r, const Graph& after);

/// Hamiltonian circuit (edge ids) through `required`, by exhaustive search.
std::optional<std::vector<EdgeId>> hamiltonian_circuit(const Graph& g, std::optional<EdgeId> required = std::nullopt);

/// The reduced-graph edge a Hamiltonian core circuit must use so that
/// expanding this record keeps it Hamiltonian; nullopt when any will do.
std::optional<EdgeId> required_core_edge(const Reduction& step);

/// Hamiltonian circuit of a graph with at most 8 vertices, through `required`
/// when possible. One 8-vertex multigraph has an edge on no Hamiltonian
/// circuit; then any Hamiltonian circuit is returned and `*required_met` is
/// false. Throws InvariantError when there is no Hamiltonian circuit at all.
EvenFactor solve_small(const Graph& g, std::optional<EdgeId> required = std::nullopt, bool* required_met = nullptr);

struct ExpansionStep {
  int type = 0;
  std::string case_name;
  int cost_before = 0;
  int cost_after = 0;
  int n_before = 0;
  int n_after = 0;
};

/// Lifts an even factor of `step.after` to `step.before`. Throws
/// ContractViolation when the factor is not an even factor of `step.after`.
EvenFactor expand_factor(const Reduction& step, const EvenFactor& reduced, ExpansionStep* info = nullptr);

}  // namespace ctsp
