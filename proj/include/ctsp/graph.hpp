#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ctsp {

using Vertex = int;
using EdgeId = int;

/// Endpoints are stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Identity of one edge among a bundle of parallel edges.
struct EdgeRef {
  Vertex u;
  Vertex v;
  int slot;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

/// Undirected multigraph without loops. Vertex ids are 0..n-1; edge ids are
/// assigned in insertion order and never change.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  EdgeId add_edge(Vertex u, Vertex v);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Incidence>& incident(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  Vertex other(EdgeId e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  std::vector<Vertex> neighbours(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }
  /// Lowest-id edge joining u and v.
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  /// Like find_edge but throws when the edge is missing.
  EdgeId edge_between(Vertex u, Vertex v) const;
  int multiplicity(Vertex u, Vertex v) const;
  EdgeRef ref(EdgeId e) const;

  /// Same order and same multiset of edges (labels matter, edge ids do not).
  bool same_labeled(const Graph& other) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

struct Validation {
  bool connected = false;
  bool cubic = false;
  bool simple = false;
  bool bridgeless = false;
  bool all() const { return connected && cubic && simple && bridgeless; }
};

Validation validate(const Graph& g);

/// Bridges by DFS low-points; parallel edges are never bridges.
std::vector<EdgeId> find_bridges(const Graph& g);

bool is_connected(const Graph& g);

/// Connectivity with some edges ignored (`removed[e] != 0`).
bool is_connected_without(const Graph& g, std::span<const char> removed);

struct Contraction {
  Graph graph;
  /// old vertex -> new vertex; every vertex of the contracted set maps to `merged`.
  std::vector<Vertex> map;
  Vertex merged = -1;
};

/// Contract `set` to one vertex. Survivors keep their relative order and the
/// merged vertex is appended last. Edges inside the set disappear; edges from
/// the set to a common outside vertex become parallel edges.
Contraction contract_vertex_set(const Graph& g, std::span<const Vertex> set);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace ctsp
