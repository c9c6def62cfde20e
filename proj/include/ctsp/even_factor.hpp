#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctsp/graph.hpp"

namespace ctsp {

/// Spanning subgraph whose components are circuits or isolated vertices.
struct EvenFactor {
  std::vector<char> in_factor;  // by edge id

  static EvenFactor empty(const Graph& g) { return {std::vector<char>(g.size(), 0)}; }
  static EvenFactor from_circuit(const Graph& g, const std::vector<EdgeId>& edges);

  int edge_count() const;
  std::vector<Vertex> isolated(const Graph& g) const;
  std::vector<std::vector<Vertex>> circuits(const Graph& g) const;
  /// n + 2 * circuits + isolated.
  int cost(const Graph& g) const;
};

/// Empty when every vertex has factor degree 0 or 2; otherwise the reason.
std::optional<std::string> even_factor_problem(const Graph& g, const EvenFactor& f);

}  // namespace ctsp
