#include "ctsp/even_factor.hpp"

#include <algorithm>

#include "ctsp/factor_select.hpp"

namespace ctsp {

EvenFactor EvenFactor::from_circuit(const Graph& g, const std::vector<EdgeId>& edges) {
  auto f = empty(g);
  for (EdgeId e : edges) f.in_factor[e] = 1;
  return f;
}

int EvenFactor::edge_count() const { return static_cast<int>(std::count(in_factor.begin(), in_factor.end(), 1)); }

std::vector<Vertex> EvenFactor::isolated(const Graph& g) const {
  std::vector<int> deg(g.order(), 0);
  for (EdgeId e = 0; e < g.size(); ++e)
    if (in_factor[e]) ++deg[g.edge(e).u], ++deg[g.edge(e).v];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (deg[v] == 0) out.push_back(v);
  return out;
}

std::vector<std::vector<Vertex>> EvenFactor::circuits(const Graph& g) const {
  // trace_circuits handles simple circuits; a 2-circuit on a parallel pair
  // is walked by edge id so it works too.
  return trace_circuits(g, in_factor);
}

int EvenFactor::cost(const Graph& g) const {
  return g.order() + 2 * static_cast<int>(circuits(g).size()) + static_cast<int>(isolated(g).size());
}

std::optional<std::string> even_factor_problem(const Graph& g, const EvenFactor& f) {
  if (static_cast<int>(f.in_factor.size()) != g.size()) return "factor has the wrong number of edges";
  std::vector<int> deg(g.order(), 0);
  for (EdgeId e = 0; e < g.size(); ++e)
    if (f.in_factor[e]) ++deg[g.edge(e).u], ++deg[g.edge(e).v];
  for (Vertex v = 0; v < g.order(); ++v)
    if (deg[v] != 0 && deg[v] != 2)
      return "vertex " + std::to_string(v) + " has factor degree " + std::to_string(deg[v]);
  return std::nullopt;
}

}  // namespace ctsp
