#include "ctsp/oracle.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <string>

#include "ctsp/error.hpp"

namespace ctsp::oracle {

int optimal_graphic_tsp(const Graph& g) {
  const int n = g.order();
  if (n > kTspLimit) throw CapabilityError("graphic TSP oracle is limited to " + std::to_string(kTspLimit) + " vertices");
  if (n <= 1) return 0;
  if (!is_connected(g)) throw ContractViolation("graph is disconnected");

  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> queue{s};
    d[s][s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : g.neighbours(queue[h]))
        if (d[s][w] < 0) {
          d[s][w] = d[s][queue[h]] + 1;
          queue.push_back(w);
        }
  }
  if (n == 2) return 2 * d[0][1];

  // best[mask][v]: path from 0 through mask (over vertices 1..n-1) ending at v.
  const int m = n - 1;
  const int full = (1 << m) - 1;
  std::vector<int> best(static_cast<std::size_t>(1 << m) * m, INT_MAX);
  auto at = [m](int mask, int v) { return static_cast<std::size_t>(mask) * m + v; };
  for (int v = 0; v < m; ++v) best[at(1 << v, v)] = d[0][v + 1];
  for (int mask = 1; mask <= full; ++mask)
    for (int v = 0; v < m; ++v) {
      const int cur = best[at(mask, v)];
      if (cur == INT_MAX || !((mask >> v) & 1)) continue;
      for (int w = 0; w < m; ++w) {
        if ((mask >> w) & 1) continue;
        auto& slot = best[at(mask | (1 << w), w)];
        slot = std::min(slot, cur + d[v + 1][w + 1]);
      }
    }
  int out = INT_MAX;
  for (int v = 0; v < m; ++v) out = std::min(out, best[at(full, v)] + d[v + 1][0]);
  return out;
}

std::pair<EvenFactor, int> min_cost_even_factor(const Graph& g) {
  const int n = g.order();
  if (n > kEvenFactorLimit)
    throw CapabilityError("even factor oracle is limited to " + std::to_string(kEvenFactorLimit) + " vertices");
  const int m = g.size();
  // Last edge id at each vertex: when it is decided the vertex degree is final.
  std::vector<EdgeId> last(n, -1);
  for (EdgeId e = 0; e < m; ++e) last[g.edge(e).u] = last[g.edge(e).v] = e;

  EvenFactor cur = EvenFactor::empty(g), best;
  int best_cost = INT_MAX;
  std::vector<int> deg(n, 0);
  auto settled = [&](Vertex v, EdgeId e) { return last[v] != e || deg[v] == 0 || deg[v] == 2; };
  std::function<void(EdgeId)> go = [&](EdgeId e) {
    if (e == m) {
      const int c = cur.cost(g);
      if (c < best_cost) {
        best_cost = c;
        best = cur;
      }
      return;
    }
    const auto [u, v] = g.edge(e);
    if (settled(u, e) && settled(v, e)) go(e + 1);
    if (deg[u] < 2 && deg[v] < 2) {
      ++deg[u];
      ++deg[v];
      cur.in_factor[e] = 1;
      if (settled(u, e) && settled(v, e)) go(e + 1);
      cur.in_factor[e] = 0;
      --deg[u];
      --deg[v];
    }
  };
  go(0);
  if (best_cost == INT_MAX) throw InvariantError("no even factor found");
  return {best, best_cost};
}

}  // namespace ctsp::oracle
