#include "ctsp/tour.hpp"

#include <algorithm>

#include "ctsp/error.hpp"

namespace ctsp {

Tour build_tour(const Graph& g, const EvenFactor& f) {
  if (auto p = even_factor_problem(g, f)) throw ContractViolation("not an even factor: " + *p);
  const int n = g.order();
  if (n == 0) throw ContractViolation("empty graph");

  // Components of F, numbered by smallest vertex.
  std::vector<int> comp(n, -1);
  int k = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = k;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v))
        if (f.in_factor[inc.edge] && comp[inc.to] < 0) {
          comp[inc.to] = k;
          stack.push_back(inc.to);
        }
    }
    ++k;
  }

  // BFS over G/F from component 0; each tree edge is used twice.
  std::vector<int> uses(g.size(), 0);
  for (EdgeId e = 0; e < g.size(); ++e) uses[e] = f.in_factor[e] ? 1 : 0;
  std::vector<char> reached(k, 0);
  std::vector<int> queue{0};
  reached[0] = 1;
  std::vector<std::vector<Vertex>> members(k);
  for (Vertex v = 0; v < n; ++v) members[comp[v]].push_back(v);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Vertex v : members[queue[h]])
      for (const auto& inc : g.incident(v)) {
        const int c = comp[inc.to];
        if (reached[c]) continue;
        reached[c] = 1;
        uses[inc.edge] = 2;
        queue.push_back(c);
      }
  if (static_cast<int>(queue.size()) != k) throw InvariantError("G/F is disconnected");

  for (Vertex v = 0; v < n; ++v) {
    int d = 0;
    for (const auto& inc : g.incident(v)) d += uses[inc.edge];
    if (d % 2) throw InvariantError("F + 2T has a vertex of odd degree");
  }

  // Hierholzer.
  std::vector<int> left = uses;
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack{0}, walk;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto& i = next[v];
    while (i < g.incident(v).size() && left[g.incident(v)[i].edge] == 0) ++i;
    if (i == g.incident(v).size()) {
      walk.push_back(v);
      stack.pop_back();
    } else {
      const auto& inc = g.incident(v)[i];
      --left[inc.edge];
      stack.push_back(inc.to);
    }
  }
  std::reverse(walk.begin(), walk.end());

  Tour t;
  t.walk = std::move(walk);
  t.length = static_cast<int>(t.walk.size()) - 1;
  t.factor_cost = f.cost(g);
  int total = 0;
  for (int u : uses) total += u;
  if (t.length != total || t.length != t.factor_cost - 2)
    throw InvariantError("tour length differs from c(F) - 2");
  return t;
}

Rational tour_bound(int n) { return n >= 8 ? frac(13 * n, 10) - 2 : Rational(n); }

TourReport validate_tour(const Graph& g, const Tour& t, const Rational& bound) {
  TourReport r;
  r.bound = bound;
  r.length = static_cast<int>(t.walk.size()) - 1;
  r.closed = !t.walk.empty() && t.walk.front() == t.walk.back();
  if (!r.closed) r.detail = "walk is not closed";
  r.steps_adjacent = true;
  for (std::size_t i = 0; i + 1 < t.walk.size(); ++i) {
    const Vertex a = t.walk[i], b = t.walk[i + 1];
    const bool in_range = a >= 0 && b >= 0 && a < g.order() && b < g.order();
    if (!in_range || !g.adjacent(a, b)) {
      r.steps_adjacent = false;
      r.detail = "step " + std::to_string(i) + " uses a non-edge";
      break;
    }
  }
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : t.walk)
    if (v >= 0 && v < g.order()) seen[v] = 1;
  r.covers_all = true;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[v]) {
      r.covers_all = false;
      r.missing = v;
      r.detail = "vertex " + std::to_string(v) + " is never visited";
      break;
    }
  r.within_bound = Rational(r.length) <= bound;
  if (r.ok()) r.detail = "ok";
  else if (r.detail.empty()) r.detail = "length exceeds the bound";
  return r;
}

}  // namespace ctsp
