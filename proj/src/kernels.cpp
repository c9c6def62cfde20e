#include "ctsp/kernels.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctsp::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// True when removing the three edges leaves components that can be split into
// two sides with every removed edge crossing.
bool is_boundary_triple(const Graph& g, const EdgeTriple& t) {
  Dsu dsu(g.order());
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (e == t[0] || e == t[1] || e == t[2]) continue;
    dsu.unite(g.edge(e).u, g.edge(e).v);
  }
  std::vector<std::pair<int, int>> arcs;
  for (EdgeId e : t) {
    const int a = dsu.find(g.edge(e).u);
    const int b = dsu.find(g.edge(e).v);
    if (a == b) return false;
    arcs.emplace_back(std::min(a, b), std::max(a, b));
  }
  // With three crossing edges the only odd cycle is a triangle of components.
  std::sort(arcs.begin(), arcs.end());
  const bool distinct_arcs = arcs[0] != arcs[1] && arcs[1] != arcs[2];
  std::vector<int> comps{arcs[0].first, arcs[0].second, arcs[1].first, arcs[1].second, arcs[2].first,
                         arcs[2].second};
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  return !(distinct_arcs && comps.size() == 3);
}

std::vector<EdgeTriple> all_triples(int m) {
  std::vector<EdgeTriple> out;
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b)
      for (EdgeId c = b + 1; c < m; ++c) out.push_back({a, b, c});
  return out;
}

}  // namespace

std::vector<EdgeTriple> three_edge_cuts(const Graph& g, Exec exec) {
  const auto triples = all_triples(g.size());
  const long long count = static_cast<long long>(triples.size());
  std::vector<char> hit(triples.size(), 0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < count; ++i) hit[i] = is_boundary_triple(g, triples[i]);
  } else {
    for (long long i = 0; i < count; ++i) hit[i] = is_boundary_triple(g, triples[i]);
  }
  std::vector<EdgeTriple> out;
  for (std::size_t i = 0; i < triples.size(); ++i)
    if (hit[i]) out.push_back(triples[i]);
  return out;
}

std::size_t argmin_weight(const std::vector<std::vector<EdgeId>>& sets, const std::vector<Rational>& weight,
                          Exec exec) {
  const long long count = static_cast<long long>(sets.size());
  if (count == 0) return 0;
  auto total = [&](long long i) {
    Rational s = 0;
    for (EdgeId e : sets[i]) s += weight[e];
    return s;
  };
  if (exec == Exec::serial) {
    std::size_t best = 0;
    Rational best_value = total(0);
    for (long long i = 1; i < count; ++i) {
      Rational v = total(i);
      if (v < best_value) {
        best_value = v;
        best = static_cast<std::size_t>(i);
      }
    }
    return best;
  }
  std::vector<Rational> values(sets.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) values[i] = total(i);
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[best]) best = i;
  return best;
}

std::vector<EdgeId> bridges_brute_force(const Graph& g, Exec exec) {
  const int m = g.size();
  std::vector<char> bridge(m, 0);
  auto test = [&](EdgeId e) {
    std::vector<char> removed(m, 0);
    removed[e] = 1;
    return !is_connected_without(g, removed);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int e = 0; e < m; ++e) bridge[e] = test(e);
  } else {
    for (int e = 0; e < m; ++e) bridge[e] = test(e);
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < m; ++e)
    if (bridge[e]) out.push_back(e);
  return out;
}

}  // namespace ctsp::kernels
