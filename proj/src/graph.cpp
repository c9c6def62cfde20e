#include "ctsp/graph.hpp"

#include <algorithm>
#include <string>

#include "ctsp/error.hpp"

namespace ctsp {

Graph::Graph(int n) : adj_(n) {
  if (n < 0) throw ContractViolation("negative vertex count");
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw ContractViolation("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " out of range for n=" + std::to_string(order()));
  if (u == v) throw ContractViolation("self-loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  const EdgeId id = size();
  edges_.push_back({u, v});
  adj_[u].push_back({v, id});
  adj_[v].push_back({u, id});
  return id;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(adj_[v].size());
  for (const auto& inc : adj_[v]) out.push_back(inc.to);
  return out;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  std::optional<EdgeId> best;
  for (const auto& inc : adj_[u])
    if (inc.to == v && (!best || inc.edge < *best)) best = inc.edge;
  return best;
}

EdgeId Graph::edge_between(Vertex u, Vertex v) const {
  auto e = find_edge(u, v);
  if (!e) throw ContractViolation("no edge " + std::to_string(u) + "-" + std::to_string(v));
  return *e;
}

int Graph::multiplicity(Vertex u, Vertex v) const {
  int m = 0;
  for (const auto& inc : adj_[u]) m += inc.to == v;
  return m;
}

EdgeRef Graph::ref(EdgeId e) const {
  const auto [u, v] = edges_[e];
  int slot = 0;
  for (const auto& inc : adj_[u])
    if (inc.to == v && inc.edge < e) ++slot;
  return {u, v, slot};
}

bool Graph::same_labeled(const Graph& other) const {
  if (order() != other.order() || size() != other.size()) return false;
  auto a = edges_;
  auto b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

// Iterative low-point DFS. Skips only the tree edge by id, so parallel edges
// correctly act as back edges.
std::vector<EdgeId> bridges_impl(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  int timer = 0;
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      auto& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const auto [to, e] = inc[f.next++];
        if (e == f.via) continue;
        if (disc[to] == -1) {
          disc[to] = low[to] = timer++;
          stack.push_back({to, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[to]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<EdgeId> find_bridges(const Graph& g) { return bridges_impl(g); }

bool is_connected_without(const Graph& g, std::span<const char> removed) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& [to, e] : g.incident(v)) {
      if ((!removed.empty() && removed[e]) || seen[to]) continue;
      seen[to] = 1;
      ++count;
      stack.push_back(to);
    }
  }
  return count == n;
}

bool is_connected(const Graph& g) { return is_connected_without(g, {}); }

Validation validate(const Graph& g) {
  Validation r;
  r.connected = is_connected(g);
  r.cubic = true;
  for (Vertex v = 0; v < g.order(); ++v) r.cubic = r.cubic && g.degree(v) == 3;
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  r.simple = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
  r.bridgeless = find_bridges(g).empty();
  return r;
}

Contraction contract_vertex_set(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) throw ContractViolation("cannot contract an empty vertex set");
  std::vector<char> in(g.order(), 0);
  for (Vertex v : set) in.at(v) = 1;
  Contraction c;
  c.map.assign(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in[v]) c.map[v] = next++;
  c.merged = next;
  for (Vertex v = 0; v < g.order(); ++v)
    if (in[v]) c.map[v] = c.merged;
  c.graph = Graph(next + 1);
  for (const auto& [u, v] : g.edges()) {
    if (in[u] && in[v]) continue;
    c.graph.add_edge(c.map[u], c.map[v]);
  }
  return c;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) pos[vertices[i]] = i;
  Graph h(static_cast<int>(vertices.size()));
  for (const auto& [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) h.add_edge(pos[u], pos[v]);
  return h;
}

}  // namespace ctsp
