#include "ctsp/matching.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "ctsp/error.hpp"

namespace ctsp {

Matching make_matching(const Graph& g, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<char> covered(g.order(), 0);
  for (EdgeId e : edges) {
    const auto& ed = g.edge(e);
    if (covered[ed.u] || covered[ed.v]) throw InvariantError("matching edges share a vertex at edge " + std::to_string(e));
    covered[ed.u] = covered[ed.v] = 1;
  }
  Matching m;
  m.perfect = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
  m.edges = std::move(edges);
  return m;
}

bool is_perfect_matching(const Graph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(g.order(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.size()) return false;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

namespace {

// Edmonds' algorithm with explicit blossom bases, O(n^3).
class Blossom {
 public:
  Blossom(const Graph& g, const std::vector<char>& usable) : g_(g), n_(g.order()), adj_(n_) {
    for (EdgeId e = 0; e < g.size(); ++e)
      if (usable[e]) {
        adj_[g.edge(e).u].push_back(g.edge(e).v);
        adj_[g.edge(e).v].push_back(g.edge(e).u);
      }
    match_.assign(n_, -1);
  }

  std::vector<EdgeId> run(const std::vector<char>& usable) {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      const int end = find_path(v);
      for (int u = end; u != -1;) {
        const int pu = parent_[u];
        const int next = match_[pu];
        match_[u] = pu;
        match_[pu] = u;
        u = next;
      }
    }
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g_.size(); ++e) {
      const auto& ed = g_.edge(e);
      if (!usable[e] || match_[ed.u] != ed.v) continue;
      // one edge per matched pair: the lowest usable id
      if (std::find_if(out.begin(), out.end(), [&](EdgeId f) { return g_.edge(f) == ed; }) == out.end())
        out.push_back(e);
    }
    return out;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace

std::vector<EdgeId> maximum_matching(const Graph& g, const std::vector<char>& usable) {
  Blossom b(g, usable);
  auto out = b.run(usable);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Matching> find_perfect_matching(const Graph& g, const std::vector<EdgeId>& forced,
                                              const std::vector<EdgeId>& forbidden) {
  if (g.order() % 2) return std::nullopt;
  std::vector<char> usable(g.size(), 1), gone(g.order(), 0);
  for (EdgeId e : forbidden) usable[e] = 0;
  for (EdgeId e : forced) {
    if (!usable[e]) throw ContractViolation("edge " + std::to_string(e) + " is both forced and forbidden");
    const auto& ed = g.edge(e);
    if (gone[ed.u] || gone[ed.v]) throw ContractViolation("forced edges share a vertex");
    gone[ed.u] = gone[ed.v] = 1;
  }
  // Forced edges: drop their endpoints, then match the rest.
  for (EdgeId e = 0; e < g.size(); ++e)
    if (gone[g.edge(e).u] || gone[g.edge(e).v]) usable[e] = 0;
  auto rest = maximum_matching(g, usable);
  rest.insert(rest.end(), forced.begin(), forced.end());
  if (static_cast<int>(rest.size()) * 2 != g.order()) return std::nullopt;
  auto m = make_matching(g, rest);
  if (!m.perfect) throw InvariantError("maximum matching of full size is not perfect");
  return m;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, int max_order) {
  if (g.order() > max_order)
    throw CapabilityError("perfect matching enumeration is limited to " + std::to_string(max_order) + " vertices");
  std::vector<Matching> out;
  if (g.order() % 2) return out;
  std::vector<char> covered(g.order(), 0);
  std::vector<EdgeId> chosen;
  std::function<void(int)> rec = [&](int from) {
    int v = from;
    while (v < g.order() && covered[v]) ++v;
    if (v == g.order()) {
      out.push_back(make_matching(g, chosen));
      return;
    }
    covered[v] = 1;
    for (const auto& inc : g.incident(v)) {
      if (covered[inc.to]) continue;
      covered[inc.to] = 1;
      chosen.push_back(inc.edge);
      rec(v + 1);
      chosen.pop_back();
      covered[inc.to] = 0;
    }
    covered[v] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Feasibility of A x = b, x >= 0 (b >= 0) by the phase-one simplex with
// Bland's rule, in exact arithmetic. Returns x or nothing when infeasible.
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t width = cols + rows + 1;  // structural, artificial, rhs
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
    t[i][width - 1] = b[i];
    basis[i] = cols + i;
  }
  // Objective row: reduced costs of minimising the artificial sum.
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= cols && j < cols + rows) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < rows; ++i) s -= t[i][j];
    t[rows][j] = s;
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < cols; ++j)
      if (t[rows][j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction cannot occur in phase one
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (t[rows][width - 1] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace

std::optional<std::vector<int>> three_edge_colouring(const Graph& g, long long budget) {
  const int m = g.size();
  // Breadth-first edge order keeps each new edge next to coloured ones.
  std::vector<EdgeId> order;
  std::vector<char> queued(m, 0), seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::deque<Vertex> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop_front();
      for (const auto& inc : g.incident(v)) {
        if (!queued[inc.edge]) {
          queued[inc.edge] = 1;
          order.push_back(inc.edge);
        }
        if (!seen[inc.to]) {
          seen[inc.to] = 1;
          q.push_back(inc.to);
        }
      }
    }
  }
  std::vector<int> colour(m, -1);
  long long nodes = 0;
  auto free_colour = [&](EdgeId e, int c) {
    for (Vertex x : {g.edge(e).u, g.edge(e).v})
      for (const auto& inc : g.incident(x))
        if (inc.edge != e && colour[inc.edge] == c) return false;
    return true;
  };
  std::function<int(std::size_t)> rec = [&](std::size_t k) -> int {
    if (k == order.size()) return 1;
    if (++nodes > budget) return -1;
    const EdgeId e = order[k];
    for (int c = 0; c < 3; ++c) {
      if (!free_colour(e, c)) continue;
      colour[e] = c;
      const int r = rec(k + 1);
      if (r != 0) return r;
    }
    colour[e] = -1;
    return 0;
  };
  if (rec(0) != 1) return std::nullopt;
  return colour;
}

FractionalDecomposition decompose_uniform_third(const Graph& g, int max_order) {
  FractionalDecomposition d;
  if (g.order() <= max_order) {
    const auto all = enumerate_perfect_matchings(g, max_order);
    if (all.empty()) throw InvariantError("no perfect matching; the uniform third point is infeasible");
    // One row per edge (value 1/3) plus the convexity row.
    std::vector<std::vector<Rational>> a(g.size() + 1, std::vector<Rational>(all.size()));
    std::vector<Rational> b(g.size() + 1, frac(1, 3));
    for (std::size_t j = 0; j < all.size(); ++j) {
      for (EdgeId e : all[j].edges) a[e][j] = 1;
      a[g.size()][j] = 1;
    }
    b[g.size()] = 1;
    const auto x = feasible_point(a, b);
    if (!x) throw InvariantError("uniform third point is outside the perfect matching polytope");
    for (std::size_t j = 0; j < all.size(); ++j)
      if ((*x)[j] > 0) d.terms.emplace_back((*x)[j], all[j]);
    d.method = "enumeration";
  } else {
    const auto colour = three_edge_colouring(g);
    if (!colour)
      throw CapabilityError("no 3-edge-colouring found within budget; decomposition needs at most " +
                            std::to_string(max_order) + " vertices");
    std::vector<std::vector<EdgeId>> classes(3);
    for (EdgeId e = 0; e < g.size(); ++e) classes[(*colour)[e]].push_back(e);
    std::vector<Matching> ms;
    for (auto& c : classes) ms.push_back(make_matching(g, c));
    std::sort(ms.begin(), ms.end());
    for (auto& m : ms) d.terms.emplace_back(frac(1, 3), m);
    d.method = "edge-colouring";
  }
  if (auto bad = check_decomposition(g, d)) throw InvariantError("decomposition check failed: " + *bad);
  return d;
}

std::optional<std::string> check_decomposition(const Graph& g, const FractionalDecomposition& d) {
  Rational total = 0;
  std::vector<Rational> per_edge(g.size());
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    const auto& [lambda, m] = d.terms[i];
    if (lambda <= 0) return "coefficient " + std::to_string(i) + " is not positive";
    if (!is_perfect_matching(g, m.edges)) return "term " + std::to_string(i) + " is not a perfect matching";
    total += lambda;
    for (EdgeId e : m.edges) per_edge[e] += lambda;
  }
  if (total != 1) return "coefficients sum to " + total.str();
  for (EdgeId e = 0; e < g.size(); ++e)
    if (per_edge[e] != frac(1, 3)) return "edge " + std::to_string(e) + " carries " + per_edge[e].str();
  return std::nullopt;
}

}  // namespace ctsp
