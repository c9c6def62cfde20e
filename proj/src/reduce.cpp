#include "ctsp/reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ctsp/error.hpp"

namespace ctsp {

namespace {

bool valid_next_stage(const Graph& g, std::string* why) {
  auto fail = [&](const char* reason) {
    if (why) *why = reason;
    return false;
  };
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return fail("not cubic");
  if (!is_connected(g)) return fail("disconnected");
  if (!find_bridges(g).empty()) return fail("has a bridge");
  int parallel = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbours(v))
      if (v < w) {
        const int m = g.multiplicity(v, w);
        if (m > 2) return fail("triple edge");
        if (m == 2) ++parallel;
      }
  // neighbours() lists a parallel neighbour twice
  parallel /= 2;
  if (g.order() > 8 && parallel > 0) return fail("not simple");
  if (parallel > 1) return fail("more than one parallel pair");
  return true;
}

// Hamiltonian path of the subgraph induced by `set` from a to b.
std::optional<std::vector<Vertex>> hamiltonian_path_in(const Graph& g, const VertexSet& set, Vertex a, Vertex b) {
  std::vector<Vertex> path{a};
  std::map<Vertex, char> used;
  used[a] = 1;
  std::function<bool()> go = [&]() -> bool {
    const Vertex v = path.back();
    if (path.size() == set.size()) return v == b;
    for (Vertex w : g.neighbours(v)) {
      if (!contains(set, w) || used[w]) continue;
      if (w == b && path.size() + 1 != set.size()) continue;
      used[w] = 1;
      path.push_back(w);
      if (go()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (go()) return path;
  return std::nullopt;
}

}  // namespace

std::optional<Reduction> reduce_once(const Graph& g, const ReducibleInstance& inst, std::string* why) {
  Reduction out;
  auto& r = out.record;
  r.instance = inst;
  r.n_before = g.order();
  const bool deletion = inst.type == 2;
  r.removed = inst.type == 4 ? sorted_set({inst.roles[0], inst.roles[1], inst.roles[2]}) : inst.vertices;

  r.vertex_map.assign(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!contains(r.removed, v)) r.vertex_map[v] = next++;
  Graph after(next + (deletion ? 0 : 1));
  if (!deletion) {
    r.merged = next;
    for (Vertex v : r.removed) r.vertex_map[v] = r.merged;
  }

  std::vector<std::pair<Vertex, Vertex>> type2_boundary;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edge(e);
    const bool iu = contains(r.removed, u), iv = contains(r.removed, v);
    if (iu && iv) {
      r.inner_edges.push_back({u, v});
    } else if (iu || iv) {
      const Vertex in = iu ? u : v, outv = iu ? v : u;
      if (deletion) {
        type2_boundary.push_back({in, outv});
        continue;
      }
      r.attachments.push_back({in, outv});
      after.add_edge(r.vertex_map[outv], r.merged);
      r.edge_map.push_back(e);
    } else {
      after.add_edge(r.vertex_map[u], r.vertex_map[v]);
      r.edge_map.push_back(e);
    }
  }

  if (deletion) {
    const auto [e1, e2] = inst.ends.back();
    const auto [o1, o2] = inst.chain_outer;
    r.attachments = {{e1, o1}, {e2, o2}};
    if (type2_boundary.size() != 2) throw InvariantError("diamond chain does not have two boundary edges");
    r.added_edge = after.add_edge(r.vertex_map[o1], r.vertex_map[o2]);
    r.edge_map.push_back(-1);
    // P^0 joins the diamond's tips; each growth step wraps it in the new ends.
    const VertexSet s0 = [&] {
      VertexSet s = inst.roles;
      return sorted_set(s);
    }();
    auto p = hamiltonian_path_in(g, s0, inst.ends[0].first, inst.ends[0].second);
    if (!p) throw InvariantError("8-diamond has no Hamiltonian path between its tips");
    r.path = *p;
    for (std::size_t i = 1; i < inst.ends.size(); ++i) {
      r.path.insert(r.path.begin(), inst.ends[i].first);
      r.path.push_back(inst.ends[i].second);
    }
    if (sorted_set(r.path) != r.removed) throw InvariantError("chain path does not cover S^k");
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i)
      if (!g.adjacent(r.path[i], r.path[i + 1])) throw InvariantError("chain path uses a non-edge");
  }

  std::string reason;
  if (!valid_next_stage(after, &reason)) {
    if (why) *why = "type " + std::to_string(inst.type) + " reduction gives a graph that is " + reason;
    return std::nullopt;
  }
  out.before = g;
  out.after = std::move(after);
  return out;
}

ReductionChain reduce_to_irreducible(const Graph& g) {
  ReductionChain chain;
  chain.core = g;
  while (chain.core.order() > 8) {
    std::vector<ReducibleInstance> all;
    for (int t = 1; t <= 4; ++t)
      for (auto& inst : find_reducible_of_type(chain.core, t)) all.push_back(std::move(inst));
    if (all.empty()) break;
    std::optional<Reduction> step;
    std::string why;
    for (const auto& inst : all)
      if ((step = reduce_once(chain.core, inst, &why))) break;
    if (!step) {
      chain.stopped_on_invalid = true;
      chain.stop_reason = why;
      break;
    }
    chain.core = step->after;
    chain.steps.push_back(std::move(*step));
  }
  return chain;
}

Graph restore_graph(const ReductionRecord& r, const Graph& after) {
  // Matches by endpoints, not edge ids, so a rebuilt `after` works too.
  std::vector<Vertex> inverse(after.order(), -1);
  for (Vertex v = 0; v < r.n_before; ++v)
    if (r.vertex_map[v] >= 0 && r.vertex_map[v] != r.merged) inverse[r.vertex_map[v]] = v;
  Graph g(r.n_before);
  std::vector<char> attached(r.attachments.size(), 0);
  bool added_seen = r.added_edge < 0;
  for (EdgeId e = 0; e < after.size(); ++e) {
    const auto [u, v] = after.edge(e);
    if (!added_seen) {
      const auto [o1, o2] = std::pair{r.attachments[0].second, r.attachments[1].second};
      if ((inverse[u] == o1 && inverse[v] == o2) || (inverse[u] == o2 && inverse[v] == o1)) {
        added_seen = true;
        continue;
      }
    }
    if (u == r.merged || v == r.merged) {
      const Vertex outside = inverse[u == r.merged ? v : u];
      std::size_t k = 0;
      while (k < r.attachments.size() && (attached[k] || r.attachments[k].second != outside)) ++k;
      if (k == r.attachments.size())
        throw ContractViolation("reduced graph does not match the record at the merged vertex");
      attached[k] = 1;
      g.add_edge(r.attachments[k].first, outside);
    } else {
      g.add_edge(inverse[u], inverse[v]);
    }
  }
  if (!added_seen) throw ContractViolation("reduced graph lacks the added edge");
  if (r.added_edge >= 0)
    for (const auto& [in, out] : r.attachments) g.add_edge(in, out);
  else if (std::count(attached.begin(), attached.end(), 1) != static_cast<long>(attached.size()))
    throw ContractViolation("reduced graph does not match the record at the merged vertex");
  for (const auto& [u, v] : r.inner_edges) g.add_edge(u, v);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) throw ContractViolation("restored graph is not cubic");
  return g;
}

std::optional<std::vector<EdgeId>> hamiltonian_circuit(const Graph& g, std::optional<EdgeId> required) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<char> used(n, 0);
  std::vector<EdgeId> edges;
  Vertex start = 0;
  if (required) {
    start = g.edge(*required).u;
    edges.push_back(*required);
    used[start] = used[g.edge(*required).v] = 1;
  } else {
    used[start] = 1;
  }
  std::function<bool(Vertex, int)> go = [&](Vertex v, int count) -> bool {
    if (count == n) {
      for (const auto& inc : g.incident(v))
        if (inc.to == start && (edges.empty() || inc.edge != edges.back())) {
          edges.push_back(inc.edge);
          return true;
        }
      return false;
    }
    for (const auto& inc : g.incident(v)) {
      if (used[inc.to]) continue;
      used[inc.to] = 1;
      edges.push_back(inc.edge);
      if (go(inc.to, count + 1)) return true;
      edges.pop_back();
      used[inc.to] = 0;
    }
    return false;
  };
  const bool found = required ? go(g.edge(*required).v, 2) : go(start, 1);
  if (!found) return std::nullopt;
  return edges;
}

std::optional<EdgeId> required_core_edge(const Reduction& step) {
  const auto& r = step.record;
  if (r.type() == 2) return r.added_edge;
  if (r.type() == 3) {
    // v must keep its edge toward u1's outside neighbour.
    std::size_t k = 0;
    for (EdgeId e = 0; e < step.after.size(); ++e) {
      const auto [u, v] = step.after.edge(e);
      if (u != r.merged && v != r.merged) continue;
      if (r.attachments[k].first == r.instance.roles[0]) return e;
      ++k;
    }
    throw InvariantError("type 3 record has no attachment at u1");
  }
  return std::nullopt;
}

EvenFactor solve_small(const Graph& g, std::optional<EdgeId> required, bool* required_met) {
  auto c = hamiltonian_circuit(g, required);
  if (required_met) *required_met = c.has_value();
  if (!c && required) c = hamiltonian_circuit(g);
  if (!c) throw InvariantError("no Hamiltonian circuit in a small bridgeless cubic graph");
  return EvenFactor::from_circuit(g, *c);
}

EvenFactor expand_factor(const Reduction& step, const EvenFactor& reduced, ExpansionStep* info) {
  const auto& r = step.record;
  const Graph& g = step.before;
  const Graph& h = step.after;
  if (auto p = even_factor_problem(h, reduced)) throw ContractViolation("reduced factor is not an even factor: " + *p);

  auto f = EvenFactor::empty(g);
  std::vector<Vertex> used_inside;  // inside ends of factor edges at the merged vertex
  std::size_t k = 0;
  for (EdgeId e = 0; e < h.size(); ++e) {
    const bool at_merged = h.edge(e).u == r.merged || h.edge(e).v == r.merged;
    if (reduced.in_factor[e] && r.edge_map[e] >= 0) f.in_factor[r.edge_map[e]] = 1;
    if (at_merged) {
      if (reduced.in_factor[e]) used_inside.push_back(r.attachments[k].first);
      ++k;
    }
  }
  auto add_path = [&](const std::vector<Vertex>& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) f.in_factor[g.edge_between(p[i], p[i + 1])] = 1;
  };
  auto add_circuit = [&](std::vector<Vertex> c) {
    c.push_back(c.front());
    add_path(c);
  };
  auto uses = [&](Vertex a, Vertex b) {
    return used_inside.size() == 2 && ((used_inside[0] == a && used_inside[1] == b) ||
                                       (used_inside[0] == b && used_inside[1] == a));
  };

  std::string name;
  int expected = 0;
  const auto& u = r.instance.roles;
  const int removed = static_cast<int>(r.removed.size());
  switch (r.type()) {
    case 1: {
      // u = u1..u5, chord u2u5; attachments at u1, u3, u4
      if (used_inside.empty()) {
        add_circuit({u[0], u[1], u[2], u[3], u[4]});
        name = "v isolated";
        expected = 5;
      } else {
        if (uses(u[0], u[2]))
          add_path({u[0], u[1], u[4], u[3], u[2]});
        else if (uses(u[2], u[3]))
          add_path({u[2], u[1], u[0], u[4], u[3]});
        else if (uses(u[0], u[3]))
          add_path({u[0], u[4], u[1], u[2], u[3]});
        else
          throw InvariantError("type 1 expansion: unexpected attachments");
        name = "v on a circuit";
        expected = 4;
      }
      break;
    }
    case 2: {
      const auto& p = r.path;
      if (reduced.in_factor[r.added_edge]) {
        f.in_factor[g.edge_between(r.attachments[0].second, p.front())] = 1;
        add_path(p);
        f.in_factor[g.edge_between(p.back(), r.attachments[1].second)] = 1;
        name = "splice P^k";
        expected = removed;
      } else {
        if (r.instance.chain_length() == 0)
          add_circuit(r.instance.roles);
        else
          add_circuit(p);
        name = "add C^k";
        expected = removed + 2;
      }
      break;
    }
    case 3: {
      // u = u1..u7, circuit u1 u2 u5 u4 u6 u7 u3, chords u5u6 and u4u7
      const Vertex u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3], u5 = u[4], u6 = u[5], u7 = u[6];
      if (used_inside.empty()) {
        add_circuit({u1, u2, u5, u4, u6, u7, u3});
        name = "v isolated";
        expected = 7;
      } else if (uses(u2, u3)) {
        add_path({u2, u5, u4, u6, u7, u3});
        name = "u1 isolated";
        expected = 7;
      } else if (uses(u1, u2)) {
        add_path({u1, u3, u7, u4, u6, u5, u2});
        name = "v on a circuit";
        expected = 6;
      } else if (uses(u1, u3)) {
        add_path({u1, u2, u5, u6, u4, u7, u3});
        name = "v on a circuit";
        expected = 6;
      } else {
        throw InvariantError("type 3 expansion: unexpected attachments");
      }
      break;
    }
    case 4: {
      // u = v1..v6, chord v1v3, triangle v1v2v3 contracted
      const Vertex v1 = u[0], v2 = u[1], v3 = u[2], v4 = u[3], v5 = u[4], v6 = u[5];
      if (!used_inside.empty()) {
        const std::vector<Vertex> tri{v1, v2, v3};
        Vertex third = -1;
        for (Vertex t : tri)
          if (t != used_inside[0] && t != used_inside[1]) third = t;
        add_path({used_inside[0], third, used_inside[1]});
        name = "v on a circuit";
        expected = 2;
        break;
      }
      const EdgeId e45 = g.edge_between(v4, v5), e56 = g.edge_between(v5, v6);
      const bool a = f.in_factor[e45], b = f.in_factor[e56];
      if (!a && !b) {
        add_circuit({v1, v2, v3, v4, v5, v6});
        name = "v isolated, no edge of vv4v5v6";
        expected = 0;
      } else if (a && !b) {
        f.in_factor[e45] = 0;
        add_path({v4, v3, v2, v1, v6, v5});
        name = "v isolated, v4v5 only";
        expected = 0;
      } else if (!a && b) {
        f.in_factor[e56] = 0;
        add_path({v6, v1, v2, v3, v4, v5});
        name = "v isolated, v5v6 only";
        expected = 0;
      } else {
        f.in_factor[e45] = f.in_factor[e56] = 0;
        add_path({v4, v3, v2, v1, v6});
        name = "v isolated, v4v5 and v5v6";
        expected = 2;
      }
      break;
    }
    default:
      throw ContractViolation("unknown reduction type");
  }

  if (auto p = even_factor_problem(g, f)) throw InvariantError("expanded factor is not an even factor: " + *p);
  const int before = reduced.cost(h), after = f.cost(g);
  if (after - before != expected)
    throw InvariantError("type " + std::to_string(r.type()) + " expansion (" + name + ") changed the cost by " +
                         std::to_string(after - before) + ", expected " + std::to_string(expected));
  if (info) *info = {r.type(), name, before, after, h.order(), g.order()};
  return f;
}

}  // namespace ctsp
