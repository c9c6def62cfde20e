#include "ctsp/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "ctsp/error.hpp"
#include "ctsp/kernels.hpp"

namespace ctsp {

VertexSet sorted_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

bool contains(const VertexSet& haystack, const VertexSet& needle) {
  return std::includes(haystack.begin(), haystack.end(), needle.begin(), needle.end());
}

bool contains(const VertexSet& haystack, Vertex v) { return std::binary_search(haystack.begin(), haystack.end(), v); }

bool touches(const VertexSet& a, const VertexSet& b) { return intersects(a, b) && !contains(b, a); }

std::vector<EdgeId> boundary_edges(const Graph& g, const VertexSet& set) {
  std::vector<EdgeId> out;
  for (Vertex v : set)
    for (const auto& inc : g.incident(v))
      if (!contains(set, inc.to)) out.push_back(inc.edge);
  std::sort(out.begin(), out.end());
  return out;
}

int induced_edge_count(const Graph& g, const VertexSet& set) {
  int twice = 0;
  for (Vertex v : set)
    for (const auto& inc : g.incident(v))
      if (contains(set, inc.to)) ++twice;
  return twice / 2;
}

std::vector<EdgeId> CircuitPattern::cycle_edges(const Graph& g) const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) out.push_back(g.edge_between(cycle[i], cycle[(i + 1) % cycle.size()]));
  return out;
}

CircuitPattern describe_circuit(const Graph& g, std::vector<Vertex> cycle) {
  if (cycle.size() < 3) throw ContractViolation("a circuit needs at least 3 vertices");
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  if (cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());

  CircuitPattern c;
  c.cycle = cycle;
  const VertexSet set = c.vertex_set();
  if (set.size() != cycle.size()) throw ContractViolation("circuit repeats a vertex");
  const int len = c.length();
  auto pos = [&](Vertex v) { return static_cast<int>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin()); };
  for (int i = 0; i < len; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % len])) throw ContractViolation("circuit uses a missing edge");

  std::set<EdgeId> chords;
  for (Vertex v : cycle)
    for (const auto& inc : g.incident(v)) {
      if (!contains(set, inc.to)) continue;
      const int d = std::abs(pos(v) - pos(inc.to));
      if (d != 1 && d != len - 1) chords.insert(inc.edge);
    }
  c.chords.assign(chords.begin(), chords.end());
  c.boundary = boundary_edges(g, set);

  std::vector<Vertex> ends;
  for (EdgeId e : c.boundary) {
    ends.push_back(g.edge(e).u);
    ends.push_back(g.edge(e).v);
  }
  std::sort(ends.begin(), ends.end());
  c.independent_boundary = std::adjacent_find(ends.begin(), ends.end()) == ends.end();
  return c;
}

std::vector<CircuitPattern> enumerate_short_circuits(const Graph& g, int max_len, int min_len) {
  if (!validate(g).simple) throw ContractViolation("circuit enumeration needs a simple graph");
  const int n = g.order();
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbours(v);

  std::vector<std::vector<Vertex>> found;
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  std::function<void(Vertex, Vertex)> extend = [&](Vertex s, Vertex v) {
    for (Vertex w : nbrs[v]) {
      const int len = static_cast<int>(path.size());
      if (w == s) {
        if (len >= 3 && len >= min_len && path[1] < path.back()) found.push_back(path);
      } else if (w > s && !on_path[w] && len < max_len) {
        path.push_back(w);
        on_path[w] = 1;
        extend(s, w);
        on_path[w] = 0;
        path.pop_back();
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend(s, s);
    on_path[s] = 0;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<CircuitPattern> out;
  out.reserve(found.size());
  for (auto& c : found) out.push_back(describe_circuit(g, std::move(c)));
  return out;
}

std::string_view diamond_name(DiamondKind k) {
  switch (k) {
    case DiamondKind::d4:
      return "d4";
    case DiamondKind::d6:
      return "d6";
    case DiamondKind::d8:
      return "d8";
  }
  return "?";
}

namespace {

std::vector<Diamond> diamonds_from(const std::vector<CircuitPattern>& circuits) {
  std::vector<Diamond> d8, d6, d4;
  auto inside_any = [](const VertexSet& s, const std::vector<Diamond>& list) {
    return std::any_of(list.begin(), list.end(), [&](const Diamond& d) { return contains(d.vertices, s); });
  };
  auto seen = [](const VertexSet& s, const std::vector<Diamond>& list) {
    return std::any_of(list.begin(), list.end(), [&](const Diamond& d) { return d.vertices == s; });
  };
  for (const auto& c : circuits)
    if (c.length() == 8 && c.chords.size() >= 3 && !seen(c.vertex_set(), d8))
      d8.push_back({DiamondKind::d8, c.vertex_set(), c});
  for (const auto& c : circuits)
    if (c.length() == 6 && c.chords.size() >= 2 && !seen(c.vertex_set(), d6) && !inside_any(c.vertex_set(), d8))
      d6.push_back({DiamondKind::d6, c.vertex_set(), c});
  for (const auto& c : circuits)
    if (c.length() == 4 && !c.chords.empty() && !seen(c.vertex_set(), d4) && !inside_any(c.vertex_set(), d6))
      d4.push_back({DiamondKind::d4, c.vertex_set(), c});
  std::vector<Diamond> out;
  for (auto* list : {&d4, &d6, &d8}) {
    std::sort(list->begin(), list->end(), [](const Diamond& a, const Diamond& b) { return a.vertices < b.vertices; });
    out.insert(out.end(), list->begin(), list->end());
  }
  return out;
}

Vertex outer_neighbour(const Graph& g, const VertexSet& set, Vertex v) {
  for (const auto& inc : g.incident(v))
    if (!contains(set, inc.to)) return inc.to;
  return -1;
}

std::pair<Vertex, Vertex> chord_ends(const Graph& g, EdgeId e) { return {g.edge(e).u, g.edge(e).v}; }

int index_of(const std::vector<Vertex>& cycle, Vertex v) {
  return static_cast<int>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
}

std::vector<ReducibleInstance> type1(const Graph& g, const std::vector<CircuitPattern>& circuits) {
  std::vector<ReducibleInstance> out;
  for (const auto& c : circuits) {
    if (c.length() != 5 || c.chords.size() != 1 || !c.independent_boundary) continue;
    const auto [a, b] = chord_ends(g, c.chords[0]);
    const int pa = index_of(c.cycle, a);
    const int pb = index_of(c.cycle, b);
    // The chord skips exactly one vertex; that vertex is u1.
    const int m = (pb - pa + 5) % 5 == 2 ? (pa + 1) % 5 : (pb + 1) % 5;
    const int d = c.cycle[(m + 1) % 5] < c.cycle[(m + 4) % 5] ? 1 : 4;
    ReducibleInstance r;
    r.type = 1;
    for (int i = 0; i < 5; ++i) r.roles.push_back(c.cycle[(m + i * d) % 5]);
    r.vertices = c.vertex_set();
    for (int role : {0, 2, 3}) r.outer.push_back(outer_neighbour(g, r.vertices, r.roles[role]));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ReducibleInstance> type2(const Graph& g, const std::vector<Diamond>& diamonds) {
  std::vector<ReducibleInstance> out;
  for (const auto& d : diamonds) {
    if (d.kind != DiamondKind::d8) continue;
    std::vector<Vertex> tips;
    for (Vertex v : d.vertices)
      if (outer_neighbour(g, d.vertices, v) >= 0) tips.push_back(v);
    if (tips.size() != 2) continue;

    ReducibleInstance r;
    r.type = 2;
    r.roles = d.circuit.cycle;
    VertexSet s = d.vertices;
    std::pair<Vertex, Vertex> ends{tips[0], tips[1]};
    r.ends.push_back(ends);
    auto outer_pair = [&] {
      return std::pair{outer_neighbour(g, s, ends.first), outer_neighbour(g, s, ends.second)};
    };
    auto w = outer_pair();
    while (w.first != w.second && g.adjacent(w.first, w.second)) {
      s = sorted_set([&] {
        auto v = s;
        v.push_back(w.first);
        v.push_back(w.second);
        return v;
      }());
      ends = w;
      r.ends.push_back(ends);
      w = outer_pair();
      if (w.first < 0 || w.second < 0) throw InvariantError("diamond chain swallowed the whole graph");
    }
    if (w.first == w.second)
      throw InvariantError("diamond chain ends at a single vertex " + std::to_string(w.first) + " (graph has a bridge)");
    r.chain_outer = w;
    r.vertices = s;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ReducibleInstance> type3(const Graph& g, const std::vector<CircuitPattern>& circuits) {
  std::vector<ReducibleInstance> out;
  for (const auto& c : circuits) {
    if (c.length() != 7 || c.chords.size() != 2 || !c.independent_boundary) continue;
    std::set<std::pair<Vertex, Vertex>> chords;
    for (EdgeId e : c.chords) chords.insert(chord_ends(g, e));
    auto at = [&](int i) { return c.cycle[i % 7]; };
    auto is_chord = [&](Vertex x, Vertex y) { return chords.count({std::min(x, y), std::max(x, y)}) > 0; };
    for (int i = 0; i < 7; ++i) {
      if (!is_chord(at(i), at(i + 2)) || !is_chord(at(i + 1), at(i + 3))) continue;
      ReducibleInstance r;
      r.type = 3;
      r.roles = {at(i + 5), at(i + 6), at(i + 4), at(i + 1), at(i), at(i + 2), at(i + 3)};
      r.vertices = c.vertex_set();
      for (int role : {0, 1, 2}) r.outer.push_back(outer_neighbour(g, r.vertices, r.roles[role]));
      out.push_back(std::move(r));
      break;
    }
  }
  return out;
}

std::vector<ReducibleInstance> type4(const Graph& g, const std::vector<CircuitPattern>& circuits) {
  std::vector<ReducibleInstance> out;
  for (const auto& c : circuits) {
    if (c.length() != 6 || c.chords.size() != 1) continue;
    const auto [a, b] = chord_ends(g, c.chords[0]);
    // v1 is the smaller chord end; walk from it through v2 and v3.
    const Vertex v1 = std::min(a, b);
    const int p1 = index_of(c.cycle, v1);
    const int p3 = index_of(c.cycle, std::max(a, b));
    int dir;
    if ((p3 - p1 + 6) % 6 == 2)
      dir = 1;
    else if ((p1 - p3 + 6) % 6 == 2)
      dir = 5;
    else
      continue;
    ReducibleInstance r;
    r.type = 4;
    for (int i = 0; i < 6; ++i) r.roles.push_back(c.cycle[(p1 + i * dir) % 6]);
    r.vertices = c.vertex_set();
    for (int role : {1, 3, 4, 5}) r.outer.push_back(outer_neighbour(g, r.vertices, r.roles[role]));
    out.push_back(std::move(r));
  }
  return out;
}

void order_instances(std::vector<ReducibleInstance>& list) {
  std::stable_sort(list.begin(), list.end(), [](const ReducibleInstance& a, const ReducibleInstance& b) {
    return sorted_set(a.roles) < sorted_set(b.roles);
  });
}

}  // namespace

std::vector<Diamond> find_diamonds(const Graph& g) { return diamonds_from(enumerate_short_circuits(g, 8, 4)); }

std::vector<ReducibleInstance> find_reducible_of_type(const Graph& g, int type) {
  std::vector<ReducibleInstance> out;
  switch (type) {
    case 1:
      out = type1(g, enumerate_short_circuits(g, 5, 5));
      break;
    case 2:
      out = type2(g, find_diamonds(g));
      break;
    case 3:
      out = type3(g, enumerate_short_circuits(g, 7, 7));
      break;
    case 4:
      out = type4(g, enumerate_short_circuits(g, 6, 6));
      break;
    default:
      throw ContractViolation("reducible types are 1..4");
  }
  order_instances(out);
  return out;
}

std::optional<ReducibleInstance> find_reducible(const Graph& g) {
  for (int type = 1; type <= 4; ++type) {
    auto list = find_reducible_of_type(g, type);
    if (!list.empty()) return list.front();
  }
  return std::nullopt;
}

std::vector<EdgeTriple> enumerate_3_edge_cuts(const Graph& g, int max_order) {
  if (g.order() > max_order)
    throw CapabilityError("3-edge-cut enumeration is limited to " + std::to_string(max_order) +
                          " vertices; use decomposition mode, where the cut condition holds by construction");
  if (!is_connected(g)) throw ContractViolation("3-edge-cut enumeration needs a connected graph");
  return kernels::three_edge_cuts(g, kernels::Exec::parallel);
}

std::string_view collection_name(CollectionKind k) {
  switch (k) {
    case CollectionKind::D4:
      return "D4";
    case CollectionKind::D6:
      return "D6";
    case CollectionKind::C4noint:
      return "C4noint";
    case CollectionKind::C5noint:
      return "C5noint";
    case CollectionKind::C44noint:
      return "C44noint";
    case CollectionKind::C6noint:
      return "C6noint";
    case CollectionKind::C4int5:
      return "C4int5";
  }
  return "?";
}

Rational target_ratio() { return frac(13, 10); }

CollectionParams make_params(int n, int b, Rational s, Rational t, Rational p_over_n) {
  static constexpr int allowed[] = {2, 4, 5, 6, 7, 9};
  if (std::find(std::begin(allowed), std::end(allowed), b) == std::end(allowed))
    throw ContractViolation("boundary size " + std::to_string(b) + " is not one of 2,4,5,6,7,9");
  return {n, b, 2 * (b / 2), std::move(s), std::move(t), std::move(p_over_n)};
}

const CollectionParams& table_params(CollectionKind k) {
  static const CollectionParams table[] = {
      make_params(4, 2, frac(3, 2), frac(6, 5), 1),      make_params(6, 2, frac(4, 3), frac(5, 4), 1),
      make_params(4, 4, frac(3, 2), frac(6, 5), 1),      make_params(5, 5, frac(7, 5), frac(5, 4), 1),
      make_params(6, 4, frac(4, 3), frac(6, 5), 1),      make_params(6, 6, frac(4, 3), frac(6, 5), frac(1, 6)),
      make_params(4, 4, frac(11, 8), frac(5, 4), 1),
  };
  return table[static_cast<int>(k)];
}

Rational collection_weight(const CollectionParams& p, const Rational& r) {
  return p.p() / (Rational(p.a) - Rational(2 * p.b) / 3) * (r - p.t);
}

Rational averaging_rhs(const CollectionParams& p) {
  const Rational w = frac(3, 2) * p.a - p.b;
  const Rational x = p.p_over_n * p.b;
  return (w * p.s + x * p.t) / (w + x);
}

std::pair<Rational, Rational> uv_weights(const CollectionParams& p) {
  switch (p.b) {
    case 2:
    case 4:
    case 6:
      return {1, p.p_over_n * 2};
    case 5:
      return {1, p.p_over_n * 5};
    case 7:
      return {2, p.p_over_n * 7};
    case 9:
      return {1, p.p_over_n * 3};
  }
  throw ContractViolation("no (u, v) weights for boundary size " + std::to_string(p.b));
}

Rational uv_rhs(const CollectionParams& p) {
  const auto [u, v] = uv_weights(p);
  return (u * p.s + v * p.t) / (u + v);
}

std::vector<VertexSet> short_star_circuits(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& c : enumerate_short_circuits(g, 5, 4))
    if (c.chordless()) out.push_back(c.vertex_set());
  return out;
}

std::vector<GoodCollection> build_collections(const Graph& g) {
  if (find_reducible(g)) throw ContractViolation("good collections are defined for irreducible graphs only");
  const auto circuits = enumerate_short_circuits(g, 6, 4);

  std::vector<VertexSet> star4, star5;
  std::vector<VertexSet> c4, c5, c6, c44;
  for (const auto& c : circuits) {
    const auto set = c.vertex_set();
    if (c.chordless()) {
      if (c.length() == 4) star4.push_back(set);
      if (c.length() == 5) star5.push_back(set);
      if (c.independent_boundary) {
        if (c.length() == 4) c4.push_back(set);
        if (c.length() == 5) c5.push_back(set);
        if (c.length() == 6) c6.push_back(set);
      }
    } else if (c.length() == 6 && c.chords.size() == 1) {
      const auto [a, b] = chord_ends(g, c.chords[0]);
      const int d = std::abs(index_of(c.cycle, a) - index_of(c.cycle, b));
      if (d == 3) c44.push_back(set);
    }
  }
  std::vector<VertexSet> star = star4;
  star.insert(star.end(), star5.begin(), star5.end());

  auto touched_by_any = [](const VertexSet& c, const std::vector<VertexSet>& list) {
    return std::any_of(list.begin(), list.end(), [&](const VertexSet& x) { return touches(c, x); });
  };

  std::vector<GoodCollection> out;
  for (CollectionKind kind : kAllCollections) {
    GoodCollection col{kind, table_params(kind), collection_weight(table_params(kind), target_ratio()), {}};
    std::vector<VertexSet> sets;
    switch (kind) {
      case CollectionKind::D4:
      case CollectionKind::D6: {
        const auto want = kind == CollectionKind::D4 ? DiamondKind::d4 : DiamondKind::d6;
        const int edges = kind == CollectionKind::D4 ? 5 : 8;
        for (const auto& d : diamonds_from(circuits))
          // Below 8 vertices a diamond can carry extra chords; those are not members.
          if (d.kind == want && induced_edge_count(g, d.vertices) == edges) sets.push_back(d.vertices);
        break;
      }
      case CollectionKind::C4noint:
        for (const auto& c : c4)
          if (!touched_by_any(c, star)) sets.push_back(c);
        break;
      case CollectionKind::C5noint:
        for (const auto& c : c5)
          if (!touched_by_any(c, star)) sets.push_back(c);
        break;
      case CollectionKind::C6noint:
        for (const auto& c : c6)
          if (!touched_by_any(c, star)) sets.push_back(c);
        break;
      case CollectionKind::C44noint:
        // Here the short circuits are the ones doing the touching; the two
        // 4-circuits inside the subgraph do not touch it.
        for (const auto& h : c44)
          if (std::none_of(star.begin(), star.end(), [&](const VertexSet& x) { return touches(x, h); }))
            sets.push_back(h);
        break;
      case CollectionKind::C4int5:
        for (const auto& c : c4)
          if (touched_by_any(c, star5) && !touched_by_any(c, star4)) sets.push_back(c);
        break;
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    for (auto& s : sets) {
      Member m{s, boundary_edges(g, s)};
      if (static_cast<int>(m.vertices.size()) != col.params.n || static_cast<int>(m.boundary.size()) != col.params.b)
        throw InvariantError(std::string(collection_name(kind)) + " member has " + std::to_string(m.vertices.size()) +
                             " vertices and " + std::to_string(m.boundary.size()) + " boundary edges");
      col.members.push_back(std::move(m));
    }
    out.push_back(std::move(col));
  }
  return out;
}

int Classification::zero() const {
  auto it = buckets.find(0);
  return it == buckets.end() ? 0 : it->second;
}

int Classification::star(const GoodCollection& c) const {
  auto it = buckets.find(c.params.a);
  return it == buckets.end() ? 0 : it->second;
}

std::vector<int> Classification::members_with(int k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < member_k.size(); ++i)
    if (member_k[i] == k) out.push_back(static_cast<int>(i));
  return out;
}

Classification classify_members(const GoodCollection& c, const std::vector<char>& in_factor) {
  Classification out;
  for (const auto& m : c.members) {
    int k = 0;
    for (EdgeId e : m.boundary) k += in_factor[e] ? 1 : 0;
    if (k % 2 != 0)
      throw InvariantError(std::string(collection_name(c.kind)) + " member meets the 2-factor in an odd number (" +
                           std::to_string(k) + ") of boundary edges");
    out.member_k.push_back(k);
    ++out.buckets[k];
  }
  return out;
}

namespace {

// Maximum independent set by branching; only used on small families.
std::vector<int> max_independent(const std::vector<std::vector<char>>& clash) {
  const int n = static_cast<int>(clash.size());
  std::vector<int> best, cur;
  std::function<void(int, std::vector<char>&)> go = [&](int i, std::vector<char>& blocked) {
    if (cur.size() + static_cast<std::size_t>(n - i) <= best.size()) return;
    if (i == n) {
      best = cur;
      return;
    }
    if (!blocked[i]) {
      std::vector<int> newly;
      for (int j = i + 1; j < n; ++j)
        if (clash[i][j] && !blocked[j]) {
          blocked[j] = 1;
          newly.push_back(j);
        }
      cur.push_back(i);
      go(i + 1, blocked);
      cur.pop_back();
      for (int j : newly) blocked[j] = 0;
    }
    go(i + 1, blocked);
  };
  std::vector<char> blocked(n, 0);
  go(0, blocked);
  return best;
}

}  // namespace

std::vector<int> independent_subfamily(const std::vector<Member>& members, const std::vector<int>& candidates) {
  std::vector<int> chosen;
  for (int i : candidates) {
    const bool free = std::none_of(chosen.begin(), chosen.end(),
                                   [&](int j) { return intersects(members[i].vertices, members[j].vertices); });
    if (free) chosen.push_back(i);
  }
  const auto enough = [&](const std::vector<int>& s) { return 4 * s.size() >= candidates.size(); };
  if (enough(chosen)) return chosen;
  if (candidates.size() <= 40) {
    std::vector<std::vector<char>> clash(candidates.size(), std::vector<char>(candidates.size(), 0));
    for (std::size_t a = 0; a < candidates.size(); ++a)
      for (std::size_t b = 0; b < candidates.size(); ++b)
        clash[a][b] = a != b && intersects(members[candidates[a]].vertices, members[candidates[b]].vertices);
    chosen.clear();
    for (int k : max_independent(clash)) chosen.push_back(candidates[k]);
    if (enough(chosen)) return chosen;
  }
  throw InvariantError("no pairwise disjoint subfamily with a quarter of " + std::to_string(candidates.size()) +
                       " members");
}

std::optional<DisjointnessWitness> check_star_disjointness(const std::vector<GoodCollection>& collections,
                                                           const std::vector<char>& in_factor) {
  std::vector<std::pair<CollectionKind, const VertexSet*>> all;
  for (const auto& c : collections) {
    const auto cls = classify_members(c, in_factor);
    auto star = cls.members_with(c.params.a);
    if (c.kind == CollectionKind::C6noint) star = independent_subfamily(c.members, star);
    for (int i : star) all.emplace_back(c.kind, &c.members[i].vertices);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (intersects(*all[i].second, *all[j].second))
        return DisjointnessWitness{all[i].first, all[j].first, *all[i].second, *all[j].second};
  return std::nullopt;
}

}  // namespace ctsp
