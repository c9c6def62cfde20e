#include "ctsp/factor_select.hpp"

#include <algorithm>

#include "ctsp/error.hpp"
#include "ctsp/graph_io.hpp"

namespace ctsp {

int TwoFactor::shortest() const {
  int best = 0;
  for (const auto& c : circuits)
    if (best == 0 || static_cast<int>(c.size()) < best) best = static_cast<int>(c.size());
  return best;
}

std::vector<std::vector<Vertex>> trace_circuits(const Graph& g, const std::vector<char>& in_factor) {
  std::vector<std::vector<Incidence>> adj(g.order());
  for (EdgeId e = 0; e < g.size(); ++e)
    if (in_factor[e]) {
      adj[g.edge(e).u].push_back({g.edge(e).v, e});
      adj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s] || adj[s].empty()) continue;
    if (adj[s].size() != 2) throw InvariantError("vertex " + std::to_string(s) + " has factor degree " +
                                                 std::to_string(adj[s].size()));
    std::vector<Vertex> cycle{s};
    seen[s] = 1;
    EdgeId came = adj[s][0].to < adj[s][1].to ? adj[s][1].edge : adj[s][0].edge;
    Vertex v = s;
    while (true) {
      const auto& a = adj[v];
      if (a.size() != 2)
        throw InvariantError("vertex " + std::to_string(v) + " has factor degree " + std::to_string(a.size()));
      const Incidence next = a[0].edge == came ? a[1] : a[0];
      came = next.edge;
      v = next.to;
      if (v == s) break;
      if (seen[v]) throw InvariantError("factor walk revisits vertex " + std::to_string(v));
      seen[v] = 1;
      cycle.push_back(v);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

TwoFactor two_factor_from_edges(const Graph& g, std::vector<char> in_factor) {
  std::vector<int> deg(g.order(), 0);
  for (EdgeId e = 0; e < g.size(); ++e)
    if (in_factor[e]) ++deg[g.edge(e).u], ++deg[g.edge(e).v];
  for (Vertex v = 0; v < g.order(); ++v)
    if (deg[v] != 2) throw InvariantError("not a 2-factor: vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(deg[v]));
  TwoFactor f;
  f.circuits = trace_circuits(g, in_factor);
  f.in_factor = std::move(in_factor);
  return f;
}

TwoFactor complement_of(const Graph& g, const Matching& m) {
  std::vector<char> in(g.size(), 1);
  for (EdgeId e : m.edges) in[e] = 0;
  return two_factor_from_edges(g, std::move(in));
}

std::string_view mode_name(SelectMode m) {
  switch (m) {
    case SelectMode::exhaustive: return "exhaustive";
    case SelectMode::decomposition: return "decomposition";
    case SelectMode::automatic: return "auto";
  }
  return "?";
}

SelectMode parse_select_mode(std::string_view s) {
  if (s == "exhaustive") return SelectMode::exhaustive;
  if (s == "decomposition") return SelectMode::decomposition;
  if (s == "auto") return SelectMode::automatic;
  throw ContractViolation("unknown selection mode '" + std::string(s) + "'");
}

std::vector<Rational> edge_weights(const Graph& g, const std::vector<GoodCollection>& collections) {
  std::vector<Rational> w(g.size());
  for (const auto& c : collections)
    for (const auto& m : c.members)
      for (EdgeId e : m.boundary) w[e] += c.weight;
  return w;
}

Rational f_value(const std::vector<Rational>& weights, const std::vector<EdgeId>& matching) {
  Rational s = 0;
  for (EdgeId e : matching) s += weights[e];
  return s;
}

Rational selection_inequality(const std::vector<GoodCollection>& collections, const std::vector<char>& in_factor) {
  Rational total = 0;
  for (const auto& c : collections) {
    const auto cls = classify_members(c, in_factor);
    const int b = c.params.b, a = c.params.a;
    total += c.weight * (Rational(2 * b * cls.zero()) - Rational((3 * a - 2 * b) * cls.star(c)));
  }
  return total;
}

namespace {

bool meets_each_cut_once(const Matching& m, const std::vector<EdgeTriple>& cuts) {
  for (const auto& cut : cuts) {
    int hit = 0;
    for (EdgeId e : cut) hit += std::binary_search(m.edges.begin(), m.edges.end(), e);
    if (hit != 1) return false;
  }
  return true;
}

}  // namespace

Selection select_two_factor(const Graph& g, const std::vector<GoodCollection>& collections, SelectMode mode,
                            kernels::Exec exec) {
  if (mode == SelectMode::automatic)
    mode = g.order() <= kDefaultEnumerationLimit ? SelectMode::exhaustive : SelectMode::decomposition;
  const auto weights = edge_weights(g, collections);
  const bool cuts_listed = g.order() <= kDefaultEnumerationLimit;
  const std::vector<EdgeTriple> cuts = cuts_listed ? enumerate_3_edge_cuts(g) : std::vector<EdgeTriple>{};

  std::vector<Matching> candidates;
  if (mode == SelectMode::exhaustive) {
    for (auto& m : enumerate_perfect_matchings(g))
      if (meets_each_cut_once(m, cuts)) candidates.push_back(std::move(m));
  } else {
    for (auto& [lambda, m] : decompose_uniform_third(g).terms) candidates.push_back(m);
  }
  if (candidates.empty())
    throw InvariantError("no perfect matching meets every 3-edge-cut once; graph " +
                         serialize_graph(g, GraphFormat::edge_list));

  std::vector<std::vector<EdgeId>> sets;
  sets.reserve(candidates.size());
  for (const auto& m : candidates) sets.push_back(m.edges);
  const std::size_t best = kernels::argmin_weight(sets, weights, exec);

  Selection s;
  auto& cert = s.certificate;
  cert.mode = mode;
  cert.matching = candidates[best];
  cert.candidates = candidates.size();
  cert.f_value = f_value(weights, cert.matching.edges);
  for (const auto& w : weights) cert.average_bound += w;
  cert.average_bound /= 3;
  cert.cut_check = cuts_listed ? "enumerated" : "by-decomposition";
  cert.cuts_checked = cuts.size();
  if (cuts_listed && !meets_each_cut_once(cert.matching, cuts))
    throw InvariantError("selected matching meets a 3-edge-cut more than once");

  s.factor = complement_of(g, cert.matching);
  if (s.factor.shortest() == 3) throw InvariantError("selected 2-factor contains a triangle");
  for (const auto& c : collections) cert.buckets.push_back(classify_members(c, s.factor.in_factor).buckets);
  cert.inequality = selection_inequality(collections, s.factor.in_factor);
  if (cert.f_value > cert.average_bound)
    throw InvariantError("f(M) = " + cert.f_value.str() + " exceeds the average " + cert.average_bound.str());
  if (cert.inequality > 0) throw InvariantError("selection inequality is positive: " + cert.inequality.str());
  return s;
}

}  // namespace ctsp
