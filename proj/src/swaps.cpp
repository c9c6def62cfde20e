#include "ctsp/swaps.hpp"

#include <algorithm>
#include <set>

#include "ctsp/error.hpp"

namespace ctsp {

std::string_view swap_name(SwapKind k) {
  switch (k) {
    case SwapKind::swap4: return "swap4";
    case SwapKind::swap5_t1: return "swap5_t1";
    case SwapKind::swap5_t2: return "swap5_t2";
    case SwapKind::swap6: return "swap6";
  }
  return "?";
}

int swap_saving(SwapKind k) {
  switch (k) {
    case SwapKind::swap4: return 2;
    case SwapKind::swap5_t1: return 1;
    case SwapKind::swap5_t2: return 3;
    case SwapKind::swap6: return 4;
  }
  return 0;
}

VertexSet XCircuit::vertices() const {
  std::vector<Vertex> v = circuit;
  v.insert(v.end(), isolated.begin(), isolated.end());
  return sorted_set(std::move(v));
}

namespace {

std::vector<Vertex> walk_circuit(const Graph& g, const std::vector<char>& in_factor, Vertex start) {
  std::vector<Vertex> cycle{start};
  EdgeId came = -1;
  Vertex v = start;
  while (true) {
    EdgeId next = -1;
    for (const auto& inc : g.incident(v))
      if (in_factor[inc.edge] && inc.edge != came) {
        next = inc.edge;
        break;
      }
    if (next < 0) throw InvariantError("factor walk stuck at vertex " + std::to_string(v));
    came = next;
    v = g.other(next, v);
    if (v == start) return cycle;
    if (cycle.size() > static_cast<std::size_t>(g.order())) throw InvariantError("factor walk does not close");
    cycle.push_back(v);
  }
}

// The edge at a circuit vertex that leaves the circuit (host circuits are chordless).
EdgeId boundary_at(const Graph& g, const std::vector<Vertex>& cyc, std::size_t i) {
  const Vertex prev = cyc[(i + cyc.size() - 1) % cyc.size()];
  const Vertex next = cyc[(i + 1) % cyc.size()];
  for (const auto& inc : g.incident(cyc[i]))
    if (inc.to != prev && inc.to != next) return inc.edge;
  throw InvariantError("host circuit vertex without boundary edge");
}

}  // namespace

FactorState::FactorState(const Graph& g, const TwoFactor& f) : g_(&g), in_factor_(f.in_factor) {
  const int n = g.order();
  if (f.shortest() == 3) throw ContractViolation("starting 2-factor contains a triangle");
  isolated_.assign(n, 0);
  x_of_.assign(n, -1);
  for (const auto& c : f.circuits) {
    XCircuit x;
    x.circuit = c;
    for (Vertex v : c) x_of_[v] = static_cast<int>(xs_.size());
    xs_.push_back(std::move(x));
  }
  if (std::count(x_of_.begin(), x_of_.end(), -1)) throw ContractViolation("2-factor does not cover every vertex");
  diamond_of_.assign(n, -1);
  int index = 0;
  for (const auto& d : find_diamonds(g)) {
    if (d.kind != DiamondKind::d4) continue;
    for (Vertex v : d.vertices) diamond_of_[v] = index;
    ++index;
  }
  for (auto& c : enumerate_short_circuits(g, 6, 4))
    if (c.chordless()) hosts_.push_back(std::move(c));
}

std::vector<int> FactorState::alive_ids() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(xs_.size()); ++i)
    if (xs_[i].alive) out.push_back(i);
  return out;
}

int FactorState::circuit_count() const { return static_cast<int>(alive_ids().size()); }

int FactorState::isolated_count() const { return static_cast<int>(std::count(isolated_.begin(), isolated_.end(), 1)); }

int FactorState::cost() const { return g_->order() + 2 * circuit_count() + isolated_count(); }

int FactorState::x_cost(int id) const {
  const auto& x = xs_[id];
  return static_cast<int>(x.circuit.size() + 2 * x.isolated.size()) + 2;
}

int FactorState::diamonds_in(int id) const {
  std::set<int> seen;
  for (Vertex v : xs_[id].vertices())
    if (diamond_of_[v] >= 0) seen.insert(diamond_of_[v]);
  return static_cast<int>(seen.size());
}

int FactorState::diamond_vertices_in(int id) const {
  int k = 0;
  for (Vertex v : xs_[id].vertices()) k += diamond_of_[v] >= 0;
  return k;
}

Rational FactorState::cost_sum() const {
  Rational s = 0;
  for (const auto& c : cost_) s += c;
  return s;
}

bool FactorState::touches_short_factor_circuit(const CircuitPattern& host) const {
  const VertexSet hv = host.vertex_set();
  std::set<int> seen;
  for (Vertex v : hv) {
    if (isolated_[v]) continue;
    const int id = x_of_[v];
    if (!seen.insert(id).second || xs_[id].circuit.size() > 5) continue;
    if (touches(hv, sorted_set(xs_[id].circuit))) return true;
  }
  return false;
}

std::optional<SwapCandidate> FactorState::check_host(const CircuitPattern& host, int phase) const {
  const Graph& g = *g_;
  const auto& cyc = host.cycle;
  const std::size_t len = cyc.size();
  if (!host.chordless() || len < 4 || len > 6) return std::nullopt;
  if (phase == 1 && touches_short_factor_circuit(host)) return std::nullopt;
  std::vector<char> bin(len);
  int count = 0;
  for (std::size_t i = 0; i < len; ++i) count += bin[i] = in_factor_[boundary_at(g, cyc, i)];
  auto e = [&](Vertex a, Vertex b) { return g.edge_between(a, b); };
  auto f = [&](Vertex a, Vertex b) { return in_factor_[e(a, b)] != 0; };

  SwapCandidate c;
  if (len == 4 || len == 6) {
    if (count != static_cast<int>(len)) return std::nullopt;
    const std::size_t s = f(cyc[0], cyc[1]) ? 0 : 1;
    std::vector<Vertex> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = cyc[(s + i) % len];
    std::vector<int> ids;
    for (std::size_t i = 0; i < len; i += 2) {
      if (!f(v[i], v[i + 1])) throw InvariantError("host circuit factor edges do not alternate");
      ids.push_back(x_of_[v[i]]);
    }
    if (std::set<int>(ids.begin(), ids.end()).size() != ids.size()) return std::nullopt;
    c.host = v;
    c.participants = ids;
    if (len == 4) {
      c.kind = SwapKind::swap4;
      c.removed = {e(v[0], v[1]), e(v[2], v[3])};
      c.added = {e(v[0], v[3]), e(v[1], v[2])};
    } else {
      c.kind = SwapKind::swap6;
      c.removed = {e(v[0], v[1]), e(v[2], v[3]), e(v[4], v[5])};
      c.added = {e(v[0], v[5]), e(v[1], v[2]), e(v[3], v[4])};
    }
    return c;
  }

  if (count != 4) return std::nullopt;
  const std::size_t p = static_cast<std::size_t>(std::find(bin.begin(), bin.end(), 0) - bin.begin());
  // v1..v4 follow v5 around the circuit.
  const Vertex v1 = cyc[(p + 1) % 5], v2 = cyc[(p + 2) % 5], v3 = cyc[(p + 3) % 5], v4 = cyc[(p + 4) % 5];
  const Vertex v5 = cyc[p];
  const std::set<int> touched{x_of_[v1], x_of_[v2], x_of_[v3], x_of_[v4]};
  if (touched.size() != 2) return std::nullopt;
  c.host = {v1, v2, v3, v4, v5};
  if (f(v2, v3)) {
    if (!f(v1, v5) || !f(v5, v4) || x_of_[v2] == x_of_[v1]) return std::nullopt;
    c.kind = SwapKind::swap5_t1;
    c.participants = {x_of_[v2], x_of_[v1]};
    c.removed = {e(v2, v3), e(v1, v5), e(v5, v4)};
    c.added = {e(v1, v2), e(v3, v4)};
  } else {
    if (!f(v1, v2) || !f(v3, v4) || !isolated_[v5] || x_of_[v1] == x_of_[v3]) return std::nullopt;
    if (x_of_[v5] != x_of_[v1] && x_of_[v5] != x_of_[v3])
      throw InvariantError("isolated vertex " + std::to_string(v5) + " of a 5-swap is bound elsewhere");
    c.kind = SwapKind::swap5_t2;
    c.participants = {x_of_[v1], x_of_[v3]};
    c.removed = {e(v1, v2), e(v3, v4)};
    c.added = {e(v2, v3), e(v1, v5), e(v5, v4)};
  }
  return c;
}

std::vector<SwapCandidate> FactorState::candidates(int phase) const {
  std::vector<SwapCandidate> out;
  for (int len : {6, 4, 5})
    for (const auto& h : hosts_)
      if (h.length() == len)
        if (auto c = check_host(h, phase)) out.push_back(std::move(*c));
  return out;
}

std::optional<SwapCandidate> FactorState::next_candidate(int phase) const {
  for (int len : {6, 4, 5})
    for (const auto& h : hosts_)
      if (h.length() == len)
        if (auto c = check_host(h, phase)) return c;
  return std::nullopt;
}

int FactorState::apply(const SwapCandidate& c, int phase) {
  const Graph& g = *g_;
  // Re-derive from the host so a stale candidate cannot slip through.
  std::vector<Vertex> cyc = c.host;
  if (c.kind == SwapKind::swap5_t1 || c.kind == SwapKind::swap5_t2) cyc = {c.host[4], c.host[0], c.host[1], c.host[2], c.host[3]};
  const auto fresh = check_host(describe_circuit(g, cyc), phase);
  if (!fresh || fresh->kind != c.kind || fresh->removed != c.removed || fresh->added != c.added ||
      fresh->participants != c.participants)
    throw ContractViolation("stale swap candidate");

  const int before = cost();
  VertexSet merged_vertices;
  std::vector<Vertex> merged_isolated;
  XCircuit x;
  for (int id : c.participants) {
    const auto& p = xs_[id];
    const auto pv = p.vertices();
    merged_vertices.insert(merged_vertices.end(), pv.begin(), pv.end());
    merged_isolated.insert(merged_isolated.end(), p.isolated.begin(), p.isolated.end());
    x.j4 += p.j4;
    x.j5 += p.j5;
    x.j6 += p.j6;
  }
  merged_vertices = sorted_set(std::move(merged_vertices));

  for (EdgeId e : c.removed) in_factor_[e] = 0;
  for (EdgeId e : c.added) in_factor_[e] = 1;
  const Vertex v5 = c.host.size() == 5 ? c.host[4] : -1;
  switch (c.kind) {
    case SwapKind::swap4: ++x.j4; break;
    case SwapKind::swap6: ++x.j6; break;
    case SwapKind::swap5_t1:
      ++x.j5;
      isolated_[v5] = 1;
      merged_isolated.push_back(v5);
      break;
    case SwapKind::swap5_t2:
      ++x.j5;
      isolated_[v5] = 0;
      merged_isolated.erase(std::find(merged_isolated.begin(), merged_isolated.end(), v5));
      break;
  }
  x.circuit = walk_circuit(g, in_factor_, c.host[1]);
  x.isolated = sorted_set(std::move(merged_isolated));
  if (x.vertices() != merged_vertices) throw InvariantError("merged X-circuit is not the union of the participants");

  std::vector<VertexSet> parts;
  for (int p : c.participants) parts.push_back(xs_[p].vertices());
  const int id = static_cast<int>(xs_.size());
  for (int p : c.participants) xs_[p].alive = false;
  for (Vertex v : merged_vertices) x_of_[v] = id;
  xs_.push_back(std::move(x));

  const int saving = before - cost();
  if (saving != swap_saving(c.kind))
    throw InvariantError(std::string(swap_name(c.kind)) + " saved " + std::to_string(saving));
  if (!cost_.empty()) {
    const Rational m = static_cast<int>(parts.size());
    for (const auto& pv : parts) {
      int t = 0;
      for (Vertex v : pv) t += diamond_of_[v] < 0;
      if (t == 0) throw InvariantError("X-circuit taking part in a swap lies entirely inside 4-diamonds");
      const Rational delta = Rational(saving) / (m * t);
      for (Vertex v : pv)
        if (diamond_of_[v] < 0) cost_[v] -= delta;
    }
  }
  history_.push_back({phase, c.kind, c.host, c.participants, id, saving});
  return saving;
}

void FactorState::run_phase1() {
  while (auto c = next_candidate(1)) apply(*c, 1);
  phase1_xs_.clear();
  for (const auto& x : xs_)
    if (x.alive) phase1_xs_.push_back(x);
}

void FactorState::assign_c1() {
  const Rational cap = frac(6, 5);
  cost_.assign(g_->order(), 0);
  for (int id : alive_ids()) {
    const auto vs = xs_[id].vertices();
    const int size = static_cast<int>(vs.size());
    const int k = diamond_vertices_in(id);
    const Rational share = Rational(x_cost(id), size);
    // An X-circuit made only of diamond vertices keeps the uniform share.
    if (k == 0 || share <= cap || k == size) {
      for (Vertex v : vs) cost_[v] = share;
      continue;
    }
    const Rational rest = (Rational(x_cost(id)) - cap * k) / (size - k);
    for (Vertex v : vs) cost_[v] = diamond_of_[v] >= 0 ? cap : rest;
  }
  c1_ = cost_;
  if (cost_sum() != cost()) throw InvariantError("c1 ledger does not sum to the factor cost");
}

void FactorState::run_phase2() {
  if (cost_.empty()) throw ContractViolation("phase 2 needs the c1 ledger");
  while (auto c = next_candidate(2)) {
    apply(*c, 2);
    if (cost_sum() != cost()) throw InvariantError("cost ledger drifted from the factor cost");
  }
}

std::vector<int> FactorState::derive_binding() const {
  const int n = g_->order();
  std::vector<int> bound(n, -1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!isolated_[v] || bound[v] >= 0) continue;
      std::vector<std::pair<int, int>> votes;
      for (Vertex w : g_->neighbours(v)) {
        const int target = isolated_[w] ? bound[w] : x_of_[w];
        if (target < 0) continue;
        auto it = std::find_if(votes.begin(), votes.end(), [&](const auto& p) { return p.first == target; });
        if (it == votes.end())
          votes.emplace_back(target, 1);
        else
          ++it->second;
      }
      for (const auto& [target, count] : votes)
        if (count >= 2) {
          bound[v] = target;
          changed = true;
        }
    }
  }
  return bound;
}

std::optional<std::string> FactorState::check_consistency() const {
  const Graph& g = *g_;
  std::vector<int> deg(g.order(), 0);
  for (EdgeId e = 0; e < g.size(); ++e)
    if (in_factor_[e]) ++deg[g.edge(e).u], ++deg[g.edge(e).v];
  for (Vertex v = 0; v < g.order(); ++v) {
    if (deg[v] != 0 && deg[v] != 2) return "vertex " + std::to_string(v) + " has factor degree " + std::to_string(deg[v]);
    if ((deg[v] == 0) != (isolated_[v] != 0)) return "isolation flag wrong at " + std::to_string(v);
  }
  std::vector<char> covered(g.order(), 0);
  for (int id : alive_ids()) {
    const auto& x = xs_[id];
    const auto walked = walk_circuit(g, in_factor_, x.circuit.front());
    if (sorted_set(walked) != sorted_set(x.circuit)) return "circuit of X " + std::to_string(id) + " is stale";
    for (Vertex v : x.vertices()) {
      if (x_of_[v] != id) return "vertex " + std::to_string(v) + " has the wrong X id";
      if (covered[v]++) return "vertex " + std::to_string(v) + " in two X-circuits";
    }
  }
  if (std::count(covered.begin(), covered.end(), 0)) return "some vertex is in no X-circuit";
  const auto bound = derive_binding();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!isolated_[v]) continue;
    if (bound[v] < 0) return "isolated vertex " + std::to_string(v) + " is bound to no circuit";
    if (bound[v] != x_of_[v])
      return "isolated vertex " + std::to_string(v) + " is bound to X " + std::to_string(bound[v]) + " not " +
             std::to_string(x_of_[v]);
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> FactorState::circuits() const { return trace_circuits(*g_, in_factor_); }

std::optional<CircuitPattern> swap_availability_violation(const FactorState& s) {
  const Graph& g = s.graph();
  const auto hosts = enumerate_short_circuits(g, 6, 4);
  for (int id : s.alive_ids()) {
    const auto& x = s.xs()[id];
    if (!x.isolated.empty()) continue;
    const VertexSet xv = x.vertices();
    for (const auto& h : hosts) {
      if (!touches(h.vertex_set(), xv)) continue;
      bool other = false;
      for (Vertex v : h.cycle) other = other || (!s.isolated(v) && s.x_of(v) != id);
      if (!other) return h;
    }
  }
  return std::nullopt;
}

}  // namespace ctsp
