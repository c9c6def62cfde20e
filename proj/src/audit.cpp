#include "ctsp/audit.hpp"

#include <algorithm>
#include <sstream>

#include "ctsp/error.hpp"
#include "ctsp/factor_select.hpp"

namespace ctsp {

std::string AuditReport::summary() const {
  std::ostringstream os;
  os << (ok() ? "pass" : "FAIL");
  for (const auto& [k, n] : checked) os << ' ' << k << '=' << n;
  for (const auto& f : failures) {
    os << "\n  " << f.check;
    if (f.vertex >= 0) os << " v" << f.vertex;
    os << ": " << f.value.str() << " > " << f.bound.str();
    if (!f.detail.empty()) os << " (" << f.detail << ')';
  }
  return os.str();
}

Rational c1_swap_count_bound(int j4, int j5, int j6, int size, bool with_diamond) {
  const Rational low = frac(6, 5);
  if (j4 + j6 >= 1 || j5 >= 4) return low;
  if (j5 == 3) return size == 24 ? frac(29, 24) : low;
  if (j5 == 2) return size >= 20 ? low : frac(11, 9);
  if (j5 == 1) return size >= 15 ? low : frac(5, 4);
  if (size >= 10) return low;
  if (size == 9) return frac(31, 25);
  if (size == 8) return with_diamond ? frac(13, 10) : frac(5, 4);
  if (size == 7) return frac(9, 7);
  if (size == 6) return frac(4, 3);
  if (size == 5) return frac(7, 5);
  return frac(3, 2);
}

std::vector<VertexSet> six_diamonds_with_k4e(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& d : find_diamonds(g)) {
    if (d.kind != DiamondKind::d6) continue;
    bool found = false;
    for (int a = 0; a < 6 && !found; ++a)
      for (int b = a + 1; b < 6 && !found; ++b) {
        VertexSet four;
        for (int i = 0; i < 6; ++i)
          if (i != a && i != b) four.push_back(d.vertices[i]);
        found = induced_edge_count(g, four) == 5;
      }
    if (found) out.push_back(d.vertices);
  }
  return out;
}

namespace {

struct Auditor {
  const FactorState& s;
  AuditReport& r;

  void expect(const std::string& check, Vertex v, const Rational& value, const Rational& bound,
              const std::string& detail = {}) {
    ++r.checked[check];
    if (value > bound) r.failures.push_back({check, v, value, bound, detail});
  }
  void expect_true(const std::string& check, bool cond, const std::string& detail) {
    ++r.checked[check];
    if (!cond) r.failures.push_back({check, -1, 1, 0, detail});
  }

  std::string describe(const XCircuit& x) const {
    std::ostringstream os;
    os << "X of " << x.vertices().size() << " vertices, j4=" << x.j4 << " j5=" << x.j5 << " j6=" << x.j6
       << " isolated=" << x.isolated.size();
    return os.str();
  }

  void phase1_circuit(const XCircuit& x) {
    const auto vs = x.vertices();
    const int size = static_cast<int>(vs.size());
    std::map<int, int> per_diamond;
    for (Vertex v : vs)
      if (s.diamond_of(v) >= 0) ++per_diamond[s.diamond_of(v)];
    const int jd = static_cast<int>(per_diamond.size());
    const int ji = static_cast<int>(x.isolated.size());
    const std::string d = describe(x);

    expect_true("isolated<=j5", ji <= x.j5, d);
    const Rational cor = c1_swap_count_bound(x.j4, x.j5, x.j6, size, jd > 0);
    for (Vertex v : vs) expect("c1-by-swaps", v, s.c1()[v], cor, d);

    if (x.swaps() == 0) return;
    for (auto [id, k] : per_diamond) expect_true("diamond-all-or-none", k == 4, d);
    expect_true("size-bound", size >= 6 * (1 + x.j4 + x.j5 + 2 * x.j6) + 2 * jd, d);
    const int rest = size - 4 * jd;
    expect_true("outside-diamonds", rest > 0, d);
    if (rest <= 0) return;
    const Rational formula = 1 + (Rational(2 + x.j5) - frac(4, 5) * jd) / rest;
    const Rational bound = std::max(frac(6, 5), formula);
    for (Vertex v : vs) expect("c1-formula", v, s.c1()[v], bound, d);
    if (frac(-4, 5) + frac(x.j5, 5) + frac(2 * jd, 5) >= 0)
      for (Vertex v : vs) expect("c1-formula-low", v, s.c1()[v], frac(6, 5), d);
  }
};

}  // namespace

AuditReport audit_bounds(const FactorState& s, const std::vector<GoodCollection>& collections,
                         const std::vector<char>& original) {
  if (!s.has_costs()) throw ContractViolation("audit needs the cost ledgers");
  const Graph& g = s.graph();
  const int n = g.order();
  AuditReport r;
  Auditor a{s, r};

  for (const auto& x : s.phase1_xs()) a.phase1_circuit(x);
  for (int id : s.alive_ids()) {
    const auto& x = s.xs()[id];
    a.expect_true("isolated<=j5", static_cast<int>(x.isolated.size()) <= x.j5, a.describe(x));
  }
  for (Vertex v = 0; v < n; ++v) a.expect("phase2-monotone", v, s.costs()[v], s.c1()[v]);
  a.expect_true("ledger-sum", s.cost_sum() == s.cost(), "sum of c2 differs from c(F2)");

  std::vector<char> in_zero(n, 0);
  for (const auto& c : collections) {
    const auto cls = classify_members(c, original);
    const std::string name(collection_name(c.kind));
    std::vector<int> stars;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      const int k = cls.member_k[i];
      const auto& m = c.members[i];
      if (k == 0) {
        for (Vertex v : m.vertices) {
          in_zero[v] = 1;
          a.expect("zero-bound " + name, v, s.costs()[v], c.params.s);
        }
      } else if (k == c.params.a) {
        stars.push_back(static_cast<int>(i));
        if (c.kind != CollectionKind::C6noint)
          for (Vertex v : m.vertices) a.expect("star-bound " + name, v, s.costs()[v], c.params.t);
      }
    }
    if (c.kind == CollectionKind::C6noint) {
      for (int i : stars) {
        int low = 0;
        for (Vertex v : c.members[i].vertices) low += s.costs()[v] <= frac(6, 5);
        a.expect_true("six-circuit-low-vertices", low >= 4,
                      "member with " + std::to_string(low) + " vertices of cost <= 6/5");
      }
      const auto chosen = stars.empty() ? std::vector<int>{} : independent_subfamily(c.members, stars);
      a.expect_true("six-circuit-subfamily", 4 * chosen.size() >= stars.size(), "independent subfamily too small");
      r.reserved_sizes[name] = 4 * static_cast<int>(chosen.size());
    } else {
      VertexSet reserved;
      for (int i : stars) reserved.insert(reserved.end(), c.members[i].vertices.begin(), c.members[i].vertices.end());
      r.reserved_sizes[name] = static_cast<int>(sorted_set(reserved).size());
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!in_zero[v]) a.expect("outside-zero-classes", v, s.costs()[v], frac(13, 10));

  const auto overlap = check_star_disjointness(collections, original);
  a.expect_true("star-disjointness", !overlap,
                overlap ? std::string(collection_name(overlap->first_kind)) + " meets " +
                              std::string(collection_name(overlap->second_kind))
                        : std::string{});

  r.inequality = selection_inequality(collections, original);
  r.final_cost = s.cost();
  r.final_bound = frac(13, 10) * n;
  if (r.inequality <= 0) a.expect("final-cost", -1, r.final_cost, r.final_bound, "c(F2) against 13n/10");
  return r;
}

}  // namespace ctsp
