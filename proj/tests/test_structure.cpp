#include <doctest.h>

#include <map>
#include <random>

#include "ctsp/error.hpp"
#include "ctsp/generators.hpp"
#include "ctsp/graph_io.hpp"
#include "ctsp/kernels.hpp"
#include "ctsp/structure.hpp"
#include "oracles.hpp"

using namespace ctsp;

namespace {

std::vector<Graph> catalog(int n) {
  char name[64];
  std::snprintf(name, sizeof name, "cubic_bridgeless_n%02d.g6", n);
  return read_graph_file(oracle::data_path(name));
}

// Catalog graphs up to 12 vertices plus every 12th graph on 14 vertices.
std::vector<Graph> desk_corpus() {
  std::vector<Graph> out;
  for (int n : {4, 6, 8, 10, 12})
    for (auto& g : catalog(n)) out.push_back(g);
  const auto big = catalog(14);
  for (std::size_t i = 0; i < big.size(); i += 12) out.push_back(big[i]);
  return out;
}

bool is_chordless(const Graph& g, const std::vector<int>& cycle) {
  return oracle::induced_edges(g, cycle) == static_cast<int>(cycle.size());
}

// Diamond vertex sets from subsets: dense vertex sets with a spanning circuit.
std::map<std::string, std::set<std::vector<int>>> diamonds_by_subsets(const Graph& g) {
  std::map<std::string, std::set<std::vector<int>>> out;
  auto dense = [&](int k, int edges) {
    std::set<std::vector<int>> s;
    oracle::for_each_subset(g.order(), k, [&](const std::vector<int>& set) {
      if (oracle::induced_edges(g, set) >= edges && !oracle::hamiltonian_cycles_of(g, set).empty()) s.insert(set);
    });
    return s;
  };
  auto inside = [](const std::vector<int>& a, const std::set<std::vector<int>>& list) {
    for (const auto& b : list)
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return true;
    return false;
  };
  out["d8"] = dense(8, 11);
  for (const auto& s : dense(6, 8))
    if (!inside(s, out["d8"])) out["d6"].insert(s);
  for (const auto& s : dense(4, 5))
    if (!inside(s, out["d6"])) out["d4"].insert(s);
  return out;
}

// Graph with the K4-minus-edge gadget spliced into one Petersen edge.
Graph petersen_with_gadget() {
  const Graph p = petersen();
  Graph g(14);
  const auto cut = p.edge(0);
  for (EdgeId e = 1; e < p.size(); ++e) g.add_edge(p.edge(e).u, p.edge(e).v);
  // tips 10 and 13, inner 11 and 12
  for (auto [u, v] : {std::pair{10, 11}, {10, 12}, {11, 12}, {11, 13}, {12, 13}}) g.add_edge(u, v);
  g.add_edge(cut.u, 10);
  g.add_edge(13, cut.v);
  return g;
}

}  // namespace

TEST_CASE("short circuits of small graphs") {
  const Graph k4 = generate("k4");
  const auto fours = enumerate_short_circuits(k4, 4, 4);
  CHECK(fours.size() == 3);
  for (const auto& c : fours) CHECK(c.chords.size() == 2);

  const auto pent = enumerate_short_circuits(petersen(), 5);
  CHECK(pent.size() == 12);
  CHECK(oracle::all_cycles(petersen(), 5).size() == 12);
  for (const auto& c : pent) {
    CHECK(c.length() == 5);
    CHECK(c.chordless());
    CHECK(c.independent_boundary);
  }

  const auto sq = enumerate_short_circuits(prism(3), 4, 4);
  CHECK(sq.size() == 3);
  for (const auto& c : sq) CHECK(c.chordless());
}

TEST_CASE("circuit enumeration matches permutation search") {
  for (const auto& g : desk_corpus()) {
    if (g.order() > 12) continue;
    const auto mine = enumerate_short_circuits(g, 8);
    std::vector<std::vector<int>> expected;
    for (int len = 3; len <= 8; ++len)
      for (auto& c : oracle::all_cycles(g, len)) expected.push_back(c);
    std::vector<std::vector<int>> got;
    for (const auto& c : mine) {
      got.push_back(c.cycle);
      CHECK(c.chords.size() == static_cast<std::size_t>(oracle::induced_edges(g, c.cycle) - c.length()));
      const auto b = oracle::boundary(g, c.vertex_set());
      CHECK(c.boundary == std::vector<EdgeId>(b.begin(), b.end()));
      CHECK(c.independent_boundary == oracle::independent(g, b));
    }
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
  }
}

TEST_CASE("diamonds") {
  CHECK(find_diamonds(petersen()).empty());

  const auto pr = find_diamonds(prism(3));
  REQUIRE(pr.size() == 1);
  CHECK(pr[0].kind == DiamondKind::d6);

  const Graph gadget = petersen_with_gadget();
  REQUIRE(validate(gadget).all());
  const auto d = find_diamonds(gadget);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == DiamondKind::d4);
  CHECK(d[0].vertices == VertexSet{10, 11, 12, 13});
  CHECK(diamonds_by_subsets(gadget)["d4"].size() == 1);

  for (const auto& g : desk_corpus()) {
    if (g.order() > 12) continue;
    auto expected = diamonds_by_subsets(g);
    std::map<std::string, std::set<std::vector<int>>> got;
    for (const auto& x : find_diamonds(g)) got[std::string(diamond_name(x.kind))].insert(x.vertices);
    for (const char* k : {"d4", "d6", "d8"}) CHECK(got[k] == expected[k]);
  }
}

TEST_CASE("reducible detection agrees with subset scan") {
  CHECK_FALSE(find_reducible(petersen()));
  CHECK_FALSE(find_reducible(generate("k4")));

  for (const auto& g : desk_corpus()) {
    for (int type = 1; type <= 4; ++type) {
      std::set<std::vector<int>> got;
      for (const auto& r : find_reducible_of_type(g, type)) got.insert(sorted_set(r.roles));
      const auto naive = oracle::naive_reducible(g, type);
      CHECK(got == std::set<std::vector<int>>(naive.begin(), naive.end()));
    }
    const bool any = find_reducible(g).has_value();
    bool naive_any = false;
    for (int type = 1; type <= 4 && !naive_any; ++type) naive_any = !oracle::naive_reducible(g, type).empty();
    CHECK(any == naive_any);
  }
}

TEST_CASE("reducible role labels carry the documented pattern") {
  int seen[5] = {0, 0, 0, 0, 0};
  for (const auto& g : desk_corpus()) {
    for (int type = 1; type <= 4; ++type)
      for (const auto& r : find_reducible_of_type(g, type)) {
        ++seen[type];
        const auto& u = r.roles;
        auto adj = [&](int a, int b) { return g.adjacent(u[a], u[b]); };
        if (type == 1) {
          CHECK((adj(0, 1) && adj(1, 2) && adj(2, 3) && adj(3, 4) && adj(4, 0) && adj(1, 4)));
          CHECK(oracle::induced_edges(g, u) == 6);
          CHECK(r.outer.size() == 3);
        } else if (type == 3) {
          // circuit u1 u2 u5 u4 u6 u7 u3, chords u5u6 and u4u7 (0-based roles)
          const int order[] = {0, 1, 4, 3, 5, 6, 2};
          for (int i = 0; i < 7; ++i) CHECK(adj(order[i], order[(i + 1) % 7]));
          CHECK(adj(4, 5));
          CHECK(adj(3, 6));
          CHECK(oracle::induced_edges(g, u) == 9);
        } else if (type == 4) {
          for (int i = 0; i < 6; ++i) CHECK(adj(i, (i + 1) % 6));
          CHECK(adj(0, 2));
          CHECK(oracle::induced_edges(g, u) == 7);
          CHECK(u[0] < u[2]);
        } else {
          CHECK(r.ends.size() >= 1);
          CHECK(r.vertices.size() == 8 + 2 * (r.ends.size() - 1));
          CHECK(r.chain_outer.first != r.chain_outer.second);
          CHECK_FALSE(g.adjacent(r.chain_outer.first, r.chain_outer.second));
        }
      }
  }
  for (int type = 1; type <= 4; ++type) CHECK(seen[type] > 0);
}

TEST_CASE("a 10-vertex graph whose only pattern is the triangle-in-hexagon") {
  bool found = false;
  for (const auto& g : catalog(10)) {
    bool only4 = !oracle::naive_reducible(g, 4).empty();
    for (int type = 1; type <= 3; ++type) only4 = only4 && oracle::naive_reducible(g, type).empty();
    if (!only4) continue;
    found = true;
    const auto r = find_reducible(g);
    REQUIRE(r);
    CHECK(r->type == 4);
  }
  CHECK(found);
}

TEST_CASE("3-edge-cuts") {
  CHECK(enumerate_3_edge_cuts(generate("k4")).size() == 4);
  CHECK(enumerate_3_edge_cuts(petersen()).size() == 10);

  // Two K4-minus-edge gadgets joined in a ring by two edges.
  const Graph ring = parse_graph("0 1\n0 2\n1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n5 7\n6 7\n3 4\n7 0\n", GraphFormat::edge_list);
  REQUIRE(validate(ring).all());
  const auto ring_cuts = enumerate_3_edge_cuts(ring);
  CHECK(ring_cuts.size() == oracle::three_cuts_by_subsets(ring).size());
  // Besides the eight vertex stars, each triangle of a gadget has a 3-edge boundary.
  CHECK(ring_cuts.size() == 12);

  for (const auto& g : desk_corpus()) {
    if (g.order() > 12) continue;
    const auto cuts = enumerate_3_edge_cuts(g);
    std::set<std::vector<int>> got;
    for (const auto& t : cuts) got.insert({t[0], t[1], t[2]});
    CHECK(got == oracle::three_cuts_by_subsets(g));
    CHECK(cuts == kernels::three_edge_cuts(g, kernels::Exec::serial));
  }
  CHECK_THROWS_AS(enumerate_3_edge_cuts(prism(13)), CapabilityError);
  CHECK_NOTHROW(enumerate_3_edge_cuts(prism(13), 26));
}

TEST_CASE("collection parameters") {
  const std::map<CollectionKind, Rational> weights = {
      {CollectionKind::D4, frac(3, 5)},       {CollectionKind::D6, frac(9, 20)},     {CollectionKind::C4noint, frac(3, 10)},
      {CollectionKind::C5noint, frac(3, 8)},  {CollectionKind::C44noint, frac(9, 20)}, {CollectionKind::C6noint, frac(1, 20)},
      {CollectionKind::C4int5, frac(3, 20)}};
  const std::map<CollectionKind, Rational> rhs = {
      {CollectionKind::D4, frac(13, 10)},      {CollectionKind::D6, frac(23, 18)},      {CollectionKind::C4noint, frac(13, 10)},
      {CollectionKind::C5noint, frac(51, 40)}, {CollectionKind::C44noint, frac(56, 45)}, {CollectionKind::C6noint, frac(13, 10)},
      {CollectionKind::C4int5, frac(31, 24)}};
  for (CollectionKind k : kAllCollections) {
    const auto& p = table_params(k);
    CHECK(p.a == 2 * (p.b / 2));
    CHECK(collection_weight(p, target_ratio()) == weights.at(k));
    CHECK(averaging_rhs(p) == rhs.at(k));
    CHECK(uv_rhs(p) == rhs.at(k));
    CHECK(averaging_rhs(p) <= target_ratio());
  }
  // The (u, v) table and the closed form agree for every admissible boundary size.
  std::mt19937 rng(3);
  for (int b : {2, 4, 5, 6, 7, 9})
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = make_params(6, b, frac(1 + rng() % 50, 1 + rng() % 7), frac(1 + rng() % 50, 1 + rng() % 7),
                                 frac(1 + rng() % 6, 1 + rng() % 6));
      CHECK(averaging_rhs(p) == uv_rhs(p));
    }
  CHECK_THROWS_AS(make_params(4, 3, 1, 1, 1), ContractViolation);
}

namespace {

// Collection members recomputed from subset scans and the touch definition.
std::map<CollectionKind, std::set<std::vector<int>>> collections_by_subsets(const Graph& g) {
  std::vector<std::vector<int>> star4, star5, c4, c5, c6, c44;
  auto set_of = [](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  for (int len : {4, 5, 6})
    for (const auto& c : oracle::all_cycles(g, len)) {
      const auto s = set_of(c);
      const int m = oracle::induced_edges(g, s);
      const bool indep = oracle::independent(g, oracle::boundary(g, s));
      if (m == len) {
        if (len == 4) star4.push_back(s);
        if (len == 5) star5.push_back(s);
        if (indep && len == 4) c4.push_back(s);
        if (indep && len == 5) c5.push_back(s);
        if (indep && len == 6) c6.push_back(s);
      } else if (len == 6 && m == 7) {
        // theta graph: no triangle means the chord joins opposite vertices
        bool triangle = false;
        oracle::for_each_subset(6, 3, [&](const std::vector<int>& q) {
          if (oracle::induced_edges(g, {s[q[0]], s[q[1]], s[q[2]]}) == 3) triangle = true;
        });
        if (!triangle) c44.push_back(s);
      }
    }
  auto touch = [](const std::vector<int>& c, const std::vector<int>& h) {
    bool meet = false, outside = false;
    for (int v : c) (std::count(h.begin(), h.end(), v) ? meet : outside) = true;
    return meet && outside;
  };
  auto any_touch = [&](const std::vector<int>& c, const std::vector<std::vector<int>>& list) {
    return std::any_of(list.begin(), list.end(), [&](const auto& x) { return touch(c, x); });
  };
  std::vector<std::vector<int>> star = star4;
  star.insert(star.end(), star5.begin(), star5.end());

  std::map<CollectionKind, std::set<std::vector<int>>> out;
  auto d = diamonds_by_subsets(g);
  for (const auto& s : d["d4"])
    if (oracle::induced_edges(g, s) == 5) out[CollectionKind::D4].insert(s);
  for (const auto& s : d["d6"])
    if (oracle::induced_edges(g, s) == 8) out[CollectionKind::D6].insert(s);
  for (const auto& c : c4)
    if (!any_touch(c, star)) out[CollectionKind::C4noint].insert(c);
  for (const auto& c : c5)
    if (!any_touch(c, star)) out[CollectionKind::C5noint].insert(c);
  for (const auto& c : c6)
    if (!any_touch(c, star)) out[CollectionKind::C6noint].insert(c);
  for (const auto& h : c44)
    if (std::none_of(star.begin(), star.end(), [&](const auto& x) { return touch(x, h); }))
      out[CollectionKind::C44noint].insert(h);
  for (const auto& c : c4)
    if (any_touch(c, star5) && !any_touch(c, star4)) out[CollectionKind::C4int5].insert(c);
  return out;
}

}  // namespace

TEST_CASE("collections on irreducible graphs") {
  const auto pc = build_collections(petersen());
  for (const auto& c : pc) {
    if (c.kind == CollectionKind::C5noint) CHECK(c.members.empty());
  }
  for (const auto& g : catalog(10))
    if (find_reducible(g)) {
      CHECK_THROWS_AS(build_collections(g), ContractViolation);
      break;
    }

  int irreducible = 0;
  std::map<CollectionKind, int> populated;
  for (const auto& g : desk_corpus()) {
    if (g.order() < 8 || find_reducible(g)) continue;
    ++irreducible;
    const auto cols = build_collections(g);
    const auto expected = collections_by_subsets(g);
    REQUIRE(cols.size() == 7);
    for (const auto& c : cols) {
      std::set<std::vector<int>> got;
      for (const auto& m : c.members) {
        got.insert(m.vertices);
        CHECK(static_cast<int>(m.vertices.size()) == c.params.n);
        CHECK(static_cast<int>(m.boundary.size()) == c.params.b);
      }
      const auto it = expected.find(c.kind);
      CHECK(got == (it == expected.end() ? std::set<std::vector<int>>{} : it->second));
      if (!c.members.empty()) ++populated[c.kind];
    }
  }
  CHECK(irreducible > 0);
  MESSAGE("irreducible desk graphs: " << irreducible);
}

TEST_CASE("member classification against a 2-factor") {
  // Gadget graph: a D4 member; the factor runs around the 4-circuit 10-11-13-12.
  const Graph g = petersen_with_gadget();
  REQUIRE_FALSE(find_reducible(g));
  const auto cols = build_collections(g);
  const auto& d4 = cols[0];
  REQUIRE(d4.members.size() == 1);

  // Find any 2-factor containing the 4-circuit by brute force over perfect matchings.
  bool saw_zero = false;
  bool saw_star = false;
  for (const auto& m : oracle::perfect_matchings(g)) {
    std::vector<char> f(g.size(), 1);
    for (int e : m) f[e] = 0;
    const auto cls = classify_members(d4, f);
    int total = 0;
    for (auto [k, count] : cls.buckets) total += count;
    CHECK(total == 1);
    if (cls.zero() == 1) saw_zero = true;
    if (cls.star(d4) == 1) saw_star = true;
    const bool circuit_in_f = f[g.edge_between(10, 11)] && f[g.edge_between(11, 13)] && f[g.edge_between(13, 12)] &&
                              f[g.edge_between(12, 10)];
    if (circuit_in_f) CHECK(cls.zero() == 1);
  }
  CHECK(saw_zero);
  CHECK(saw_star);
}

TEST_CASE("quarter-size disjoint subfamily") {
  std::vector<Member> members;
  // Five sets that all share vertex 0: only one can be chosen, and one of five
  // is below a quarter, so this must throw.
  for (int i = 1; i <= 5; ++i) members.push_back({{0, i}, {}});
  CHECK_THROWS_AS(independent_subfamily(members, {0, 1, 2, 3, 4}), InvariantError);
  CHECK(independent_subfamily(members, {0, 1, 2, 3}).size() == 1);

  // A path of overlaps where greedy in the given order is poor but the search recovers.
  std::vector<Member> path;
  for (int i = 0; i < 8; ++i) path.push_back({{i, i + 1}, {}});
  const auto chosen = independent_subfamily(path, {1, 0, 2, 3, 4, 5, 6, 7});
  CHECK(4 * chosen.size() >= 8);
}
