#include <doctest.h>

#include <map>
#include <random>

#include "ctsp/error.hpp"
#include "ctsp/generators.hpp"
#include "ctsp/graph_io.hpp"
#include "ctsp/matching.hpp"
#include "ctsp/structure.hpp"
#include "oracles.hpp"

using namespace ctsp;

namespace {

std::vector<Graph> catalog(int n) {
  char name[64];
  std::snprintf(name, sizeof name, "cubic_bridgeless_n%02d.g6", n);
  return read_graph_file(oracle::data_path(name));
}

std::set<std::vector<int>> as_sets(const std::vector<Matching>& ms) {
  std::set<std::vector<int>> out;
  for (const auto& m : ms) out.insert(m.edges);
  return out;
}

}  // namespace

TEST_CASE("perfect matching counts") {
  CHECK(enumerate_perfect_matchings(generate("k4")).size() == 3);
  const auto pm = enumerate_perfect_matchings(petersen());
  CHECK(pm.size() == 6);
  CHECK(oracle::perfect_matchings(petersen()).size() == 6);
  Graph hex(6);
  for (int i = 0; i < 6; ++i) hex.add_edge(i, (i + 1) % 6);
  CHECK(enumerate_perfect_matchings(hex).size() == 2);

  for (int n : {4, 6, 8, 10})
    for (const auto& g : catalog(n)) {
      const auto mine = enumerate_perfect_matchings(g);
      const auto brute = oracle::perfect_matchings(g);
      CHECK(as_sets(mine) == std::set<std::vector<int>>(brute.begin(), brute.end()));
      CHECK(std::is_sorted(mine.begin(), mine.end()));
    }
  CHECK_THROWS_AS(enumerate_perfect_matchings(prism(13)), CapabilityError);
}

TEST_CASE("forced edges in Petersen") {
  const Graph p = petersen();
  const auto pm = enumerate_perfect_matchings(p);
  for (EdgeId e = 0; e < p.size(); ++e) {
    int containing = 0;
    for (const auto& m : pm) containing += std::count(m.edges.begin(), m.edges.end(), e) > 0;
    CHECK(containing == 2);
    const auto m = find_perfect_matching(p, {e});
    REQUIRE(m);
    CHECK(m->perfect);
    CHECK(std::count(m->edges.begin(), m->edges.end(), e) == 1);
  }
  CHECK_FALSE(find_perfect_matching(Graph(3)));
  CHECK(find_perfect_matching(generate("k4"))->edges.size() == 2);
}

TEST_CASE("blossom matcher agrees with exhaustive search") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Graph g(n);
    const int m = static_cast<int>(rng() % 16);
    for (int i = 0; i < m; ++i) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v && !g.adjacent(u, v)) g.add_edge(u, v);
    }
    const auto mm = maximum_matching(g, std::vector<char>(g.size(), 1));
    CHECK(static_cast<int>(mm.size()) == oracle::max_matching_size(g));
    CHECK_NOTHROW(make_matching(g, mm));
  }
  // Forced and forbidden constraints against the full list.
  for (int n : {8, 10, 12})
    for (std::size_t i = 0; i < catalog(n).size(); i += 3) {
      const Graph g = catalog(n)[i];
      const auto all = enumerate_perfect_matchings(g);
      for (int trial = 0; trial < 10; ++trial) {
        const EdgeId f = static_cast<EdgeId>(rng() % g.size());
        EdgeId x = static_cast<EdgeId>(rng() % g.size());
        if (x == f) x = (x + 1) % g.size();
        bool exists = false;
        for (const auto& m : all)
          exists = exists || (std::count(m.edges.begin(), m.edges.end(), f) && !std::count(m.edges.begin(), m.edges.end(), x));
        const auto got = find_perfect_matching(g, {f}, {x});
        CHECK(got.has_value() == exists);
        if (got) {
          CHECK(got->perfect);
          CHECK(std::count(got->edges.begin(), got->edges.end(), f) == 1);
          CHECK(std::count(got->edges.begin(), got->edges.end(), x) == 0);
        }
      }
    }
}

TEST_CASE("uniform third decomposition") {
  const auto k4 = decompose_uniform_third(generate("k4"));
  REQUIRE(k4.terms.size() == 3);
  for (const auto& [l, m] : k4.terms) CHECK(l == frac(1, 3));

  // Every Petersen edge lies in exactly two of the six matchings, so 1/6 each is
  // a solution; the six incidence vectors are independent, so it is the only one.
  const auto pd = decompose_uniform_third(petersen());
  REQUIRE(pd.terms.size() == 6);
  for (const auto& [l, m] : pd.terms) CHECK(l == frac(1, 6));

  CHECK_FALSE(check_decomposition(prism(3), decompose_uniform_third(prism(3))));

  const auto coloured = decompose_uniform_third(prism(20), 8);
  CHECK(std::string(coloured.method) == "edge-colouring");
  CHECK_FALSE(check_decomposition(prism(20), coloured));
  CHECK_THROWS_AS(decompose_uniform_third(petersen(), 8), CapabilityError);

  FractionalDecomposition bad = k4;
  bad.terms.pop_back();
  CHECK(check_decomposition(generate("k4"), bad).has_value());
}

TEST_CASE("decomposition matchings meet each 3-edge-cut once") {
  for (int n : {8, 10, 12, 14}) {
    const auto graphs = catalog(n);
    for (std::size_t i = 0; i < graphs.size(); i += (n == 14 ? 4 : 1)) {
      const auto& g = graphs[i];
      const auto d = decompose_uniform_third(g);
      CHECK_FALSE(check_decomposition(g, d));
      for (const auto& cut : enumerate_3_edge_cuts(g))
        for (const auto& [l, m] : d.terms) {
          int hit = 0;
          for (EdgeId e : cut) hit += std::binary_search(m.edges.begin(), m.edges.end(), e);
          CHECK(hit == 1);
        }
    }
  }
}
