#include <doctest.h>

#include "ctsp/error.hpp"
#include "ctsp/generators.hpp"
#include "ctsp/graph_io.hpp"
#include "ctsp/oracle.hpp"
#include "ctsp/reduce.hpp"
#include "ctsp/tour.hpp"
#include "oracles.hpp"

using namespace ctsp;

namespace {

EvenFactor factor_of_circuits(const Graph& g, const std::vector<std::vector<Vertex>>& circuits) {
  auto f = EvenFactor::empty(g);
  for (const auto& c : circuits)
    for (std::size_t i = 0; i < c.size(); ++i) f.in_factor[g.edge_between(c[i], c[(i + 1) % c.size()])] = 1;
  return f;
}

// Independent walk check: every step an edge, closed, every vertex present.
bool is_closed_spanning_walk(const Graph& g, const std::vector<Vertex>& w) {
  if (w.empty() || w.front() != w.back()) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    seen[w[i]] = 1;
    if (i + 1 < w.size()) {
      bool adj = false;
      for (const auto& e : g.edges()) adj = adj || (e.u == w[i] && e.v == w[i + 1]) || (e.v == w[i] && e.u == w[i + 1]);
      if (!adj) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

}  // namespace

TEST_CASE("a Hamiltonian factor gives the circuit itself") {
  const Graph g = prism(4);
  const auto f = EvenFactor::from_circuit(g, *hamiltonian_circuit(g));
  const auto t = build_tour(g, f);
  CHECK(t.length == 8);
  CHECK(t.walk.size() == 9);
  CHECK(is_closed_spanning_walk(g, t.walk));
}

TEST_CASE("Petersen: 9-circuit and an isolated vertex give length 11") {
  const Graph g = petersen();
  const auto [f, cost] = ctsp::oracle::min_cost_even_factor(g);
  CHECK(cost == 13);
  CHECK(f.isolated(g).size() == 1);
  CHECK(f.circuits(g).size() == 1);
  const auto t = build_tour(g, f);
  CHECK(t.length == 11);
  CHECK(is_closed_spanning_walk(g, t.walk));
  const auto r = validate_tour(g, t, tour_bound(10));
  CHECK(r.ok());
  CHECK(r.bound == 11);
}

TEST_CASE("two disjoint circuits add one doubled tree edge") {
  const Graph g = prism(3);
  const auto f = factor_of_circuits(g, {{0, 1, 2}, {3, 4, 5}});
  CHECK(f.circuits(g).size() == 2);
  const auto t = build_tour(g, f);
  CHECK(t.length == 3 + 3 + 2);
  CHECK(is_closed_spanning_walk(g, t.walk));
}

TEST_CASE("length equals cost minus two for random even factors") {
  int checked = 0;
  for (int n : {10, 12}) {
    const auto graphs = read_graph_file(::oracle::data_path(n == 10 ? "cubic_bridgeless_n10.g6" : "cubic_bridgeless_n12.g6"));
    for (std::size_t gi = 0; gi < graphs.size(); gi += 7) {
      const Graph& g = graphs[gi];
      // every even factor reachable by subsets of a few circuits
      const int m = g.size();
      for (std::uint32_t mask = 0; mask < (1u << m); mask += 97) {
        EvenFactor f{std::vector<char>(m)};
        for (int e = 0; e < m; ++e) f.in_factor[e] = (mask >> e) & 1;
        if (even_factor_problem(g, f)) continue;
        const auto t = build_tour(g, f);
        CHECK(t.length == f.cost(g) - 2);
        CHECK(is_closed_spanning_walk(g, t.walk));
        ++checked;
      }
      // the empty factor: a doubled spanning tree
      const auto t = build_tour(g, EvenFactor::empty(g));
      CHECK(t.length == 2 * (g.order() - 1));
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("build_tour rejects a non-factor") {
  const Graph g = petersen();
  auto f = EvenFactor::empty(g);
  f.in_factor[0] = 1;
  CHECK_THROWS_AS(build_tour(g, f), ContractViolation);
}

TEST_CASE("validate_tour") {
  const Graph k4 = generate("k4");
  Tour t;
  t.walk = {0, 1, 2, 3, 0};
  CHECK(validate_tour(k4, t, tour_bound(4)).ok());
  CHECK(tour_bound(4) == 4);
  CHECK(tour_bound(10) == 11);
  CHECK(tour_bound(14) == frac(81, 5));

  t.walk = {0, 1, 2, 0};
  const auto r = validate_tour(k4, t, tour_bound(4));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.covers_all);
  REQUIRE(r.missing);
  CHECK(*r.missing == 3);

  t.walk = {0, 1, 2, 3};
  CHECK_FALSE(validate_tour(k4, t, tour_bound(4)).closed);

  const Graph c = prism(3);
  t.walk = {0, 1, 2, 0, 3, 4, 5, 3, 0};
  CHECK(validate_tour(c, t, 8).ok());
  CHECK_FALSE(validate_tour(c, t, 7).ok());
  t.walk = {0, 4, 5, 3, 0, 1, 2, 0};
  CHECK_FALSE(validate_tour(c, t, 8).steps_adjacent);
}
