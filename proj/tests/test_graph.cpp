#include <doctest.h>

#include <random>

#include "ctsp/error.hpp"
#include "ctsp/generators.hpp"
#include "ctsp/graph.hpp"
#include "ctsp/graph_io.hpp"
#include "ctsp/kernels.hpp"
#include "oracles.hpp"

using namespace ctsp;

namespace {

Graph k4() { return generate("k4"); }

std::vector<Graph> catalog(int n) {
  char name[64];
  std::snprintf(name, sizeof name, "cubic_bridgeless_n%02d.g6", n);
  return read_graph_file(oracle::data_path(name));
}

}  // namespace

TEST_CASE("graph6 decoding and encoding of K4") {
  const Graph g = parse_graph("C~", GraphFormat::graph6);
  CHECK(g.order() == 4);
  CHECK(g.size() == 6);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(g.adjacent(i, j));
  CHECK(oracle::graph6_encode(k4()) == "C~");
  CHECK(serialize_graph(k4(), GraphFormat::graph6) == "C~");
}

TEST_CASE("edge list parsing") {
  const Graph g = parse_graph("0 1\n1 2\n2 0", GraphFormat::edge_list);
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(0, 2));

  const Graph iso = parse_graph("# n=5\n0 1\n", GraphFormat::edge_list);
  CHECK(iso.order() == 5);
}

TEST_CASE("parse errors name their position") {
  CHECK_THROWS_AS(parse_graph("0 1\n1 1\n", GraphFormat::edge_list), ParseError);
  try {
    parse_graph("0 1\n2 2\n", GraphFormat::edge_list);
  } catch (const ParseError& e) {
    CHECK(e.is_line());
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph("# n=3\n0 1\n1 7\n", GraphFormat::edge_list);
    FAIL("out-of-range id accepted");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_graph("C", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("C~~", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph(" ~", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("0 x\n", GraphFormat::edge_list), ParseError);
}

TEST_CASE("serialisation round trips") {
  for (int n : {4, 6, 8, 10, 12}) {
    for (const auto& line : oracle::read_lines(oracle::data_path("cubic_bridgeless_n" + std::string(n < 10 ? "0" : "") +
                                                                 std::to_string(n) + ".g6"))) {
      const Graph g = parse_graph(line, GraphFormat::graph6);
      CHECK(serialize_graph(g, GraphFormat::graph6) == line);
      CHECK(oracle::graph6_encode(g) == line);
      CHECK(parse_graph(serialize_graph(g, GraphFormat::edge_list), GraphFormat::edge_list).same_labeled(g));
    }
  }
  const Graph p = petersen();
  CHECK(parse_graph(serialize_graph(p, GraphFormat::graph6), GraphFormat::graph6).same_labeled(p));
  CHECK(serialize_graph(Graph(0), GraphFormat::graph6) == "?");
  CHECK(parse_graph("?", GraphFormat::graph6).order() == 0);
  CHECK(parse_graph(serialize_graph(Graph(0), GraphFormat::edge_list), GraphFormat::edge_list).order() == 0);

  Graph multi(2);
  multi.add_edge(0, 1);
  multi.add_edge(0, 1);
  CHECK_THROWS_AS(serialize_graph(multi, GraphFormat::graph6), UnsupportedFormat);
  CHECK(parse_graph(serialize_graph(multi, GraphFormat::edge_list), GraphFormat::edge_list).same_labeled(multi));
}

TEST_CASE("large graph6 header") {
  const Graph g = prism(40);
  const auto text = serialize_graph(g, GraphFormat::graph6);
  CHECK(text == oracle::graph6_encode(g));
  CHECK(text[0] == '~');
  CHECK(parse_graph(text, GraphFormat::graph6).same_labeled(g));
}

TEST_CASE("validation predicates") {
  CHECK(validate(k4()).all());
  Graph two_triangles(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}}) two_triangles.add_edge(u, v);
  const auto val = validate(two_triangles);
  CHECK(val.connected);
  CHECK_FALSE(val.bridgeless);
  CHECK_FALSE(val.cubic);
  CHECK(find_bridges(two_triangles) == std::vector<EdgeId>{6});

  const Graph p = petersen();
  CHECK(validate(p).all());
  CHECK(oracle::bridges(p).empty());
}

TEST_CASE("bridge detector agrees with edge deletion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 12);
    Graph g(n);
    const int m = static_cast<int>(rng() % (2 * n));
    for (int i = 0; i < m; ++i) {
      const int u = static_cast<int>(rng() % n);
      const int v = static_cast<int>(rng() % n);
      if (u != v) g.add_edge(u, v);
    }
    if (!is_connected(g)) continue;
    auto fast = find_bridges(g);
    std::sort(fast.begin(), fast.end());
    CHECK(fast == oracle::bridges(g));
    CHECK(fast == kernels::bridges_brute_force(g, kernels::Exec::parallel));
  }
  for (int n : {4, 6, 8, 10, 12, 14})
    for (const auto& g : catalog(n)) {
      CHECK(find_bridges(g).empty());
      CHECK(oracle::bridges(g).empty());
    }
}

TEST_CASE("generators") {
  const Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(oracle::girth(p) == 5);

  const Graph pr = prism(3);
  CHECK(pr.order() == 6);
  CHECK(pr.size() == 9);
  CHECK_FALSE(oracle::all_cycles(pr, 6).empty());

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_cubic_bridgeless(12, seed);
    CHECK(validate(g).all());
    CHECK(g.same_labeled(random_cubic_bridgeless(12, seed)));
  }
  CHECK(validate(flower_snark(5)).all());
  CHECK(flower_snark(5).order() == 20);
  CHECK(validate(generalized_petersen(7, 2)).all());
  CHECK_THROWS(random_cubic_bridgeless(11, 1));
  CHECK_THROWS(generate("prism:x"));
  CHECK_THROWS(generate("nothing"));
}

TEST_CASE("degree sums on every catalog graph") {
  for (int n : {4, 6, 8, 10, 12, 14}) {
    const auto graphs = catalog(n);
    for (const auto& g : graphs) {
      int sum = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        CHECK(g.degree(v) == 3);
        sum += g.degree(v);
      }
      CHECK(sum == 2 * g.size());
      CHECK(validate(g).all());
    }
  }
}

TEST_CASE("contraction") {
  const auto c = contract_vertex_set(k4(), std::vector<Vertex>{0, 1, 2});
  CHECK(c.graph.order() == 2);
  CHECK(c.graph.size() == 3);
  CHECK(c.graph.multiplicity(0, 1) == 3);
  CHECK(c.map[3] == 0);
  CHECK(c.map[0] == c.merged);

  const auto all = contract_vertex_set(petersen(), std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(all.graph.order() == 1);
  CHECK(all.graph.size() == 0);

  // A 5-circuit with one chord and three independent boundary edges.
  Graph g = parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n1 4\n0 5\n2 6\n3 7\n5 6\n6 7\n7 5\n",
                        GraphFormat::edge_list);
  const auto five = contract_vertex_set(g, std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(five.graph.order() == 4);
  CHECK(five.graph.degree(five.merged) == 3);
  CHECK(five.graph.neighbours(five.merged).size() == 3);
  CHECK(validate(five.graph).all());
}

TEST_CASE("dot export mentions every edge") {
  const auto dot = to_dot(k4());
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '-') >= 12);
}
