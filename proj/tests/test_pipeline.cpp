#include <doctest.h>

#include "ctsp/error.hpp"
#include "ctsp/generators.hpp"
#include "ctsp/graph_io.hpp"
#include "ctsp/oracle.hpp"
#include "ctsp/pipeline.hpp"
#include "ctsp/report.hpp"
#include "oracles.hpp"

using namespace ctsp;

TEST_CASE("Petersen tour has zero slack") {
  const auto r = run_pipeline(petersen());
  CHECK(r.ok());
  CHECK(r.tour.length == 11);
  CHECK(r.report.bound == 11);
  CHECK(r.tour.length == ctsp::oracle::optimal_graphic_tsp(petersen()));
  REQUIRE(r.selection);
  CHECK(r.selection->certificate.inequality <= 0);
}

TEST_CASE("the cube gets a Hamiltonian tour") {
  const auto r = run_pipeline(prism(4));
  CHECK(r.ok());
  CHECK(r.tour.length == 8);
  CHECK(r.core_solved_small);
}

TEST_CASE("inputs that are not simple cubic bridgeless are rejected by name") {
  Graph pendant(10, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {3, 4},
                                                           {4, 5}, {5, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 8}, {8, 9}});
  // vertex 9 has degree 1
  CHECK_THROWS_WITH_AS(run_pipeline(pendant), "input is not cubic", ContractViolation);
  // Two copies of K4 with one edge subdivided, joined through the subdivision vertices.
  Graph b(10);
  for (int base : {0, 5}) {
    b.add_edge(base + 0, base + 1);
    b.add_edge(base + 0, base + 2);
    b.add_edge(base + 1, base + 2);
    b.add_edge(base + 1, base + 3);
    b.add_edge(base + 2, base + 3);
    b.add_edge(base + 0, base + 4);
    b.add_edge(base + 3, base + 4);
  }
  b.add_edge(4, 9);
  CHECK_THROWS_WITH_AS(run_pipeline(b), "input is not bridgeless", ContractViolation);
  Graph multi(4);
  multi.add_edge(0, 1);
  multi.add_edge(0, 1);
  multi.add_edge(0, 2);
  multi.add_edge(1, 3);
  multi.add_edge(2, 3);
  multi.add_edge(2, 3);
  CHECK_THROWS_WITH_AS(run_pipeline(multi), "input is not simple", ContractViolation);
}

TEST_CASE("small inputs are solved directly") {
  for (const char* s : {"k4", "k33", "prism:3"}) {
    const Graph g = generate(s);
    const auto r = run_pipeline(g);
    CHECK(r.ok());
    CHECK(r.tour.length == g.order());
  }
}

TEST_CASE("named families up to 24 vertices") {
  for (const char* s : {"prism:5", "prism:6", "gp:7,2", "gp:8,3", "flower:3", "gp:10,3", "prism:12", "flower:5",
                        "gp:12,5"}) {
    const Graph g = generate(s);
    const auto r = run_pipeline(g);
    INFO(s);
    CHECK(r.ok());
    CHECK(Rational(r.tour.length) <= tour_bound(g.order()));
  }
}

TEST_CASE("selection modes agree on validity") {
  for (int seed = 1; seed <= 6; ++seed) {
    const Graph g = random_cubic_bridgeless(18, seed);
    for (auto mode : {SelectMode::exhaustive, SelectMode::decomposition}) {
      PipelineOptions o;
      o.mode = mode;
      const auto r = run_pipeline(g, o);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("report JSON is deterministic and carries the certificates") {
  const Graph g = random_cubic_bridgeless(16, 7);
  const auto a = pipeline_json(g, run_pipeline(g)).dump();
  const auto b = pipeline_json(g, run_pipeline(g)).dump();
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["ok"] == true);
  CHECK(j["certificates"].size() >= 3);
  CHECK(j["tour"]["walk"].size() == j["tour"]["length"].get<int>() + 1);
}

TEST_CASE("trace callback sees each stage") {
  std::vector<std::string> lines;
  PipelineOptions o;
  o.trace = [&](const std::string& s) { lines.push_back(s); };
  run_pipeline(petersen(), o);
  CHECK(lines.size() >= 4);
}
