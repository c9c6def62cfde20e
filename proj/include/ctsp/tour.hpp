#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctsp/even_factor.hpp"
#include "ctsp/graph.hpp"
#include "ctsp/rational.hpp"

namespace ctsp {

struct Tour {
  /// Closed walk, first vertex repeated at the end.
  std::vector<Vertex> walk;
  int length = 0;
  int factor_cost = 0;
  int swaps = 0;
  int reductions = 0;
};

/// Factor edges once, the edges of a BFS spanning tree of G/F twice, then an
/// Euler tour of that multigraph. Length is c(F) - 2.
Tour build_tour(const Graph& g, const EvenFactor& f);

/// 13n/10 - 2 for n >= 8, n below that.
Rational tour_bound(int n);

struct TourReport {
  bool closed = false;
  bool steps_adjacent = false;
  bool covers_all = false;
  bool within_bound = false;
  int length = 0;
  Rational bound;
  std::optional<Vertex> missing;
  std::string detail;

  bool ok() const { return closed && steps_adjacent && covers_all && within_bound; }
};

TourReport validate_tour(const Graph& g, const Tour& t, const Rational& bound);

}  // namespace ctsp
