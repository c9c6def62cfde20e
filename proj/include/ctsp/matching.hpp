#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ctsp/graph.hpp"
#include "ctsp/rational.hpp"

namespace ctsp {

struct Matching {
  /// Ascending edge ids.
  std::vector<EdgeId> edges;
  bool perfect = false;

  bool operator==(const Matching& o) const { return edges == o.edges; }
  bool operator<(const Matching& o) const { return edges < o.edges; }
};

/// Checks pairwise non-adjacency and sets `perfect`. Throws InvariantError if
/// two edges share a vertex.
Matching make_matching(const Graph& g, std::vector<EdgeId> edges);
bool is_perfect_matching(const Graph& g, const std::vector<EdgeId>& edges);

/// Maximum cardinality matching over the edges with usable[e] != 0 (Edmonds).
std::vector<EdgeId> maximum_matching(const Graph& g, const std::vector<char>& usable);

/// A perfect matching containing every forced edge and no forbidden edge.
std::optional<Matching> find_perfect_matching(const Graph& g, const std::vector<EdgeId>& forced = {},
                                              const std::vector<EdgeId>& forbidden = {});

inline constexpr int kDefaultEnumerationLimit = 24;

/// All perfect matchings in ascending canonical order. Graphs with more than
/// `max_order` vertices raise CapabilityError.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, int max_order = kDefaultEnumerationLimit);

struct FractionalDecomposition {
  std::vector<std::pair<Rational, Matching>> terms;
  /// "enumeration" or "edge-colouring".
  const char* method = "";
};

/// Exact convex combination of perfect matchings equal to 1/3 on every edge.
/// Up to `max_order` vertices: all perfect matchings plus an exact simplex.
/// Beyond that: a proper 3-edge-colouring (each class weighted 1/3), found by
/// bounded backtracking; CapabilityError if the search budget runs out.
FractionalDecomposition decompose_uniform_third(const Graph& g, int max_order = kDefaultEnumerationLimit);

/// Empty when the decomposition is exact; otherwise a description of the first failure.
std::optional<std::string> check_decomposition(const Graph& g, const FractionalDecomposition& d);

/// Colour 0..2 per edge, or nothing when the budget of search nodes runs out
/// or no colouring exists.
std::optional<std::vector<int>> three_edge_colouring(const Graph& g, long long budget = 2'000'000);

}  // namespace ctsp
