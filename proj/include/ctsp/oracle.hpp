#pragma once

#include <utility>

#include "ctsp/even_factor.hpp"
#include "ctsp/graph.hpp"

// Exact values for small graphs, used as ground truth.
namespace ctsp::oracle {

inline constexpr int kTspLimit = 14;
inline constexpr int kEvenFactorLimit = 12;

/// Shortest closed walk through every vertex: Held-Karp on the shortest-path
/// metric. CapabilityError above kTspLimit vertices.
int optimal_graphic_tsp(const Graph& g);

/// Even factor of minimum n + 2 * circuits + isolated, by backtracking over
/// edges with degree pruning. CapabilityError above kEvenFactorLimit vertices.
std::pair<EvenFactor, int> min_cost_even_factor(const Graph& g);

}  // namespace ctsp::oracle
