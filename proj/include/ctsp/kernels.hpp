#pragma once

#include <cstddef>
#include <vector>

#include "ctsp/graph.hpp"
#include "ctsp/rational.hpp"
#include "ctsp/structure.hpp"

// Hot loops with two implementations each. The serial versions are the
// reference; the OpenMP versions must return identical results.
namespace ctsp::kernels {

enum class Exec { serial, parallel };

int max_threads();

/// Edge triples that form the whole boundary of a vertex set, ascending.
std::vector<EdgeTriple> three_edge_cuts(const Graph& g, Exec exec);

/// Index of the set with the smallest total weight; ties go to the lower index.
/// Returns sets.size() when `sets` is empty.
std::size_t argmin_weight(const std::vector<std::vector<EdgeId>>& sets, const std::vector<Rational>& weight,
                          Exec exec);

/// Bridges by deleting each edge in turn and testing connectivity.
std::vector<EdgeId> bridges_brute_force(const Graph& g, Exec exec);

}  // namespace ctsp::kernels
