#pragma once

#include <cstdint>
#include <string_view>

#include "ctsp/graph.hpp"

namespace ctsp {

Graph petersen();

/// Circular ladder: two k-cycles joined by a perfect matching (K3 x K2 for k = 3).
Graph prism(int k);

/// GP(n, k): outer cycle u_i, spokes u_i v_i, inner edges v_i v_{i+k}.
Graph generalized_petersen(int n, int k);

/// Isaacs flower snark J_k on 4k vertices (a snark for odd k >= 5).
Graph flower_snark(int k);

/// Pairing model with rejection of loops, parallel edges, disconnected and
/// bridged outcomes. Deterministic per (n, seed) for a given standard library.
Graph random_cubic_bridgeless(int n, std::uint64_t seed);

/// Family spec strings: "petersen", "prism:K", "gp:N,K", "flower:K",
/// "random:N:SEED", "k4", "k33".
Graph generate(std::string_view spec);

}  // namespace ctsp
