#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ctsp/graph.hpp"
#include "ctsp/rational.hpp"

namespace ctsp {

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

VertexSet sorted_set(std::vector<Vertex> v);
bool intersects(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& haystack, const VertexSet& needle);
bool contains(const VertexSet& haystack, Vertex v);

/// `a` touches `b`: they meet and `a` has a vertex outside `b`.
bool touches(const VertexSet& a, const VertexSet& b);

/// Edges with exactly one endpoint in `set`, ascending by id.
std::vector<EdgeId> boundary_edges(const Graph& g, const VertexSet& set);

/// Number of edges with both endpoints in `set`.
int induced_edge_count(const Graph& g, const VertexSet& set);

struct CircuitPattern {
  /// Rotated to start at its smallest vertex, with cycle[1] < cycle.back().
  std::vector<Vertex> cycle;
  std::vector<EdgeId> chords;
  std::vector<EdgeId> boundary;
  bool independent_boundary = false;

  int length() const { return static_cast<int>(cycle.size()); }
  bool chordless() const { return chords.empty(); }
  VertexSet vertex_set() const { return sorted_set(cycle); }
  std::vector<EdgeId> cycle_edges(const Graph& g) const;
};

/// Canonicalise `cycle` and fill chords/boundary. Consecutive vertices must be adjacent.
CircuitPattern describe_circuit(const Graph& g, std::vector<Vertex> cycle);

/// Every circuit with min_len <= length <= max_len, once each, ordered by
/// (length, canonical vertex sequence). Requires a simple graph.
std::vector<CircuitPattern> enumerate_short_circuits(const Graph& g, int max_len, int min_len = 3);

enum class DiamondKind { d4, d6, d8 };
std::string_view diamond_name(DiamondKind k);

struct Diamond {
  DiamondKind kind;
  VertexSet vertices;
  CircuitPattern circuit;
};

/// Vertex sets spanned by a 4-, 6- or 8-circuit carrying at least 1, 2 or 3
/// chords, with the exclusion chain: a d6 is not inside a d8 and a d4 is not
/// inside a d6. One entry per vertex set, ordered by kind then vertex set.
std::vector<Diamond> find_diamonds(const Graph& g);

/// Role labels follow the usual figures:
///   type 1: roles = u1..u5, chord u2u5, boundary at u1, u3, u4;
///   type 2: roles = the 8-circuit of the initial diamond, ends/outer describe the chain;
///   type 3: roles = u1..u7 (circuit order u1 u2 u5 u4 u6 u7 u3, chords u5u6, u4u7);
///   type 4: roles = v1..v6, chord v1v3.
struct ReducibleInstance {
  int type = 0;
  std::vector<Vertex> roles;
  /// Every vertex removed or contracted by the reduction.
  VertexSet vertices;
  /// Type 1: outer neighbours of u1, u3, u4.  Type 3: of u1, u2, u3.
  /// Type 4: outer neighbours of v2, v4, v5, v6.
  std::vector<Vertex> outer;
  /// Type 2 only. ends[i] are the two vertices of S^i that have a neighbour
  /// outside S^i (ends[0] are the degree-2 vertices of the diamond), and
  /// chain_outer are those outside neighbours for the last S^k.
  std::vector<std::pair<Vertex, Vertex>> ends;
  std::pair<Vertex, Vertex> chain_outer{-1, -1};

  int chain_length() const { return type == 2 ? static_cast<int>(ends.size()) - 1 : 0; }
};

/// First reducible subgraph in type order 1,2,3,4, then by sorted vertex set.
std::optional<ReducibleInstance> find_reducible(const Graph& g);

/// All reducible instances of one type (1..4), in detection order.
std::vector<ReducibleInstance> find_reducible_of_type(const Graph& g, int type);

using EdgeTriple = std::array<EdgeId, 3>;

/// Edge triples equal to the boundary of some vertex set. Graphs larger than
/// `max_order` raise CapabilityError.
std::vector<EdgeTriple> enumerate_3_edge_cuts(const Graph& g, int max_order = 24);

enum class CollectionKind { D4, D6, C4noint, C5noint, C44noint, C6noint, C4int5 };
inline constexpr std::array<CollectionKind, 7> kAllCollections = {
    CollectionKind::D4,       CollectionKind::D6,      CollectionKind::C4noint, CollectionKind::C5noint,
    CollectionKind::C44noint, CollectionKind::C6noint, CollectionKind::C4int5};
std::string_view collection_name(CollectionKind k);

struct CollectionParams {
  int n = 0;
  int b = 0;
  int a = 0;
  Rational s;
  Rational t;
  Rational p_over_n;

  Rational p() const { return p_over_n * n; }
};

/// The averaging target used throughout.
Rational target_ratio();

CollectionParams make_params(int n, int b, Rational s, Rational t, Rational p_over_n);
const CollectionParams& table_params(CollectionKind k);

/// A = p / (a - 2b/3) * (r - t).
Rational collection_weight(const CollectionParams& p, const Rational& r);
/// ((1.5a - b) s + (p/n) b t) / ((1.5a - b) + (p/n) b).
Rational averaging_rhs(const CollectionParams& p);
/// The (u, v) weights of the same average, looked up by b.
std::pair<Rational, Rational> uv_weights(const CollectionParams& p);
Rational uv_rhs(const CollectionParams& p);

struct Member {
  VertexSet vertices;
  std::vector<EdgeId> boundary;
};

struct GoodCollection {
  CollectionKind kind;
  CollectionParams params;
  Rational weight;
  std::vector<Member> members;
};

/// The seven collections, in kAllCollections order. Throws ContractViolation
/// on reducible input.
std::vector<GoodCollection> build_collections(const Graph& g);

/// Induced 4- and 5-circuits without chords (vertex sets).
std::vector<VertexSet> short_star_circuits(const Graph& g);

struct Classification {
  /// Number of boundary edges in F, per member.
  std::vector<int> member_k;
  std::map<int, int> buckets;
  int zero() const;
  int star(const GoodCollection& c) const;
  std::vector<int> members_with(int k) const;
};

/// `in_factor[e] != 0` marks the edges of a 2-factor.
Classification classify_members(const GoodCollection& c, const std::vector<char>& in_factor);

/// Indices (into `candidates`) of pairwise disjoint members, at least a quarter
/// of them. Throws InvariantError when no such subfamily is found.
std::vector<int> independent_subfamily(const std::vector<Member>& members, const std::vector<int>& candidates);

struct DisjointnessWitness {
  CollectionKind first_kind;
  CollectionKind second_kind;
  VertexSet first;
  VertexSet second;
};

/// Checks that the H* members of every collection (C6noint restricted to an
/// independent subfamily) are pairwise vertex-disjoint.
std::optional<DisjointnessWitness> check_star_disjointness(const std::vector<GoodCollection>& collections,
                                                           const std::vector<char>& in_factor);

}  // namespace ctsp
