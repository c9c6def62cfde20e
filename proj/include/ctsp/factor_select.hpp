#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ctsp/graph.hpp"
#include "ctsp/kernels.hpp"
#include "ctsp/matching.hpp"
#include "ctsp/rational.hpp"
#include "ctsp/structure.hpp"

namespace ctsp {

struct TwoFactor {
  std::vector<char> in_factor;
  /// Each circuit starts at its smallest vertex and continues toward the
  /// smaller of its two factor neighbours; circuits ordered by first vertex.
  std::vector<std::vector<Vertex>> circuits;

  int shortest() const;
};

/// Throws InvariantError unless every vertex has exactly two factor edges.
TwoFactor two_factor_from_edges(const Graph& g, std::vector<char> in_factor);
TwoFactor complement_of(const Graph& g, const Matching& m);

/// Circuit lists of the factor components; also used for arbitrary even
/// subgraphs whose components are circuits.
std::vector<std::vector<Vertex>> trace_circuits(const Graph& g, const std::vector<char>& in_factor);

enum class SelectMode { exhaustive, decomposition, automatic };
std::string_view mode_name(SelectMode m);
SelectMode parse_select_mode(std::string_view s);

struct SelectionCertificate {
  SelectMode mode = SelectMode::exhaustive;
  Matching matching;
  Rational f_value;
  /// (1/3) * sum of all edge weights: the average of f over the uniform third point.
  Rational average_bound;
  Rational inequality;
  /// Bucket counts per collection, in kAllCollections order.
  std::vector<std::map<int, int>> buckets;
  /// "enumerated" when every 3-edge-cut was listed and checked, else "by-decomposition".
  std::string cut_check;
  std::size_t cuts_checked = 0;
  std::size_t candidates = 0;
};

struct Selection {
  TwoFactor factor;
  SelectionCertificate certificate;
};

/// w(e) = sum of A_H over members H of every collection with e on the boundary of H.
std::vector<Rational> edge_weights(const Graph& g, const std::vector<GoodCollection>& collections);
Rational f_value(const std::vector<Rational>& weights, const std::vector<EdgeId>& matching);

/// sum_H A_H * (2 b_H |H^0| - (3 a_H - 2 b_H) |H^*|) for the factor `in_factor`.
Rational selection_inequality(const std::vector<GoodCollection>& collections, const std::vector<char>& in_factor);

/// The 2-factor complementary to a perfect matching of minimum f among those
/// meeting every 3-edge-cut once (exhaustive) or among the matchings of the
/// uniform third decomposition. Ties go to the canonically smallest matching.
Selection select_two_factor(const Graph& g, const std::vector<GoodCollection>& collections, SelectMode mode,
                            kernels::Exec exec = kernels::Exec::serial);

}  // namespace ctsp
