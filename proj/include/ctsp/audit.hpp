#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctsp/rational.hpp"
#include "ctsp/structure.hpp"
#include "ctsp/swaps.hpp"

namespace ctsp {

struct AuditFailure {
  std::string check;
  Vertex vertex = -1;  // -1 when the failure concerns a whole X-circuit or member
  Rational value;
  Rational bound;
  std::string detail;
};

struct AuditReport {
  /// Number of vertices/objects each check looked at, by check name.
  std::map<std::string, int> checked;
  std::vector<AuditFailure> failures;
  /// Sizes of the sets standing in for each collection's reserved vertices.
  std::map<std::string, int> reserved_sizes;
  Rational inequality;
  Rational final_cost;
  Rational final_bound;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

/// Upper bound on c1 for a phase-1 X-circuit given its swap counts and size.
/// `with_diamond` only matters without swaps.
Rational c1_swap_count_bound(int j4, int j5, int j6, int size, bool with_diamond);

/// 6-diamonds four of whose vertices induce K4 minus an edge. No 4-circuit
/// of G touches that K4 minus an edge, so a factor circuit on it can only
/// leave through a 5-swap, and the D6 and outside-class bounds can fail there.
std::vector<VertexSet> six_diamonds_with_k4e(const Graph& g);

/// Audits a state after both phases against the bounds of the cost argument.
/// `collections` are classified against `original`, the starting 2-factor.
/// The final c(F2) <= 13n/10 check is made only when the selection inequality
/// holds for `original`.
AuditReport audit_bounds(const FactorState& s, const std::vector<GoodCollection>& collections,
                         const std::vector<char>& original);

}  // namespace ctsp
