#pragma once

#include <json.hpp>

#include "ctsp/pipeline.hpp"
#include "ctsp/structure.hpp"

namespace ctsp {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json rational_json(const Rational& q);
nlohmann::json pipeline_json(const Graph& g, const PipelineResult& r);
/// The reduction records, in application order.
nlohmann::json reductions_json(const ReductionChain& chain);
/// Diamonds, reducible subgraphs, 3-edge-cuts and good collections.
nlohmann::json structure_json(const Graph& g);

}  // namespace ctsp
