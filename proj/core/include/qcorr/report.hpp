#pragma once

#include <nlohmann/json.hpp>
#include <optional>

#include "qcorr/correlations.hpp"
#include "qcorr/stateio.hpp"

namespace qcorr {

struct MeasureOptions {
  std::optional<std::pair<int, int>> dims;   ///< bipartite split override
  std::optional<MeasurementBasis> basis;     ///< coherence basis for the full state
  OptimizerConfig optimizer;                 ///< used by discord / deficit
};

/// Everything the `measure` command emits. When the measurement optimizer
/// fails to converge the record is still returned with whatever was computed,
/// `converged` set to false and a failure note in the JSON.
struct MeasureRecord {
  nlohmann::json record;
  bool converged = true;
};

/// Evaluates every single-system quantity (entropy, information, coherences,
/// uncertainty gap) and, when the state is bipartite, the reduced-state
/// quantities, mutual information, optimized discord and deficit, and all
/// trade-off residuals. All values are in bits.
MeasureRecord measurement_record(const StateFile& sf, const MeasureOptions& opts);

}  // namespace qcorr
