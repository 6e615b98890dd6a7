#include "qcorr/report.hpp"

#include <cmath>

namespace qcorr {
namespace {

using nlohmann::json;

json params_to_json(const ParamVector& p) {
  json j;
  j["dim"] = p.dim;
  j["params"] = p.params;
  return j;
}

json metadata_to_json(const MinimizeMetadata& m) {
  json j;
  j["evaluations"] = m.evaluations;
  j["best_start"] = m.best_start;
  j["final_improvement"] = m.final_improvement;
  j["sweeps"] = m.sweeps;
  j["converged"] = m.converged;
  return j;
}

}  // namespace

MeasureRecord measurement_record(const StateFile& sf, const MeasureOptions& opts) {
  MeasureRecord out;
  json& j = out.record;

  const DensityOperator rho = to_density(sf);
  const MeasurementBasis basis =
      opts.basis ? *opts.basis : MeasurementBasis::computational(rho.dim());
  if (!sf.label.empty()) j["label"] = sf.label;
  j["dim"] = rho.dim();
  j["units"] = "bits";
  j["basis"] = opts.basis ? "file" : "computational";
  j["entropy"] = von_neumann(rho).value();
  j["information"] = information_function(rho).value();
  j["coherence_re"] = relative_entropy_of_coherence(rho, basis).value.value();
  j["coherence_l1"] = l1_coherence(rho, basis).value.value();
  j["uncertainty_gap"] = uncertainty_gap(rho, basis).value();

  const bool bipartite = opts.dims.has_value() || sf.dims.size() == 2;
  if (!bipartite) return out;

  const BipartiteState s = to_bipartite(sf, opts.dims);
  j["dims"] = {s.dim_a(), s.dim_b()};
  const DensityOperator rho_a = partial_trace(s, Subsystem::A);
  const DensityOperator rho_b = partial_trace(s, Subsystem::B);
  j["entropy_a"] = von_neumann(rho_a).value();
  j["entropy_b"] = von_neumann(rho_b).value();
  j["coherence_re_a"] = relative_entropy_of_coherence(rho_a).value.value();
  j["coherence_re_b"] = relative_entropy_of_coherence(rho_b).value.value();
  j["mutual_information"] = mutual_information(s).value();

  const MeasurementBasis comp_a = MeasurementBasis::computational(s.dim_a());
  const MeasurementBasis comp_b = MeasurementBasis::computational(s.dim_b());
  j["residual_tradeoff1"] = tradeoff_fixed(s, comp_a);
  j["residual_tradeoff3"] = tradeoff_coherence_loss(s, comp_a, comp_b);

  try {
    const CorrelationReport r = tradeoff_optimized(s, opts.optimizer);
    j["discord"] = r.discord.value();
    j["deficit"] = r.deficit.value();
    j["coherence_a_reference"] = r.coherence_a_reference.value();
    j["coherence_a_discord_basis"] = r.coherence_a_discord_basis.value();
    j["coherence_a_deficit_basis"] = r.coherence_a_deficit_basis.value();
    j["discord_basis"] = params_to_json(r.discord_basis);
    j["deficit_basis"] = params_to_json(r.deficit_basis);
    j["residual_thm2"] = r.residual_thm2;
    j["chain_upper_slack"] = r.chain_upper_slack;
    j["chain_lower_slack"] = r.chain_lower_slack;
    j["optimizer"] = {{"discord", metadata_to_json(r.discord_convergence)},
                      {"deficit", metadata_to_json(r.deficit_convergence)}};
    j["converged"] = true;
  } catch (const MinimizeFailure& failure) {
    j["converged"] = false;
    j["failure"] = failure.what();
    j["best_value_so_far"] = failure.best_value;
    out.converged = false;
  }
  return out;
}

}  // namespace qcorr
