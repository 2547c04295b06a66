// sasvkit/io.hpp

// Copyright 2026 sasvkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SASVKIT_IO_HPP_
#define SASVKIT_IO_HPP_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sasvkit/calibration.hpp"
#include "sasvkit/decision.hpp"
#include "sasvkit/evaluate.hpp"
#include "sasvkit/fusion.hpp"
#include "sasvkit/metrics.hpp"
#include "sasvkit/simulation.hpp"
#include "sasvkit/types.hpp"

namespace sasvkit {

// Decimal text with up to 17 significant digits; round-trips any finite
// double exactly.
std::string format_double(double v);

// ---- trial files -----------------------------------------------------------
// Tab-separated, header "trial_id\ts_asv\ts_cm\tlabel"; label is one of
// tar.bf / non.bf / spf or "-" for unlabeled rows. A zero-byte file reads as
// an empty trial list; anything else must carry the exact header.

std::vector<TrialScore> read_trials(const std::string &path);
void write_trials(std::ostream &os, std::span<const TrialScore> trials);
void write_trials_file(const std::string &path,
                       std::span<const TrialScore> trials);

// Same format plus a trailing "s_fused" column.
void write_fused_trials(std::ostream &os, std::span<const TrialScore> trials,
                        std::span<const double> fused);

// ---- model files -----------------------------------------------------------
// {"affine": {"a": ..., "b": ...}}
// {"backend": {"spf": {"mean": [...], "cov": [[...],[...]]}, "non.bf": ...,
//              "tar.bf": ...}}
// Writers emit the fixed field order above with full-precision decimals.

void write_affine_model(std::ostream &os, const AffineCalibration &cal);
AffineCalibration read_affine_model(const std::string &path);
void write_backend_model(std::ostream &os, const GaussianBackend &backend);
GaussianBackend read_backend_model(const std::string &path);

// ---- simulation spec -------------------------------------------------------
// {"seed": ..., "n_trials": ..., "priors": {"spf":, "nonbf":, "tarbf":},
//  "classes": {"spf": {"mean": [..], "cov": [[..],[..]]}, "non.bf": ...,
//              "tar.bf": ...}}

SimulationSpec read_simulation_spec(const std::string &path);

// ---- run configuration -----------------------------------------------------
// {"system": "l3c",
//  "priors": {"spf":, "nonbf":, "tarbf":},          (default flat)
//  "costs": {"miss":, "fa_non":, "fa_spf":},        (default all 1)
//  "rho": {"fixed": 0.5} or {"grid": "sasv-eer"|"risk", "dev": "dev.tsv"},
//  "models": {"affine_asv":, "affine_cm":, "backend":,
//             "affine_llr_asv":, "affine_llr_cm":}} (paths, all optional)

struct RhoSource {
  enum class Kind { kFixed, kGrid };
  Kind kind = Kind::kFixed;
  double fixed = 0.5;
  GridObjective objective = GridObjective::kMinSasvEer;
  std::string dev_path;
};

struct ModelPaths {
  std::string affine_asv;
  std::string affine_cm;
  std::string backend;
  std::string affine_llr_asv;
  std::string affine_llr_cm;
};

struct RunConfig {
  SystemId system = SystemId::kB1;
  Composition3 priors{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  CostMatrix costs;
  std::optional<RhoSource> rho;
  ModelPaths models;
};

RunConfig read_run_config(const std::string &path);

// Standalone {"priors": ..., "costs": ...} document (both keys optional,
// defaults flat priors and unit costs); a full run config is also accepted.
struct PriorsCosts {
  Composition3 priors{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  CostMatrix costs;
};

PriorsCosts read_priors_costs(const std::string &path);

// Loads every model file named in the config; unnamed entries stay empty.
FittedModels load_models(const ModelPaths &paths);

// ---- reports and grids -----------------------------------------------------

// Single-line JSON with the fixed key order sasv_eer, eer_threshold, cllr,
// cllr_min, cllr_calib, t_eer.
void write_metrics_report(std::ostream &os, const MetricsReport &report);

// CSV, header "llr_asv,llr_cm,linear,optimal[,mismatched]"; decisions as
// 0/1 with 1 = accept.
void write_boundary_csv(std::ostream &os, const BoundaryGrid &grid);

}  // namespace sasvkit

#endif  // SASVKIT_IO_HPP_
