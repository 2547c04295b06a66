// tools/sasvkit_main.cpp

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

// Command-line front end binding the pipeline:
//   simulate -> fit -> fuse / decide -> evaluate -> boundary export.
// Reports go to stdout, diagnostics to stderr; files are written only when
// --out is given. Exit codes: 0 success, 2 input/config errors, 3 fit
// errors, 4 evaluation errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sasvkit/errors.hpp"
#include "sasvkit/evaluate.hpp"
#include "sasvkit/io.hpp"
#include "sasvkit/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFit = 3;
constexpr int kExitEval = 4;

using namespace sasvkit;

// Writes to --out when given, stdout otherwise.
void emit(const std::string &out_path, const std::string &content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + out_path);
  out << content;
}

std::vector<TrialScore> labeled_trials(const std::string &path) {
  std::vector<TrialScore> trials = read_trials(path);
  std::vector<TrialScore> labeled;
  labeled.reserve(trials.size());
  for (TrialScore &t : trials) {
    if (t.label) labeled.push_back(std::move(t));
  }
  return labeled;
}

std::vector<std::pair<LlrPair, ClassLabel>> llr_dev_pairs(
    const std::string &dev_path, const FittedModels &models, bool calibrated) {
  const std::vector<TrialScore> dev = labeled_trials(dev_path);
  const std::vector<LlrPair> llrs = backend_llr_pairs(dev, models, calibrated);
  std::vector<std::pair<LlrPair, ClassLabel>> pairs;
  pairs.reserve(dev.size());
  for (std::size_t i = 0; i < dev.size(); ++i) {
    pairs.emplace_back(llrs[i], *dev[i].label);
  }
  return pairs;
}

double resolve_rho(const RunConfig &config, const FittedModels &models) {
  if (!config.rho) {
    throw DomainError("system " + std::string(to_string(config.system)) +
                      " needs a \"rho\" entry in the config");
  }
  if (config.rho->kind == RhoSource::Kind::kFixed) {
    return config.rho->fixed;
  }
  const auto pairs = llr_dev_pairs(config.rho->dev_path, models,
                                   system_needs_llr_calibration(config.system));
  const Priors priors(config.priors);
  return grid_search_rho(pairs, config.rho->objective, priors, config.costs);
}

void check_required_models(const RunConfig &config,
                           const FittedModels &models) {
  if (system_needs_backend(config.system) && !models.backend) {
    throw DomainError("system " + std::string(to_string(config.system)) +
                      " needs a backend model");
  }
  if (system_needs_score_calibration(config.system) &&
      (!models.affine_asv || !models.affine_cm)) {
    throw DomainError("system b1c needs affine_asv and affine_cm models");
  }
  if (system_needs_llr_calibration(config.system) &&
      (!models.affine_llr_asv || !models.affine_llr_cm)) {
    throw DomainError("system " + std::string(to_string(config.system)) +
                      " needs affine_llr_asv and affine_llr_cm models");
  }
}

int cmd_simulate(const std::string &spec_path, std::optional<std::uint64_t> seed,
                 const std::string &out_path) {
  SimulationSpec spec = read_simulation_spec(spec_path);
  if (seed) spec.seed = *seed;
  const std::vector<TrialScore> trials = sample_trials(spec);
  std::ostringstream buf;
  write_trials(buf, trials);
  emit(out_path, buf.str());
  return kExitOk;
}

int cmd_fit(const std::string &dev_path, const std::string &what,
            const std::string &backend_path, const std::string &out_path) {
  const std::vector<TrialScore> dev = labeled_trials(dev_path);
  std::ostringstream buf;

  if (what == "backend") {
    const GaussianBackend backend = fit_gaussian_backend(dev);
    write_backend_model(buf, backend);
    emit(out_path, buf.str());
    return kExitOk;
  }

  std::vector<double> positives;
  std::vector<double> negatives;
  if (what == "affine-asv" || what == "affine-cm") {
    for (const TrialScore &t : dev) {
      if (what == "affine-asv") {
        // ASV hypothesis pair: tar.bf vs non.bf; spoof rows are ignored.
        if (*t.label == ClassLabel::kTarBf) positives.push_back(t.s_asv);
        if (*t.label == ClassLabel::kNonBf) negatives.push_back(t.s_asv);
      } else {
        // CM hypothesis pair: bona fide (tar.bf or non.bf) vs spf.
        if (*t.label == ClassLabel::kSpf) {
          negatives.push_back(t.s_cm);
        } else {
          positives.push_back(t.s_cm);
        }
      }
    }
  } else if (what == "affine-llr-asv" || what == "affine-llr-cm") {
    if (backend_path.empty()) {
      throw DomainError("--backend is required to fit LLR-stream "
                        "calibrations");
    }
    FittedModels models;
    models.backend = read_backend_model(backend_path);
    const std::vector<LlrPair> llrs = backend_llr_pairs(dev, models, false);
    for (std::size_t i = 0; i < dev.size(); ++i) {
      if (what == "affine-llr-asv") {
        if (*dev[i].label == ClassLabel::kTarBf) {
          positives.push_back(llrs[i].llr_asv);
        }
        if (*dev[i].label == ClassLabel::kNonBf) {
          negatives.push_back(llrs[i].llr_asv);
        }
      } else {
        if (*dev[i].label == ClassLabel::kSpf) {
          negatives.push_back(llrs[i].llr_cm);
        } else {
          positives.push_back(llrs[i].llr_cm);
        }
      }
    }
  } else {
    throw DomainError("unknown fit target \"" + what + "\"");
  }

  const AffineCalibration cal = fit_affine_logistic(positives, negatives);
  write_affine_model(buf, cal);
  emit(out_path, buf.str());
  return kExitOk;
}

int cmd_fuse(const std::string &in_path, const std::string &config_path,
             const std::string &out_path) {
  const RunConfig config = read_run_config(config_path);
  const FittedModels models = load_models(config.models);
  check_required_models(config, models);
  std::optional<double> rho;
  if (system_needs_rho(config.system)) rho = resolve_rho(config, models);

  const std::vector<TrialScore> trials = read_trials(in_path);
  const SystemScores scores =
      compute_system_scores(trials, config.system, models, rho);
  std::ostringstream buf;
  write_fused_trials(buf, trials, scores.fused);
  emit(out_path, buf.str());
  return kExitOk;
}

int cmd_decide(const std::string &in_path, const std::string &config_path,
               const std::string &policy, const std::string &out_path) {
  const RunConfig config = read_run_config(config_path);
  const FittedModels models = load_models(config.models);
  if (!models.backend) {
    throw DomainError("decide needs a backend model to produce LLR pairs");
  }
  const std::vector<TrialScore> trials = read_trials(in_path);
  const bool calibrated = models.affine_llr_asv && models.affine_llr_cm;
  const std::vector<LlrPair> llrs = backend_llr_pairs(trials, models, calibrated);
  const Priors priors(config.priors);
  validate_costs(config.costs);

  std::ostringstream buf;
  buf << "trial_id\tdecision\n";
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const Action action = policy == "linear"
                              ? decide_linear(llrs[i], priors)
                              : decide_optimal_llr(llrs[i], priors, config.costs);
    buf << trials[i].trial_id << '\t'
        << (action == Action::kAccept ? "accept" : "reject") << '\n';
  }
  emit(out_path, buf.str());
  return kExitOk;
}

int cmd_evaluate(const std::string &in_path, const std::string &config_path,
                 const std::string &out_path) {
  const RunConfig config = read_run_config(config_path);
  const FittedModels models = load_models(config.models);
  check_required_models(config, models);
  std::optional<double> rho;
  if (system_needs_rho(config.system)) rho = resolve_rho(config, models);

  const std::vector<TrialScore> trials = read_trials(in_path);
  const MetricsReport report =
      evaluate_system(trials, config.system, models, rho);

  std::ostringstream buf;
  write_metrics_report(buf, report);
  std::cout << buf.str();
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    out << buf.str();
  }
  std::cerr << "system " << to_string(config.system) << ": SASV-EER "
            << report.sasv_eer * 100.0 << "%, Cllr " << report.cllr
            << " bits (min " << report.cllr_min << ", calib "
            << report.cllr_calib << "), t-EER " << report.t_eer * 100.0
            << "%\n";
  return kExitOk;
}

int cmd_boundary(const std::string &config_path, const GridParams &params,
                 const std::string &mismatched_spec,
                 const std::string &out_path) {
  const PriorsCosts pc = read_priors_costs(config_path);
  const Priors priors(pc.priors);
  const CostMatrix &costs = pc.costs;
  validate_costs(costs);

  std::optional<Priors> mismatched;
  if (!mismatched_spec.empty()) {
    double p[3];
    if (std::sscanf(mismatched_spec.c_str(), "%lf,%lf,%lf", &p[0], &p[1],
                    &p[2]) != 3) {
      throw ParseError("--mismatched-priors expects \"spf,nonbf,tarbf\"");
    }
    mismatched.emplace(Composition3{p[0], p[1], p[2]});
  }

  const BoundaryGrid grid = export_boundary_grid(params, priors, costs,
                                                 mismatched);
  std::ostringstream buf;
  write_boundary_csv(buf, grid);
  emit(out_path, buf.str());
  return kExitOk;
}

int cmd_grid_rho(const std::string &dev_path, const std::string &config_path,
                 const std::string &objective, const std::string &out_path) {
  const RunConfig config = read_run_config(config_path);
  const FittedModels models = load_models(config.models);
  if (!models.backend) {
    throw DomainError("grid-rho needs a backend model to produce LLR pairs");
  }
  const auto pairs = llr_dev_pairs(dev_path, models,
                                   system_needs_llr_calibration(config.system));
  const Priors priors(config.priors);
  const GridObjective obj = objective == "risk"
                                ? GridObjective::kMinEmpiricalRisk
                                : GridObjective::kMinSasvEer;
  const double rho = grid_search_rho(pairs, obj, priors, config.costs);
  emit(out_path, format_double(rho) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Score-level fusion and decision toolkit for spoofing-aware "
               "speaker verification"};
  app.require_subcommand(1);

  std::string spec_path, dev_path, in_path, config_path, out_path;
  std::string what, backend_path, policy = "optimal", objective = "sasv-eer";
  std::string mismatched_spec;
  std::optional<std::uint64_t> seed;
  GridParams grid_params;

  CLI::App *simulate = app.add_subcommand("simulate",
                                          "Sample a synthetic trial file");
  simulate->add_option("--spec", spec_path, "Simulation spec JSON")->required();
  simulate->add_option("--seed", seed, "Override the spec seed");
  simulate->add_option("--out", out_path, "Output TSV path");

  CLI::App *fit = app.add_subcommand("fit", "Fit a calibration or backend");
  fit->add_option("--dev", dev_path, "Labeled development TSV")->required();
  fit->add_option("--what", what,
                  "affine-asv | affine-cm | backend | affine-llr-asv | "
                  "affine-llr-cm")
      ->required();
  fit->add_option("--backend", backend_path,
                  "Backend model (for affine-llr-* fits)");
  fit->add_option("--out", out_path, "Output model JSON path");

  CLI::App *fuse = app.add_subcommand("fuse", "Write fused scores");
  fuse->add_option("--in", in_path, "Input trial TSV")->required();
  fuse->add_option("--config", config_path, "Run config JSON")->required();
  fuse->add_option("--out", out_path, "Output TSV path");

  CLI::App *decide = app.add_subcommand("decide", "Accept/reject per trial");
  decide->add_option("--in", in_path, "Input trial TSV")->required();
  decide->add_option("--config", config_path, "Run config JSON")->required();
  decide->add_option("--policy", policy, "optimal | linear")
      ->check(CLI::IsMember({"optimal", "linear"}));
  decide->add_option("--out", out_path, "Output TSV path");

  CLI::App *evaluate = app.add_subcommand("evaluate",
                                          "Metric report for one system");
  evaluate->add_option("--in", in_path, "Labeled evaluation TSV")->required();
  evaluate->add_option("--config", config_path, "Run config JSON")->required();
  evaluate->add_option("--out", out_path, "Also write the report here");

  CLI::App *boundary = app.add_subcommand("boundary",
                                          "Decision-boundary grid CSV");
  boundary->add_option("--config", config_path,
                       "Priors/costs JSON (run config also accepted)")
      ->required();
  boundary->add_option("--asv-min", grid_params.asv_min)->required();
  boundary->add_option("--asv-max", grid_params.asv_max)->required();
  boundary->add_option("--cm-min", grid_params.cm_min)->required();
  boundary->add_option("--cm-max", grid_params.cm_max)->required();
  boundary->add_option("--step", grid_params.step)->required();
  boundary->add_option("--mismatched-priors", mismatched_spec,
                       "Extra optimal-policy column, \"spf,nonbf,tarbf\"");
  boundary->add_option("--out", out_path, "Output CSV path");

  CLI::App *grid_rho = app.add_subcommand("grid-rho",
                                          "Grid-search rho on a dev set");
  grid_rho->add_option("--dev", dev_path, "Labeled development TSV")
      ->required();
  grid_rho->add_option("--config", config_path, "Run config JSON")->required();
  grid_rho->add_option("--objective", objective, "sasv-eer | risk")
      ->check(CLI::IsMember({"sasv-eer", "risk"}));
  grid_rho->add_option("--out", out_path, "Output text path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const bool eval_context = fuse->parsed() || decide->parsed() ||
                            evaluate->parsed() || grid_rho->parsed();
  try {
    if (simulate->parsed()) return cmd_simulate(spec_path, seed, out_path);
    if (fit->parsed()) return cmd_fit(dev_path, what, backend_path, out_path);
    if (fuse->parsed()) return cmd_fuse(in_path, config_path, out_path);
    if (decide->parsed()) {
      return cmd_decide(in_path, config_path, policy, out_path);
    }
    if (evaluate->parsed()) {
      return cmd_evaluate(in_path, config_path, out_path);
    }
    if (boundary->parsed()) {
      return cmd_boundary(config_path, grid_params, mismatched_spec, out_path);
    }
    if (grid_rho->parsed()) {
      return cmd_grid_rho(dev_path, config_path, objective, out_path);
    }
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const FitError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFit;
  } catch (const MetricError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEval;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return eval_context ? kExitEval : kExitInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
