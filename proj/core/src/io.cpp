// core/src/io.cpp

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

#include "sasvkit/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "sasvkit/errors.hpp"

namespace sasvkit {

namespace {

using nlohmann::json;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_file(const std::string &path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error &e) {
    throw ParseError(path + ": " + e.what());
  }
}

double get_number(const json &j, const std::string &key,
                  const std::string &where) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ParseError(where + ": missing numeric field \"" + key + "\"");
  }
  return j[key].get<double>();
}

double parse_score(const std::string &field, const std::string &where) {
  errno = 0;
  char *end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0' || errno == ERANGE ||
      !std::isfinite(v)) {
    throw ParseError(where + ": bad score \"" + field + "\"");
  }
  return v;
}

Vec2 parse_mean(const json &j, const std::string &where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ParseError(where + ": mean must be a 2-element numeric array");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Mat2 parse_cov(const json &j, const std::string &where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
      j[0].size() != 2 || j[1].size() != 2) {
    throw ParseError(where + ": cov must be a 2x2 numeric array");
  }
  return {j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(),
          j[1][1].get<double>()};
}

Gaussian2 parse_gaussian(const json &j, const std::string &where) {
  if (!j.is_object() || !j.contains("mean") || !j.contains("cov")) {
    throw ParseError(where + ": expected {\"mean\": .., \"cov\": ..}");
  }
  return {parse_mean(j["mean"], where), parse_cov(j["cov"], where)};
}

Composition3 parse_priors(const json &j, const std::string &where) {
  return {get_number(j, "spf", where), get_number(j, "nonbf", where),
          get_number(j, "tarbf", where)};
}

void write_gaussian(std::ostream &os, const Gaussian2 &g) {
  os << "{\"mean\": [" << format_double(g.mean.x) << ", "
     << format_double(g.mean.y) << "], \"cov\": [["
     << format_double(g.cov.m00) << ", " << format_double(g.cov.m01) << "], ["
     << format_double(g.cov.m10) << ", " << format_double(g.cov.m11) << "]]}";
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<TrialScore> read_trials(const std::string &path) {
  const std::string content = read_file(path);
  std::vector<TrialScore> trials;
  if (content.empty()) return trials;

  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line) || line != "trial_id\ts_asv\ts_cm\tlabel") {
    throw ParseError(path + ": bad or missing header line");
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    std::string fields[4];
    std::size_t start = 0;
    for (int f = 0; f < 4; ++f) {
      const std::size_t tab = line.find('\t', start);
      if (f < 3) {
        if (tab == std::string::npos) {
          throw ParseError(where + ": expected 4 tab-separated fields");
        }
        fields[f] = line.substr(start, tab - start);
        start = tab + 1;
      } else {
        if (tab != std::string::npos) {
          throw ParseError(where + ": expected 4 tab-separated fields");
        }
        fields[f] = line.substr(start);
      }
    }
    TrialScore t;
    t.trial_id = fields[0];
    t.s_asv = parse_score(fields[1], where);
    t.s_cm = parse_score(fields[2], where);
    if (fields[3] != "-") {
      const auto label = label_from_string(fields[3]);
      if (!label) throw ParseError(where + ": bad label \"" + fields[3] + "\"");
      t.label = label;
    }
    trials.push_back(std::move(t));
  }
  return trials;
}

void write_trials(std::ostream &os, std::span<const TrialScore> trials) {
  os << "trial_id\ts_asv\ts_cm\tlabel\n";
  for (const TrialScore &t : trials) {
    os << t.trial_id << '\t' << format_double(t.s_asv) << '\t'
       << format_double(t.s_cm) << '\t'
       << (t.label ? to_string(*t.label) : "-") << '\n';
  }
}

void write_trials_file(const std::string &path,
                       std::span<const TrialScore> trials) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  write_trials(out, trials);
}

void write_fused_trials(std::ostream &os, std::span<const TrialScore> trials,
                        std::span<const double> fused) {
  os << "trial_id\ts_asv\ts_cm\tlabel\ts_fused\n";
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const TrialScore &t = trials[i];
    os << t.trial_id << '\t' << format_double(t.s_asv) << '\t'
       << format_double(t.s_cm) << '\t'
       << (t.label ? to_string(*t.label) : "-") << '\t'
       << format_double(fused[i]) << '\n';
  }
}

void write_affine_model(std::ostream &os, const AffineCalibration &cal) {
  os << "{\"affine\": {\"a\": " << format_double(cal.scale_a)
     << ", \"b\": " << format_double(cal.offset_b) << "}}\n";
}

AffineCalibration read_affine_model(const std::string &path) {
  const json j = parse_json_file(path);
  if (!j.contains("affine") || !j["affine"].is_object()) {
    throw ParseError(path + ": expected {\"affine\": {\"a\":, \"b\":}}");
  }
  return {get_number(j["affine"], "a", path), get_number(j["affine"], "b", path)};
}

void write_backend_model(std::ostream &os, const GaussianBackend &backend) {
  os << "{\"backend\": {\"spf\": ";
  write_gaussian(os, backend.spf);
  os << ", \"non.bf\": ";
  write_gaussian(os, backend.nonbf);
  os << ", \"tar.bf\": ";
  write_gaussian(os, backend.tarbf);
  os << "}}\n";
}

GaussianBackend read_backend_model(const std::string &path) {
  const json j = parse_json_file(path);
  if (!j.contains("backend") || !j["backend"].is_object()) {
    throw ParseError(path + ": expected {\"backend\": {...}}");
  }
  const json &b = j["backend"];
  for (const char *cls : {"spf", "non.bf", "tar.bf"}) {
    if (!b.contains(cls)) {
      throw ParseError(path + ": backend missing class \"" +
                       std::string(cls) + "\"");
    }
  }
  GaussianBackend backend{parse_gaussian(b["spf"], path),
                          parse_gaussian(b["non.bf"], path),
                          parse_gaussian(b["tar.bf"], path)};
  validate_backend(backend);
  return backend;
}

SimulationSpec read_simulation_spec(const std::string &path) {
  const json j = parse_json_file(path);
  SimulationSpec spec;
  if (!j.contains("seed") || !j["seed"].is_number_unsigned()) {
    throw ParseError(path + ": missing unsigned field \"seed\"");
  }
  spec.seed = j["seed"].get<std::uint64_t>();
  if (!j.contains("n_trials") || !j["n_trials"].is_number_unsigned()) {
    throw ParseError(path + ": missing unsigned field \"n_trials\"");
  }
  spec.n_trials = j["n_trials"].get<std::uint64_t>();
  if (!j.contains("priors")) throw ParseError(path + ": missing \"priors\"");
  spec.priors = parse_priors(j["priors"], path);
  if (!j.contains("classes") || !j["classes"].is_object()) {
    throw ParseError(path + ": missing \"classes\"");
  }
  const json &cls = j["classes"];
  for (const char *name : {"spf", "non.bf", "tar.bf"}) {
    if (!cls.contains(name)) {
      throw ParseError(path + ": classes missing \"" + std::string(name) +
                       "\"");
    }
  }
  spec.spf = parse_gaussian(cls["spf"], path);
  spec.nonbf = parse_gaussian(cls["non.bf"], path);
  spec.tarbf = parse_gaussian(cls["tar.bf"], path);
  return spec;
}

RunConfig read_run_config(const std::string &path) {
  const json j = parse_json_file(path);
  RunConfig config;
  if (!j.contains("system") || !j["system"].is_string()) {
    throw ParseError(path + ": missing string field \"system\"");
  }
  const auto system = system_from_string(j["system"].get<std::string>());
  if (!system) {
    throw ParseError(path + ": unknown system \"" +
                     j["system"].get<std::string>() + "\"");
  }
  config.system = *system;
  if (j.contains("priors")) config.priors = parse_priors(j["priors"], path);
  if (j.contains("costs")) {
    const json &c = j["costs"];
    config.costs.c_miss_tarbf = get_number(c, "miss", path);
    config.costs.c_fa_nonbf = get_number(c, "fa_non", path);
    config.costs.c_fa_spf = get_number(c, "fa_spf", path);
  }
  if (j.contains("rho")) {
    const json &r = j["rho"];
    RhoSource source;
    if (r.contains("fixed")) {
      source.kind = RhoSource::Kind::kFixed;
      source.fixed = get_number(r, "fixed", path);
    } else if (r.contains("grid")) {
      source.kind = RhoSource::Kind::kGrid;
      const std::string obj = r["grid"].get<std::string>();
      if (obj == "sasv-eer") {
        source.objective = GridObjective::kMinSasvEer;
      } else if (obj == "risk") {
        source.objective = GridObjective::kMinEmpiricalRisk;
      } else {
        throw ParseError(path + ": rho grid objective must be \"sasv-eer\" "
                                "or \"risk\"");
      }
      if (!r.contains("dev") || !r["dev"].is_string()) {
        throw ParseError(path + ": rho grid search needs a \"dev\" path");
      }
      source.dev_path = r["dev"].get<std::string>();
    } else {
      throw ParseError(path + ": rho must be {\"fixed\": ..} or "
                              "{\"grid\": .., \"dev\": ..}");
    }
    config.rho = source;
  }
  if (j.contains("models")) {
    const json &m = j["models"];
    auto get_path = [&m](const char *key) {
      return m.contains(key) ? m[key].get<std::string>() : std::string();
    };
    config.models.affine_asv = get_path("affine_asv");
    config.models.affine_cm = get_path("affine_cm");
    config.models.backend = get_path("backend");
    config.models.affine_llr_asv = get_path("affine_llr_asv");
    config.models.affine_llr_cm = get_path("affine_llr_cm");
  }
  return config;
}

PriorsCosts read_priors_costs(const std::string &path) {
  const json j = parse_json_file(path);
  PriorsCosts out;
  if (j.contains("system")) {
    const RunConfig config = read_run_config(path);
    out.priors = config.priors;
    out.costs = config.costs;
    return out;
  }
  if (j.contains("priors")) out.priors = parse_priors(j["priors"], path);
  if (j.contains("costs")) {
    const json &c = j["costs"];
    out.costs.c_miss_tarbf = get_number(c, "miss", path);
    out.costs.c_fa_nonbf = get_number(c, "fa_non", path);
    out.costs.c_fa_spf = get_number(c, "fa_spf", path);
  }
  return out;
}

FittedModels load_models(const ModelPaths &paths) {
  FittedModels models;
  if (!paths.affine_asv.empty()) {
    models.affine_asv = read_affine_model(paths.affine_asv);
  }
  if (!paths.affine_cm.empty()) {
    models.affine_cm = read_affine_model(paths.affine_cm);
  }
  if (!paths.backend.empty()) {
    models.backend = read_backend_model(paths.backend);
  }
  if (!paths.affine_llr_asv.empty()) {
    models.affine_llr_asv = read_affine_model(paths.affine_llr_asv);
  }
  if (!paths.affine_llr_cm.empty()) {
    models.affine_llr_cm = read_affine_model(paths.affine_llr_cm);
  }
  return models;
}

void write_metrics_report(std::ostream &os, const MetricsReport &report) {
  os << "{\"sasv_eer\": " << format_double(report.sasv_eer)
     << ", \"eer_threshold\": " << format_double(report.eer_threshold)
     << ", \"cllr\": " << format_double(report.cllr)
     << ", \"cllr_min\": " << format_double(report.cllr_min)
     << ", \"cllr_calib\": " << format_double(report.cllr_calib)
     << ", \"t_eer\": " << format_double(report.t_eer) << "}\n";
}

void write_boundary_csv(std::ostream &os, const BoundaryGrid &grid) {
  const bool mismatched =
      !grid.cells.empty() && grid.cells.front().mismatched_accept.has_value();
  os << "llr_asv,llr_cm,linear,optimal";
  if (mismatched) os << ",mismatched";
  os << '\n';
  for (const BoundaryCell &cell : grid.cells) {
    os << format_double(cell.llr_asv) << ',' << format_double(cell.llr_cm)
       << ',' << (cell.linear_accept ? 1 : 0) << ','
       << (cell.optimal_accept ? 1 : 0);
    if (mismatched) os << ',' << (*cell.mismatched_accept ? 1 : 0);
    os << '\n';
  }
}

}  // namespace sasvkit
