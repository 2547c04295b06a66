// core/src/metrics.cpp

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

#include "sasvkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>

#include "sasvkit/errors.hpp"
#include "sasvkit/math_util.hpp"

namespace sasvkit {

namespace {

void check_finite(std::span<const double> scores) {
  for (double s : scores) {
    if (!std::isfinite(s)) throw DomainError("non-finite score");
  }
}

}  // namespace

EerResult compute_eer(std::span<const double> target_scores,
                      std::span<const double> nontarget_scores) {
  if (target_scores.empty() || nontarget_scores.empty()) {
    throw MetricError("EER needs both target and non-target scores");
  }
  check_finite(target_scores);
  check_finite(nontarget_scores);

  std::vector<double> st(target_scores.begin(), target_scores.end());
  std::vector<double> sn(nontarget_scores.begin(), nontarget_scores.end());
  std::sort(st.begin(), st.end());
  std::sort(sn.begin(), sn.end());
  std::vector<double> taus;
  taus.reserve(st.size() + sn.size());
  std::merge(st.begin(), st.end(), sn.begin(), sn.end(),
             std::back_inserter(taus));
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  const double nt = static_cast<double>(st.size());
  const double nn = static_cast<double>(sn.size());

  // Operating point 0 is tau = -inf: everything accepted.
  double prev_miss = 0.0;
  double prev_fa = 1.0;
  double prev_tau = -std::numeric_limits<double>::infinity();
  for (double tau : taus) {
    const double miss =
        static_cast<double>(std::upper_bound(st.begin(), st.end(), tau) -
                            st.begin()) /
        nt;
    const double fa =
        static_cast<double>(sn.end() -
                            std::upper_bound(sn.begin(), sn.end(), tau)) /
        nn;
    const double d = miss - fa;
    if (d >= 0.0) {
      if (d == 0.0) return {miss, tau};
      const double d_prev = prev_miss - prev_fa;
      const double t = -d_prev / (d - d_prev);
      const double eer = prev_miss + t * (miss - prev_miss);
      const double threshold = std::isinf(prev_tau)
                                   ? tau
                                   : prev_tau + t * (tau - prev_tau);
      return {eer, threshold};
    }
    prev_miss = miss;
    prev_fa = fa;
    prev_tau = tau;
  }
  // Unreachable with both classes nonempty: at the maximum observed score the
  // miss rate is 1 and the false-accept rate is 0.
  return {1.0, taus.back()};
}

double compute_cllr(std::span<const double> target_llrs,
                    std::span<const double> nontarget_llrs) {
  if (target_llrs.empty() || nontarget_llrs.empty()) {
    throw MetricError("Cllr needs both target and non-target LLRs");
  }
  double t_sum = 0.0;
  for (double llr : target_llrs) t_sum += softplus(-llr);
  double n_sum = 0.0;
  for (double llr : nontarget_llrs) n_sum += softplus(llr);
  const double t_mean = t_sum / static_cast<double>(target_llrs.size());
  const double n_mean = n_sum / static_cast<double>(nontarget_llrs.size());
  return 0.5 * (t_mean + n_mean) / kLn2;
}

PavLlrs pav_recalibrate(std::span<const double> target_scores,
                        std::span<const double> nontarget_scores) {
  if (target_scores.empty() || nontarget_scores.empty()) {
    throw MetricError("PAV recalibration needs both classes");
  }
  check_finite(target_scores);
  check_finite(nontarget_scores);

  const double wt = 0.5 / static_cast<double>(target_scores.size());
  const double wn = 0.5 / static_cast<double>(nontarget_scores.size());

  // Pool equal scores first so the fit depends on the score order only.
  std::map<double, std::pair<double, double>> groups;  // score -> (W, W*y)
  for (double s : target_scores) {
    auto &g = groups[s];
    g.first += wt;
    g.second += wt;
  }
  for (double s : nontarget_scores) {
    groups[s].first += wn;
  }

  struct Block {
    double weight;
    double weighted_sum;
    double hi_score;
  };
  std::vector<Block> stack;
  stack.reserve(groups.size());
  for (const auto &[score, g] : groups) {
    stack.push_back({g.first, g.second, score});
    while (stack.size() >= 2) {
      const Block &a = stack[stack.size() - 2];
      const Block &b = stack.back();
      if (a.weighted_sum * b.weight < b.weighted_sum * a.weight) break;
      Block merged{a.weight + b.weight, a.weighted_sum + b.weighted_sum,
                   b.hi_score};
      stack.pop_back();
      stack.back() = merged;
    }
  }

  // Map each input score to its block's posterior and convert to an LLR at
  // effective prior 0.5 (logit of the pooled mean).
  auto llr_of = [&stack](double score) {
    std::size_t lo = 0;
    std::size_t hi = stack.size();
    while (lo < hi) {  // first block with hi_score >= score
      const std::size_t mid = (lo + hi) / 2;
      if (stack[mid].hi_score < score) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    const double p = stack[lo].weighted_sum / stack[lo].weight;
    return std::log(p) - std::log1p(-p);
  };

  PavLlrs out;
  out.target_llrs.reserve(target_scores.size());
  for (double s : target_scores) out.target_llrs.push_back(llr_of(s));
  out.nontarget_llrs.reserve(nontarget_scores.size());
  for (double s : nontarget_scores) out.nontarget_llrs.push_back(llr_of(s));
  return out;
}

double compute_cllr_min(std::span<const double> target_scores,
                        std::span<const double> nontarget_scores) {
  const PavLlrs pav = pav_recalibrate(target_scores, nontarget_scores);
  return compute_cllr(pav.target_llrs, pav.nontarget_llrs);
}

namespace {

// Fenwick tree over score ranks; supports point insert and suffix counts.
class RankCounter {
 public:
  explicit RankCounter(std::size_t n) : tree_(n + 1, 0), total_(0) {}

  void insert(std::size_t rank) {
    ++total_;
    for (std::size_t i = rank + 1; i < tree_.size(); i += i & (~i + 1)) {
      ++tree_[i];
    }
  }

  // Number of inserted items with rank >= r.
  std::int64_t count_at_or_above(std::size_t r) const {
    std::int64_t below = 0;
    for (std::size_t i = r; i > 0; i -= i & (~i + 1)) below += tree_[i];
    return total_ - below;
  }

  std::int64_t total() const { return total_; }

 private:
  std::vector<std::int64_t> tree_;
  std::int64_t total_;
};

struct PathPoint {
  double x = 0.0;    // interpolated common miss / non-target FA value
  double spf = 0.0;  // spoof FA rate at the same interpolated point
};

}  // namespace

double compute_t_eer(std::span<const TrialScore> trials) {
  std::int64_t n_class[3] = {0, 0, 0};
  for (const TrialScore &t : trials) {
    if (!t.label) throw MetricError("t-EER needs labeled trials");
    if (!std::isfinite(t.s_asv) || !std::isfinite(t.s_cm)) {
      throw DomainError("non-finite score");
    }
    ++n_class[static_cast<int>(*t.label)];
  }
  if (n_class[0] == 0 || n_class[1] == 0 || n_class[2] == 0) {
    throw MetricError("t-EER needs all three classes");
  }
  const std::int64_t n_spf = n_class[0];
  const std::int64_t n_non = n_class[1];
  const std::int64_t n_tar = n_class[2];

  // Distinct pooled thresholds per stream.
  std::vector<double> asv_vals;
  std::vector<double> cm_vals;
  asv_vals.reserve(trials.size());
  cm_vals.reserve(trials.size());
  for (const TrialScore &t : trials) {
    asv_vals.push_back(t.s_asv);
    cm_vals.push_back(t.s_cm);
  }
  std::sort(asv_vals.begin(), asv_vals.end());
  asv_vals.erase(std::unique(asv_vals.begin(), asv_vals.end()),
                 asv_vals.end());
  std::sort(cm_vals.begin(), cm_vals.end());
  cm_vals.erase(std::unique(cm_vals.begin(), cm_vals.end()), cm_vals.end());
  const std::size_t na = asv_vals.size();

  auto asv_rank = [&asv_vals](double v) {
    return static_cast<std::size_t>(
        std::lower_bound(asv_vals.begin(), asv_vals.end(), v) -
        asv_vals.begin());
  };

  // Trials ordered by CM score descending; walking the CM threshold down
  // inserts each trial exactly once.
  std::vector<std::size_t> order(trials.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&trials](std::size_t a, std::size_t b) {
    return trials[a].s_cm > trials[b].s_cm;
  });

  RankCounter cnt_spf(na);
  RankCounter cnt_non(na);
  RankCounter cnt_tar(na);

  // ASV operating index i in [0, na]: i = 0 is tau_asv = -inf, i >= 1 keeps
  // trials with rank >= i. All rates reduce to integer counts, compared via
  // cross-multiplication so exact ties stay exact.
  auto d_num = [&](std::size_t i) {
    const std::int64_t acc_tar = cnt_tar.count_at_or_above(i);
    const std::int64_t acc_non = cnt_non.count_at_or_above(i);
    return (n_tar - acc_tar) * n_non - acc_non * n_tar;
  };

  auto path_point_here = [&]() {
    // Smallest i with miss >= fa_non; d_num is nondecreasing in i.
    std::size_t lo = 0;
    std::size_t hi = na;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (d_num(mid) < 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    auto rates = [&](std::size_t i) {
      PathPoint p;
      p.x = static_cast<double>(n_tar - cnt_tar.count_at_or_above(i)) /
            static_cast<double>(n_tar);
      p.spf = static_cast<double>(cnt_spf.count_at_or_above(i)) /
              static_cast<double>(n_spf);
      return p;
    };
    const std::int64_t dk = d_num(lo);
    if (lo == 0 && dk > 0) {
      // The miss rate already exceeds the non-target FA rate with the ASV
      // threshold wide open; no equalizing point exists. Midpoint convention.
      PathPoint p = rates(0);
      const double fan = static_cast<double>(cnt_non.count_at_or_above(0)) /
                         static_cast<double>(n_non);
      p.x = 0.5 * (p.x + fan);
      return p;
    }
    if (dk == 0) return rates(lo);
    const std::int64_t d_prev = d_num(lo - 1);
    const double t = static_cast<double>(-d_prev) /
                     static_cast<double>(dk - d_prev);
    const PathPoint a = rates(lo - 1);
    const PathPoint b = rates(lo);
    return PathPoint{a.x + t * (b.x - a.x), a.spf + t * (b.spf - a.spf)};
  };

  // CM candidates ascending: index 0 is tau_cm = -inf, index j >= 1 is
  // cm_vals[j-1]. Fill the path from the top (nothing inserted) downward.
  const std::size_t nc = cm_vals.size();
  std::vector<PathPoint> path(nc + 1);
  std::size_t next = 0;  // next trial (CM-descending) to insert
  for (std::size_t j = nc; j-- > 0;) {
    const double tau_cm = cm_vals[j];
    while (next < order.size() && trials[order[next]].s_cm > tau_cm) {
      const TrialScore &t = trials[order[next]];
      const std::size_t r = asv_rank(t.s_asv);
      switch (*t.label) {
        case ClassLabel::kSpf: cnt_spf.insert(r); break;
        case ClassLabel::kNonBf: cnt_non.insert(r); break;
        case ClassLabel::kTarBf: cnt_tar.insert(r); break;
      }
      ++next;
    }
    path[j + 1] = path_point_here();
  }
  while (next < order.size()) {
    const TrialScore &t = trials[order[next]];
    const std::size_t r = asv_rank(t.s_asv);
    switch (*t.label) {
      case ClassLabel::kSpf: cnt_spf.insert(r); break;
      case ClassLabel::kNonBf: cnt_non.insert(r); break;
      case ClassLabel::kTarBf: cnt_tar.insert(r); break;
    }
    ++next;
  }
  path[0] = path_point_here();

  // Scan the path for points where the spoof FA rate meets the miss/fa_non
  // value; keep the smallest crossing.
  double best = std::numeric_limits<double>::infinity();
  double prev_g = 0.0;
  bool have_prev = false;
  for (std::size_t j = 0; j <= nc; ++j) {
    const double g = path[j].spf - path[j].x;
    if (g == 0.0) {
      best = std::min(best, path[j].x);
    } else if (have_prev && ((prev_g > 0.0 && g < 0.0) ||
                             (prev_g < 0.0 && g > 0.0))) {
      const double t = prev_g / (prev_g - g);
      best = std::min(best, path[j - 1].x + t * (path[j].x - path[j - 1].x));
    }
    prev_g = g;
    have_prev = true;
  }
  if (std::isinf(best)) {
    // The path never touches equality; report the point closest to it.
    std::size_t arg = 0;
    double min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j <= nc; ++j) {
      const double a = std::abs(path[j].spf - path[j].x);
      if (a < min_abs) {
        min_abs = a;
        arg = j;
      }
    }
    best = path[arg].x;
  }
  return best;
}

}  // namespace sasvkit
