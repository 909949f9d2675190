// Copyright 2026 The midrange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Repeated-trial experiments on random geodesic drawings and their
// comparison against the exact finite-n expectations.
//
// Trial t of an experiment draws from SeededStream(master_seed, t), and
// per-trial values are reduced in trial order with compensated summation,
// so every statistic is a pure function of the configuration regardless of
// the thread count.

#ifndef MIDRANGE_MONTECARLO_HPP_
#define MIDRANGE_MONTECARLO_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "midrange/analytic.hpp"
#include "midrange/drawing.hpp"
#include "midrange/geom.hpp"
#include "midrange/parallel.hpp"
#include "midrange/sampling.hpp"

namespace midrange {

class AllTrialsEmpty : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExperimentMode { kPairProbability, kDrawingRatio, kEdgeCount, kCompleteGraph };

inline std::string_view to_string(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::kPairProbability: return "pair_probability";
    case ExperimentMode::kDrawingRatio: return "drawing_ratio";
    case ExperimentMode::kEdgeCount: return "edge_count";
    case ExperimentMode::kCompleteGraph: return "complete_graph";
  }
  return "unknown";
}

inline ExperimentMode experiment_mode_from_string(std::string_view s) {
  for (auto m : {ExperimentMode::kPairProbability, ExperimentMode::kDrawingRatio, ExperimentMode::kEdgeCount,
                 ExperimentMode::kCompleteGraph}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown experiment mode: " + std::string(s));
}

struct ExperimentConfig {
  std::uint64_t n = 4;
  double d = std::numbers::pi;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  ExperimentMode mode = ExperimentMode::kDrawingRatio;
  // Worker cap; never affects results.
  unsigned threads = 1;

  void validate() const {
    if (trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (!(d > 0.0 && d <= std::numbers::pi)) throw std::invalid_argument("experiment: d outside (0, pi]");
    if (mode != ExperimentMode::kPairProbability) {
      if (n < 2) throw std::invalid_argument("experiment: n must be >= 2");
      if (mode != ExperimentMode::kEdgeCount && n < 4) {
        throw std::invalid_argument("experiment: crossing modes need n >= 4");
      }
      if (n > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("experiment: n too large");
    }
  }
};

// Neumaier-compensated sum, accumulated in the order given.
inline double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double c = 0.0;
  for (double x : values) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      c += (sum - t) + x;
    } else {
      c += (x - t) + sum;
    }
    sum = t;
  }
  return sum + c;
}

struct Statistic {
  std::uint64_t samples = 0;
  double mean = 0.0;
  double sample_std = 0.0;
  double std_error = 0.0;
  double target = 0.0;
  // (mean - target) / std_error; NaN when std_error is zero.
  double z_score = std::numeric_limits<double>::quiet_NaN();

  double coefficient_of_variation() const { return sample_std / mean; }
};

inline Statistic summarize(std::span<const double> values, double target) {
  Statistic s;
  s.samples = values.size();
  s.target = target;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  s.mean = compensated_sum(values) / n;
  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    std::transform(values.begin(), values.end(), sq.begin(), [&](double x) { return (x - s.mean) * (x - s.mean); });
    s.sample_std = std::sqrt(compensated_sum(sq) / (n - 1.0));
  }
  s.std_error = s.sample_std / std::sqrt(n);
  if (s.std_error > 0.0) s.z_score = (s.mean - target) / s.std_error;
  return s;
}

inline Statistic summarize_bernoulli(std::uint64_t successes, std::uint64_t trials, double target) {
  Statistic s;
  s.samples = trials;
  s.target = target;
  const double n = static_cast<double>(trials);
  s.mean = static_cast<double>(successes) / n;
  if (trials > 1) s.sample_std = std::sqrt(s.mean * (1.0 - s.mean) * n / (n - 1.0));
  s.std_error = s.sample_std / std::sqrt(n);
  if (s.std_error > 0.0) s.z_score = (s.mean - target) / s.std_error;
  return s;
}

struct ExperimentSummary {
  ExperimentConfig config;
  // Name of the per-trial statistic: "crossing_indicator", "ratio",
  // "edges" or "crossings".
  std::string statistic;
  std::vector<CrossingReport> per_trial;  // drawing modes, one per trial
  std::vector<double> per_trial_values;   // statistic per contributing trial
  // Pair mode: successes per block of kPairBlockSize trials.
  std::vector<std::uint64_t> block_successes;

  double mean = 0.0;
  double sample_std = 0.0;
  double std_error = 0.0;
  double analytic_target = 0.0;
  double z_score = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t samples = 0;

  std::optional<Statistic> edges;
  std::optional<Statistic> crossings;
  // g(d), for reference next to the finite-n target.
  std::optional<double> ratio_function_value;
  std::uint64_t skipped_trials = 0;  // trials without edges
  std::uint64_t successes = 0;       // pair mode
  std::uint64_t degeneracies = 0;

  void set_primary(const Statistic& s) {
    mean = s.mean;
    sample_std = s.sample_std;
    std_error = s.std_error;
    analytic_target = s.target;
    z_score = s.z_score;
    samples = s.samples;
  }
};

inline constexpr std::uint64_t kPairBlockSize = 1 << 16;

struct BernoulliEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t degeneracies = 0;

  double mean() const { return static_cast<double>(successes) / static_cast<double>(trials); }
};

namespace detail {

// Runs `trial(stream)` -> {hit, degenerate} over blocks of kPairBlockSize
// trials; block b draws from SeededStream(seed, b).
template <class Trial>
BernoulliEstimate run_blocks(std::uint64_t trials, std::uint64_t seed, unsigned threads, Trial&& trial,
                             std::vector<std::uint64_t>* per_block = nullptr) {
  const std::uint64_t blocks = (trials + kPairBlockSize - 1) / kPairBlockSize;
  std::vector<std::uint64_t> hits(blocks, 0);
  std::vector<std::uint64_t> degenerate(blocks, 0);
  parallel_for(blocks, threads, [&](std::size_t b, unsigned) {
    SeededStream stream(seed, b);
    const std::uint64_t count = std::min<std::uint64_t>(kPairBlockSize, trials - b * kPairBlockSize);
    for (std::uint64_t t = 0; t < count; ++t) {
      const auto [hit, degen] = trial(stream);
      hits[b] += hit ? 1 : 0;
      degenerate[b] += degen ? 1 : 0;
    }
  });
  BernoulliEstimate est;
  est.trials = trials;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    est.successes += hits[b];
    est.degeneracies += degenerate[b];
  }
  if (per_block) *per_block = std::move(hits);
  return est;
}

struct TrialOutcome {
  bool hit = false;
  bool degenerate = false;
};

inline TrialOutcome crossing_outcome(const UnitVector& p, const UnitVector& q, const UnitVector& r,
                                     const UnitVector& s) {
  if (is_degenerate_pair(p, q) || is_degenerate_pair(r, s)) return {false, true};
  try {
    const CrossingTest t = test_crossing(make_arc(p, q), make_arc(r, s));
    return {t.crosses, t.in_tolerance_band};
  } catch (const CoincidentGreatCircles&) {
    return {false, true};
  }
}

}  // namespace detail

// Direct simulation of P[PQ crosses RS | |PQ| = alpha]: PQ fixed on the
// equator, R and S uniform.
inline BernoulliEstimate estimate_conditional_cross_probability(double alpha, std::uint64_t trials,
                                                                std::uint64_t seed, unsigned threads = 1) {
  if (!(alpha > 0.0 && alpha < std::numbers::pi)) throw DomainError("conditional estimate: alpha outside (0, pi)");
  const UnitVector p(1.0, 0.0, 0.0);
  const UnitVector q = UnitVector::normalize({std::cos(alpha), std::sin(alpha), 0.0});
  return detail::run_blocks(trials, seed, threads, [&](SeededStream& stream) {
    const UnitVector r = sample_unit_vector(stream);
    const UnitVector s = sample_unit_vector(stream);
    return detail::crossing_outcome(p, q, r, s);
  });
}

// Arcs of lengths alpha and beta placed at uniformly random rotations on
// the equator and on the orthogonal great circle x = 0.
inline BernoulliEstimate estimate_fixed_circles_cross_probability(double alpha, double beta, std::uint64_t trials,
                                                                  std::uint64_t seed, unsigned threads = 1) {
  constexpr double pi = std::numbers::pi;
  if (!(alpha > 0.0 && alpha < pi && beta > 0.0 && beta < pi)) {
    throw DomainError("fixed circles estimate: lengths outside (0, pi)");
  }
  return detail::run_blocks(trials, seed, threads, [&](SeededStream& stream) {
    const double phi = 2.0 * pi * stream.uniform();
    const double psi = 2.0 * pi * stream.uniform();
    const UnitVector p = UnitVector::normalize({std::cos(phi), std::sin(phi), 0.0});
    const UnitVector q = UnitVector::normalize({std::cos(phi + alpha), std::sin(phi + alpha), 0.0});
    const UnitVector r = UnitVector::normalize({0.0, std::cos(psi), std::sin(psi)});
    const UnitVector s = UnitVector::normalize({0.0, std::cos(psi + beta), std::sin(psi + beta)});
    return detail::crossing_outcome(p, q, r, s);
  });
}

// Estimates P[PQ crosses RS, |PQ| <= d, |RS| <= d] from independent uniform
// 4-tuples.
inline ExperimentSummary run_pair_probability(const ExperimentConfig& config) {
  config.validate();
  if (config.mode != ExperimentMode::kPairProbability) throw std::invalid_argument("run_pair_probability: wrong mode");
  const double d = config.d;
  ExperimentSummary out;
  out.config = config;
  out.statistic = "crossing_indicator";
  const BernoulliEstimate est = detail::run_blocks(
      config.trials, config.master_seed, config.threads,
      [d](SeededStream& stream) {
        const UnitVector p = sample_unit_vector(stream);
        const UnitVector q = sample_unit_vector(stream);
        const UnitVector r = sample_unit_vector(stream);
        const UnitVector s = sample_unit_vector(stream);
        if (great_circle_distance(p, q) > d || great_circle_distance(r, s) > d) return detail::TrialOutcome{};
        return detail::crossing_outcome(p, q, r, s);
      },
      &out.block_successes);
  out.successes = est.successes;
  out.degeneracies = est.degeneracies;
  out.set_primary(summarize_bernoulli(est.successes, est.trials, joint_cross_probability(d)));
  return out;
}

namespace detail {

inline std::vector<CrossingReport> run_drawing_trials(const ExperimentConfig& config, bool count) {
  std::vector<CrossingReport> reports(config.trials);
  parallel_for(config.trials, config.threads, [&](std::size_t t, unsigned) {
    SeededStream stream(config.master_seed, t);
    const SphericalDrawing drawing = build_threshold_drawing(stream, config.n, config.d);
    reports[t] = count ? count_crossings(drawing)
                       : CrossingReport::make(drawing.n(), drawing.e(), 0, 0);
    reports[t].degeneracies += drawing.degeneracy_count;
  });
  return reports;
}

template <class Field>
std::vector<double> collect(const std::vector<CrossingReport>& reports, Field&& field) {
  std::vector<double> values;
  values.reserve(reports.size());
  for (const CrossingReport& r : reports) values.push_back(field(r));
  return values;
}

inline void attach_drawing_stats(ExperimentSummary& out, bool with_crossings) {
  const AnalyticParams params{out.config.d, out.config.n};
  out.edges = summarize(collect(out.per_trial, [](const CrossingReport& r) { return double(r.e); }),
                        expected_edges(params));
  if (with_crossings) {
    out.crossings = summarize(collect(out.per_trial, [](const CrossingReport& r) { return double(r.cr); }),
                              expected_crossings(params));
  }
  for (const CrossingReport& r : out.per_trial) out.degeneracies += r.degeneracies;
}

}  // namespace detail

// Per-trial normalized ratio cr n^2 / e^3 of independent threshold drawings,
// compared with E[cr] n^2 / E[e]^3.  Trials without edges are skipped.
inline ExperimentSummary run_drawing_ratio(const ExperimentConfig& config) {
  config.validate();
  if (config.mode != ExperimentMode::kDrawingRatio) throw std::invalid_argument("run_drawing_ratio: wrong mode");
  ExperimentSummary out;
  out.config = config;
  out.statistic = "ratio";
  out.per_trial = detail::run_drawing_trials(config, true);
  for (const CrossingReport& r : out.per_trial) {
    if (r.e == 0) {
      ++out.skipped_trials;
    } else {
      out.per_trial_values.push_back(r.ratio);
    }
  }
  if (out.per_trial_values.empty()) throw AllTrialsEmpty("run_drawing_ratio: every trial produced an empty graph");
  const AnalyticParams params{config.d, config.n};
  out.set_primary(summarize(out.per_trial_values, finite_n_ratio_target(params)));
  out.ratio_function_value = ratio_function(config.d);
  detail::attach_drawing_stats(out, true);
  return out;
}

// Edge counts of independent threshold drawings against n (n-1)(1-cos d)/4.
inline ExperimentSummary run_edge_count(const ExperimentConfig& config) {
  config.validate();
  if (config.mode != ExperimentMode::kEdgeCount) throw std::invalid_argument("run_edge_count: wrong mode");
  ExperimentSummary out;
  out.config = config;
  out.statistic = "edges";
  out.per_trial = detail::run_drawing_trials(config, false);
  detail::attach_drawing_stats(out, false);
  out.per_trial_values = detail::collect(out.per_trial, [](const CrossingReport& r) { return double(r.e); });
  out.set_primary(*out.edges);
  return out;
}

// Crossing counts of the geodesic drawing of K_n (d = pi) against
// C(n,2) C(n-2,2) / 16.
inline ExperimentSummary run_complete_graph(ExperimentConfig config) {
  config.d = std::numbers::pi;
  config.validate();
  if (config.mode != ExperimentMode::kCompleteGraph) throw std::invalid_argument("run_complete_graph: wrong mode");
  ExperimentSummary out;
  out.config = config;
  out.statistic = "crossings";
  out.per_trial = detail::run_drawing_trials(config, true);
  detail::attach_drawing_stats(out, true);
  out.per_trial_values = detail::collect(out.per_trial, [](const CrossingReport& r) { return double(r.cr); });
  out.set_primary(*out.crossings);
  out.ratio_function_value = ratio_function(config.d);
  return out;
}

inline ExperimentSummary run_experiment(const ExperimentConfig& config) {
  switch (config.mode) {
    case ExperimentMode::kPairProbability: return run_pair_probability(config);
    case ExperimentMode::kDrawingRatio: return run_drawing_ratio(config);
    case ExperimentMode::kEdgeCount: return run_edge_count(config);
    case ExperimentMode::kCompleteGraph: return run_complete_graph(config);
  }
  throw std::invalid_argument("run_experiment: unknown mode");
}

struct ConcentrationProbe {
  ExperimentSummary at_n;
  ExperimentSummary at_2n;
  double edges_cv_n = 0.0;
  double edges_cv_2n = 0.0;
  std::optional<double> crossings_cv_n;
  std::optional<double> crossings_cv_2n;

  bool edges_concentrate() const { return edges_cv_2n < edges_cv_n; }
  bool crossings_concentrate() const {
    return crossings_cv_n && crossings_cv_2n && *crossings_cv_2n < *crossings_cv_n;
  }
};

// Coefficient of variation of the edge count (and, outside edge_count mode,
// the crossing count) at n and at 2n.  Drawing modes only.
inline ConcentrationProbe run_concentration_probe(const ExperimentConfig& config) {
  if (config.trials < 30) throw std::invalid_argument("run_concentration_probe: need at least 30 trials");
  if (config.mode == ExperimentMode::kPairProbability) {
    throw std::invalid_argument("run_concentration_probe: drawing modes only");
  }
  ExperimentConfig doubled = config;
  doubled.n = 2 * config.n;
  ConcentrationProbe probe;
  probe.at_n = run_experiment(config);
  probe.at_2n = run_experiment(doubled);
  probe.edges_cv_n = probe.at_n.edges->coefficient_of_variation();
  probe.edges_cv_2n = probe.at_2n.edges->coefficient_of_variation();
  if (probe.at_n.crossings && probe.at_2n.crossings) {
    probe.crossings_cv_n = probe.at_n.crossings->coefficient_of_variation();
    probe.crossings_cv_2n = probe.at_2n.crossings->coefficient_of_variation();
  }
  return probe;
}

}  // namespace midrange

#endif  // MIDRANGE_MONTECARLO_HPP_
