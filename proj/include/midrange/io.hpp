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

// JSON and CSV encodings of drawings, crossing reports and experiment
// summaries.  Every document carries "format": 1.

#ifndef MIDRANGE_IO_HPP_
#define MIDRANGE_IO_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"
#include "midrange/drawing.hpp"
#include "midrange/montecarlo.hpp"

namespace midrange {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

inline void check_format(const Json& j, const char* what) {
  if (!j.is_object() || !j.contains("format") || j.at("format") != kFormatVersion) {
    throw FormatError(std::string(what) + ": missing or unsupported \"format\"");
  }
}

}  // namespace detail

inline Json to_json(const SphericalDrawing& d) {
  Json vertices = Json::array();
  for (const UnitVector& v : d.vertices) vertices.push_back({v.x(), v.y(), v.z()});
  Json edges = Json::array();
  for (const Edge& e : d.edges) edges.push_back({e.i, e.j});
  return Json{{"format", kFormatVersion}, {"n", d.n()},           {"d", d.threshold_d},
              {"seed", d.seed},           {"stream", d.stream_index}, {"degeneracy_count", d.degeneracy_count},
              {"vertices", vertices},     {"edges", edges}};
}

inline SphericalDrawing drawing_from_json(const Json& j) {
  detail::check_format(j, "drawing");
  try {
    SphericalDrawing d;
    d.threshold_d = j.at("d").get<double>();
    d.seed = j.at("seed").get<std::uint64_t>();
    d.stream_index = j.value("stream", std::uint64_t{0});
    d.degeneracy_count = j.value("degeneracy_count", std::uint64_t{0});
    for (const Json& v : j.at("vertices")) {
      d.vertices.emplace_back(v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>());
    }
    if (j.at("n").get<std::size_t>() != d.vertices.size()) throw FormatError("drawing: n does not match vertices");
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const Json& e : j.at("edges")) {
      const Edge edge{e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()};
      if (edge.i >= edge.j || edge.j >= d.vertices.size()) throw FormatError("drawing: invalid edge indices");
      if (!seen.emplace(edge.i, edge.j).second) throw FormatError("drawing: duplicate edge");
      if (is_degenerate_pair(d.vertices[edge.i], d.vertices[edge.j])) throw FormatError("drawing: degenerate edge");
      d.edges.push_back(edge);
    }
    return d;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("drawing: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("drawing: ") + e.what());
  }
}

inline Json to_json(const CrossingReport& r) {
  return Json{{"format", kFormatVersion}, {"n", r.n},         {"e", r.e},
              {"cr", r.cr},               {"ratio", r.ratio}, {"degeneracies", r.degeneracies}};
}

inline CrossingReport report_from_json(const Json& j) {
  detail::check_format(j, "crossing report");
  try {
    CrossingReport r = CrossingReport::make(j.at("n").get<std::uint64_t>(), j.at("e").get<std::uint64_t>(),
                                            j.at("cr").get<std::uint64_t>(), j.at("degeneracies").get<std::uint64_t>());
    if (j.at("ratio").get<double>() != r.ratio) throw FormatError("crossing report: ratio inconsistent with counts");
    return r;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("crossing report: ") + e.what());
  }
}

inline Json to_json(const ExperimentConfig& c) {
  return Json{{"mode", std::string(to_string(c.mode))}, {"n", c.n}, {"d", c.d}, {"trials", c.trials},
              {"seed", c.master_seed}};
}

inline Json to_json(const Statistic& s) {
  return Json{{"samples", s.samples},
              {"mean", s.mean},
              {"sample_std", s.sample_std},
              {"std_error", s.std_error},
              {"target", s.target},
              {"z_score", detail::number_or_null(s.z_score)}};
}

inline Json to_json(const ExperimentSummary& s) {
  Json j{{"format", kFormatVersion},
         {"config", to_json(s.config)},
         {"statistic", s.statistic},
         {"samples", s.samples},
         {"mean", s.mean},
         {"sample_std", s.sample_std},
         {"std_error", s.std_error},
         {"analytic_target", s.analytic_target},
         {"z_score", detail::number_or_null(s.z_score)}};
  if (s.ratio_function_value) j["ratio_function"] = *s.ratio_function_value;
  if (s.edges) j["edges"] = to_json(*s.edges);
  if (s.crossings) j["crossings"] = to_json(*s.crossings);
  j["skipped_trials"] = s.skipped_trials;
  j["degeneracies"] = s.degeneracies;
  if (s.config.mode == ExperimentMode::kPairProbability) {
    j["successes"] = s.successes;
  } else {
    Json trials = Json::array();
    for (const CrossingReport& r : s.per_trial) trials.push_back(to_json(r));
    j["per_trial"] = std::move(trials);
  }
  return j;
}

// One '#'-prefixed line per resolved setting, then a header and one row per
// trial (per block of kPairBlockSize trials in pair mode).
//   drawing modes: format_version,trial,n,e,cr,ratio,degeneracies
//   pair mode:     format_version,block,trials,successes
inline void write_csv(std::ostream& os, const ExperimentSummary& s, const Json& resolved_config) {
  for (const auto& [key, value] : resolved_config.items()) os << "# " << key << '=' << value.dump() << '\n';
  if (s.config.mode == ExperimentMode::kPairProbability) {
    os << "format_version,block,trials,successes\n";
    for (std::size_t b = 0; b < s.block_successes.size(); ++b) {
      const std::uint64_t begin = b * kPairBlockSize;
      const std::uint64_t count = std::min<std::uint64_t>(kPairBlockSize, s.config.trials - begin);
      os << kFormatVersion << ',' << b << ',' << count << ',' << s.block_successes[b] << '\n';
    }
    return;
  }
  os << "format_version,trial,n,e,cr,ratio,degeneracies\n";
  for (std::size_t t = 0; t < s.per_trial.size(); ++t) {
    const CrossingReport& r = s.per_trial[t];
    os << kFormatVersion << ',' << t << ',' << r.n << ',' << r.e << ',' << r.cr << ',' << Json(r.ratio).dump() << ','
       << r.degeneracies << '\n';
  }
}

}  // namespace midrange

#endif  // MIDRANGE_IO_HPP_
