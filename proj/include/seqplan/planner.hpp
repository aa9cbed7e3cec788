/*
 * Copyright (C) 2026 The seqplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEQPLAN_PLANNER_HPP
#define SEQPLAN_PLANNER_HPP

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "seqplan/random.hpp"
#include "seqplan/sections.hpp"

namespace seqplan {

/// Waypoint deviations above this bound fail validation.
inline constexpr double kWaypointTol = 1e-9;

template <typename Scalar>
struct PlanRequestT {
  ProblemSpecT<Scalar> spec;
  std::vector<ConfigurationT<Scalar>> waypoints;
};

template <typename Scalar>
struct ValidationStatsT {
  std::size_t samples = 0;
  Scalar min_robot_robot = std::numeric_limits<Scalar>::infinity();
  Scalar min_robot_obstacle = std::numeric_limits<Scalar>::infinity();
  Scalar max_waypoint_deviation = Scalar(0);
  bool pass = false;
};

/// Result of one planning run.  `strata` lists cp per waypoint; `region`
/// is their sum, the index of the continuity domain the request fell into.
template <typename Scalar>
struct PlanReportT {
  std::vector<int> strata;
  int region = 0;
  PiecewisePathT<Scalar> path;
  ValidationStatsT<Scalar> validation;
};

namespace detail {

template <typename Scalar>
void check_request_shape(const PlanRequestT<Scalar>& request) {
  if (request.spec.r < 2)
    throw UnsupportedRegimeError(
        "obstacle count r=" + std::to_string(request.spec.r) +
        " is outside the supported regime; planners for r in {0,1} arise "
        "from the obstacle-free construction and are not provided here");
  validate_spec(request.spec);
  if (int(request.waypoints.size()) != request.spec.n)
    throw SpecError("request carries " +
                    std::to_string(request.waypoints.size()) +
                    " waypoints, expected n=" + std::to_string(request.spec.n));
}

template <typename Scalar>
void check_waypoints(const ProblemSpecT<Scalar>& spec,
                     const std::vector<ConfigurationT<Scalar>>& waypoints) {
  for (std::size_t m = 0; m < waypoints.size(); ++m) {
    const auto verdict = validate_configuration(spec, waypoints[m]);
    if (!verdict)
      throw InvalidConfigurationError(
          "waypoint " + std::to_string(m + 1) + ": " + verdict.describe(),
          int(m + 1));
  }
}

}  // namespace detail

/// Per-waypoint strata and their sum, the region index.  The achievable
/// sums are exactly nr, nr+1, ..., n(k+r): nk+1 values.
template <typename Scalar>
std::pair<std::vector<int>, int> region_index(
    const ProblemSpecT<Scalar>& spec,
    const std::vector<ConfigurationT<Scalar>>& waypoints) {
  detail::check_waypoints(spec, waypoints);
  std::vector<int> strata;
  strata.reserve(waypoints.size());
  for (const auto& w : waypoints) strata.push_back(stratum(spec, w).cp);
  const int region = std::accumulate(strata.begin(), strata.end(), 0);
  return {strata, region};
}

/// Samples the path at `count` uniform parameters plus every breakpoint,
/// sorted and deduplicated.
template <typename Scalar>
std::vector<std::pair<Scalar, ConfigurationT<Scalar>>> sample_path(
    const PiecewisePathT<Scalar>& path, int count) {
  if (count < 2) throw PreconditionError("sample_path needs count >= 2");
  std::vector<Scalar> taus;
  taus.reserve(std::size_t(count) + path.breakpoints().size());
  for (int i = 0; i < count; ++i)
    taus.push_back(Scalar(i) / Scalar(count - 1));
  taus.insert(taus.end(), path.breakpoints().begin(), path.breakpoints().end());
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  std::vector<std::pair<Scalar, ConfigurationT<Scalar>>> samples;
  samples.reserve(taus.size());
  for (Scalar tau : taus) samples.emplace_back(tau, path.at(tau));
  return samples;
}

/// Sampling-based safety and waypoint-fidelity check.  Clearance minima are
/// taken over `sample_count` uniform parameters plus all breakpoints;
/// deviations are measured at the prescribed waypoint times m/(n-1).
template <typename Scalar>
ValidationStatsT<Scalar> validate_path(
    const ProblemSpecT<Scalar>& spec, const PiecewisePathT<Scalar>& path,
    const std::vector<ConfigurationT<Scalar>>& waypoints, int sample_count) {
  if (sample_count < 2)
    throw PreconditionError("validate_path needs sample_count >= 2");
  if (waypoints.size() < 2)
    throw PreconditionError("validate_path needs at least two waypoints");

  ValidationStatsT<Scalar> stats;
  for (const auto& [tau, config] : sample_path(path, sample_count)) {
    (void)tau;
    for (Index i = 0; i < config.count(); ++i) {
      for (Index j = 0; j < i; ++j)
        stats.min_robot_robot = std::min(
            stats.min_robot_robot, (config.robot(i) - config.robot(j)).norm());
      for (Index j = 0; j < spec.obstacles.cols(); ++j)
        stats.min_robot_obstacle =
            std::min(stats.min_robot_obstacle,
                     (config.robot(i) - spec.obstacles.col(j)).norm());
    }
    ++stats.samples;
  }
  const Scalar legs = Scalar(waypoints.size() - 1);
  for (std::size_t m = 0; m < waypoints.size(); ++m) {
    const Scalar tau = Scalar(m) / legs;
    stats.max_waypoint_deviation =
        std::max(stats.max_waypoint_deviation,
                 config_distance(path.at(tau), waypoints[m]));
  }
  stats.pass = stats.min_robot_robot > Scalar(0) &&
               stats.min_robot_obstacle > Scalar(0) &&
               stats.max_waypoint_deviation <= Scalar(kWaypointTol);
  return stats;
}

/// Synthesizes the section for one request: each waypoint is deformed onto
/// the axis (desingularize, then flatten), the on-axis images are joined by
/// the ladder section, and the glue schedule assembles the pieces into one
/// path hitting waypoint m+1 at parameter m/(n-1).
///
/// Restricted to requests with a fixed strata tuple the construction is
/// continuous in the waypoints; the tuples with equal sums make up the
/// nk+1 regions of continuity.
template <typename Scalar>
PlanReportT<Scalar> plan(const PlanRequestT<Scalar>& request,
                         int validation_samples = 2048) {
  detail::check_request_shape(request);
  const ProblemSpecT<Scalar>& spec = request.spec;
  detail::check_waypoints(spec, request.waypoints);

  PlanReportT<Scalar> report;
  std::vector<HomotopyT<Scalar>> factors;
  factors.reserve(request.waypoints.size());
  for (const auto& waypoint : request.waypoints) {
    const auto info = stratum(spec, waypoint);
    report.strata.push_back(info.cp);
    factors.push_back(waypoint_homotopy(spec, info));
  }
  report.region =
      std::accumulate(report.strata.begin(), report.strata.end(), 0);

  // The on-axis images can sit closer together than tol_valid when the
  // input's projection gaps are near tol_proj; the internal stages only
  // need exact distinctness, so the ladder runs with a zero margin.
  ProblemSpecT<Scalar> internal = spec;
  internal.tol_valid = Scalar(0);
  const InnerSection<Scalar> inner =
      [internal](const std::vector<ConfigurationT<Scalar>>& tuple) {
        return ladder_section(internal, tuple);
      };
  report.path = glue_path(factors, inner, request.waypoints);
  report.validation =
      validate_path(spec, report.path, request.waypoints, validation_samples);
  return report;
}

/// A random request, optionally pinned to a strata tuple.
template <typename Scalar>
PlanRequestT<Scalar> random_request(
    const ProblemSpecT<Scalar>& spec, std::mt19937_64& rng,
    std::optional<std::vector<int>> strata = std::nullopt) {
  if (strata && int(strata->size()) != spec.n)
    throw SpecError("strata tuple must have n entries");
  PlanRequestT<Scalar> request;
  request.spec = spec;
  request.waypoints.reserve(spec.n);
  for (int m = 0; m < spec.n; ++m)
    request.waypoints.push_back(random_configuration(
        spec, rng,
        strata ? std::optional<int>((*strata)[m]) : std::nullopt));
  return request;
}

// ---------------------------------------------------------------------------
// Region census: constructive exhibition of all nk+1 region indices.
// ---------------------------------------------------------------------------

template <typename Scalar>
struct RegionCensusT {
  struct Entry {
    int target_region;
    std::vector<int> strata;
    int achieved_region;
    bool validation_pass;
  };
  std::vector<Entry> entries;
  std::vector<int> distinct_regions;
  int expected_count = 0;
  bool complete = false;
};

/// Splits a region index into a strata tuple with every entry in [r, k+r].
template <typename Scalar>
std::vector<int> strata_for_region(const ProblemSpecT<Scalar>& spec,
                                   int region) {
  if (region < spec.n * spec.r || region > spec.n * spec.point_count())
    throw SpecError("region index out of range");
  std::vector<int> strata(spec.n, spec.r);
  int excess = region - spec.n * spec.r;
  for (int m = 0; m < spec.n && excess > 0; ++m) {
    const int take = std::min(excess, spec.k);
    strata[m] += take;
    excess -= take;
  }
  return strata;
}

/// Builds one request per region index nr..n(k+r) with stratum-targeted
/// waypoints, plans it, and records the achieved regions.
template <typename Scalar>
RegionCensusT<Scalar> region_census(const ProblemSpecT<Scalar>& spec,
                                    std::uint64_t seed,
                                    int validation_samples = 256) {
  validate_spec(spec);
  std::mt19937_64 rng(seed);
  RegionCensusT<Scalar> census;
  census.expected_count = spec.n * spec.k + 1;
  for (int region = spec.n * spec.r; region <= spec.n * spec.point_count();
       ++region) {
    const auto strata = strata_for_region(spec, region);
    const auto request = random_request(spec, rng, strata);
    const auto report = plan(request, validation_samples);
    census.entries.push_back(
        {region, strata, report.region, report.validation.pass});
  }
  for (const auto& entry : census.entries)
    if (entry.validation_pass)
      census.distinct_regions.push_back(entry.achieved_region);
  std::sort(census.distinct_regions.begin(), census.distinct_regions.end());
  census.distinct_regions.erase(
      std::unique(census.distinct_regions.begin(),
                  census.distinct_regions.end()),
      census.distinct_regions.end());
  census.complete =
      int(census.distinct_regions.size()) == census.expected_count &&
      census.distinct_regions.front() == spec.n * spec.r &&
      census.distinct_regions.back() == spec.n * spec.point_count();
  return census;
}

using PlanRequest = PlanRequestT<double>;
using PlanReport = PlanReportT<double>;
using ValidationStats = ValidationStatsT<double>;
using RegionCensus = RegionCensusT<double>;

}  // namespace seqplan

#endif  // SEQPLAN_PLANNER_HPP
