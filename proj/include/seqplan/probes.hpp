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

#ifndef SEQPLAN_PROBES_HPP
#define SEQPLAN_PROBES_HPP

#include <cstdint>

#include "seqplan/planner.hpp"

namespace seqplan {

namespace detail {

/// Perturbs a configuration without changing its projection-equality
/// pattern: projection groups that contain no obstacle shift rigidly by a
/// common offset, groups pinned to an obstacle stay put, and all non-first
/// coordinates move freely.
template <typename Scalar>
ConfigurationT<Scalar> perturb_within_pattern(
    const ProblemSpecT<Scalar>& spec, const ConfigurationT<Scalar>& config,
    Scalar delta, std::mt19937_64& rng) {
  std::uniform_real_distribution<Scalar> shift(-delta, delta);
  const auto info = stratum(spec, config);
  ConfigurationT<Scalar> out = config;
  for (const auto& group : info.pattern) {
    bool has_obstacle = false;
    for (int g : group)
      if (g <= spec.r) has_obstacle = true;
    if (has_obstacle) continue;
    const Scalar offset = shift(rng);
    for (int g : group) out.points(0, g - spec.r - 1) += offset;
  }
  for (int i = 0; i < spec.k; ++i)
    for (int c = 1; c < spec.d; ++c) out.points(c, i) += shift(rng);
  if (stratum(spec, out).pattern != info.pattern)
    throw Error("pattern-preserving perturbation changed the pattern; "
                "delta is too large for this problem's projection gaps");
  return out;
}

}  // namespace detail

/// Plans pairs of pattern-identical requests that differ by at most delta
/// per coordinate and reports the largest sup-distance between their paths
/// over 256 samples.  Small results certify continuity on the region
/// restricted to one strata tuple.
template <typename Scalar>
Scalar continuity_probe(const ProblemSpecT<Scalar>& spec,
                        const std::vector<int>& strata, Scalar delta,
                        int trials, std::uint64_t seed) {
  validate_spec(spec);
  if (!(delta >= Scalar(0)))
    throw PreconditionError("continuity_probe needs delta >= 0");
  if (int(strata.size()) != spec.n)
    throw SpecError("strata tuple must have n entries");
  for (int j : strata)
    if (j < spec.r || j > spec.point_count())
      throw SpecError("strata entries must lie in [r, k+r]");

  std::mt19937_64 rng(seed);
  Scalar worst = Scalar(0);
  for (int trial = 0; trial < trials; ++trial) {
    const auto base = random_request(spec, rng, strata);
    PlanRequestT<Scalar> moved = base;
    for (auto& waypoint : moved.waypoints)
      waypoint = detail::perturb_within_pattern(spec, waypoint, delta, rng);
    const auto report_a = plan(base, 2);
    const auto report_b = plan(moved, 2);
    for (int s = 0; s < 256; ++s) {
      const Scalar tau = Scalar(s) / Scalar(255);
      worst = std::max(worst, config_distance(report_a.path.at(tau),
                                              report_b.path.at(tau)));
    }
  }
  return worst;
}

/// Random configurations, perturbed by at most tol_proj/4 per coordinate
/// and re-classified with tolerance tol_proj/2, must never lose projection
/// groups: the strata only refine near their closures.  Returns the number
/// of observed violations (expected 0).
template <typename Scalar>
int semicontinuity_probe(const ProblemSpecT<Scalar>& spec, int trials,
                         std::uint64_t seed) {
  validate_spec(spec);
  std::mt19937_64 rng(seed);
  const Scalar magnitude = spec.tol_proj / Scalar(4);
  std::uniform_real_distribution<Scalar> wiggle(-magnitude, magnitude);
  int violations = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const auto config = random_configuration(spec, rng);
    const int cp_before = stratum(spec, config).cp;
    ConfigurationT<Scalar> moved = config;
    for (int i = 0; i < spec.k; ++i)
      for (int c = 0; c < spec.d; ++c) moved.points(c, i) += wiggle(rng);
    const int cp_after =
        stratum(spec, moved, spec.tol_proj / Scalar(2)).cp;
    if (cp_after < cp_before) ++violations;
  }
  return violations;
}

/// Evaluates the three deformations on random inputs over a dense t-grid
/// and returns the smallest clearance seen anywhere (expected > 0).
template <typename Scalar>
Scalar deformation_safety_probe(const ProblemSpecT<Scalar>& spec, int trials,
                                int t_samples, std::uint64_t seed) {
  validate_spec(spec);
  if (t_samples < 2)
    throw PreconditionError("deformation_safety_probe needs t_samples >= 2");
  std::mt19937_64 rng(seed);
  Scalar worst = std::numeric_limits<Scalar>::infinity();
  auto grid = [t_samples](int i) {
    return Scalar(i) / Scalar(t_samples - 1);
  };
  for (int trial = 0; trial < trials; ++trial) {
    const auto config = random_configuration(spec, rng);
    const auto info = stratum(spec, config);
    for (int i = 0; i < t_samples; ++i)
      worst = std::min(
          worst, min_clearance(spec, desingularize(spec, config, info, grid(i))));
    const auto top = desingularize(spec, config, info, Scalar(1));
    for (int i = 0; i < t_samples; ++i)
      worst = std::min(worst, min_clearance(spec, flatten(spec, top, grid(i))));
    const auto from = flatten(spec, top, Scalar(1));

    const auto other = random_configuration(spec, rng);
    const auto other_info = stratum(spec, other);
    const auto to = flatten(
        spec, desingularize(spec, other, other_info, Scalar(1)), Scalar(1));
    for (int i = 0; i < t_samples; ++i)
      worst = std::min(worst,
                       min_clearance(spec, ladder(spec, from, to, grid(i))));
  }
  return worst;
}

}  // namespace seqplan

#endif  // SEQPLAN_PROBES_HPP
