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

#ifndef SEQPLAN_HOMOTOPY_HPP
#define SEQPLAN_HOMOTOPY_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "seqplan/stratum.hpp"
#include "seqplan/types.hpp"

namespace seqplan {

namespace detail {

template <typename Scalar>
void check_unit_interval(Scalar t, const char* who) {
  if (!(t >= Scalar(0) && t <= Scalar(1)))
    throw PreconditionError(std::string(who) + ": t must lie in [0, 1]");
}

/// The flattening formula without any stratum classification: each robot
/// slides affinely onto its first-axis projection.  The first coordinates
/// never change, so the motion is collision-free exactly when all k+r
/// projections are pairwise distinct as numbers; that is what we verify.
template <typename Scalar>
ConfigurationT<Scalar> flatten_on_distinct_projections(
    const ProblemSpecT<Scalar>& spec, const ConfigurationT<Scalar>& config,
    Scalar t) {
  check_unit_interval(t, "flatten");
  std::vector<Scalar> proj;
  proj.reserve(spec.point_count());
  for (int j = 0; j < spec.r; ++j) proj.push_back(project(spec.obstacles.col(j)));
  for (int i = 0; i < spec.k; ++i) proj.push_back(project(config.robot(i)));
  std::sort(proj.begin(), proj.end());
  for (std::size_t i = 1; i < proj.size(); ++i)
    if (proj[i] == proj[i - 1])
      throw PreconditionError(
          "flatten: two of the k+r projections coincide exactly");

  ConfigurationT<Scalar> out = config;
  if (spec.d > 1)
    out.points.bottomRows(spec.d - 1) *= (Scalar(1) - t);
  return out;
}

}  // namespace detail

/// Straight-line deformation of each robot onto its first-axis projection.
/// Defined only on the top stratum cp = k+r, where distinct projections
/// keep all k+r points apart for every t.  Obstacles already sit on the
/// axis and are fixed throughout.
template <typename Scalar>
ConfigurationT<Scalar> flatten(const ProblemSpecT<Scalar>& spec,
                               const ConfigurationT<Scalar>& config,
                               Scalar t) {
  const auto info = stratum(spec, config);
  if (info.cp != spec.point_count())
    throw PreconditionError(
        "flatten is only collision-free on the top stratum; configuration "
        "has cp=" + std::to_string(info.cp) + " < k+r=" +
        std::to_string(spec.point_count()));
  return detail::flatten_on_distinct_projections(spec, config, t);
}

/// Shifts robot with global index j along e_1 by t*(j-1)*epsilon(C).  The
/// shifts are too small to cross any distinct-projection gap and too uneven
/// to preserve any coincidence, so at t=1 all k+r projections are distinct.
/// Configurations already in the top stratum are returned unchanged.
///
/// `info` must be the stratum of `config`; epsilon stays pinned to its t=0
/// value along the whole deformation.
template <typename Scalar>
ConfigurationT<Scalar> desingularize(const ProblemSpecT<Scalar>& spec,
                                     const ConfigurationT<Scalar>& config,
                                     const StratumInfoT<Scalar>& info,
                                     Scalar t) {
  detail::check_unit_interval(t, "desingularize");
  if (info.cp == spec.point_count()) return config;
  ConfigurationT<Scalar> out = config;
  for (int i = 0; i < spec.k; ++i) {
    const int global_index = spec.r + i + 1;
    out.points(0, i) += t * Scalar(global_index - 1) * info.epsilon;
  }
  return out;
}

/// An exactly evaluable homotopy (C, t) -> C' with identity at t=0.
template <typename Scalar>
struct HomotopyT {
  using Config = ConfigurationT<Scalar>;

  std::function<Config(const Config&, Scalar)> map;
  std::string domain;
  std::vector<std::string> stages;

  Config operator()(const Config& config, Scalar t) const {
    return map(config, t);
  }
};

template <typename Scalar>
HomotopyT<Scalar> desingularization_homotopy(const ProblemSpecT<Scalar>& spec) {
  HomotopyT<Scalar> h;
  h.map = [spec](const ConfigurationT<Scalar>& c, Scalar t) {
    return desingularize(spec, c, stratum(spec, c), t);
  };
  h.domain = "valid configurations";
  h.stages = {"desingularize"};
  return h;
}

template <typename Scalar>
HomotopyT<Scalar> flattening_homotopy(const ProblemSpecT<Scalar>& spec) {
  HomotopyT<Scalar> h;
  h.map = [spec](const ConfigurationT<Scalar>& c, Scalar t) {
    return flatten(spec, c, t);
  };
  h.domain = "top-stratum configurations (cp = k+r)";
  h.stages = {"flatten"};
  return h;
}

/// Plays `first` on [0, 1/2] and `second` on [1/2, 1], each at double
/// speed; `second` starts from first's end state, so the endpoints match
/// exactly and t=0 remains the identity.
template <typename Scalar>
HomotopyT<Scalar> concat_homotopy(HomotopyT<Scalar> first,
                                  HomotopyT<Scalar> second) {
  HomotopyT<Scalar> h;
  h.domain = first.domain;
  h.stages = first.stages;
  h.stages.insert(h.stages.end(), second.stages.begin(), second.stages.end());
  h.map = [a = std::move(first), b = std::move(second)](
              const ConfigurationT<Scalar>& c, Scalar t) {
    detail::check_unit_interval(t, "concat_homotopy");
    if (t <= Scalar(0.5)) return a(c, Scalar(2) * t);
    return b(a(c, Scalar(1)), Scalar(2) * t - Scalar(1));
  };
  return h;
}

/// The deformation the planner attaches to one waypoint: desingularize with
/// the waypoint's own (pre-computed) stratum, then flatten onto the axis.
/// The flattening leg only demands exact pairwise-distinct projections,
/// which the desingularization endpoint guarantees, so the combined map is
/// total on the stratum even when projection gaps sit near tol_proj.
template <typename Scalar>
HomotopyT<Scalar> waypoint_homotopy(const ProblemSpecT<Scalar>& spec,
                                    const StratumInfoT<Scalar>& info) {
  HomotopyT<Scalar> h;
  h.map = [spec, info](const ConfigurationT<Scalar>& c, Scalar t) {
    detail::check_unit_interval(t, "waypoint_homotopy");
    if (t <= Scalar(0.5)) return desingularize(spec, c, info, Scalar(2) * t);
    return detail::flatten_on_distinct_projections(
        spec, desingularize(spec, c, info, Scalar(1)),
        Scalar(2) * t - Scalar(1));
  };
  h.domain = "stratum with cp = " + std::to_string(info.cp);
  h.stages = {"desingularize", "flatten"};
  return h;
}

using Homotopy = HomotopyT<double>;

}  // namespace seqplan

#endif  // SEQPLAN_HOMOTOPY_HPP
