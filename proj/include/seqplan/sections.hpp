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

#ifndef SEQPLAN_SECTIONS_HPP
#define SEQPLAN_SECTIONS_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <vector>

#include "seqplan/homotopy.hpp"
#include "seqplan/piecewise_path.hpp"
#include "seqplan/types.hpp"

namespace seqplan {

namespace detail {

template <typename Scalar>
void check_ladder_input(const ProblemSpecT<Scalar>& spec,
                        const ConfigurationT<Scalar>& config,
                        const char* which) {
  const auto verdict = validate_configuration(spec, config);
  if (!verdict)
    throw PreconditionError(std::string("ladder: ") + which +
                            " configuration is invalid: " + verdict.describe());
  if (!is_on_axis(config))
    throw PreconditionError(std::string("ladder: ") + which +
                            " configuration has nonzero coordinates off the "
                            "first axis");
}

/// Heights used while traversing: robot i (0-based) travels at height
/// r+i+1, its global index, which separates it from every other robot and
/// from the obstacles sitting at height 0.
template <typename Scalar>
VectorX<Scalar> ladder_heights(const ProblemSpecT<Scalar>& spec) {
  VectorX<Scalar> h(spec.k);
  for (int i = 0; i < spec.k; ++i) h(i) = Scalar(spec.r + i + 1);
  return h;
}

}  // namespace detail

/// One rung of the ladder motion between on-axis configurations: during
/// [0,1/3] every robot rises vertically to its own integer height, during
/// [1/3,2/3] it translates to the target abscissa at that height, and
/// during [2/3,1] it descends onto the axis.
template <typename Scalar>
ConfigurationT<Scalar> ladder(const ProblemSpecT<Scalar>& spec,
                              const ConfigurationT<Scalar>& from,
                              const ConfigurationT<Scalar>& to, Scalar t) {
  detail::check_unit_interval(t, "ladder");
  detail::check_ladder_input(spec, from, "start");
  detail::check_ladder_input(spec, to, "end");
  const VectorX<Scalar> heights = detail::ladder_heights(spec);
  ConfigurationT<Scalar> out;
  if (t < Scalar(1) / Scalar(3)) {
    out = from;
    out.points.row(1) = (Scalar(3) * t) * heights.transpose();
  } else if (t < Scalar(2) / Scalar(3)) {
    const Scalar u = Scalar(3) * t - Scalar(1);
    out.points = MatrixX<Scalar>::Zero(spec.d, spec.k);
    out.points.row(0) =
        from.points.row(0) + u * (to.points.row(0) - from.points.row(0));
    out.points.row(1) = heights.transpose();
  } else {
    out = to;
    out.points.row(1) = (Scalar(3) - Scalar(3) * t) * heights.transpose();
  }
  return out;
}

/// The same motion as a three-segment path with explicit breakpoints.
template <typename Scalar>
PiecewisePathT<Scalar> ladder_path(const ProblemSpecT<Scalar>& spec,
                                   const ConfigurationT<Scalar>& from,
                                   const ConfigurationT<Scalar>& to) {
  detail::check_ladder_input(spec, from, "start");
  detail::check_ladder_input(spec, to, "end");
  const VectorX<Scalar> heights = detail::ladder_heights(spec);
  const Scalar third = Scalar(1) / Scalar(3);
  const Scalar two_thirds = Scalar(2) / Scalar(3);
  using Segment = typename PiecewisePathT<Scalar>::Segment;
  std::vector<Segment> segments;
  segments.push_back(
      {Scalar(0), third,
       [from, heights](Scalar u) {
         ConfigurationT<Scalar> c = from;
         c.points.row(1) = u * heights.transpose();
         return c;
       },
       "lift"});
  segments.push_back(
      {third, two_thirds,
       [from, to, heights, d = spec.d, k = spec.k](Scalar u) {
         ConfigurationT<Scalar> c;
         c.points = MatrixX<Scalar>::Zero(d, k);
         c.points.row(0) =
             from.points.row(0) + u * (to.points.row(0) - from.points.row(0));
         c.points.row(1) = heights.transpose();
         return c;
       },
       "translate"});
  segments.push_back(
      {two_thirds, Scalar(1),
       [to, heights](Scalar u) {
         ConfigurationT<Scalar> c = to;
         c.points.row(1) = (Scalar(1) - u) * heights.transpose();
         return c;
       },
       "descend"});
  return PiecewisePathT<Scalar>::from_segments(std::move(segments));
}

/// Concatenated ladder motion through n >= 2 on-axis waypoints; waypoint
/// m+1 is reproduced exactly at parameter m/(n-1).
template <typename Scalar>
PiecewisePathT<Scalar> ladder_section(
    const ProblemSpecT<Scalar>& spec,
    const std::vector<ConfigurationT<Scalar>>& waypoints) {
  if (waypoints.size() < 2)
    throw PreconditionError("ladder_section needs at least two waypoints");
  std::vector<PiecewisePathT<Scalar>> legs;
  legs.reserve(waypoints.size() - 1);
  for (std::size_t m = 0; m + 1 < waypoints.size(); ++m)
    legs.push_back(ladder_path(spec, waypoints[m], waypoints[m + 1]));
  return concat_paths(legs);
}

template <typename Scalar>
using InnerSection = std::function<PiecewisePathT<Scalar>(
    const std::vector<ConfigurationT<Scalar>>&)>;

/// Combines an n-factor deformation with a section defined on the deformed
/// tuples.  For each leg m the schedule splits into thirds: deform waypoint
/// m forward, traverse the inner path over its own leg-m window at triple
/// speed, then play waypoint m+1's deformation backwards.  Waypoint m is
/// reproduced exactly at parameter (m-1)/(n-1) because every factor is the
/// identity at time 0.
template <typename Scalar>
PiecewisePathT<Scalar> glue_path(
    const std::vector<HomotopyT<Scalar>>& factors,
    const InnerSection<Scalar>& inner_section,
    const std::vector<ConfigurationT<Scalar>>& tuple) {
  const std::size_t n = tuple.size();
  if (n < 2) throw PreconditionError("glue needs at least two waypoints");
  if (factors.size() != n)
    throw PreconditionError("glue needs one homotopy factor per waypoint");

  std::vector<ConfigurationT<Scalar>> deformed;
  deformed.reserve(n);
  for (std::size_t m = 0; m < n; ++m)
    deformed.push_back(factors[m](tuple[m], Scalar(1)));
  const auto inner =
      std::make_shared<const PiecewisePathT<Scalar>>(inner_section(deformed));

  const Scalar legs = Scalar(n - 1);
  const Scalar den = Scalar(3) * legs;
  using Segment = typename PiecewisePathT<Scalar>::Segment;
  std::vector<Segment> segments;
  for (std::size_t m = 0; m + 1 < n; ++m) {
    const Scalar a0 = Scalar(3 * m) / den;
    const Scalar a1 = Scalar(3 * m + 1) / den;
    const Scalar a2 = Scalar(3 * m + 2) / den;
    const Scalar a3 = Scalar(3 * m + 3) / den;
    segments.push_back({a0, a1,
                        [h = factors[m], c = tuple[m]](Scalar u) {
                          return h(c, u);
                        },
                        "deform"});
    // Traverse the inner path over [m/(n-1), (m+1)/(n-1)] at triple speed,
    // splitting at the inner breakpoints so the merged schedule still lists
    // every analytic corner.
    const Scalar lo = Scalar(m) / legs;
    const Scalar hi = Scalar(m + 1) / legs;
    std::vector<Scalar> cuts{lo};
    for (Scalar b : inner->breakpoints())
      if (b > lo && b < hi) cuts.push_back(b);
    cuts.push_back(hi);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const Scalar ia = cuts[c];
      const Scalar ib = cuts[c + 1];
      const Scalar ga = c == 0 ? a1 : a1 + (ia - lo) / (hi - lo) * (a2 - a1);
      const Scalar gb =
          c + 2 == cuts.size() ? a2 : a1 + (ib - lo) / (hi - lo) * (a2 - a1);
      segments.push_back({ga, gb,
                          [inner, ia, ib](Scalar u) {
                            // rounding must not push the parameter past ib
                            return inner->at(std::min(ia + u * (ib - ia), ib));
                          },
                          "traverse"});
    }
    segments.push_back({a2, a3,
                        [h = factors[m + 1], c = tuple[m + 1]](Scalar u) {
                          return h(c, Scalar(1) - u);
                        },
                        "deform-reverse"});
  }
  return PiecewisePathT<Scalar>::from_segments(std::move(segments));
}

/// Point evaluation of the glued section.
template <typename Scalar>
ConfigurationT<Scalar> glue(const std::vector<HomotopyT<Scalar>>& factors,
                            const InnerSection<Scalar>& inner_section,
                            const std::vector<ConfigurationT<Scalar>>& tuple,
                            Scalar tau) {
  return glue_path(factors, inner_section, tuple).at(tau);
}

using InnerSectionD = InnerSection<double>;

}  // namespace seqplan

#endif  // SEQPLAN_SECTIONS_HPP
