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

#ifndef SEQPLAN_SVG_HPP
#define SEQPLAN_SVG_HPP

#include <string>

#include "seqplan/planner.hpp"

namespace seqplan {

struct SvgOptions {
  int samples = 256;
  int width = 900;
  int height = 600;
  int axis_x = 0;  // coordinate drawn horizontally (0-based)
  int axis_y = 1;  // coordinate drawn vertically (0-based)
};

/// Renders the planned trajectories: one colored polyline per robot,
/// obstacle markers on the first axis, and waypoint markers.  Output is a
/// deterministic function of the request, the report and the options.
std::string render_svg(const PlanRequest& request, const PlanReport& report,
                       const SvgOptions& options = {});

}  // namespace seqplan

#endif  // SEQPLAN_SVG_HPP
