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

#ifndef SEQPLAN_PROBLEM_IO_HPP
#define SEQPLAN_PROBLEM_IO_HPP

#include <string>

#include <json.hpp>

#include "seqplan/planner.hpp"

namespace seqplan {

/// Shortest decimal string that reads back to exactly the same double.
std::string format_number(double value);

/// Parses a problem document: keys d, k, r, n, optional tol_proj/tol_valid,
/// and waypoints as an n x k x d numeric array.
PlanRequest parse_problem(const std::string& text);
PlanRequest load_problem(const std::string& path);

/// Full report: strata, region, breakpoints, sampled trajectory, and
/// validation statistics.  All numbers round-trip exactly.
nlohmann::json report_to_json(const PlanRequest& request,
                              const PlanReport& report, int sample_count);

/// Flat trajectory table with header "tau,robot,x1,...,xd".
std::string report_to_csv(const PlanRequest& request, const PlanReport& report,
                          int sample_count);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace seqplan

#endif  // SEQPLAN_PROBLEM_IO_HPP
