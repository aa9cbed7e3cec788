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

#include <doctest.h>

#include <cstdlib>
#include <random>

#include "seqplan/problem_io.hpp"
#include "seqplan/svg.hpp"

using namespace seqplan;

namespace {

const char* kWorkedProblem = R"({
  "d": 2, "k": 2, "r": 2, "n": 2,
  "waypoints": [
    [[0.5, 2.0], [0.5, -1.0]],
    [[0.25, 1.0], [0.25, 3.0]]
  ]
})";

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("format_number round-trips doubles exactly") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int trial = 0; trial < 2000; ++trial) {
    const double value = std::ldexp(unit(rng), exponent(rng));
    const std::string text = format_number(value);
    CHECK(std::strtod(text.c_str(), nullptr) == value);
  }
  CHECK(format_number(0.0) == "0");
  CHECK(std::strtod(format_number(1.0 / 3.0).c_str(), nullptr) == 1.0 / 3.0);
}

TEST_CASE("parse_problem reads the worked example") {
  const auto request = parse_problem(kWorkedProblem);
  CHECK(request.spec.d == 2);
  CHECK(request.spec.k == 2);
  CHECK(request.spec.r == 2);
  CHECK(request.spec.n == 2);
  CHECK(request.spec.tol_proj == 1e-9);
  REQUIRE(request.waypoints.size() == 2);
  CHECK(request.waypoints[0].points(0, 0) == 0.5);
  CHECK(request.waypoints[0].points(1, 1) == -1.0);
  CHECK(request.waypoints[1].points(1, 1) == 3.0);
}

TEST_CASE("parse_problem reports located errors") {
  CHECK_THROWS_AS(parse_problem("not json"), ParseError);
  CHECK_THROWS_AS(parse_problem("[1,2,3]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_problem(R"({"d":2,"k":2,"r":2})"),
                       doctest::Contains("'n'"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_problem(R"({"d":2,"k":2,"r":2,"n":2})"),
      doctest::Contains("waypoints"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_problem(
          R"({"d":2,"k":2,"r":2,"n":2,"waypoints":[[[0.5,2],[0.5,-1]]]})"),
      doctest::Contains("exactly n=2"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_problem(
          R"({"d":2,"k":2,"r":2,"n":2,
              "waypoints":[[[0.5,2],[0.5,-1]],[[0.25],[0.25,3]]]})"),
      doctest::Contains("robot 1"), ParseError);
  // r < 2 surfaces as the regime error, not a parse error
  CHECK_THROWS_AS(
      parse_problem(R"({"d":2,"k":1,"r":1,"n":2,
                        "waypoints":[[[0.5,2]],[[0.25,1]]]})"),
      UnsupportedRegimeError);
}

TEST_CASE("report JSON re-samples to the in-memory path exactly") {
  const auto request = parse_problem(kWorkedProblem);
  const auto report = plan(request, 128);
  const auto doc = report_to_json(request, report, 128);

  CHECK(doc["region"] == 6);
  CHECK(doc["strata"] == std::vector<int>{3, 3});
  CHECK(doc["validation"]["pass"] == true);

  const auto& bps = report.path.breakpoints();
  REQUIRE(doc["breakpoints"].size() == bps.size());
  for (std::size_t i = 0; i < bps.size(); ++i)
    CHECK(doc["breakpoints"][i].get<double>() == bps[i]);

  // serialize, parse back, and re-evaluate at the recorded taus
  const auto round = nlohmann::json::parse(doc.dump());
  for (const auto& sample : round["samples"]) {
    const double tau = sample["tau"].get<double>();
    const auto config = report.path.at(tau);
    for (Index i = 0; i < config.count(); ++i)
      for (Index c = 0; c < config.dim(); ++c)
        CHECK(sample["points"][i][c].get<double>() == config.points(c, i));
  }
}

TEST_CASE("CSV export uses the documented header and full precision") {
  const auto request = parse_problem(kWorkedProblem);
  const auto report = plan(request, 32);
  const auto csv = report_to_csv(request, report, 32);

  CHECK(csv.rfind("tau,robot,x1,x2\n", 0) == 0);
  const auto samples = sample_path(report.path, 32);
  CHECK(count_occurrences(csv, "\n") == samples.size() * 2 + 1);

  // every row re-parses to the in-memory evaluation, bit for bit
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  std::size_t row_index = 0;
  while (std::getline(lines, row)) {
    double tau, x, y;
    int robot;
    REQUIRE(std::sscanf(row.c_str(), "%lf,%d,%lf,%lf", &tau, &robot, &x,
                        &y) == 4);
    const auto config = report.path.at(tau);
    CHECK(x == config.points(0, robot - 1));
    CHECK(y == config.points(1, robot - 1));
    ++row_index;
  }
  CHECK(row_index == samples.size() * 2);
}

TEST_CASE("svg output shows one trajectory per robot and every obstacle") {
  const auto request = parse_problem(kWorkedProblem);
  const auto report = plan(request, 64);
  const auto svg = render_svg(request, report);

  CHECK(count_occurrences(svg, "class=\"trajectory\"") == 2);
  CHECK(count_occurrences(svg, "class=\"obstacle\"") == 2);
  CHECK(count_occurrences(svg, "class=\"waypoint\"") == 4);
  CHECK(svg.rfind("<svg", 0) == 0);

  // deterministic for fixed input and options
  CHECK(render_svg(request, report) == svg);
}

TEST_CASE("svg of a stationary request still draws the ladder motion") {
  PlanRequest request = parse_problem(kWorkedProblem);
  request.waypoints[1] = request.waypoints[0];
  const auto report = plan(request, 64);
  const auto svg = render_svg(request, report);

  // each polyline covers the lift through distinct points, not a single dot
  const auto first = svg.find("class=\"trajectory\"");
  REQUIRE(first != std::string::npos);
  const auto points_start = svg.find("points=\"", first);
  const auto points_end = svg.find('"', points_start + 8);
  const std::string points =
      svg.substr(points_start + 8, points_end - points_start - 8);
  CHECK(count_occurrences(points, " ") > 8);
  CHECK(points.find(' ') != std::string::npos);
}

TEST_CASE("svg projection axes must be valid") {
  const auto request = parse_problem(kWorkedProblem);
  const auto report = plan(request, 16);
  SvgOptions options;
  options.axis_x = 0;
  options.axis_y = 0;
  CHECK_THROWS_AS(render_svg(request, report, options), PreconditionError);
  options.axis_y = 5;
  CHECK_THROWS_AS(render_svg(request, report, options), PreconditionError);
}
