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

#include "seqplan/problem_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace seqplan {

using nlohmann::json;

std::string format_number(double value) {
  char buffer[32];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

double require_number(const json& doc, const char* key) {
  if (!doc.contains(key))
    throw ParseError(std::string("problem file is missing key '") + key + "'");
  if (!doc[key].is_number())
    throw ParseError(std::string("key '") + key + "' must be a number");
  return doc[key].get<double>();
}

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key))
    throw ParseError(std::string("problem file is missing key '") + key + "'");
  if (!doc[key].is_number_integer())
    throw ParseError(std::string("key '") + key + "' must be an integer");
  return doc[key].get<int>();
}

}  // namespace

PlanRequest parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("problem file is not valid JSON: ") +
                     e.what());
  }
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");

  const int d = require_int(doc, "d");
  const int k = require_int(doc, "k");
  const int r = require_int(doc, "r");
  const int n = require_int(doc, "n");
  const double tol_proj =
      doc.contains("tol_proj") ? require_number(doc, "tol_proj") : 1e-9;
  const double tol_valid =
      doc.contains("tol_valid") ? require_number(doc, "tol_valid") : 1e-9;

  PlanRequest request;
  request.spec = ProblemSpec::canonical(d, k, r, n, tol_proj, tol_valid);

  if (!doc.contains("waypoints") || !doc["waypoints"].is_array())
    throw ParseError("problem file needs a 'waypoints' array");
  const json& waypoints = doc["waypoints"];
  if (int(waypoints.size()) != n)
    throw ParseError("'waypoints' must list exactly n=" + std::to_string(n) +
                     " configurations, found " +
                     std::to_string(waypoints.size()));
  for (int m = 0; m < n; ++m) {
    const json& entry = waypoints[m];
    if (!entry.is_array() || int(entry.size()) != k)
      throw ParseError("waypoint " + std::to_string(m + 1) + " must list k=" +
                       std::to_string(k) + " points");
    Configuration config;
    config.points = MatrixX<double>::Zero(d, k);
    for (int i = 0; i < k; ++i) {
      const json& point = entry[i];
      if (!point.is_array() || int(point.size()) != d)
        throw ParseError("waypoint " + std::to_string(m + 1) + ", robot " +
                         std::to_string(i + 1) + " must have d=" +
                         std::to_string(d) + " coordinates");
      for (int c = 0; c < d; ++c) {
        if (!point[c].is_number())
          throw ParseError("waypoint " + std::to_string(m + 1) + ", robot " +
                           std::to_string(i + 1) +
                           " has a non-numeric coordinate");
        config.points(c, i) = point[c].get<double>();
      }
    }
    request.waypoints.push_back(std::move(config));
  }
  return request;
}

PlanRequest load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

namespace {

json configuration_to_json(const Configuration& config) {
  json points = json::array();
  for (Index i = 0; i < config.count(); ++i) {
    json coords = json::array();
    for (Index c = 0; c < config.dim(); ++c) coords.push_back(config.points(c, i));
    points.push_back(std::move(coords));
  }
  return points;
}

}  // namespace

json report_to_json(const PlanRequest& request, const PlanReport& report,
                    int sample_count) {
  const ProblemSpec& spec = request.spec;
  json doc;
  doc["d"] = spec.d;
  doc["k"] = spec.k;
  doc["r"] = spec.r;
  doc["n"] = spec.n;
  doc["strata"] = report.strata;
  doc["region"] = report.region;
  doc["breakpoints"] = report.path.breakpoints();

  json samples = json::array();
  for (const auto& [tau, config] : sample_path(report.path, sample_count)) {
    json entry;
    entry["tau"] = tau;
    entry["points"] = configuration_to_json(config);
    samples.push_back(std::move(entry));
  }
  doc["samples"] = std::move(samples);

  json validation;
  validation["samples"] = report.validation.samples;
  // Non-finite values (a single robot has no robot-robot distance)
  // serialize as null.
  validation["min_robot_robot"] = report.validation.min_robot_robot;
  validation["min_robot_obstacle"] = report.validation.min_robot_obstacle;
  validation["max_waypoint_deviation"] =
      report.validation.max_waypoint_deviation;
  validation["pass"] = report.validation.pass;
  doc["validation"] = std::move(validation);
  return doc;
}

std::string report_to_csv(const PlanRequest& request, const PlanReport& report,
                          int sample_count) {
  std::string out = "tau,robot";
  for (int c = 1; c <= request.spec.d; ++c)
    out += ",x" + std::to_string(c);
  out += "\n";
  for (const auto& [tau, config] : sample_path(report.path, sample_count)) {
    for (Index i = 0; i < config.count(); ++i) {
      out += format_number(tau);
      out += ',';
      out += std::to_string(i + 1);
      for (Index c = 0; c < config.dim(); ++c) {
        out += ',';
        out += format_number(config.points(c, i));
      }
      out += '\n';
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing output file '" + path + "'");
}

}  // namespace seqplan
