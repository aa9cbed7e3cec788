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

#include "seqplan/svg.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "seqplan/problem_io.hpp"

namespace seqplan {

namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Frame {
  double min_x, max_x, min_y, max_y;
  double scale, pad, height;

  double sx(double x) const { return pad + (x - min_x) * scale; }
  double sy(double y) const { return height - pad - (y - min_y) * scale; }
};

}  // namespace

std::string render_svg(const PlanRequest& request, const PlanReport& report,
                       const SvgOptions& options) {
  const ProblemSpec& spec = request.spec;
  const int ax = options.axis_x;
  const int ay = options.axis_y;
  if (ax < 0 || ax >= spec.d || ay < 0 || ay >= spec.d || ax == ay)
    throw PreconditionError("svg projection axes must be two distinct "
                            "coordinates of the problem");

  const auto samples = sample_path(report.path, std::max(2, options.samples));

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  auto feed = [&](double x, double y) {
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  };
  for (const auto& [tau, config] : samples)
    for (Index i = 0; i < config.count(); ++i)
      feed(config.points(ax, i), config.points(ay, i));
  for (int j = 0; j < spec.r; ++j)
    feed(spec.obstacles(ax, j), spec.obstacles(ay, j));

  const double pad = 24.0;
  const double span_x = std::max(max_x - min_x, 1e-9);
  const double span_y = std::max(max_y - min_y, 1e-9);
  const double scale = std::min((options.width - 2 * pad) / span_x,
                                (options.height - 2 * pad) / span_y);
  const Frame frame{min_x, max_x, min_y, max_y,
                    scale, pad, double(options.height)};

  std::string svg;
  auto num = [](double v) { return format_number(v); };
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(options.width) + "\" height=\"" +
         std::to_string(options.height) + "\" viewBox=\"0 0 " +
         std::to_string(options.width) + " " + std::to_string(options.height) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // The first axis, carrying the obstacles, when it lies in view.
  if (ay != 0 && min_y <= 0.0 && 0.0 <= max_y) {
    svg += "<line class=\"axis\" x1=\"" + num(frame.sx(min_x)) + "\" y1=\"" +
           num(frame.sy(0.0)) + "\" x2=\"" + num(frame.sx(max_x)) +
           "\" y2=\"" + num(frame.sy(0.0)) +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }

  for (int i = 0; i < spec.k; ++i) {
    const char* color = kPalette[std::size_t(i) % kPalette.size()];
    std::string points;
    for (const auto& [tau, config] : samples) {
      if (!points.empty()) points += ' ';
      points += num(frame.sx(config.points(ax, i))) + "," +
                num(frame.sy(config.points(ay, i)));
    }
    svg += "<polyline class=\"trajectory\" fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
  }

  for (int j = 0; j < spec.r; ++j) {
    svg += "<circle class=\"obstacle\" cx=\"" +
           num(frame.sx(spec.obstacles(ax, j))) + "\" cy=\"" +
           num(frame.sy(spec.obstacles(ay, j))) +
           "\" r=\"4.5\" fill=\"#111111\"/>\n";
  }

  for (const auto& waypoint : request.waypoints) {
    for (Index i = 0; i < waypoint.count(); ++i) {
      const char* color = kPalette[std::size_t(i) % kPalette.size()];
      svg += "<circle class=\"waypoint\" cx=\"" +
             num(frame.sx(waypoint.points(ax, i))) + "\" cy=\"" +
             num(frame.sy(waypoint.points(ay, i))) +
             "\" r=\"3.5\" fill=\"white\" stroke=\"";
      svg += color;
      svg += "\" stroke-width=\"1.5\"/>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace seqplan
