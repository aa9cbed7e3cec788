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

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "seqplan/probes.hpp"
#include "seqplan/problem_io.hpp"
#include "seqplan/svg.hpp"

namespace {

// Exit codes: 0 ok, 1 parse/spec error, 2 invalid waypoints, 3 unsupported
// regime (r < 2), 4 validation/probe failure, 5 missing SVG projection.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalidWaypoints = 2;
constexpr int kExitUnsupportedRegime = 3;
constexpr int kExitValidationFailure = 4;
constexpr int kExitProjectionNeeded = 5;

template <typename Fn>
int run_guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const seqplan::UnsupportedRegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupportedRegime;
  } catch (const seqplan::InvalidConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidWaypoints;
  } catch (const seqplan::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const seqplan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty())
    std::cout << content;
  else
    seqplan::write_text_file(output_path, content);
}

std::string strata_to_string(const std::vector<int>& strata) {
  std::string out = "(";
  for (std::size_t i = 0; i < strata.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(strata[i]);
  }
  return out + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential collision-free motion planner for point robots "
               "among collinear point obstacles"};
  app.require_subcommand(1);

  // --- plan ---
  std::string plan_input, plan_output, plan_format = "json";
  int plan_samples = 10000;
  auto* cmd_plan = app.add_subcommand(
      "plan", "Plan a trajectory through the waypoints of a problem file");
  cmd_plan->add_option("input", plan_input, "problem file (JSON)")->required();
  cmd_plan->add_option("--samples", plan_samples,
                       "trajectory samples in the report and the validator");
  cmd_plan->add_option("--output,-o", plan_output,
                       "output path (default: stdout)");
  cmd_plan->add_option("--format", plan_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));

  // --- svg ---
  std::string svg_input, svg_output, svg_project;
  int svg_samples = 256, svg_width = 900, svg_height = 600;
  auto* cmd_svg = app.add_subcommand(
      "svg", "Render the planned trajectories as an SVG drawing");
  cmd_svg->add_option("input", svg_input, "problem file (JSON)")->required();
  cmd_svg->add_option("--samples", svg_samples, "polyline samples per robot");
  cmd_svg->add_option("--width", svg_width, "image width in px");
  cmd_svg->add_option("--height", svg_height, "image height in px");
  cmd_svg->add_option("--project", svg_project,
                      "two 1-based coordinates to draw, e.g. 1,3 "
                      "(required when d > 2)");
  cmd_svg->add_option("--output,-o", svg_output,
                      "output path (default: stdout)");

  // --- regions ---
  int reg_d = 2, reg_k = 2, reg_r = 2, reg_n = 2, reg_trials = 0;
  std::uint64_t reg_seed = 1;
  auto* cmd_regions = app.add_subcommand(
      "regions",
      "Exhibit one request per continuity region and count the regions");
  cmd_regions->add_option("--d", reg_d, "spatial dimension")->required();
  cmd_regions->add_option("--k", reg_k, "robot count")->required();
  cmd_regions->add_option("--r", reg_r, "obstacle count")->required();
  cmd_regions->add_option("--n", reg_n, "waypoint count")->required();
  cmd_regions->add_option("--seed", reg_seed, "generator seed");
  cmd_regions->add_option("--trials", reg_trials,
                          "additional random requests to classify");

  // --- probe ---
  std::string probe_name;
  int probe_d = 2, probe_k = 2, probe_r = 2, probe_n = 2;
  int probe_trials = -1, probe_t_samples = 64;
  double probe_delta = 1e-6;
  std::uint64_t probe_seed = 1;
  std::vector<int> probe_strata;
  std::optional<double> probe_limit;
  auto* cmd_probe = app.add_subcommand(
      "probe", "Run one of the statistical guarantees checks");
  cmd_probe
      ->add_option("name", probe_name,
                   "continuity | semicontinuity | deformation-safety")
      ->required()
      ->check(CLI::IsMember({"continuity", "semicontinuity",
                             "deformation-safety"}));
  cmd_probe->add_option("--d", probe_d, "spatial dimension");
  cmd_probe->add_option("--k", probe_k, "robot count");
  cmd_probe->add_option("--r", probe_r, "obstacle count");
  cmd_probe->add_option("--n", probe_n, "waypoint count");
  cmd_probe->add_option("--trials", probe_trials, "trial count");
  cmd_probe->add_option("--seed", probe_seed, "generator seed");
  cmd_probe->add_option("--delta", probe_delta,
                        "perturbation size (continuity probe)");
  cmd_probe->add_option("--t-samples", probe_t_samples,
                        "t-grid size (deformation-safety probe)");
  cmd_probe->add_option("--strata", probe_strata,
                        "strata tuple for the continuity probe, e.g. 3 4 "
                        "(default: all tuples)")
      ->delimiter(',');
  double probe_limit_value = 0;
  auto* limit_opt = cmd_probe->add_option(
      "--limit", probe_limit_value,
      "fail (exit 4) when the continuity result exceeds this bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }
  if (limit_opt->count() > 0) probe_limit = probe_limit_value;

  if (cmd_plan->parsed()) {
    return run_guarded([&] {
      const auto request = seqplan::load_problem(plan_input);
      const auto report = seqplan::plan(request, plan_samples);
      if (plan_format == "json")
        emit(seqplan::report_to_json(request, report, plan_samples).dump(2) +
                 "\n",
             plan_output);
      else
        emit(seqplan::report_to_csv(request, report, plan_samples),
             plan_output);
      std::cerr << "strata " << strata_to_string(report.strata) << ", region "
                << report.region << ", validation "
                << (report.validation.pass ? "pass" : "FAIL") << "\n";
      return report.validation.pass ? kExitOk : kExitValidationFailure;
    });
  }

  if (cmd_svg->parsed()) {
    return run_guarded([&] {
      const auto request = seqplan::load_problem(svg_input);
      seqplan::SvgOptions options;
      options.samples = svg_samples;
      options.width = svg_width;
      options.height = svg_height;
      if (!svg_project.empty()) {
        int a = 0, b = 0;
        if (std::sscanf(svg_project.c_str(), "%d,%d", &a, &b) != 2 ||
            a < 1 || b < 1 || a > request.spec.d || b > request.spec.d ||
            a == b) {
          std::cerr << "error: --project needs two distinct 1-based "
                       "coordinates within d\n";
          return kExitParse;
        }
        options.axis_x = a - 1;
        options.axis_y = b - 1;
      } else if (request.spec.d > 2) {
        std::cerr << "error: d=" << request.spec.d
                  << " needs --project to choose two coordinates\n";
        return kExitProjectionNeeded;
      }
      const auto report = seqplan::plan(request, std::max(svg_samples, 2));
      emit(seqplan::render_svg(request, report, options), svg_output);
      return kExitOk;
    });
  }

  if (cmd_regions->parsed()) {
    return run_guarded([&] {
      const auto spec =
          seqplan::ProblemSpec::canonical(reg_d, reg_k, reg_r, reg_n);
      const auto census = seqplan::region_census(spec, reg_seed);
      for (const auto& entry : census.entries)
        std::cout << "region " << entry.target_region << ": strata "
                  << strata_to_string(entry.strata) << " -> achieved "
                  << entry.achieved_region
                  << (entry.validation_pass ? "" : " (validation FAILED)")
                  << "\n";
      std::cout << "distinct regions:";
      for (int region : census.distinct_regions) std::cout << " " << region;
      std::cout << "\ncount " << census.distinct_regions.size()
                << " (expected " << census.expected_count << ")\n";

      bool extras_ok = true;
      if (reg_trials > 0) {
        std::mt19937_64 rng(reg_seed + 1);
        int in_range = 0;
        for (int t = 0; t < reg_trials; ++t) {
          const auto request = seqplan::random_request(spec, rng);
          const auto report = seqplan::plan(request, 64);
          if (report.region >= spec.n * spec.r &&
              report.region <= spec.n * spec.point_count())
            ++in_range;
          else
            extras_ok = false;
        }
        std::cout << "random trials in range: " << in_range << "/"
                  << reg_trials << "\n";
      }
      return census.complete && extras_ok ? kExitOk : kExitValidationFailure;
    });
  }

  if (cmd_probe->parsed()) {
    return run_guarded([&] {
      const auto spec =
          seqplan::ProblemSpec::canonical(probe_d, probe_k, probe_r, probe_n);
      if (probe_name == "continuity") {
        const int trials = probe_trials < 0 ? 200 : probe_trials;
        double worst = 0;
        if (!probe_strata.empty()) {
          worst = seqplan::continuity_probe(spec, probe_strata, probe_delta,
                                            trials, probe_seed);
        } else {
          // Sweep every strata tuple.
          std::vector<int> strata(spec.n, spec.r);
          bool done = false;
          std::uint64_t tuple_seed = probe_seed;
          while (!done) {
            worst = std::max(
                worst, seqplan::continuity_probe(spec, strata, probe_delta,
                                                 trials, tuple_seed++));
            int pos = spec.n - 1;
            while (pos >= 0 && strata[pos] == spec.point_count())
              strata[pos--] = spec.r;
            if (pos < 0)
              done = true;
            else
              ++strata[pos];
          }
        }
        std::cout << "max sup-distance over trials: "
                  << seqplan::format_number(worst) << "\n";
        if (probe_limit && worst > *probe_limit) return kExitValidationFailure;
        return kExitOk;
      }
      if (probe_name == "semicontinuity") {
        const int trials = probe_trials < 0 ? 10000 : probe_trials;
        const int violations =
            seqplan::semicontinuity_probe(spec, trials, probe_seed);
        std::cout << "violations: " << violations << " in " << trials
                  << " trials\n";
        return violations == 0 ? kExitOk : kExitValidationFailure;
      }
      const int trials = probe_trials < 0 ? 200 : probe_trials;
      const double clearance = seqplan::deformation_safety_probe(
          spec, trials, probe_t_samples, probe_seed);
      std::cout << "min clearance: " << seqplan::format_number(clearance)
                << "\n";
      return clearance > 0 ? kExitOk : kExitValidationFailure;
    });
  }

  return kExitParse;
}
