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

#include "oracles.hpp"
#include "seqplan/homotopy.hpp"
#include "seqplan/random.hpp"

using namespace seqplan;

namespace {

Configuration two_robots(double x1, double y1, double x2, double y2) {
  Configuration c;
  c.points = MatrixX<double>::Zero(2, 2);
  c.points << x1, x2, y1, y2;
  return c;
}

Configuration one_robot(double x, double y) {
  Configuration c;
  c.points = MatrixX<double>::Zero(2, 1);
  c.points << x, y;
  return c;
}

}  // namespace

TEST_CASE("flatten moves robots affinely onto their projections") {
  const auto spec = ProblemSpec::canonical(2, 1, 2, 2);
  const auto c = one_robot(0.75, 2.0);

  CHECK(flatten(spec, c, 0.0) == c);
  const auto mid = flatten(spec, c, 0.5);
  CHECK(mid.points(0, 0) == 0.75);
  CHECK(mid.points(1, 0) == 1.0);
  const auto end = flatten(spec, c, 1.0);
  CHECK(end.points(0, 0) == 0.75);
  CHECK(end.points(1, 0) == 0.0);
  CHECK(is_on_axis(end));
}

TEST_CASE("flatten rejects configurations below the top stratum") {
  const auto spec = ProblemSpec::canonical(2, 2, 2, 2);
  // both robots share the projection 0.5 -> cp = 3 < 4
  CHECK_THROWS_AS(flatten(spec, two_robots(0.5, 2.0, 0.5, -1.0), 1.0),
                  PreconditionError);
  CHECK_THROWS_AS(flatten(spec, two_robots(0.5, 2.0, 0.75, 2.0), 1.5),
                  PreconditionError);  // t out of range
}

TEST_CASE("flatten keeps first coordinates fixed and never collides") {
  const auto spec = ProblemSpec::canonical(3, 3, 2, 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto config =
        random_configuration(spec, rng, spec.point_count());
    for (int s = 0; s <= 64; ++s) {
      const double t = double(s) / 64.0;
      const auto moved = flatten(spec, config, t);
      CHECK(moved.points.row(0) == config.points.row(0));
      CHECK(oracles::clearance(spec, moved) > 0.0);
    }
  }
}

TEST_CASE("desingularize shifts each robot by its global index minus one") {
  const auto spec = ProblemSpec::canonical(2, 2, 2, 2);
  const auto c = two_robots(0.5, 2.0, 0.5, -1.0);
  const auto info = stratum(spec, c);
  REQUIRE(info.epsilon == 0.125);

  CHECK(desingularize(spec, c, info, 0.0) == c);

  const auto end = desingularize(spec, c, info, 1.0);
  // global indices 3 and 4: shifts 2*eps = 0.25 and 3*eps = 0.375
  CHECK(end.points(0, 0) == 0.75);
  CHECK(end.points(1, 0) == 2.0);
  CHECK(end.points(0, 1) == 0.875);
  CHECK(end.points(1, 1) == -1.0);
  CHECK(stratum(spec, end).cp == 4);
}

TEST_CASE("desingularize is the identity on the top stratum") {
  const auto spec = ProblemSpec::canonical(2, 2, 2, 2);
  const auto c = two_robots(0.25, 1.0, 0.75, 1.0);
  const auto info = stratum(spec, c);
  REQUIRE(info.cp == 4);
  CHECK(desingularize(spec, c, info, 0.37) == c);
  CHECK(desingularize(spec, c, info, 1.0) == c);
}

TEST_CASE("desingularize lands in the top stratum without collisions") {
  for (const auto& [d, k, r] : {std::tuple{2, 2, 2}, {2, 3, 2}, {3, 2, 3}}) {
    const auto spec = ProblemSpec::canonical(d, k, r, 2);
    std::mt19937_64 rng(17);
    for (int target = spec.r; target <= spec.point_count(); ++target) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto config = random_configuration(spec, rng, target);
        const auto info = stratum(spec, config);
        for (int s = 0; s <= 32; ++s) {
          const double t = double(s) / 32.0;
          const auto moved = desingularize(spec, config, info, t);
          CHECK(oracles::clearance(spec, moved) > 0.0);
          // distinct projections keep their order
          if (s > 0) {
            const auto prev =
                desingularize(spec, config, info, double(s - 1) / 32.0);
            const auto now_values = oracles::projection_values(spec, moved);
            const auto prev_values = oracles::projection_values(spec, prev);
            for (std::size_t a = 0; a < now_values.size(); ++a)
              for (std::size_t b = 0; b < a; ++b)
                if (prev_values[a] != prev_values[b])
                  CHECK((now_values[a] < now_values[b]) ==
                        (prev_values[a] < prev_values[b]));
          }
        }
        CHECK(stratum(spec, desingularize(spec, config, info, 1.0)).cp ==
              spec.point_count());
      }
    }
  }
}

TEST_CASE("concat_homotopy plays both stages and stays continuous") {
  const auto spec = ProblemSpec::canonical(2, 2, 2, 2);
  const auto c = two_robots(0.5, 2.0, 0.5, -1.0);
  const auto combined = concat_homotopy(desingularization_homotopy(spec),
                                        flattening_homotopy(spec));

  CHECK(combined(c, 0.0) == c);

  const auto info = stratum(spec, c);
  const auto mid = combined(c, 0.5);
  CHECK(mid == desingularize(spec, c, info, 1.0));

  // exact agreement of the two branches at the schedule boundary
  const auto left = desingularize(spec, c, info, 1.0);
  CHECK(flatten(spec, left, 0.0) == left);

  const auto end = combined(c, 1.0);
  CHECK(is_on_axis(end));
  CHECK(stratum(spec, end).cp == 4);
  CHECK(end.points(0, 0) == 0.75);
  CHECK(end.points(0, 1) == 0.875);

  CHECK(combined.stages == std::vector<std::string>{"desingularize", "flatten"});
}

TEST_CASE("concat_homotopy surfaces domain mismatches at evaluation") {
  const auto spec = ProblemSpec::canonical(2, 2, 2, 2);
  const auto shared = two_robots(0.5, 2.0, 0.5, -1.0);  // cp = 3
  const auto chained = concat_homotopy(flattening_homotopy(spec),
                                       flattening_homotopy(spec));
  CHECK_THROWS_AS(chained(shared, 0.25), PreconditionError);
}

TEST_CASE("waypoint_homotopy pins the stratum computed up front") {
  const auto spec = ProblemSpec::canonical(2, 2, 2, 2);
  const auto c = two_robots(0.5, 2.0, 0.5, -1.0);
  const auto h = waypoint_homotopy(spec, stratum(spec, c));

  CHECK(h(c, 0.0) == c);
  const auto end = h(c, 1.0);
  CHECK(is_on_axis(end));
  CHECK(stratum(spec, end).cp == spec.point_count());
  // same landing point as the two public deformations composed
  const auto composed = concat_homotopy(desingularization_homotopy(spec),
                                        flattening_homotopy(spec));
  CHECK(end == composed(c, 1.0));
}
