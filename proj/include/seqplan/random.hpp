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

#ifndef SEQPLAN_RANDOM_HPP
#define SEQPLAN_RANDOM_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "seqplan/stratum.hpp"
#include "seqplan/types.hpp"

namespace seqplan {

/// Samples a valid configuration.  When target_cp is given, the result is
/// constructed so that stratum(...).cp equals it exactly: target_cp - r
/// robot projections are fresh values kept well clear of every other
/// projection, and the remaining robots reuse values already in play
/// (bitwise copies, so the clustering sees exact ties).  Non-first
/// coordinates keep all points far apart regardless of the projections.
template <typename Scalar>
ConfigurationT<Scalar> random_configuration(
    const ProblemSpecT<Scalar>& spec, std::mt19937_64& rng,
    std::optional<int> target_cp = std::nullopt) {
  const int m = spec.point_count();
  int target;
  if (target_cp) {
    target = *target_cp;
    if (target < spec.r || target > m)
      throw SpecError("target_cp must lie in [r, k+r] = [" +
                      std::to_string(spec.r) + ", " + std::to_string(m) + "]");
  } else {
    target = std::uniform_int_distribution<int>(spec.r, m)(rng);
  }

  // Projection values already in play: the canonical obstacle abscissas.
  std::vector<Scalar> pool;
  pool.reserve(m);
  for (int j = 0; j < spec.r; ++j) pool.push_back(Scalar(j));

  const Scalar gap_floor =
      std::max(Scalar(0.05), Scalar(10) * spec.tol_proj);
  const Scalar lo = Scalar(-1) - Scalar(0.5) * Scalar(spec.k);
  const Scalar hi = Scalar(spec.r) + Scalar(0.5) * Scalar(spec.k);
  std::uniform_real_distribution<Scalar> span(lo, hi);

  const int fresh_count = target - spec.r;
  std::vector<Scalar> robot_proj;
  robot_proj.reserve(spec.k);
  for (int f = 0; f < fresh_count; ++f) {
    Scalar value;
    bool clear = false;
    while (!clear) {
      value = span(rng);
      clear = true;
      for (Scalar v : pool)
        if (std::abs(value - v) < gap_floor) {
          clear = false;
          break;
        }
    }
    pool.push_back(value);
    robot_proj.push_back(value);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = fresh_count; i < spec.k; ++i)
    robot_proj.push_back(pool[pick(rng)]);
  std::shuffle(robot_proj.begin(), robot_proj.end(), rng);

  std::uniform_real_distribution<Scalar> jitter(Scalar(0), Scalar(0.25));
  std::uniform_real_distribution<Scalar> tail(Scalar(-0.5), Scalar(0.5));
  ConfigurationT<Scalar> config;
  config.points = MatrixX<Scalar>::Zero(spec.d, spec.k);
  for (int i = 0; i < spec.k; ++i) {
    config.points(0, i) = robot_proj[i];
    config.points(1, i) = Scalar(1 + i) + jitter(rng);
    for (int c = 2; c < spec.d; ++c) config.points(c, i) = tail(rng);
  }

  if (!validate_configuration(spec, config))
    throw Error("random_configuration produced an invalid configuration; "
                "tol_valid is too large for the generator's layout");
  if (stratum(spec, config).cp != target)
    throw Error("random_configuration failed to hit the requested stratum");
  return config;
}

template <typename Scalar>
ConfigurationT<Scalar> random_configuration(
    const ProblemSpecT<Scalar>& spec, std::uint64_t seed,
    std::optional<int> target_cp = std::nullopt) {
  std::mt19937_64 rng(seed);
  return random_configuration(spec, rng, target_cp);
}

}  // namespace seqplan

#endif  // SEQPLAN_RANDOM_HPP
