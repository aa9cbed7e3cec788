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

#ifndef SEQPLAN_STRATUM_HPP
#define SEQPLAN_STRATUM_HPP

#include <algorithm>
#include <vector>

#include "seqplan/types.hpp"

namespace seqplan {

/// Projection stratum of one configuration.
///
/// The k+r points of interest are the r obstacles followed by the k robots;
/// they carry the global indices 1..k+r.  `pattern` partitions those indices
/// into groups whose first-coordinate projections agree up to the clustering
/// tolerance, ordered by ascending group representative (the group mean).
///
/// cp is the number of groups.  epsilon = min_gap / (k+r), where min_gap is
/// the smallest distance between distinct group representatives; it is the
/// step scale used by the desingularization shift.  Because the obstacle
/// projections 0, 1, ..., r-1 can never be chained together by robots under
/// the tol_proj bound, cp >= r and epsilon > 0 for every valid input.
template <typename Scalar>
struct StratumInfoT {
  int cp = 0;
  std::vector<std::vector<int>> pattern;
  std::vector<Scalar> representatives;
  Scalar min_gap = Scalar(0);
  Scalar epsilon = Scalar(0);
};

/// Clusters the k+r projection values with the given tolerance.  Two values
/// land in one group when they are connected by a chain of gaps <= tol, so
/// near-boundary inputs merge into the coarser stratum.
template <typename Scalar>
StratumInfoT<Scalar> stratum(const ProblemSpecT<Scalar>& spec,
                             const ConfigurationT<Scalar>& config,
                             Scalar tol) {
  if (config.dim() != spec.d || config.count() != spec.k)
    throw DimensionMismatchError("stratum: configuration shape mismatch");

  const int m = spec.point_count();
  std::vector<std::pair<Scalar, int>> proj;  // (value, global index)
  proj.reserve(m);
  for (int j = 0; j < spec.r; ++j)
    proj.emplace_back(project(spec.obstacles.col(j)), j + 1);
  for (int i = 0; i < spec.k; ++i)
    proj.emplace_back(project(config.robot(i)), spec.r + i + 1);
  std::sort(proj.begin(), proj.end());

  StratumInfoT<Scalar> info;
  std::vector<int> group;
  Scalar group_sum = Scalar(0);
  auto flush = [&] {
    std::sort(group.begin(), group.end());
    info.representatives.push_back(group_sum / Scalar(group.size()));
    info.pattern.push_back(std::move(group));
    group.clear();
    group_sum = Scalar(0);
  };
  for (int idx = 0; idx < m; ++idx) {
    if (!group.empty() && proj[idx].first - proj[idx - 1].first > tol) flush();
    group.push_back(proj[idx].second);
    group_sum += proj[idx].first;
  }
  flush();

  info.cp = int(info.pattern.size());
  info.min_gap = std::numeric_limits<Scalar>::infinity();
  for (std::size_t g = 1; g < info.representatives.size(); ++g)
    info.min_gap = std::min(info.min_gap,
                            info.representatives[g] - info.representatives[g - 1]);
  info.epsilon = info.cp > 1 ? info.min_gap / Scalar(m) : Scalar(0);
  return info;
}

template <typename Scalar>
StratumInfoT<Scalar> stratum(const ProblemSpecT<Scalar>& spec,
                             const ConfigurationT<Scalar>& config) {
  return stratum(spec, config, spec.tol_proj);
}

using StratumInfo = StratumInfoT<double>;

}  // namespace seqplan

#endif  // SEQPLAN_STRATUM_HPP
