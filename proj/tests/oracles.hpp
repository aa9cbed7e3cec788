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

// Test-side oracles, deliberately independent of the library code paths
// they check: clustering is done by pairwise union-find over the tolerance
// relation instead of sorted chaining, and distances use plain loops
// instead of Eigen reductions.

#ifndef SEQPLAN_TESTS_ORACLES_HPP
#define SEQPLAN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "seqplan/types.hpp"

namespace oracles {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Groups of value indices under the transitive closure of
/// |v_i - v_j| <= tol, each group sorted, groups ordered by their mean.
inline std::vector<std::vector<int>> cluster_groups(
    const std::vector<double>& values, double tol) {
  const int m = int(values.size());
  UnionFind uf(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(values[i] - values[j]) <= tol) uf.unite(i, j);
  std::vector<std::vector<int>> groups;
  std::vector<int> root_to_group(m, -1);
  for (int i = 0; i < m; ++i) {
    const int root = uf.find(i);
    if (root_to_group[root] < 0) {
      root_to_group[root] = int(groups.size());
      groups.emplace_back();
    }
    groups[root_to_group[root]].push_back(i);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              auto mean = [&](const std::vector<int>& g) {
                double s = 0;
                for (int i : g) s += values[i];
                return s / double(g.size());
              };
              return mean(a) < mean(b);
            });
  return groups;
}

/// The projection values of a configuration in global-index order:
/// obstacles first, then robots.
inline std::vector<double> projection_values(const seqplan::ProblemSpec& spec,
                                             const seqplan::Configuration& c) {
  std::vector<double> values;
  for (int j = 0; j < spec.r; ++j) values.push_back(spec.obstacles(0, j));
  for (int i = 0; i < spec.k; ++i) values.push_back(c.points(0, i));
  return values;
}

inline int cluster_count(const std::vector<double>& values, double tol) {
  return int(cluster_groups(values, tol).size());
}

/// Epsilon by exhaustive pairs of group means.
inline double epsilon_from_groups(const std::vector<double>& values,
                                  double tol) {
  const auto groups = cluster_groups(values, tol);
  if (groups.size() < 2) return 0.0;
  std::vector<double> means;
  for (const auto& g : groups) {
    double s = 0;
    for (int i : g) s += values[i];
    means.push_back(s / double(g.size()));
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < means.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      best = std::min(best, std::abs(means[a] - means[b]));
  return best / double(values.size());
}

/// Min robot/robot and robot/obstacle distance by plain loops.
inline double clearance(const seqplan::ProblemSpec& spec,
                        const seqplan::Configuration& c) {
  auto dist = [&](int d, auto&& get_a, auto&& get_b) {
    double s = 0;
    for (int q = 0; q < d; ++q) {
      const double diff = get_a(q) - get_b(q);
      s += diff * diff;
    }
    return std::sqrt(s);
  };
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < spec.k; ++i) {
    for (int j = 0; j < i; ++j)
      best = std::min(best, dist(spec.d,
                                 [&](int q) { return c.points(q, i); },
                                 [&](int q) { return c.points(q, j); }));
    for (int j = 0; j < spec.r; ++j)
      best = std::min(best, dist(spec.d,
                                 [&](int q) { return c.points(q, i); },
                                 [&](int q) { return spec.obstacles(q, j); }));
  }
  return best;
}

/// All region indices reachable as sums of n strata in [r, k+r], by direct
/// enumeration.
inline std::vector<int> reachable_regions(int k, int r, int n) {
  std::vector<int> sums{0};
  for (int m = 0; m < n; ++m) {
    std::vector<int> next;
    for (int s : sums)
      for (int j = r; j <= k + r; ++j) next.push_back(s + j);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  return sums;
}

}  // namespace oracles

#endif  // SEQPLAN_TESTS_ORACLES_HPP
