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

#ifndef SEQPLAN_PIECEWISE_PATH_HPP
#define SEQPLAN_PIECEWISE_PATH_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "seqplan/types.hpp"

namespace seqplan {

/// Adjacent segments must agree at shared breakpoints to within this bound.
inline constexpr double kPathContinuityTol = 1e-12;

/// A map [0,1] -> configurations assembled from analytic pieces.  Each
/// segment owns a sub-interval of the schedule and an evaluator over the
/// local parameter [0,1]; intervals are half-open on the right except for
/// the final one, and adjacent evaluators agree at the shared breakpoints,
/// so evaluation is single-valued and continuous.
template <typename Scalar>
class PiecewisePathT {
 public:
  using Config = ConfigurationT<Scalar>;

  struct Segment {
    Scalar tau_begin;
    Scalar tau_end;
    std::function<Config(Scalar)> eval;  // local parameter in [0, 1]
    std::string kind;
  };

  PiecewisePathT() = default;

  /// Validates the schedule (exact partition of [0,1]) and the continuity
  /// and shape invariants before accepting the segments.
  static PiecewisePathT from_segments(std::vector<Segment> segments) {
    if (segments.empty()) throw PathError("path needs at least one segment");
    if (segments.front().tau_begin != Scalar(0))
      throw PathError("schedule must start at 0");
    if (segments.back().tau_end != Scalar(1))
      throw PathError("schedule must end at 1");
    for (std::size_t i = 0; i < segments.size(); ++i) {
      if (!(segments[i].tau_begin < segments[i].tau_end))
        throw PathError("segment " + std::to_string(i) + " is empty");
      if (i > 0 && segments[i].tau_begin != segments[i - 1].tau_end)
        throw PathError("schedule has a gap or overlap at segment " +
                        std::to_string(i));
    }
    const Config head = segments.front().eval(Scalar(0));
    for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
      const Config left = segments[i].eval(Scalar(1));
      const Config right = segments[i + 1].eval(Scalar(0));
      if (left.dim() != head.dim() || left.count() != head.count() ||
          right.dim() != head.dim() || right.count() != head.count())
        throw PathError("segments disagree on the configuration shape");
      if (config_distance(left, right) > Scalar(kPathContinuityTol))
        throw PathError("segments " + std::to_string(i) + " and " +
                        std::to_string(i + 1) +
                        " do not meet at their shared breakpoint");
    }
    PiecewisePathT path;
    path.segments_ = std::move(segments);
    path.breakpoints_.reserve(path.segments_.size() + 1);
    path.breakpoints_.push_back(path.segments_.front().tau_begin);
    for (const Segment& s : path.segments_) path.breakpoints_.push_back(s.tau_end);
    return path;
  }

  Config at(Scalar tau) const {
    if (!(tau >= Scalar(0) && tau <= Scalar(1)))
      throw PathError("path parameter must lie in [0, 1]");
    // Closed on the left: an exact breakpoint evaluates the segment that
    // starts there (local 0), keeping breakpoint values exact.
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), tau);
    std::size_t idx = std::size_t(std::distance(breakpoints_.begin(), it));
    idx = idx == 0 ? 0 : idx - 1;
    if (idx >= segments_.size()) idx = segments_.size() - 1;
    const Segment& seg = segments_[idx];
    Scalar local = (tau - seg.tau_begin) / (seg.tau_end - seg.tau_begin);
    local = std::min(local, Scalar(1));
    return seg.eval(local);
  }

  Config operator()(Scalar tau) const { return at(tau); }

  Config start() const { return segments_.front().eval(Scalar(0)); }
  Config end() const { return segments_.back().eval(Scalar(1)); }

  const std::vector<Scalar>& breakpoints() const { return breakpoints_; }
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  std::vector<Segment> segments_;
  std::vector<Scalar> breakpoints_;  // size segments_.size() + 1
};

template <typename Scalar>
PiecewisePathT<Scalar> constant_path(const ConfigurationT<Scalar>& config,
                                     std::string kind = "constant") {
  typename PiecewisePathT<Scalar>::Segment seg{
      Scalar(0), Scalar(1), [config](Scalar) { return config; },
      std::move(kind)};
  return PiecewisePathT<Scalar>::from_segments({std::move(seg)});
}

/// Concatenation with uniform reparametrization: path i of N is played on
/// [i/N, (i+1)/N] at N-fold speed.  Segment evaluators are reused as-is, so
/// values at the merged breakpoints are bit-identical to the originals.
template <typename Scalar>
PiecewisePathT<Scalar> concat_paths(
    const std::vector<PiecewisePathT<Scalar>>& paths) {
  if (paths.empty()) throw PathError("concat_paths needs at least one path");
  for (std::size_t i = 0; i + 1 < paths.size(); ++i)
    if (config_distance(paths[i].end(), paths[i + 1].start()) >
        Scalar(kPathContinuityTol))
      throw PathError("paths " + std::to_string(i) + " and " +
                      std::to_string(i + 1) +
                      " do not share an endpoint");
  const Scalar count = Scalar(paths.size());
  std::vector<typename PiecewisePathT<Scalar>::Segment> merged;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (const auto& seg : paths[i].segments())
      merged.push_back({(Scalar(i) + seg.tau_begin) / count,
                        (Scalar(i) + seg.tau_end) / count, seg.eval,
                        seg.kind});
  return PiecewisePathT<Scalar>::from_segments(std::move(merged));
}

using PiecewisePath = PiecewisePathT<double>;

}  // namespace seqplan

#endif  // SEQPLAN_PIECEWISE_PATH_HPP
