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

#ifndef SEQPLAN_TYPES_HPP
#define SEQPLAN_TYPES_HPP

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>
#include <string>

namespace seqplan {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Eigen::Index;

// ---------------------------------------------------------------------------
// Error taxonomy.  Each class maps onto one failure mode of the public
// surface, so callers (and the CLI exit-code table) can tell them apart.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed problem parameters (bad d/k/n, tolerance out of range, ...).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Obstacle counts r < 2 are handled by a different construction and are
/// rejected everywhere in this library.
class UnsupportedRegimeError : public Error {
 public:
  using Error::Error;
};

/// Point dimension does not match the problem dimension.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its declared domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Piecewise-path assembly failed (schedule gaps, endpoint mismatch, ...).
class PathError : public Error {
 public:
  using Error::Error;
};

/// A configuration violates the separation invariants.  `waypoint` is the
/// 1-based index of the offending waypoint when raised by the planner,
/// -1 otherwise.
class InvalidConfigurationError : public Error {
 public:
  InvalidConfigurationError(const std::string& what, int waypoint_index = -1)
      : Error(what), waypoint(waypoint_index) {}
  int waypoint;
};

/// Problem-file syntax or schema errors.
class ParseError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Domain model
// ---------------------------------------------------------------------------

/// Projection onto the first coordinate, p(x).
template <typename Derived>
typename Derived::Scalar project(const Eigen::MatrixBase<Derived>& point) {
  return point(0);
}

/// An ordered tuple of k robot positions in R^d, stored column-wise
/// (column i holds robot i+1).  Robot i (1-based) carries the global
/// index r+i once the r obstacles are counted in front of it.
template <typename Scalar>
struct ConfigurationT {
  MatrixX<Scalar> points;

  ConfigurationT() = default;
  explicit ConfigurationT(MatrixX<Scalar> pts) : points(std::move(pts)) {}

  Index dim() const { return points.rows(); }
  Index count() const { return points.cols(); }
  auto robot(Index i) const { return points.col(i); }

  friend bool operator==(const ConfigurationT& a, const ConfigurationT& b) {
    return a.points.rows() == b.points.rows() &&
           a.points.cols() == b.points.cols() && a.points == b.points;
  }
};

/// Problem instance: k robots in R^d, r obstacles pinned at the canonical
/// positions q_i = (i-1, 0, ..., 0), and n waypoints per request.
///
/// tol_proj decides when two first-coordinate projections count as equal;
/// tol_valid is the minimum separation demanded of input configurations.
template <typename Scalar>
struct ProblemSpecT {
  int d = 2;
  int k = 1;
  int r = 2;
  int n = 2;
  Scalar tol_proj = Scalar(1e-9);
  Scalar tol_valid = Scalar(1e-9);
  MatrixX<Scalar> obstacles;  // d x r

  int point_count() const { return k + r; }

  /// Obstacle j (1-based) sits at (j-1, 0, ..., 0).
  static MatrixX<Scalar> canonical_obstacles(int d, int r) {
    MatrixX<Scalar> q = MatrixX<Scalar>::Zero(d, r);
    for (int j = 0; j < r; ++j) q(0, j) = Scalar(j);
    return q;
  }

  static ProblemSpecT canonical(int d, int k, int r, int n,
                                Scalar tol_proj = Scalar(1e-9),
                                Scalar tol_valid = Scalar(1e-9));
};

/// Checks every ProblemSpec invariant; throws on violation.
template <typename Scalar>
void validate_spec(const ProblemSpecT<Scalar>& spec) {
  if (spec.r < 2)
    throw UnsupportedRegimeError(
        "obstacle count r=" + std::to_string(spec.r) +
        " is outside the supported regime; planners for r in {0,1} arise "
        "from the obstacle-free construction and are not provided here");
  if (spec.d < 2) throw SpecError("spatial dimension must satisfy d >= 2");
  if (spec.k < 1) throw SpecError("robot count must satisfy k >= 1");
  if (spec.n < 2) throw SpecError("waypoint count must satisfy n >= 2");
  if (!(spec.tol_proj >= Scalar(0)))
    throw SpecError("tol_proj must be nonnegative");
  if (!(spec.tol_valid >= Scalar(0)))
    throw SpecError("tol_valid must be nonnegative");
  const Scalar bound = Scalar(1) / Scalar(4 * spec.point_count());
  if (!(spec.tol_proj < bound))
    throw SpecError("tol_proj must be smaller than 1/(4(k+r))");
  if (spec.obstacles.rows() != spec.d || spec.obstacles.cols() != spec.r)
    throw SpecError("obstacle matrix must be d x r");
  const MatrixX<Scalar> canonical =
      ProblemSpecT<Scalar>::canonical_obstacles(spec.d, spec.r);
  if (spec.obstacles != canonical)
    throw SpecError("obstacles must sit at the canonical positions "
                    "(i-1, 0, ..., 0) with unit spacing");
}

template <typename Scalar>
ProblemSpecT<Scalar> ProblemSpecT<Scalar>::canonical(int d, int k, int r,
                                                     int n, Scalar tol_proj,
                                                     Scalar tol_valid) {
  ProblemSpecT spec;
  spec.d = d;
  spec.k = k;
  spec.r = r;
  spec.n = n;
  spec.tol_proj = tol_proj;
  spec.tol_valid = tol_valid;
  if (r >= 1 && d >= 1) spec.obstacles = canonical_obstacles(d, r);
  validate_spec(spec);
  return spec;
}

// ---------------------------------------------------------------------------
// Configuration validity
// ---------------------------------------------------------------------------

enum class ViolationKind { none, robot_robot, robot_obstacle };

/// Outcome of a separation check.  On failure, (a, b) name the first
/// violating pair: robot a vs robot b, or robot a vs obstacle b (1-based).
template <typename Scalar>
struct ValidityVerdict {
  bool valid = true;
  ViolationKind kind = ViolationKind::none;
  int a = 0;
  int b = 0;
  Scalar distance = Scalar(0);

  explicit operator bool() const { return valid; }

  std::string describe() const {
    if (valid) return "valid";
    if (kind == ViolationKind::robot_robot)
      return "robots " + std::to_string(a) + " and " + std::to_string(b) +
             " are closer than the separation tolerance";
    return "robot " + std::to_string(a) + " and obstacle " +
           std::to_string(b) + " are closer than the separation tolerance";
  }
};

/// Accepts iff all robot/robot and robot/obstacle distances exceed
/// tol_valid.  Shape mismatches throw; they are not a validity verdict.
template <typename Scalar>
ValidityVerdict<Scalar> validate_configuration(
    const ProblemSpecT<Scalar>& spec, const ConfigurationT<Scalar>& config) {
  if (config.dim() != spec.d)
    throw DimensionMismatchError(
        "configuration has points of dimension " +
        std::to_string(config.dim()) + ", expected d=" + std::to_string(spec.d));
  if (config.count() != spec.k)
    throw DimensionMismatchError("configuration has " +
                                 std::to_string(config.count()) +
                                 " robots, expected k=" + std::to_string(spec.k));
  ValidityVerdict<Scalar> verdict;
  for (Index i = 0; i < config.count(); ++i) {
    for (Index j = 0; j < i; ++j) {
      const Scalar dist = (config.robot(i) - config.robot(j)).norm();
      if (!(dist > spec.tol_valid)) {
        verdict.valid = false;
        verdict.kind = ViolationKind::robot_robot;
        verdict.a = int(j) + 1;
        verdict.b = int(i) + 1;
        verdict.distance = dist;
        return verdict;
      }
    }
    for (Index j = 0; j < spec.obstacles.cols(); ++j) {
      const Scalar dist = (config.robot(i) - spec.obstacles.col(j)).norm();
      if (!(dist > spec.tol_valid)) {
        verdict.valid = false;
        verdict.kind = ViolationKind::robot_obstacle;
        verdict.a = int(i) + 1;
        verdict.b = int(j) + 1;
        verdict.distance = dist;
        return verdict;
      }
    }
  }
  return verdict;
}

/// True iff every non-first coordinate of every robot is exactly zero.
template <typename Scalar>
bool is_on_axis(const ConfigurationT<Scalar>& config) {
  if (config.dim() < 2) return true;
  return (config.points.bottomRows(config.dim() - 1).array() == Scalar(0))
      .all();
}

/// Smallest robot/robot or robot/obstacle distance.  With a single robot
/// the robot/robot minimum is vacuous and only obstacle clearance counts.
template <typename Scalar>
Scalar min_clearance(const ProblemSpecT<Scalar>& spec,
                     const ConfigurationT<Scalar>& config) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (Index i = 0; i < config.count(); ++i) {
    for (Index j = 0; j < i; ++j)
      best = std::min(best, (config.robot(i) - config.robot(j)).norm());
    for (Index j = 0; j < spec.obstacles.cols(); ++j)
      best = std::min(best, (config.robot(i) - spec.obstacles.col(j)).norm());
  }
  return best;
}

/// Max-norm distance between two configurations of equal shape.
template <typename Scalar>
Scalar config_distance(const ConfigurationT<Scalar>& a,
                       const ConfigurationT<Scalar>& b) {
  return (a.points - b.points).cwiseAbs().maxCoeff();
}

using Configuration = ConfigurationT<double>;
using ProblemSpec = ProblemSpecT<double>;

}  // namespace seqplan

#endif  // SEQPLAN_TYPES_HPP
