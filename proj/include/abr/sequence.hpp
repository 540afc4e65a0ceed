#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "abr/rational.hpp"

namespace abr {

struct PlanarPoint {
  Rational t;
  Rational h;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

/// Points (t_i, h_i) with strictly increasing t. Domain of divided
/// differences.
class PlanarSequence {
 public:
  /// Throws InvariantError when empty or when t is not strictly increasing.
  explicit PlanarSequence(std::vector<PlanarPoint> points);

  std::size_t size() const noexcept { return points_.size(); }
  const PlanarPoint& operator[](std::size_t i) const { return points_[i]; }
  std::span<const PlanarPoint> points() const noexcept { return points_; }

  /// Points at the given increasing indices.
  std::vector<PlanarPoint> select(std::span<const int> indices) const;

  friend bool operator==(const PlanarSequence&, const PlanarSequence&) = default;

 private:
  std::vector<PlanarPoint> points_;
};

/// A point x = (z, h) of R^d: z in R^{d-1} is the projection, h the height.
struct LiftedPoint {
  std::vector<Rational> z;
  Rational h;

  friend bool operator==(const LiftedPoint&, const LiftedPoint&) = default;
};

class LiftedSequence {
 public:
  /// Throws InvariantError when d < 2, the sequence is empty, or a point's
  /// projection does not have d - 1 coordinates.
  LiftedSequence(int dimension, std::vector<LiftedPoint> points);

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  const LiftedPoint& operator[](std::size_t i) const { return points_[i]; }
  std::span<const LiftedPoint> points() const noexcept { return points_; }

  std::vector<LiftedPoint> select(std::span<const int> indices) const;

  /// Same points in reverse order.
  LiftedSequence reversed() const;
  /// Same projections with every height negated.
  LiftedSequence negated_heights() const;

  friend bool operator==(const LiftedSequence&, const LiftedSequence&) = default;

 private:
  int dimension_;
  std::vector<LiftedPoint> points_;
};

using AnySequence = std::variant<PlanarSequence, LiftedSequence>;

/// x_i = (t_i, t_i^2, ..., t_i^{d-1}, h_i).
LiftedSequence moment_lift(const PlanarSequence& p, int d);

}  // namespace abr
