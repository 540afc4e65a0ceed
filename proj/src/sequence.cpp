#include "abr/sequence.hpp"

#include <algorithm>

#include "abr/error.hpp"

namespace abr {

PlanarSequence::PlanarSequence(std::vector<PlanarPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvariantError("planar sequence must contain at least one point");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i - 1].t < points_[i].t))
      throw InvariantError("t must be strictly increasing (points " + std::to_string(i - 1) +
                           " and " + std::to_string(i) + ")");
}

std::vector<PlanarPoint> PlanarSequence::select(std::span<const int> indices) const {
  std::vector<PlanarPoint> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(points_.at(static_cast<std::size_t>(i)));
  return out;
}

LiftedSequence::LiftedSequence(int dimension, std::vector<LiftedPoint> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension_ < 2) throw InvariantError("lifted dimension must be at least 2");
  if (points_.empty()) throw InvariantError("lifted sequence must contain at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].z.size() != static_cast<std::size_t>(dimension_ - 1))
      throw InvariantError("point " + std::to_string(i) + " has " +
                           std::to_string(points_[i].z.size() + 1) +
                           " coordinates, expected " + std::to_string(dimension_));
}

std::vector<LiftedPoint> LiftedSequence::select(std::span<const int> indices) const {
  std::vector<LiftedPoint> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(points_.at(static_cast<std::size_t>(i)));
  return out;
}

LiftedSequence LiftedSequence::reversed() const {
  std::vector<LiftedPoint> pts(points_.rbegin(), points_.rend());
  return LiftedSequence(dimension_, std::move(pts));
}

LiftedSequence LiftedSequence::negated_heights() const {
  std::vector<LiftedPoint> pts = points_;
  for (auto& p : pts) p.h = -p.h;
  return LiftedSequence(dimension_, std::move(pts));
}

LiftedSequence moment_lift(const PlanarSequence& p, int d) {
  if (d < 2) throw InvariantError("moment_lift needs d >= 2");
  std::vector<LiftedPoint> pts;
  pts.reserve(p.size());
  for (const auto& q : p.points()) {
    LiftedPoint x;
    x.z.reserve(static_cast<std::size_t>(d - 1));
    Rational power = q.t;
    for (int e = 1; e < d; ++e) {
      x.z.push_back(power);
      power *= q.t;
    }
    x.h = q.h;
    pts.push_back(std::move(x));
  }
  return LiftedSequence(d, std::move(pts));
}

}  // namespace abr
