#pragma once

#include <cstddef>
#include <vector>

#include "bisect/geometry.hpp"

namespace bisect {

// An ordered list of pairwise distinct points. The genericity certificate is
// derived on construction: true iff no two points share an x- or a
// y-coordinate.
class PointSet {
 public:
  PointSet() = default;
  // Throws DuplicatePoint.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool generic() const { return generic_; }

  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  // Applies the map to every point.
  PointSet transformed(const RigidMap& map) const;
  PointSet scaled(const Rational& factor) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

 private:
  std::vector<Point> points_;
  bool generic_ = true;
};

}  // namespace bisect
