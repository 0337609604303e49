#include "bisect/point_set.hpp"

#include <algorithm>
#include <unordered_set>

namespace bisect {

namespace {

bool has_repeat(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) != values.end();
}

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::unordered_set<Point> seen;
  seen.reserve(points_.size());
  for (const Point& p : points_)
    if (!seen.insert(p).second) throw DuplicatePoint("duplicate point " + to_string(p));

  std::vector<Rational> xs, ys;
  xs.reserve(points_.size());
  ys.reserve(points_.size());
  for (const Point& p : points_) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  generic_ = !has_repeat(std::move(xs)) && !has_repeat(std::move(ys));
}

PointSet PointSet::transformed(const RigidMap& map) const {
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const Point& p : points_) out.push_back(map(p));
  return PointSet(std::move(out));
}

PointSet PointSet::scaled(const Rational& factor) const {
  if (factor == 0) throw PreconditionViolated("scaling by zero");
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const Point& p : points_) out.push_back({p.x * factor, p.y * factor});
  return PointSet(std::move(out));
}

}  // namespace bisect
