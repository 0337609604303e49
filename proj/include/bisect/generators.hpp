#pragma once

// Rational-coordinate benchmark families.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bisect/point_set.hpp"

namespace bisect {

struct GridFamily {
  std::size_t k;
};
struct LineFamily {
  std::size_t n;
};
struct CircleFamily {
  std::size_t n;
};
struct EllipseTrainFamily {
  std::size_t n;
  std::size_t m;
};
struct RandomFamily {
  std::size_t n;
  std::int64_t range;
  std::uint64_t seed;
};

using GeneratorSpec =
    std::variant<GridFamily, LineFamily, CircleFamily, EllipseTrainFamily, RandomFamily>;

std::string family_name(const GeneratorSpec& spec);

// {0, …, k − 1}².
PointSet gen_grid(std::size_t k);
// {(i, 0) : 0 ≤ i < n}.
PointSet gen_line(std::size_t n);
// n points of the unit circle ((1 − u²)/(1 + u²), 2u/(1 + u²)) at the integer
// parameters u = i − ⌊n/2⌋.
PointSet gen_rational_circle(std::size_t n);

// M/8 translated copies (by (4j, 0)) of a mirrored point set on the ellipse
// 4x² + y² = 1, 4n/M points on each side of the y-axis. Throws
// PreconditionViolated unless M ≥ 8, 8 | M and M | n.
PointSet gen_ellipse_train(std::size_t n, std::size_t m);

// μ(x = 4j) for j = 0 … M/8 − 1, the vertical axes of the ellipse copies.
std::vector<std::uint64_t> ellipse_train_axis_multiplicities(std::size_t n, std::size_t m);

// n distinct integer points in [−range, range]²; deterministic in the seed.
// Throws RangeTooSmall when they cannot fit.
PointSet gen_random(std::size_t n, std::int64_t range, std::uint64_t seed);

struct GenericImage {
  PointSet points;
  int rotations = 0;  // k of the rational rotation applied, 0 if none
};

// Rotates by rational_rotation(k) for the smallest k ≥ 0 that leaves no two
// points sharing an x- or y-coordinate.
GenericImage ensure_generic(const PointSet& points);

PointSet generate(const GeneratorSpec& spec);

}  // namespace bisect
