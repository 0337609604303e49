#pragma once

// Seeded generators for the property tests.

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "bisect/point_set.hpp"

namespace bisect::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  // p/q with |p| ≤ span, 1 ≤ q ≤ max_den.
  Rational rational(long long span = 20, long long max_den = 6) {
    return Rational(integer(-span, span)) / integer(1, max_den);
  }
  Point point(long long span = 20, long long max_den = 6) {
    Rational x = rational(span, max_den);
    Rational y = rational(span, max_den);
    return {x, y};
  }
  Point lattice_point(long long span) {
    const long long x = integer(-span, span);
    const long long y = integer(-span, span);
    return {x, y};
  }

  std::vector<Point> distinct(std::size_t n, bool lattice, long long span, long long max_den = 6) {
    std::unordered_set<Point> seen;
    std::vector<Point> out;
    while (out.size() < n) {
      Point p = lattice ? lattice_point(span) : point(span, max_den);
      if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
  }
  PointSet set(std::size_t n, bool lattice = false, long long span = 20, long long max_den = 6) {
    return PointSet(distinct(n, lattice, span, max_den));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline PointSet square() { return PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

}  // namespace bisect::testing
