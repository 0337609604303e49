#pragma once

// Brute-force reference implementations used by the test suites. Everything
// here is deliberately literal: lines are compared by cross-multiplying their
// raw coefficients and circles by their rational center and radius, never via
// the library's canonical forms or hashes.

#include <cstddef>
#include <cstdint>
#include <utility>

#include "bisect/point_set.hpp"

namespace bisect::oracles {

inline constexpr std::size_t kQuarticCap = 30;
inline constexpr std::size_t kCubicCap = 60;

// A x + B y + C = 0 with (A, B) ≠ (0, 0), not normalized.
struct RawLine {
  BigInt a, b, c;
};

// Coefficients of |z − p|² = |z − q|² with denominators cleared by multiplying
// through.
RawLine raw_bisector(const Point& p, const Point& q);
bool brute_line_equality(const RawLine& l1, const RawLine& l2);

// All throw SetTooLarge above their cap.
std::uint64_t brute_energy(const PointSet& points);               // n ≤ 30
std::size_t brute_distinct_bisectors(const PointSet& points);     // n ≤ 30
std::uint64_t brute_isoceles(const PointSet& points);             // n ≤ 60
std::uint64_t brute_incidence_mult(const PointSet& points);       // n ≤ 60
std::size_t brute_max_collinear(const PointSet& points);          // n ≤ 60
std::size_t brute_max_cocircular(const PointSet& points);         // n ≤ 60
std::size_t brute_distinct_distances(const PointSet& points);     // n ≤ 60

// f_ac(b, d), g_ac(b, d) from the expanded monomials.
std::pair<Rational, Rational> brute_fg(const Point& a, const Point& c, const Point& b,
                                       const Point& d);

}  // namespace bisect::oracles
