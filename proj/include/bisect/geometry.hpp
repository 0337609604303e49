#pragma once

// Exact planar primitives: points, canonical lines and circles, perpendicular
// bisectors, reflections, inversions and rational rotations.
//
// Everything here is over Rational. Distances are always squared so that no
// value ever leaves the rationals.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "bisect/numeric.hpp"

namespace bisect {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long long px, long long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

std::string to_string(const Point& p);

// {(x, y) : A x + B y = C} with coprime integer coefficients, A > 0 or
// (A == 0 and B > 0). Equal lines have identical coefficients.
class CanonicalLine {
 public:
  // Any nonzero rational multiple of the same equation yields the same line.
  static CanonicalLine from_coefficients(const Rational& a, const Rational& b, const Rational& c);
  static CanonicalLine from_integers(BigInt a, BigInt b, BigInt c);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }

  bool contains(const Point& p) const;
  bool is_vertical() const { return b_ == 0; }
  bool is_horizontal() const { return a_ == 0; }

  friend bool operator==(const CanonicalLine& l, const CanonicalLine& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }
  // Lexicographic on (A, B, C); the canonical key order.
  friend bool operator<(const CanonicalLine& l, const CanonicalLine& m);

  std::string to_string() const;

 private:
  CanonicalLine(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  BigInt a_, b_, c_;
};

// {(x, y) : G (x² + y²) + D x + E y + F = 0} with G > 0, gcd(G, D, E, F) = 1
// and D² + E² − 4GF > 0.
class CanonicalCircle {
 public:
  static CanonicalCircle from_coefficients(const Rational& g, const Rational& d, const Rational& e,
                                           const Rational& f);
  static CanonicalCircle from_center(const Point& center, const Point& through);

  const BigInt& g() const { return g_; }
  const BigInt& d() const { return d_; }
  const BigInt& e() const { return e_; }
  const BigInt& f() const { return f_; }

  bool contains(const Point& p) const;
  Point center() const;
  Rational radius2() const;

  friend bool operator==(const CanonicalCircle& l, const CanonicalCircle& m) {
    return l.g_ == m.g_ && l.d_ == m.d_ && l.e_ == m.e_ && l.f_ == m.f_;
  }
  friend bool operator<(const CanonicalCircle& l, const CanonicalCircle& m);

  std::string to_string() const;

 private:
  CanonicalCircle(BigInt g, BigInt d, BigInt e, BigInt f)
      : g_(std::move(g)), d_(std::move(d)), e_(std::move(e)), f_(std::move(f)) {}
  BigInt g_, d_, e_, f_;
};

// p ↦ M p + t with M orthogonal.
class RigidMap {
 public:
  static RigidMap identity();
  // Throws PreconditionViolated unless M is exactly orthogonal.
  RigidMap(Rational m00, Rational m01, Rational m10, Rational m11, Rational tx, Rational ty);

  Point operator()(const Point& p) const;
  Rational det() const { return m00_ * m11_ - m01_ * m10_; }
  bool is_reflection() const { return det() == -1; }
  bool is_rotation() const { return det() == 1; }

  // (f ∘ g)(p) = f(g(p)).
  friend RigidMap compose(const RigidMap& f, const RigidMap& g);
  RigidMap with_translation(const Point& t) const;

  const Rational& m00() const { return m00_; }
  const Rational& m01() const { return m01_; }
  const Rational& m10() const { return m10_; }
  const Rational& m11() const { return m11_; }
  const Rational& tx() const { return tx_; }
  const Rational& ty() const { return ty_; }

  friend bool operator==(const RigidMap&, const RigidMap&) = default;

 private:
  Rational m00_, m01_, m10_, m11_, tx_, ty_;
};

struct SlopeIntercept {
  Rational slope;
  Rational intercept;
  friend bool operator==(const SlopeIntercept&, const SlopeIntercept&) = default;
};
struct VerticalLine {
  Rational x;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};
using SlopeView = std::variant<SlopeIntercept, VerticalLine>;

Rational dist2(const Point& a, const Point& b);

// The locus of points equidistant from a and b. Throws EqualPoints.
CanonicalLine bisector(const Point& a, const Point& b);

// y = s x + t view; VerticalLine when B = 0.
SlopeView slope_intercept(const CanonicalLine& line);

// Reflection across bisector(a, b); swaps a and b. Throws EqualPoints.
RigidMap reflection(const Point& a, const Point& b);
RigidMap reflection_across(const CanonicalLine& line);

// q ↦ center + (q − center) / |q − center|². Throws EqualPoints.
Point invert(const Point& center, const Point& q);

// Throws EqualPoints if two arguments coincide, Collinear if the three lie on
// a line.
CanonicalCircle circumcircle(const Point& p, const Point& q, const Point& r);

// Rotation by the angle with (cos, sin) = (3/5, 4/5), applied k ≥ 1 times.
RigidMap rational_rotation(int k);

CanonicalLine line_through(const Point& p, const Point& q);
bool collinear(const Point& p, const Point& q, const Point& r);
bool parallel(const CanonicalLine& l, const CanonicalLine& m);
// Empty when the lines are parallel or equal.
std::optional<Point> intersection(const CanonicalLine& l, const CanonicalLine& m);

// Integer homogeneous form of a point: (x / w, y / w) with w > 0 and
// w = lcm of the coordinate denominators. The fast kernels work on these so
// that integer inputs never touch rational arithmetic.
struct HomPoint {
  BigInt x, y, w;
  BigInt norm;  // x² + y²
};

HomPoint to_hom(const Point& p);

CanonicalLine bisector(const HomPoint& a, const HomPoint& b);
// Reduced squared distance.
Rational dist2(const HomPoint& a, const HomPoint& b);

// Direction of b − a as a primitive integer vector with sign rule
// dx > 0 or (dx == 0 and dy > 0); identifies the line through a and b among
// lines through a.
struct Direction {
  BigInt dx, dy;
  friend bool operator==(const Direction&, const Direction&) = default;
  friend bool operator<(const Direction& l, const Direction& m) {
    return l.dx < m.dx || (l.dx == m.dx && l.dy < m.dy);
  }
};
Direction direction(const HomPoint& a, const HomPoint& b);

}  // namespace bisect

template <>
struct std::hash<bisect::Point> {
  std::size_t operator()(const bisect::Point& p) const noexcept;
};
template <>
struct std::hash<bisect::CanonicalLine> {
  std::size_t operator()(const bisect::CanonicalLine& l) const noexcept;
};
template <>
struct std::hash<bisect::CanonicalCircle> {
  std::size_t operator()(const bisect::CanonicalCircle& c) const noexcept;
};
