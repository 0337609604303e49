#include <doctest.h>

#include <algorithm>
#include <array>

#include "bisect/geometry.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bisect;

namespace {

CanonicalLine line(long long a, long long b, long long c) {
  return CanonicalLine::from_integers(a, b, c);
}

Point pt(long long x, long long y) { return Point(x, y); }

}  // namespace

TEST_CASE("dist2") {
  CHECK(dist2(pt(0, 0), pt(0, 0)) == 0);
  CHECK(dist2(pt(0, 0), pt(3, 4)) == 25);
  CHECK(dist2(Point(Rational(1, 2), 0), Point(0, Rational(1, 3))) == Rational(13, 36));
  // Independent expansion of the same value.
  CHECK(Rational(1, 4) + Rational(1, 9) == Rational(13, 36));
}

TEST_CASE("bisector examples") {
  CHECK(bisector(pt(0, 0), pt(2, 0)) == line(1, 0, 1));
  CHECK(bisector(pt(0, 0), pt(2, 2)) == line(1, 1, 2));
  CHECK(bisector(pt(0, 0), pt(1, 3)) == line(1, 3, 5));
  CHECK(dist2(pt(5, 0), pt(0, 0)) == dist2(pt(5, 0), pt(1, 3)));
  CHECK_THROWS_AS(bisector(pt(1, 1), pt(1, 1)), EqualPoints);
}

TEST_CASE("canonical lines obey the sign and gcd rules") {
  const CanonicalLine l = CanonicalLine::from_integers(-4, 6, -10);
  CHECK(l.a() == 2);
  CHECK(l.b() == -3);
  CHECK(l.c() == 5);
  const CanonicalLine h = CanonicalLine::from_coefficients(0, Rational(-1, 2), 3);
  CHECK(h.a() == 0);
  CHECK(h.b() == 1);
  CHECK(h.c() == -6);
  CHECK_THROWS_AS(CanonicalLine::from_integers(0, 0, 1), PreconditionViolated);
}

TEST_CASE("slope_intercept") {
  CHECK(std::get<SlopeIntercept>(slope_intercept(line(1, 1, 2))) == SlopeIntercept{-1, 2});
  CHECK(std::get<SlopeIntercept>(slope_intercept(line(0, 1, 5))) == SlopeIntercept{0, 5});
  CHECK(std::get<VerticalLine>(slope_intercept(line(1, 0, 1))) == VerticalLine{1});
  // Negative B.
  CHECK(std::get<SlopeIntercept>(slope_intercept(line(1, -2, 3))) ==
        SlopeIntercept{Rational(1, 2), Rational(-3, 2)});
}

TEST_CASE("bisector agrees with the rational slope-intercept map") {
  testing::Gen gen(21);
  for (int i = 0; i < 300; ++i) {
    const Point a = gen.point(), b = gen.point();
    if (a.y == b.y) continue;
    const Rational s = -(a.x - b.x) / (a.y - b.y);
    const Rational t = ((a.x * a.x + a.y * a.y) - (b.x * b.x + b.y * b.y)) / (2 * (a.y - b.y));
    CHECK(std::get<SlopeIntercept>(slope_intercept(bisector(a, b))) == SlopeIntercept{s, t});
  }
}

TEST_CASE("reflection examples") {
  const RigidMap r = reflection(pt(0, 0), pt(2, 0));
  CHECK(r(pt(0, 0)) == pt(2, 0));
  CHECK(r(pt(5, 7)) == pt(-3, 7));
  CHECK(reflection(pt(0, 0), pt(2, 2))(pt(1, 0)) == pt(2, 1));
  CHECK(r.is_reflection());
  CHECK_THROWS_AS(reflection(pt(3, 3), pt(3, 3)), EqualPoints);
}

TEST_CASE("invert examples") {
  CHECK(invert(pt(0, 0), pt(2, 0)) == Point(Rational(1, 2), 0));
  CHECK(invert(pt(0, 0), pt(1, 1)) == Point(Rational(1, 2), Rational(1, 2)));
  CHECK_THROWS_AS(invert(pt(1, 2), pt(1, 2)), EqualPoints);
}

TEST_CASE("circumcircle examples") {
  const CanonicalCircle unit = circumcircle(pt(1, 0), pt(0, 1), pt(-1, 0));
  CHECK(unit.g() == 1);
  CHECK(unit.d() == 0);
  CHECK(unit.e() == 0);
  CHECK(unit.f() == -1);
  const CanonicalCircle c = circumcircle(pt(0, 0), pt(2, 0), pt(0, 2));
  CHECK(c.g() == 1);
  CHECK(c.d() == -2);
  CHECK(c.e() == -2);
  CHECK(c.f() == 0);
  CHECK(c.center() == pt(1, 1));
  CHECK(c.radius2() == 2);
  CHECK_THROWS_AS(circumcircle(pt(0, 0), pt(1, 0), pt(2, 0)), Collinear);
  CHECK_THROWS_AS(circumcircle(pt(0, 0), pt(0, 0), pt(2, 0)), EqualPoints);
}

TEST_CASE("rational_rotation examples") {
  CHECK(rational_rotation(1)(pt(1, 0)) == Point(Rational(3, 5), Rational(4, 5)));
  CHECK(rational_rotation(1)(pt(5, 0)) == pt(3, 4));
  CHECK(rational_rotation(2)(pt(1, 0)) == Point(Rational(-7, 25), Rational(24, 25)));
  for (int k = 1; k <= 6; ++k) CHECK(rational_rotation(k).is_rotation());
  CHECK_THROWS_AS(rational_rotation(0), PreconditionViolated);
}

TEST_CASE("RigidMap rejects non-orthogonal matrices") {
  CHECK_THROWS_AS(RigidMap(1, 1, 0, 1, 0, 0), PreconditionViolated);
  CHECK_NOTHROW(RigidMap(0, 1, 1, 0, 3, 4));
}

TEST_CASE("property: bisector is symmetric and is the equidistance locus") {
  testing::Gen gen(22);
  for (int i = 0; i < 300; ++i) {
    const Point a = gen.point(), b = gen.point();
    if (a == b) continue;
    const CanonicalLine l = bisector(a, b);
    CHECK(l == bisector(b, a));
    const Point mid((a.x + b.x) / 2, (a.y + b.y) / 2);
    CHECK(l.contains(mid));
    // Walk along the line direction (perpendicular to b − a).
    const Rational step = gen.rational();
    const Point q(mid.x - step * (b.y - a.y), mid.y + step * (b.x - a.x));
    CHECK(l.contains(q));
    CHECK(dist2(q, a) == dist2(q, b));
    // Off-line points are not equidistant.
    const Point off(q.x + (b.x - a.x), q.y + (b.y - a.y));
    CHECK(!l.contains(off));
    CHECK(dist2(off, a) != dist2(off, b));
  }
}

TEST_CASE("property: reflection swaps the pair and is an involution") {
  testing::Gen gen(23);
  for (int i = 0; i < 100; ++i) {
    const Point a = gen.point(), b = gen.point();
    if (a == b) continue;
    const RigidMap r = reflection(a, b);
    CHECK(r(a) == b);
    CHECK(r(b) == a);
    CHECK(r.is_reflection());
    const Point p = gen.point();
    CHECK(r(r(p)) == p);
    CHECK(compose(r, r) == RigidMap::identity());
  }
}

TEST_CASE("property: rigid maps preserve dist2") {
  testing::Gen gen(24);
  for (int i = 0; i < 100; ++i) {
    const Point a = gen.point(), b = gen.point(), p = gen.point(), q = gen.point();
    if (a == b) continue;
    const RigidMap maps[] = {reflection(a, b), rational_rotation(1 + i % 4),
                             compose(reflection(a, b), rational_rotation(2)).with_translation(p)};
    for (const RigidMap& m : maps) CHECK(dist2(m(p), m(q)) == dist2(p, q));
  }
}

TEST_CASE("property: inversion is an involution sending circles through the center to lines") {
  testing::Gen gen(25);
  for (int i = 0; i < 100; ++i) {
    const Point c = gen.point(), q = gen.point(), r = gen.point(), s = gen.point();
    if (c == q) continue;
    CHECK(invert(c, invert(c, q)) == q);
    if (c == r || c == s || q == r || q == s || r == s || collinear(c, q, r)) continue;
    const CanonicalCircle circle = circumcircle(c, q, r);
    const Point iq = invert(c, q), ir = invert(c, r);
    // A fourth point on the same circle: reflect q across the diameter through r.
    const Point q2 = reflection_across(line_through(circle.center(), r))(q);
    if (q2 == c || q2 == q) continue;
    CHECK(circle.contains(q2));
    CHECK(collinear(iq, ir, invert(c, q2)));
  }
}

TEST_CASE("property: circumcircle is permutation invariant and passes through its points") {
  testing::Gen gen(26);
  for (int i = 0; i < 100; ++i) {
    std::array<Point, 3> t{gen.point(), gen.point(), gen.point()};
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2] || collinear(t[0], t[1], t[2])) continue;
    const CanonicalCircle c = circumcircle(t[0], t[1], t[2]);
    for (const Point& p : t) CHECK(c.contains(p));
    std::sort(t.begin(), t.end());
    do CHECK(circumcircle(t[0], t[1], t[2]) == c);
    while (std::next_permutation(t.begin(), t.end()));
    CHECK(c.g() > 0);
    CHECK(c.d() * c.d() + c.e() * c.e() - 4 * c.g() * c.f() > 0);
  }
}

TEST_CASE("property: canonical equality matches cross-multiplication") {
  testing::Gen gen(27);
  auto raw = [](const Point& a, const Point& b) { return oracles::raw_bisector(a, b); };
  for (int i = 0; i < 400; ++i) {
    // Small coordinates make accidental coincidences common.
    const Point a = gen.point(2, 2), b = gen.point(2, 2), c = gen.point(2, 2), d = gen.point(2, 2);
    if (a == b || c == d) continue;
    CHECK((bisector(a, b) == bisector(c, d)) == oracles::brute_line_equality(raw(a, b), raw(c, d)));
  }
  // Scaled copies of the same line are equal under both comparisons.
  for (int i = 0; i < 100; ++i) {
    const Rational k = gen.rational() + Rational(1, 7);
    const Rational A = gen.rational(), B = gen.rational() + Rational(1, 3), C = gen.rational();
    CHECK(CanonicalLine::from_coefficients(A, B, C) ==
          CanonicalLine::from_coefficients(k * A, k * B, k * C));
  }
}

TEST_CASE("homogeneous kernels match the rational ones") {
  testing::Gen gen(28);
  for (int i = 0; i < 300; ++i) {
    const Point a = gen.point(), b = gen.point();
    if (a == b) continue;
    CHECK(bisector(to_hom(a), to_hom(b)) == bisector(a, b));
    CHECK(dist2(to_hom(a), to_hom(b)) == dist2(a, b));
  }
}

TEST_CASE("intersection and parallel") {
  CHECK(*intersection(line(1, 0, 1), line(0, 1, 2)) == pt(1, 2));
  CHECK(*intersection(line(1, -1, 0), line(1, 1, 2)) == pt(1, 1));
  CHECK(!intersection(line(1, 1, 0), line(2, 2, 5)).has_value());
  CHECK(parallel(line(1, 1, 0), line(2, 2, 5)));
  CHECK(!parallel(line(1, 1, 0), line(1, -1, 0)));
}
