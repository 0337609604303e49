#include <doctest.h>

#include "bisect/generators.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bisect;
using namespace bisect::oracles;

TEST_CASE("oracle examples") {
  CHECK(brute_energy(PointSet({{0, 0}, {1, 0}})) == 4);
  CHECK(brute_energy(PointSet({{0, 0}, {1, 0}, {2, 0}})) == 12);
  CHECK(brute_energy(testing::square()) == 40);
  CHECK(brute_isoceles(testing::square()) == 8);
  CHECK(brute_max_cocircular(PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {Rational(1, 2), Rational(1, 2)}})) == 4);
  CHECK(brute_line_equality({1, 0, 1}, {2, 0, 2}));
  CHECK_FALSE(brute_line_equality({1, 0, 1}, {1, 0, 2}));
  CHECK_FALSE(brute_line_equality({1, 1, 0}, {1, -1, 0}));
  CHECK(brute_line_equality({0, -3, 6}, {0, 1, -2}));
}

TEST_CASE("raw bisectors are equidistance loci") {
  testing::Gen gen(51);
  for (int i = 0; i < 100; ++i) {
    const Point p = gen.point(), q = gen.point();
    if (p == q) continue;
    const RawLine l = raw_bisector(p, q);
    const Point mid((p.x + q.x) / 2, (p.y + q.y) / 2);
    // Raw lines are A x + B y + C = 0.
    CHECK(Rational(l.a) * mid.x + Rational(l.b) * mid.y + Rational(l.c) == 0);
  }
}

TEST_CASE("oracle caps are enforced") {
  CHECK_THROWS_AS(brute_energy(gen_line(31)), SetTooLarge);
  CHECK_THROWS_AS(brute_distinct_bisectors(gen_line(31)), SetTooLarge);
  CHECK_THROWS_AS(brute_isoceles(gen_line(61)), SetTooLarge);
  CHECK_THROWS_AS(brute_max_cocircular(gen_line(61)), SetTooLarge);
  CHECK_THROWS_AS(brute_max_collinear(gen_line(61)), SetTooLarge);
  CHECK_NOTHROW(brute_energy(gen_line(30)));
}

TEST_CASE("oracles on closed-form families") {
  for (std::size_t n = 3; n <= 12; ++n) CHECK(brute_distinct_bisectors(gen_line(n)) == 2 * n - 3);
  CHECK(brute_max_collinear(gen_grid(4)) == 4);
  CHECK(brute_max_cocircular(gen_rational_circle(12)) == 12);
  CHECK(brute_max_cocircular(gen_line(5)) == 2);
  CHECK(brute_distinct_distances(gen_grid(3)) == 5);
}
