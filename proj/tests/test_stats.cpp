#include <doctest.h>

#include "bisect/generators.hpp"
#include "bisect/stats.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bisect;

namespace {

CanonicalLine line(long long a, long long b, long long c) {
  return CanonicalLine::from_integers(a, b, c);
}

PointSet diamond() { return PointSet({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
PointSet three_on_axis() { return PointSet({{0, 0}, {1, 0}, {2, 0}}); }

std::uint64_t squared(std::uint64_t v) { return v * v; }

}  // namespace

TEST_CASE("bisector spectrum examples") {
  const BisectorSpectrum two = bisector_spectrum(PointSet({{0, 0}, {3, 1}}));
  REQUIRE(two.size() == 1);
  CHECK(two.entries[0].second == 2);

  const BisectorSpectrum axis = bisector_spectrum(three_on_axis());
  CHECK(axis.size() == 3);
  CHECK(axis.multiplicity(CanonicalLine::from_coefficients(1, 0, Rational(1, 2))) == 2);
  CHECK(axis.multiplicity(line(1, 0, 1)) == 2);
  CHECK(axis.multiplicity(CanonicalLine::from_coefficients(1, 0, Rational(3, 2))) == 2);

  const BisectorSpectrum sq = bisector_spectrum(diamond());
  CHECK(sq.size() == 4);
  CHECK(sq.multiplicity(line(1, -1, 0)) == 4);
  CHECK(sq.multiplicity(line(1, 1, 0)) == 4);
  CHECK(sq.multiplicity(line(1, 0, 0)) == 2);
  CHECK(sq.multiplicity(line(0, 1, 0)) == 2);
  CHECK(sq.multiplicity(line(0, 1, 7)) == 0);
}

TEST_CASE("energy examples") {
  CHECK(bisector_energy(PointSet({{0, 0}, {3, 1}})) == 4);
  CHECK(bisector_energy(three_on_axis()) == 12);
  CHECK(bisector_energy(diamond()) == 40);
  CHECK(oracles::brute_energy(three_on_axis()) == 12);
  CHECK(oracles::brute_energy(diamond()) == 40);
}

TEST_CASE("distinct bisectors on equally spaced lines") {
  for (std::size_t n = 3; n <= 40; ++n) CHECK(distinct_bisectors(gen_line(n)) == 2 * n - 3);
  CHECK(distinct_bisectors(diamond()) == 4);
}

TEST_CASE("distance examples") {
  CHECK(distinct_distances(gen_line(9)) == 8);
  CHECK(distinct_distances(diamond()) == 2);
  const DistanceSpectrum grid = distance_spectrum(gen_grid(3));
  REQUIRE(grid.size() == 5);
  const Rational expected[] = {1, 2, 4, 5, 8};
  for (std::size_t i = 0; i < 5; ++i) CHECK(grid.entries[i].first == expected[i]);
  CHECK(distance_spectrum(diamond()).count(2) == 8);
  CHECK(distance_spectrum(diamond()).count(4) == 4);
  CHECK(sum_m_squared(diamond()) == 80);
}

TEST_CASE("isoceles and incidence examples") {
  CHECK(isoceles_triples(three_on_axis()) == 2);
  CHECK(isoceles_triples(diamond()) == 8);
  CHECK(isoceles_triples(PointSet({{0, 0}, {1, 0}, {0, 3}})) == 0);
  CHECK(incidence_mult(diamond()) == 8);
  CHECK(incidence_mult(three_on_axis()) == 2);
  CHECK(incidence_mult(PointSet({{0, 0}, {3, 1}})) == 0);
  CHECK(oracles::brute_isoceles(diamond()) == 8);
  CHECK_THROWS_AS(isoceles_triples(PointSet({{0, 0}, {1, 1}})), PreconditionViolated);
}

TEST_CASE("collinear and cocircular examples") {
  CHECK(max_collinear(gen_grid(3)) == 3);
  CHECK(max_collinear(diamond()) == 2);
  CHECK(max_collinear(gen_line(11)) == 11);
  CHECK(max_cocircular(diamond()) == 4);
  PointSet with_center({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {0, 0}});
  CHECK(max_cocircular(with_center) == 4);
  CHECK(oracles::brute_max_cocircular(with_center) == 4);
  CHECK(max_cocircular(gen_grid(3)) == 4);
  CHECK(oracles::brute_max_cocircular(gen_grid(3)) == 4);
  CHECK(max_cocircular(gen_rational_circle(10)) == 10);
  CHECK(max_cocircular(gen_line(6)) == 2);
}

TEST_CASE("rich lines and rich bisectors") {
  for (std::size_t k = 3; k <= 6; ++k) CHECK(rich_lines(gen_grid(k), k) >= 2 * k);
  CHECK(rich_lines(gen_grid(3), 3) == 8);
  CHECK(rich_bisectors(diamond(), 2) == 2);
  CHECK(rich_lines(gen_line(7), 7) == 1);
  CHECK_THROWS_AS(rich_lines(gen_line(7), 1), PreconditionViolated);
  const LineCensus census = line_census(gen_grid(3));
  CHECK(census.lines_by_size.at(3) == 8);
  CHECK(census.lines_by_size.at(2) == 12);
}

TEST_CASE("stats_report examples") {
  const StatsReport sq = stats_report(diamond());
  CHECK(sq.n == 4);
  CHECK(sq.energy == 40);
  CHECK(sq.distinct_bisectors == 4);
  CHECK(sq.distinct_distances == 2);
  CHECK(sq.max_collinear == 2);
  CHECK(sq.max_cocircular == 4);
  CHECK(sq.isoceles_triples == 8);
  CHECK(sq.incidence_mult == 8);
  CHECK(report_invariants_hold(sq));

  const StatsReport axis = stats_report(three_on_axis());
  CHECK(axis.energy == 12);
  CHECK(axis.distinct_bisectors == 3);
  CHECK(axis.distinct_distances == 2);
  CHECK(axis.max_collinear == 3);
  CHECK(axis.isoceles_triples == 2);
  CHECK(axis.rich_lines.at(3) == 1);

  CHECK_FALSE(stats_report(diamond(), {false}).max_cocircular.has_value());
  CHECK_THROWS_AS(stats_report(PointSet({{0, 0}, {1, 1}})), PreconditionViolated);
}

TEST_CASE("property: spectra sum to n(n-1) with even entries") {
  testing::Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + gen.integer(0, 30);
    const PointSet p = gen.set(n, trial % 2 == 0, 4);
    std::uint64_t mu = 0, m = 0;
    for (const auto& [l, count] : bisector_spectrum(p).entries) {
      CHECK(count % 2 == 0);
      mu += count;
    }
    for (const auto& [d, count] : distance_spectrum(p).entries) {
      CHECK(count % 2 == 0);
      m += count;
    }
    CHECK(mu == n * (n - 1));
    CHECK(m == n * (n - 1));
  }
}

TEST_CASE("property: fast statistics match the oracles") {
  testing::Gen gen(32);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + gen.integer(0, 17);
    // Alternate dense lattice sets (many coincidences) and rational sets.
    const PointSet p = trial % 2 == 0 ? gen.set(n, true, 3) : gen.set(n, false, 3, 3);
    const StatsReport r = stats_report(p);
    CHECK(r.energy == oracles::brute_energy(p));
    CHECK(r.distinct_bisectors == oracles::brute_distinct_bisectors(p));
    CHECK(r.distinct_distances == oracles::brute_distinct_distances(p));
    CHECK(r.isoceles_triples == oracles::brute_isoceles(p));
    CHECK(r.incidence_mult == oracles::brute_incidence_mult(p));
    CHECK(r.max_collinear == oracles::brute_max_collinear(p));
    CHECK(*r.max_cocircular == oracles::brute_max_cocircular(p));
  }
}

TEST_CASE("property: report invariants hold") {
  testing::Gen gen(33);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet p = gen.set(3 + gen.integer(0, 40), trial % 3 == 0, 5);
    const StatsReport r = stats_report(p);
    CHECK(report_invariants_hold(r));
    CHECK(r.energy * r.distinct_bisectors >= squared(r.n * (r.n - 1)));
    CHECK(r.distinct_bisectors + 1 >= r.n);
    CHECK(r.isoceles_triples == r.incidence_mult);
  }
}

TEST_CASE("property: statistics are invariant under rigid motions and scaling") {
  testing::Gen gen(34);
  for (int trial = 0; trial < 12; ++trial) {
    const PointSet p = gen.set(4 + gen.integer(0, 14), trial % 2 == 0, 3);
    const StatsReport base = stats_report(p);
    const RigidMap motion =
        rational_rotation(1 + trial % 3).with_translation(gen.point());
    StatsReport moved = stats_report(p.transformed(motion));
    moved.generic = base.generic;
    CHECK(moved == base);

    const Rational factor = Rational(gen.integer(1, 9), gen.integer(1, 9));
    const PointSet big = p.scaled(factor);
    StatsReport scaled = stats_report(big);
    scaled.generic = base.generic;
    CHECK(scaled == base);
    const DistanceSpectrum d0 = distance_spectrum(p), d1 = distance_spectrum(big);
    REQUIRE(d0.size() == d1.size());
    for (std::size_t i = 0; i < d0.size(); ++i) {
      CHECK(d1.entries[i].first == d0.entries[i].first * factor * factor);
      CHECK(d1.entries[i].second == d0.entries[i].second);
    }
  }
}

TEST_CASE("property: modular cocircularity matches the exact path") {
  testing::Gen gen(35);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + gen.integer(0, 40);
    const PointSet p = trial % 3 == 0   ? gen.set(n, true, 4)
                       : trial % 3 == 1 ? gen.set(n, false, 3, 2)
                                        : gen_rational_circle(n);
    const std::size_t exact = detail::max_cocircular_exact(p);
    CHECK(max_cocircular(p) == exact);
    if (auto fast = detail::max_cocircular_modular(p, (1ULL << 61) - 1)) CHECK(*fast == exact);
    // Tiny primes collide constantly; the certified answer is still exact or absent.
    if (auto tiny = detail::max_cocircular_modular(p, 101)) CHECK(*tiny == exact);
  }
}

TEST_CASE("ensure_generic keeps every statistic") {
  const PointSet grid = gen_grid(3);
  const GenericImage img = ensure_generic(grid);
  CHECK(img.points.generic());
  CHECK(img.rotations >= 1);
  StatsReport a = stats_report(grid), b = stats_report(img.points);
  CHECK_FALSE(a.generic);
  CHECK(b.generic);
  b.generic = false;
  CHECK(a == b);
}
