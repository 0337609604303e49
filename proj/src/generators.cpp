#include "bisect/generators.hpp"

#include <limits>
#include <random>
#include <unordered_set>

#include "bisect/stats.hpp"

namespace bisect {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionViolated(what);
}

}  // namespace

std::string family_name(const GeneratorSpec& spec) {
  return std::visit(overloaded{[](const GridFamily&) { return std::string("grid"); },
                               [](const LineFamily&) { return std::string("line"); },
                               [](const CircleFamily&) { return std::string("circle"); },
                               [](const EllipseTrainFamily&) { return std::string("ellipse"); },
                               [](const RandomFamily&) { return std::string("random"); }},
                    spec);
}

PointSet gen_grid(std::size_t k) {
  require(k >= 2, "gen_grid requires k >= 2");
  std::vector<Point> pts;
  pts.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      pts.emplace_back(static_cast<long long>(i), static_cast<long long>(j));
  return PointSet(std::move(pts));
}

PointSet gen_line(std::size_t n) {
  require(n >= 2, "gen_line requires n >= 2");
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.emplace_back(static_cast<long long>(i), 0LL);
  return PointSet(std::move(pts));
}

PointSet gen_rational_circle(std::size_t n) {
  require(n >= 2, "gen_rational_circle requires n >= 2");
  std::vector<Point> pts;
  pts.reserve(n);
  const long long shift = static_cast<long long>(n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational u(static_cast<long long>(i) - shift);
    const Rational s = 1 + u * u;
    pts.emplace_back((1 - u * u) / s, 2 * u / s);
  }
  return PointSet(std::move(pts));
}

PointSet gen_ellipse_train(std::size_t n, std::size_t m) {
  require(m >= 8 && m % 8 == 0, "ellipse train requires M to be a positive multiple of 8");
  require(n % m == 0 && n > 0, "ellipse train requires M to divide n");
  const std::size_t half = 4 * n / m;
  const std::size_t copies = m / 8;

  std::vector<Point> right;
  right.reserve(half);
  // Tangent half-angle parametrization of 4x² + y² = 1 with u in (0, 1), so x > 0.
  for (std::size_t i = 1; i <= half; ++i) {
    const Rational u(static_cast<long long>(i), static_cast<long long>(half + 1));
    const Rational s = 1 + u * u;
    right.emplace_back((1 - u * u) / (2 * s), 2 * u / s);
  }

  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t j = 0; j < copies; ++j) {
    const Rational shift(4 * static_cast<long long>(j));
    for (const Point& p : right) pts.emplace_back(p.x + shift, p.y);
    for (const Point& p : right) pts.emplace_back(shift - p.x, p.y);
  }
  return PointSet(std::move(pts));
}

std::vector<std::uint64_t> ellipse_train_axis_multiplicities(std::size_t n, std::size_t m) {
  const BisectorSpectrum spectrum = bisector_spectrum(gen_ellipse_train(n, m));
  std::vector<std::uint64_t> out;
  for (std::size_t j = 0; j < m / 8; ++j)
    out.push_back(spectrum.multiplicity(
        CanonicalLine::from_integers(1, 0, BigInt(4 * static_cast<long long>(j)))));
  return out;
}

PointSet gen_random(std::size_t n, std::int64_t range, std::uint64_t seed) {
  require(n >= 2, "gen_random requires n >= 2");
  if (range < 0) throw RangeTooSmall("negative range");
  const unsigned __int128 side = static_cast<unsigned __int128>(2 * range + 1);
  if (side * side < n)
    throw RangeTooSmall(std::to_string(n) + " distinct points do not fit in [-" +
                        std::to_string(range) + ", " + std::to_string(range) + "]^2");

  std::mt19937_64 rng(seed);
  const std::uint64_t width = static_cast<std::uint64_t>(2 * range + 1);
  // Rejection sampling keeps the draw unbiased and independent of the
  // standard library's distribution implementation.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % width;
  auto draw = [&]() -> long long {
    std::uint64_t v;
    do v = rng();
    while (v >= limit);
    return static_cast<long long>(v % width) - range;
  };

  std::unordered_set<Point> seen;
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const long long x = draw();
    const long long y = draw();
    Point p(x, y);
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

GenericImage ensure_generic(const PointSet& points) {
  if (points.generic()) return {points, 0};
  for (int k = 1;; ++k) {
    PointSet rotated = points.transformed(rational_rotation(k));
    if (rotated.generic()) return {std::move(rotated), k};
  }
}

PointSet generate(const GeneratorSpec& spec) {
  return std::visit(
      overloaded{[](const GridFamily& f) { return gen_grid(f.k); },
                 [](const LineFamily& f) { return gen_line(f.n); },
                 [](const CircleFamily& f) { return gen_rational_circle(f.n); },
                 [](const EllipseTrainFamily& f) { return gen_ellipse_train(f.n, f.m); },
                 [](const RandomFamily& f) { return gen_random(f.n, f.range, f.seed); }},
      spec);
}

}  // namespace bisect
