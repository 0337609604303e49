#include "oracles.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace bisect::oracles {

namespace {

void cap(const PointSet& points, std::size_t limit, const char* what) {
  if (points.size() > limit)
    throw SetTooLarge(std::string(what) + " is capped at " + std::to_string(limit) + " points");
}

Rational sq(const Rational& v) { return v * v; }

Rational d2(const Point& p, const Point& q) { return sq(p.x - q.x) + sq(p.y - q.y); }

std::vector<std::vector<Rational>> distance_table(const PointSet& points) {
  std::vector<std::vector<Rational>> d(points.size(), std::vector<Rational>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) d[i][j] = d2(points[i], points[j]);
  return d;
}

bool on_line(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

}  // namespace

RawLine raw_bisector(const Point& p, const Point& q) {
  const Rational a = 2 * (q.x - p.x);
  const Rational b = 2 * (q.y - p.y);
  const Rational c = sq(p.x) + sq(p.y) - sq(q.x) - sq(q.y);
  const BigInt scale = den(a) * den(b) * den(c);
  return {num(a) * (scale / den(a)), num(b) * (scale / den(b)),
          num(c) * (scale / den(c))};
}

bool brute_line_equality(const RawLine& l1, const RawLine& l2) {
  return l1.a * l2.b == l2.a * l1.b && l1.a * l2.c == l2.a * l1.c && l1.b * l2.c == l2.b * l1.c;
}

std::uint64_t brute_energy(const PointSet& points) {
  cap(points, kQuarticCap, "brute_energy");
  const std::size_t n = points.size();
  std::vector<RawLine> lines;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) lines.push_back(raw_bisector(points[a], points[b]));
  std::uint64_t count = 0;
  for (const RawLine& ab : lines)
    for (const RawLine& cd : lines)
      if (brute_line_equality(ab, cd)) ++count;
  return count;
}

std::size_t brute_distinct_bisectors(const PointSet& points) {
  cap(points, kQuarticCap, "brute_distinct_bisectors");
  std::vector<RawLine> seen;
  const std::size_t n = points.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      RawLine l = raw_bisector(points[a], points[b]);
      bool fresh = true;
      for (const RawLine& s : seen)
        if (brute_line_equality(s, l)) {
          fresh = false;
          break;
        }
      if (fresh) seen.push_back(std::move(l));
    }
  return seen.size();
}

std::uint64_t brute_isoceles(const PointSet& points) {
  cap(points, kCubicCap, "brute_isoceles");
  const std::size_t n = points.size();
  const auto d = distance_table(points);
  std::uint64_t count = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        if (p != q && p != r && q != r && d[p][q] == d[p][r]) ++count;
  return count;
}

std::uint64_t brute_incidence_mult(const PointSet& points) {
  cap(points, kCubicCap, "brute_incidence_mult");
  const std::size_t n = points.size();
  const auto d = distance_table(points);
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      for (std::size_t p = 0; p < n; ++p)
        if (d[p][a] == d[p][b]) ++count;
    }
  return count;
}

std::size_t brute_max_collinear(const PointSet& points) {
  cap(points, kCubicCap, "brute_max_collinear");
  const std::size_t n = points.size();
  std::size_t best = n < 2 ? n : 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t on = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (on_line(points[i], points[j], points[k])) ++on;
      best = std::max(best, on);
    }
  return best;
}

std::size_t brute_max_cocircular(const PointSet& points) {
  cap(points, kCubicCap, "brute_max_cocircular");
  const std::size_t n = points.size();
  using Key = std::tuple<Rational, Rational, Rational>;
  std::map<Key, std::set<std::size_t>> circles;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Point& p = points[i];
        const Point& q = points[j];
        const Point& r = points[k];
        if (on_line(p, q, r)) continue;
        // Solve 2(q − p)·o = |q|² − |p|², 2(r − p)·o = |r|² − |p|² by Cramer.
        const Rational a1 = 2 * (q.x - p.x), b1 = 2 * (q.y - p.y);
        const Rational a2 = 2 * (r.x - p.x), b2 = 2 * (r.y - p.y);
        const Rational c1 = sq(q.x) + sq(q.y) - sq(p.x) - sq(p.y);
        const Rational c2 = sq(r.x) + sq(r.y) - sq(p.x) - sq(p.y);
        const Rational det = a1 * b2 - a2 * b1;
        const Point o((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det);
        auto& members = circles[Key{o.x, o.y, d2(o, p)}];
        members.insert({i, j, k});
      }
  std::size_t best = n < 2 ? n : 2;
  for (const auto& [key, members] : circles) best = std::max(best, members.size());
  return best;
}

std::size_t brute_distinct_distances(const PointSet& points) {
  cap(points, kCubicCap, "brute_distinct_distances");
  std::set<Rational> seen;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) seen.insert(d2(points[i], points[j]));
  return seen.size();
}

std::pair<Rational, Rational> brute_fg(const Point& a, const Point& c, const Point& b,
                                       const Point& d) {
  const Rational f = a.x * c.y - a.x * d.y - b.x * c.y + b.x * d.y - a.y * c.x + a.y * d.x +
                     b.y * c.x - b.y * d.x;
  const Rational nc = c.x * c.x + c.y * c.y - d.x * d.x - d.y * d.y;
  const Rational na = a.x * a.x + a.y * a.y - b.x * b.x - b.y * b.y;
  const Rational g = a.y * nc - b.y * nc - c.y * na + d.y * na;
  return {f, g};
}

}  // namespace bisect::oracles
