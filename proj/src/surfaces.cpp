#include "bisect/surfaces.hpp"

#include <algorithm>
#include <unordered_map>

#include "bisect/stats.hpp"

namespace bisect {

namespace {

void require_cap(const PointSet& points, std::size_t cap, const char* audit) {
  if (points.size() > cap)
    throw SetTooLarge(std::string(audit) + ": " + std::to_string(points.size()) +
                      " points exceed the cap of " + std::to_string(cap));
}

// Pair (b, d) encoded as b * n + d.
using PairCode = std::uint32_t;

// Surface incidences of P²* for every anchor, read off the bisector tables.
class SurfaceIndex {
 public:
  explicit SurfaceIndex(const PointSet& points)
      : points_(points), n_(points.size()), analysis_(points) {
    const std::size_t lines = analysis_.distinct_bisectors();
    partner_.assign(n_ * lines, -1);
    // For a fixed c, distinct d give distinct bisectors.
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t d = 0; d < n_; ++d)
        if (d != c) partner_[c * lines + analysis_.line_id(c, d)] = static_cast<int>(d);
    members_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t c = 0; c < n_; ++c) {
        if (a == c) continue;
        auto& list = members_[a * n_ + c];
        for (std::size_t b = 0; b < n_; ++b) {
          if (b == a) continue;
          const int d = partner_[c * lines + analysis_.line_id(a, b)];
          if (d >= 0 && static_cast<std::size_t>(d) != b)
            list.push_back(static_cast<PairCode>(b * n_ + static_cast<std::size_t>(d)));
        }
      }
  }

  std::size_t n() const { return n_; }
  const BisectorAnalysis& analysis() const { return analysis_; }
  const Point& point(std::size_t i) const { return points_[i]; }

  // Sorted codes of S_ac ∩ P²*.
  const std::vector<PairCode>& members(std::size_t a, std::size_t c) const {
    return members_[a * n_ + c];
  }
  bool member(std::size_t a, std::size_t c, std::size_t b, std::size_t d) const {
    const auto& list = members(a, c);
    return std::binary_search(list.begin(), list.end(), static_cast<PairCode>(b * n_ + d));
  }
  std::vector<PairCode> common(std::size_t a, std::size_t c, std::size_t a2,
                               std::size_t c2) const {
    const auto& l = members(a, c);
    const auto& r = members(a2, c2);
    std::vector<PairCode> out;
    std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
    return out;
  }

  std::string describe_pair(PairCode code) const {
    return "(" + to_string(points_[code / n_]) + ", " + to_string(points_[code % n_]) + ")";
  }

 private:
  const PointSet& points_;
  std::size_t n_;
  BisectorAnalysis analysis_;
  std::vector<int> partner_;
  std::vector<std::vector<PairCode>> members_;
};

std::string describe_anchor(const Point& a, const Point& c) {
  return "anchor (" + to_string(a) + ", " + to_string(c) + ")";
}

bool is_zero(const std::pair<Rational, Rational>& fg) { return fg.first == 0 && fg.second == 0; }

}  // namespace

SurfaceAnchor::SurfaceAnchor(Point a_, Point c_) : a(std::move(a_)), c(std::move(c_)) {
  if (a == c) throw PreconditionViolated("surface anchor with a == c");
}

bool surface_member(const SurfaceAnchor& anchor, const PairPoint& p) {
  if (anchor.a == p.b || anchor.c == p.d || p.b == p.d) return false;
  return bisector(anchor.a, p.b) == bisector(anchor.c, p.d);
}

bool dual_surface_member(const PairPoint& bd, const Point& a, const Point& c) {
  if (a == bd.b || c == bd.d) return false;
  return bisector(a, bd.b) == bisector(c, bd.d);
}

std::pair<Rational, Rational> fg_eval(const SurfaceAnchor& anchor, const PairPoint& p) {
  const Point& a = anchor.a;
  const Point& c = anchor.c;
  const Point& b = p.b;
  const Point& d = p.d;
  Rational f = (a.x - b.x) * (c.y - d.y) - (a.y - b.y) * (c.x - d.x);
  Rational g = (a.y - b.y) * (c.x * c.x + c.y * c.y - d.x * d.x - d.y * d.y) -
               (c.y - d.y) * (a.x * a.x + a.y * a.y - b.x * b.x - b.y * b.y);
  return {std::move(f), std::move(g)};
}

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::ConcentricCircles:
      return "concentric_circles";
    case CurveKind::ParallelLines:
      return "parallel_lines";
    case CurveKind::EmptyIntersection:
      return "empty_intersection";
    case CurveKind::Degenerate:
      return "degenerate";
  }
  return "unknown";
}

bool curve_contains(const Curve& curve, const Point& p) {
  return std::visit([&](const auto& c) { return c.contains(p); }, curve);
}

CurvePair intersection_curves(const Point& a, const Point& c, const Point& a2, const Point& c2) {
  if (a == c || a2 == c2) throw PreconditionViolated("anchor with a == c");
  if (a == a2 && c == c2) throw PreconditionViolated("identical anchors");
  const Rational delta2 = dist2(a, c);
  if (delta2 != dist2(a2, c2)) throw PreconditionViolated("anchor distances differ");

  CurvePair out;
  if (a == a2 || c == c2) {
    // A common (b, d) would need one reflection sending d to both c and c2
    // (or two reflections sending b to the same a).
    out.kind = CurveKind::EmptyIntersection;
    return out;
  }

  const CanonicalLine first = bisector(a, a2);
  const CanonicalLine second = bisector(c, c2);
  auto circles_about = [&](const Point& o) {
    out.kind = CurveKind::ConcentricCircles;
    out.center = o;
    out.c1 = CanonicalCircle::from_center(o, a);
    out.c2 = CanonicalCircle::from_center(o, c);
  };
  auto translation_lines = [&] {
    out.kind = CurveKind::ParallelLines;
    out.c1 = line_through(a, a2);
    out.c2 = line_through(c, c2);
  };

  if (first == second) {
    const CanonicalLine seg1 = line_through(a, c);
    const CanonicalLine seg2 = line_through(a2, c2);
    if (seg1 == seg2)
      circles_about(*intersection(seg1, first));
    else if (auto o = intersection(seg1, seg2))
      circles_about(*o);
    else
      translation_lines();
  } else if (auto o = intersection(first, second)) {
    circles_about(*o);
  } else {
    translation_lines();
  }
  return out;
}

// ---------------------------------------------------------------------------

AuditReport containment_audit(const PointSet& points, std::size_t cap) {
  require_cap(points, cap, "containment_audit");
  AuditReport report;
  report.name = "containment";
  const SurfaceIndex index(points);
  const std::size_t n = points.size();
  std::uint64_t members = 0, gap_points = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      if (a == c) continue;
      const SurfaceAnchor anchor(points[a], points[c]);
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d) {
          if (b == d) continue;
          ++report.checked;
          const bool member = index.member(a, c, b, d);
          const bool zero = is_zero(fg_eval(anchor, {points[b], points[d]}));
          if (member) {
            ++members;
            if (!zero)
              report.violations.push_back(describe_anchor(points[a], points[c]) + ": member " +
                                          index.describe_pair(static_cast<PairCode>(b * n + d)) +
                                          " has f, g != 0");
          } else if (zero) {
            ++gap_points;
            if (points.generic() && a != b && c != d)
              report.violations.push_back(describe_anchor(points[a], points[c]) +
                                          ": closure point " +
                                          index.describe_pair(static_cast<PairCode>(b * n + d)) +
                                          " with a != b and c != d");
          }
        }
    }
  report.counters["surface_points"] = members;
  report.counters["closure_gap_points"] = gap_points;
  report.counters["closure_gap_checked"] = points.generic() ? 1 : 0;
  return report;
}

AuditReport lemma32_audit(const PointSet& points, std::size_t cap) {
  require_cap(points, cap, "lemma32_audit");
  AuditReport report;
  report.name = "lemma32";
  const SurfaceIndex index(points);
  const BisectorAnalysis& analysis = index.analysis();
  const std::size_t n = points.size();

  std::vector<std::pair<std::size_t, std::size_t>> anchors;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (a != c) anchors.emplace_back(a, c);

  for (const auto& [a, c] : anchors)
    for (const auto& [a2, c2] : anchors) {
      if ((a == a2 && c == c2) || analysis.distance_id(a, c) != analysis.distance_id(a2, c2))
        continue;
      const CurvePair curves = intersection_curves(points[a], points[c], points[a2], points[c2]);
      ++report.checked;
      ++report.counters[to_string(curves.kind)];
      auto where = [&] {
        return describe_anchor(points[a], points[c]) + " vs " +
               describe_anchor(points[a2], points[c2]);
      };
      const std::vector<PairCode> shared = index.common(a, c, a2, c2);
      report.counters["common_points"] += shared.size();

      if (curves.kind == CurveKind::EmptyIntersection) {
        if (!shared.empty())
          report.violations.push_back(where() + ": empty intersection has " +
                                      std::to_string(shared.size()) + " common points");
        continue;
      }
      const bool has_curves = curves.c1 && curves.c2;
      if (has_curves) {
        if (!curve_contains(*curves.c1, points[a]) || !curve_contains(*curves.c1, points[a2]) ||
            !curve_contains(*curves.c2, points[c]) || !curve_contains(*curves.c2, points[c2]))
          report.violations.push_back(where() + ": anchors not on their curves");
      }
      const Rational delta2 = dist2(points[a], points[c]);
      for (PairCode code : shared) {
        const Point& b = points[code / n];
        const Point& d = points[code % n];
        if (dist2(b, d) != delta2)
          report.violations.push_back(where() + ": common point " + index.describe_pair(code) +
                                      " off H_delta");
        if (has_curves && (!curve_contains(*curves.c1, b) || !curve_contains(*curves.c2, d)))
          report.violations.push_back(where() + ": common point " + index.describe_pair(code) +
                                      " off C1 x C2");
      }
    }
  return report;
}

AuditReport quadruple_invariant_audit(const PointSet& points, std::size_t cap) {
  require_cap(points, cap, "quadruple_invariant_audit");
  AuditReport report;
  report.name = "quadruple_invariant";
  const BisectorAnalysis analysis(points);
  const std::size_t n = points.size();

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_line(
      analysis.distinct_bisectors());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b)
        by_line[analysis.line_id(a, b)].emplace_back(static_cast<std::uint32_t>(a),
                                                     static_cast<std::uint32_t>(b));

  for (std::size_t id = 0; id < by_line.size(); ++id) {
    const auto& pairs = by_line[id];
    const RigidMap reflect = reflection_across(analysis.spectrum().entries[id].first);
    for (const auto& [a, b] : pairs)
      for (const auto& [c, d] : pairs) {
        ++report.checked;
        auto where = [&] {
          return "pairs (" + to_string(points[a]) + ", " + to_string(points[b]) + ") and (" +
                 to_string(points[c]) + ", " + to_string(points[d]) + ")";
        };
        if (dist2(points[a], points[c]) != dist2(points[b], points[d]))
          report.violations.push_back(where() + ": |ac| != |bd|");
        if (reflection(points[a], points[b]) != reflect)
          report.violations.push_back(where() + ": reflection differs from the shared bisector's");
        if (!(reflect(points[c]) == points[d]))
          report.violations.push_back(where() + ": reflection does not map c to d");
      }
  }
  report.counters["bisector_lines"] = by_line.size();
  return report;
}

BicliqueAudit k2m_audit(const PointSet& points, std::size_t cap) {
  require_cap(points, cap, "k2m_audit");
  BicliqueAudit out;
  out.report.name = "k2m";
  const SurfaceIndex index(points);
  const BisectorAnalysis& analysis = index.analysis();
  const std::size_t n = points.size();

  std::vector<std::pair<std::size_t, std::size_t>> anchors;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (a != c) anchors.emplace_back(a, c);

  // Surfaces through two points of P²*.
  for (std::size_t i = 0; i < anchors.size(); ++i)
    for (std::size_t j = i + 1; j < anchors.size(); ++j) {
      const auto [a, c] = anchors[i];
      const auto [a2, c2] = anchors[j];
      if (analysis.distance_id(a, c) != analysis.distance_id(a2, c2)) continue;
      ++out.report.checked;
      out.max_surface_pair_common_points =
          std::max(out.max_surface_pair_common_points, index.common(a, c, a2, c2).size());
    }

  // Points of P²* shared by two surfaces, counted per point pair.
  std::unordered_map<std::uint64_t, std::size_t> shared;
  for (const auto& [a, c] : anchors) {
    const auto& list = index.members(a, c);
    for (std::size_t s = 0; s < list.size(); ++s)
      for (std::size_t t = s + 1; t < list.size(); ++t) {
        const std::uint64_t key = (static_cast<std::uint64_t>(list[s]) << 32) | list[t];
        out.max_point_pair_common_surfaces =
            std::max(out.max_point_pair_common_surfaces, ++shared[key]);
      }
  }

  out.bound = max_collinear(points);
  if (n >= 3) out.bound = std::max(out.bound, max_cocircular(points));
  out.report.counters["max_surface_pair_common_points"] = out.max_surface_pair_common_points;
  out.report.counters["max_point_pair_common_surfaces"] = out.max_point_pair_common_surfaces;
  out.report.counters["bound"] = out.bound;
  if (out.max_surface_pair_common_points > out.bound)
    out.report.violations.push_back("two surfaces share " +
                                    std::to_string(out.max_surface_pair_common_points) +
                                    " points, bound " + std::to_string(out.bound));
  if (out.max_point_pair_common_surfaces > out.bound)
    out.report.violations.push_back("two points share " +
                                    std::to_string(out.max_point_pair_common_surfaces) +
                                    " surfaces, bound " + std::to_string(out.bound));
  return out;
}

}  // namespace bisect
