#pragma once

// Bisector surfaces in R⁴ and audits of their incidence structure.
//
// For an anchor (a, c), the surface S_ac is the set of pairs (b, d) with
// bi(a, b) = bi(c, d), where a ≠ b, c ≠ d and b ≠ d. It sits inside the zero
// set of the two polynomials evaluated by fg_eval; outside the surface that
// zero set only adds three planes, which a generic set (no repeated x- or
// y-coordinates) meets only at pairs with a = b or c = d.
//
// Definitional note: the ordered-quadruple domain is written with the side
// conditions a ≠ c, b ≠ d, while the closure argument concludes from a = b or
// c = d. The audit checks the latter, literal form.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bisect/point_set.hpp"

namespace bisect {

struct SurfaceAnchor {
  Point a;
  Point c;
  // Throws PreconditionViolated when a == c.
  SurfaceAnchor(Point a_, Point c_);
};

struct PairPoint {
  Point b;
  Point d;
};

bool surface_member(const SurfaceAnchor& anchor, const PairPoint& p);

// (a, c) ∈ S*_bd: a ≠ b, c ≠ d and bi(a, b) = bi(c, d).
bool dual_surface_member(const PairPoint& bd, const Point& a, const Point& c);

// (f_ac(b, d), g_ac(b, d)).
std::pair<Rational, Rational> fg_eval(const SurfaceAnchor& anchor, const PairPoint& p);

enum class CurveKind { ConcentricCircles, ParallelLines, EmptyIntersection, Degenerate };

std::string to_string(CurveKind kind);

using Curve = std::variant<CanonicalLine, CanonicalCircle>;

bool curve_contains(const Curve& curve, const Point& p);

struct CurvePair {
  CurveKind kind = CurveKind::Degenerate;
  std::optional<Point> center;  // ConcentricCircles only
  std::optional<Curve> c1;      // holds a and a2
  std::optional<Curve> c2;      // holds c and c2
};

// Curves C1 ∋ a, a2 and C2 ∋ c, c2 with S_ac ∩ S_a2c2 ⊂ {(b, d) : b ∈ C1,
// d ∈ C2, |bd| = |ac|}.
//
//  - bi(a, a2) and bi(c, c2) meet in one point o: circles about o.
//  - they coincide in ℓ: o is where line(a, c) meets line(a2, c2). If those
//    lines are parallel the composed map is a translation along them, giving
//    the parallel lines line(a, a2), line(c, c2); if they coincide, o is their
//    common line's crossing with ℓ.
//  - they are parallel: the lines line(a, a2) and line(c, c2).
//
// A shared anchor point (a = a2 or c = c2) makes the intersection empty.
// Throws PreconditionViolated for identical anchors or unequal/zero
// anchor distances.
CurvePair intersection_curves(const Point& a, const Point& c, const Point& a2, const Point& c2);

struct AuditReport {
  std::string name;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::map<std::string, std::uint64_t> counters;

  bool passed() const { return violations.empty(); }
};

struct AuditCaps {
  std::size_t containment = 16;
  std::size_t lemma32 = 20;
  std::size_t quadruple = 40;
  std::size_t k2m = 16;
};

// surface_member ⇒ fg_eval = (0, 0) on every anchor and every pair b ≠ d; on
// generic sets also fg_eval = (0, 0) ∧ ¬surface_member ⇒ a = b ∨ c = d.
AuditReport containment_audit(const PointSet& points, std::size_t cap = AuditCaps{}.containment);

// Every common point of two same-distance surfaces lies on the curves from
// intersection_curves and on H_δ.
AuditReport lemma32_audit(const PointSet& points, std::size_t cap = AuditCaps{}.lemma32);

// Same-bisector ordered pairs (a, b), (c, d): |ac| = |bd| and the reflection
// across bi(a, b) maps c to d.
AuditReport quadruple_invariant_audit(const PointSet& points,
                                      std::size_t cap = AuditCaps{}.quadruple);

struct BicliqueAudit {
  std::size_t max_surface_pair_common_points = 0;
  std::size_t max_point_pair_common_surfaces = 0;
  std::size_t bound = 0;  // max(max_collinear, max_cocircular)
  AuditReport report;
};

BicliqueAudit k2m_audit(const PointSet& points, std::size_t cap = AuditCaps{}.k2m);

}  // namespace bisect
