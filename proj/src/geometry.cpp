#include "bisect/geometry.hpp"

namespace bisect {

namespace {

BigInt scaled(const Rational& r, const BigInt& common) { return num(r) * (common / den(r)); }

// Divides the coefficients by their common gcd and flips the sign so that the
// first nonzero coefficient is positive.
template <std::size_t N>
void normalize(BigInt* (&coeffs)[N]) {
  BigInt g = 0;
  for (BigInt* c : coeffs) g = gcd_big(g, *c);
  if (g > 1)
    for (BigInt* c : coeffs) *c /= g;
  for (BigInt* c : coeffs) {
    if (*c == 0) continue;
    if (*c < 0)
      for (BigInt* d : coeffs) *d = -*d;
    break;
  }
}

}  // namespace

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

// ---------------------------------------------------------------------------
// CanonicalLine

CanonicalLine CanonicalLine::from_integers(BigInt a, BigInt b, BigInt c) {
  if (a == 0 && b == 0) throw PreconditionViolated("line with zero normal vector");
  BigInt* coeffs[3] = {&a, &b, &c};
  normalize(coeffs);
  return CanonicalLine(std::move(a), std::move(b), std::move(c));
}

CanonicalLine CanonicalLine::from_coefficients(const Rational& a, const Rational& b,
                                               const Rational& c) {
  const BigInt common = lcm_big(lcm_big(den(a), den(b)), den(c));
  return from_integers(scaled(a, common), scaled(b, common), scaled(c, common));
}

bool CanonicalLine::contains(const Point& p) const {
  return Rational(a_) * p.x + Rational(b_) * p.y == Rational(c_);
}

bool operator<(const CanonicalLine& l, const CanonicalLine& m) {
  if (l.a_ != m.a_) return l.a_ < m.a_;
  if (l.b_ != m.b_) return l.b_ < m.b_;
  return l.c_ < m.c_;
}

std::string CanonicalLine::to_string() const {
  return a_.str() + "x + " + b_.str() + "y = " + c_.str();
}

// ---------------------------------------------------------------------------
// CanonicalCircle

CanonicalCircle CanonicalCircle::from_coefficients(const Rational& g, const Rational& d,
                                                   const Rational& e, const Rational& f) {
  const BigInt common = lcm_big(lcm_big(den(g), den(d)), lcm_big(den(e), den(f)));
  BigInt G = scaled(g, common), D = scaled(d, common), E = scaled(e, common),
         F = scaled(f, common);
  if (G == 0) throw PreconditionViolated("circle with zero quadratic coefficient");
  BigInt* coeffs[4] = {&G, &D, &E, &F};
  normalize(coeffs);
  if (D * D + E * E - 4 * G * F <= 0) throw PreconditionViolated("degenerate or empty circle");
  return CanonicalCircle(std::move(G), std::move(D), std::move(E), std::move(F));
}

CanonicalCircle CanonicalCircle::from_center(const Point& center, const Point& through) {
  if (center == through) throw EqualPoints("circle of radius zero");
  const Rational f = center.x * center.x + center.y * center.y - dist2(center, through);
  return from_coefficients(1, -2 * center.x, -2 * center.y, f);
}

bool CanonicalCircle::contains(const Point& p) const {
  return Rational(g_) * (p.x * p.x + p.y * p.y) + Rational(d_) * p.x + Rational(e_) * p.y +
             Rational(f_) ==
         0;
}

Point CanonicalCircle::center() const {
  return {Rational(-d_, 2 * g_), Rational(-e_, 2 * g_)};
}

Rational CanonicalCircle::radius2() const {
  return Rational(d_ * d_ + e_ * e_ - 4 * g_ * f_, 4 * g_ * g_);
}

bool operator<(const CanonicalCircle& l, const CanonicalCircle& m) {
  if (l.g_ != m.g_) return l.g_ < m.g_;
  if (l.d_ != m.d_) return l.d_ < m.d_;
  if (l.e_ != m.e_) return l.e_ < m.e_;
  return l.f_ < m.f_;
}

std::string CanonicalCircle::to_string() const {
  return g_.str() + "(x^2 + y^2) + " + d_.str() + "x + " + e_.str() + "y + " + f_.str() + " = 0";
}

// ---------------------------------------------------------------------------
// RigidMap

RigidMap RigidMap::identity() { return RigidMap(1, 0, 0, 1, 0, 0); }

RigidMap::RigidMap(Rational m00, Rational m01, Rational m10, Rational m11, Rational tx,
                   Rational ty)
    : m00_(std::move(m00)),
      m01_(std::move(m01)),
      m10_(std::move(m10)),
      m11_(std::move(m11)),
      tx_(std::move(tx)),
      ty_(std::move(ty)) {
  const bool orthogonal = m00_ * m00_ + m10_ * m10_ == 1 && m01_ * m01_ + m11_ * m11_ == 1 &&
                          m00_ * m01_ + m10_ * m11_ == 0;
  if (!orthogonal) throw PreconditionViolated("rigid map matrix is not orthogonal");
}

Point RigidMap::operator()(const Point& p) const {
  return {m00_ * p.x + m01_ * p.y + tx_, m10_ * p.x + m11_ * p.y + ty_};
}

RigidMap compose(const RigidMap& f, const RigidMap& g) {
  // f(g(p)) = Mf (Mg p + tg) + tf
  return RigidMap(f.m00_ * g.m00_ + f.m01_ * g.m10_, f.m00_ * g.m01_ + f.m01_ * g.m11_,
                  f.m10_ * g.m00_ + f.m11_ * g.m10_, f.m10_ * g.m01_ + f.m11_ * g.m11_,
                  f.m00_ * g.tx_ + f.m01_ * g.ty_ + f.tx_, f.m10_ * g.tx_ + f.m11_ * g.ty_ + f.ty_);
}

RigidMap RigidMap::with_translation(const Point& t) const {
  return RigidMap(m00_, m01_, m10_, m11_, tx_ + t.x, ty_ + t.y);
}

// ---------------------------------------------------------------------------
// Operations

Rational dist2(const Point& a, const Point& b) {
  const Rational dx = a.x - b.x;
  const Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

CanonicalLine bisector(const Point& a, const Point& b) {
  if (a == b) throw EqualPoints("bisector of a point with itself");
  return bisector(to_hom(a), to_hom(b));
}

SlopeView slope_intercept(const CanonicalLine& line) {
  if (line.b() == 0) return VerticalLine{ratio(line.c(), line.a())};
  return SlopeIntercept{ratio(-line.a(), line.b()), ratio(line.c(), line.b())};
}

RigidMap reflection_across(const CanonicalLine& line) {
  const Rational a(line.a()), b(line.b()), c(line.c());
  const Rational s = a * a + b * b;
  return RigidMap(1 - 2 * a * a / s, -2 * a * b / s, -2 * a * b / s, 1 - 2 * b * b / s,
                  2 * c * a / s, 2 * c * b / s);
}

RigidMap reflection(const Point& a, const Point& b) { return reflection_across(bisector(a, b)); }

Point invert(const Point& center, const Point& q) {
  if (center == q) throw EqualPoints("inversion of the center");
  const Rational r2 = dist2(center, q);
  return {center.x + (q.x - center.x) / r2, center.y + (q.y - center.y) / r2};
}

CanonicalLine line_through(const Point& p, const Point& q) {
  if (p == q) throw EqualPoints("line through a single point");
  const Rational a = q.y - p.y;
  const Rational b = p.x - q.x;
  return CanonicalLine::from_coefficients(a, b, a * p.x + b * p.y);
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) == (q.y - p.y) * (r.x - p.x);
}

bool parallel(const CanonicalLine& l, const CanonicalLine& m) {
  return l.a() * m.b() == l.b() * m.a();
}

std::optional<Point> intersection(const CanonicalLine& l, const CanonicalLine& m) {
  const BigInt det = l.a() * m.b() - m.a() * l.b();
  if (det == 0) return std::nullopt;
  return Point{ratio(l.c() * m.b() - m.c() * l.b(), det),
               ratio(l.a() * m.c() - m.a() * l.c(), det)};
}

CanonicalCircle circumcircle(const Point& p, const Point& q, const Point& r) {
  if (p == q || q == r || p == r) throw EqualPoints("circumcircle of repeated points");
  if (collinear(p, q, r)) throw Collinear("circumcircle of collinear points");
  const auto center = intersection(bisector(p, q), bisector(p, r));
  return CanonicalCircle::from_center(*center, p);
}

RigidMap rational_rotation(int k) {
  if (k < 1) throw PreconditionViolated("rational_rotation requires k >= 1");
  Rational c = 1, s = 0;
  const Rational c1(3, 5), s1(4, 5);
  for (int i = 0; i < k; ++i) {
    Rational nc = c * c1 - s * s1;
    Rational ns = s * c1 + c * s1;
    c = std::move(nc);
    s = std::move(ns);
  }
  return RigidMap(c, -s, s, c, 0, 0);
}

// ---------------------------------------------------------------------------
// Homogeneous kernels

HomPoint to_hom(const Point& p) {
  HomPoint h;
  h.w = lcm_big(den(p.x), den(p.y));
  h.x = scaled(p.x, h.w);
  h.y = scaled(p.y, h.w);
  h.norm = h.x * h.x + h.y * h.y;
  return h;
}

CanonicalLine bisector(const HomPoint& a, const HomPoint& b) {
  // 2 p·(b − a) = |b|² − |a|², scaled by wa² wb².
  if (a.w == 1 && b.w == 1)
    return CanonicalLine::from_integers(2 * (b.x - a.x), 2 * (b.y - a.y), b.norm - a.norm);
  const BigInt ww = a.w * b.w;
  return CanonicalLine::from_integers(2 * (b.x * a.w - a.x * b.w) * ww,
                                      2 * (b.y * a.w - a.y * b.w) * ww,
                                      b.norm * a.w * a.w - a.norm * b.w * b.w);
}

Rational dist2(const HomPoint& a, const HomPoint& b) {
  if (a.w == 1 && b.w == 1) {
    const BigInt dx = b.x - a.x, dy = b.y - a.y;
    return Rational(dx * dx + dy * dy);
  }
  const BigInt dx = b.x * a.w - a.x * b.w;
  const BigInt dy = b.y * a.w - a.y * b.w;
  const BigInt ww = a.w * b.w;
  return Rational(dx * dx + dy * dy, ww * ww);
}

Direction direction(const HomPoint& a, const HomPoint& b) {
  Direction d;
  if (a.w == 1 && b.w == 1) {
    d.dx = b.x - a.x;
    d.dy = b.y - a.y;
  } else {
    d.dx = b.x * a.w - a.x * b.w;
    d.dy = b.y * a.w - a.y * b.w;
  }
  BigInt* coeffs[2] = {&d.dx, &d.dy};
  normalize(coeffs);
  return d;
}

}  // namespace bisect

std::size_t std::hash<bisect::Point>::operator()(const bisect::Point& p) const noexcept {
  std::size_t seed = bisect::hash_big(bisect::num(p.x));
  bisect::hash_combine(seed, bisect::hash_big(bisect::den(p.x)));
  bisect::hash_combine(seed, bisect::hash_big(bisect::num(p.y)));
  bisect::hash_combine(seed, bisect::hash_big(bisect::den(p.y)));
  return seed;
}

std::size_t std::hash<bisect::CanonicalLine>::operator()(
    const bisect::CanonicalLine& l) const noexcept {
  std::size_t seed = bisect::hash_big(l.a());
  bisect::hash_combine(seed, bisect::hash_big(l.b()));
  bisect::hash_combine(seed, bisect::hash_big(l.c()));
  return seed;
}

std::size_t std::hash<bisect::CanonicalCircle>::operator()(
    const bisect::CanonicalCircle& c) const noexcept {
  std::size_t seed = bisect::hash_big(c.g());
  bisect::hash_combine(seed, bisect::hash_big(c.d()));
  bisect::hash_combine(seed, bisect::hash_big(c.e()));
  bisect::hash_combine(seed, bisect::hash_big(c.f()));
  return seed;
}
