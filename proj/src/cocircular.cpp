// Maximum cocircular subset via inversion.
//
// Inverting about an anchor p turns circles through p into lines that avoid
// p, so the largest circle through p and a second point q is found by
// grouping the remaining points by the direction of their inverted images as
// seen from q's image. Both paths below enumerate anchors p < q and third
// points r > q, so every circle is met at its two lowest-index points.

#include <algorithm>

#include "bisect/stats.hpp"

namespace bisect {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

class Field {
 public:
  explicit Field(u64 prime) : p_(prime) {}

  u64 prime() const { return p_; }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 mul(u64 a, u64 b) const {
    const u128 x = static_cast<u128>(a) * b;
    if (p_ == kMersenne61) {
      u64 r = static_cast<u64>(x & kMersenne61) + static_cast<u64>(x >> 61);
      r = (r & kMersenne61) + (r >> 61);
      return r >= p_ ? r - p_ : r;
    }
    return static_cast<u64>(x % p_);
  }
  u64 pow(u64 base, u64 e) const {
    u64 acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }

  u64 reduce(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return r.convert_to<u64>();
  }

  // In-place inversion of nonzero values with one exponentiation.
  void invert_all(std::vector<u64>& values, std::vector<u64>& scratch) const {
    scratch.resize(values.size());
    u64 acc = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
      scratch[i] = acc;
      acc = mul(acc, values[i]);
    }
    u64 inv_acc = inv(acc);
    for (std::size_t i = values.size(); i-- > 0;) {
      const u64 v = values[i];
      values[i] = mul(inv_acc, scratch[i]);
      inv_acc = mul(inv_acc, v);
    }
  }

 private:
  u64 p_;
};

// (q − p) × (r − p) == 0, exactly.
bool collinear_hom(const HomPoint& p, const HomPoint& q, const HomPoint& r) {
  const BigInt ux = q.x * p.w - p.x * q.w, uy = q.y * p.w - p.y * q.w;
  const BigInt vx = r.x * p.w - p.x * r.w, vy = r.y * p.w - p.y * r.w;
  return ux * vy == uy * vx;
}

}  // namespace

namespace detail {

std::size_t max_cocircular_exact(const PointSet& points) {
  const std::size_t n = points.size();
  std::vector<HomPoint> hom;
  for (const Point& p : points) hom.push_back(to_hom(p));
  std::size_t best = 2;
  std::vector<HomPoint> image(n);
  std::vector<Direction> dirs;
  for (std::size_t p = 0; p + 2 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) image[q] = to_hom(invert(points[p], points[q]));
    for (std::size_t q = p + 1; q + 1 < n; ++q) {
      dirs.clear();
      for (std::size_t r = q + 1; r < n; ++r)
        if (!collinear_hom(hom[p], hom[q], hom[r])) dirs.push_back(direction(image[q], image[r]));
      std::sort(dirs.begin(), dirs.end());
      for (std::size_t lo = 0; lo < dirs.size();) {
        std::size_t hi = lo;
        while (hi < dirs.size() && dirs[hi] == dirs[lo]) ++hi;
        best = std::max(best, 2 + (hi - lo));
        lo = hi;
      }
    }
  }
  return best;
}

std::optional<std::size_t> max_cocircular_modular(const PointSet& points, std::uint64_t prime) {
  const Field f(prime);
  const std::size_t n = points.size();
  std::vector<HomPoint> hom;
  std::vector<u64> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    hom.push_back(to_hom(points[i]));
    const u64 w = f.reduce(hom[i].w);
    if (w == 0) return std::nullopt;
    const u64 winv = f.inv(w);
    xs[i] = f.mul(f.reduce(hom[i].x), winv);
    ys[i] = f.mul(f.reduce(hom[i].y), winv);
  }

  const u64 kVertical = prime;  // dx ≡ 0: outside the residue range
  std::size_t best = 2;
  std::size_t best_p = 0, best_q = 0;
  u64 best_key = 0;

  std::vector<u64> ux(n), uy(n), wx(n), wy(n), norms, scratch, dxs, keys;
  std::vector<std::uint32_t> slot;
  for (std::size_t p = 0; p + 2 < n; ++p) {
    norms.clear();
    for (std::size_t q = p + 1; q < n; ++q) {
      ux[q] = f.sub(xs[q], xs[p]);
      uy[q] = f.sub(ys[q], ys[p]);
      const u64 s = f.add(f.mul(ux[q], ux[q]), f.mul(uy[q], uy[q]));
      if (s == 0) return std::nullopt;
      norms.push_back(s);
    }
    f.invert_all(norms, scratch);
    for (std::size_t q = p + 1; q < n; ++q) {
      wx[q] = f.mul(ux[q], norms[q - p - 1]);
      wy[q] = f.mul(uy[q], norms[q - p - 1]);
    }
    for (std::size_t q = p + 1; q + 1 < n; ++q) {
      keys.clear();
      dxs.clear();
      slot.clear();
      for (std::size_t r = q + 1; r < n; ++r) {
        if (f.mul(ux[q], uy[r]) == f.mul(uy[q], ux[r]) && collinear_hom(hom[p], hom[q], hom[r]))
          continue;
        const u64 dx = f.sub(wx[r], wx[q]);
        const u64 dy = f.sub(wy[r], wy[q]);
        if (dx == 0) {
          if (dy == 0) return std::nullopt;
          keys.push_back(kVertical);
        } else {
          slot.push_back(static_cast<std::uint32_t>(keys.size()));
          keys.push_back(dy);
          dxs.push_back(dx);
        }
      }
      if (keys.empty()) continue;
      f.invert_all(dxs, scratch);
      for (std::size_t k = 0; k < slot.size(); ++k) keys[slot[k]] = f.mul(keys[slot[k]], dxs[k]);
      std::sort(keys.begin(), keys.end());
      for (std::size_t lo = 0; lo < keys.size();) {
        std::size_t hi = lo;
        while (hi < keys.size() && keys[hi] == keys[lo]) ++hi;
        if (2 + (hi - lo) > best) {
          best = 2 + (hi - lo);
          best_p = p;
          best_q = q;
          best_key = keys[lo];
        }
        lo = hi;
      }
    }
  }
  if (best == 2) return best;

  // Every exactly-equal key is also equal mod the prime, so `best` bounds the
  // true answer from above; it is exact once its witnesses are confirmed.
  // The per-anchor residues were overwritten by later anchors.
  std::vector<u64> bx(n), by(n);
  for (std::size_t q = best_p + 1; q < n; ++q) {
    const u64 vx = f.sub(xs[q], xs[best_p]);
    const u64 vy = f.sub(ys[q], ys[best_p]);
    const u64 s_inv = f.inv(f.add(f.mul(vx, vx), f.mul(vy, vy)));
    bx[q] = f.mul(vx, s_inv);
    by[q] = f.mul(vy, s_inv);
  }
  std::vector<std::size_t> witnesses;
  for (std::size_t r = best_q + 1; r < n; ++r) {
    if (collinear_hom(hom[best_p], hom[best_q], hom[r])) continue;
    const u64 dx = f.sub(bx[r], bx[best_q]);
    const u64 dy = f.sub(by[r], by[best_q]);
    const u64 key = dx == 0 ? kVertical : f.mul(dy, f.inv(dx));
    if (key == best_key) witnesses.push_back(r);
  }
  if (witnesses.size() + 2 != best) return std::nullopt;
  const CanonicalCircle circle =
      circumcircle(points[best_p], points[best_q], points[witnesses.front()]);
  for (std::size_t r : witnesses)
    if (!circle.contains(points[r])) return std::nullopt;
  return best;
}

}  // namespace detail

std::size_t max_cocircular(const PointSet& points) {
  if (points.size() < 3) throw PreconditionViolated("max_cocircular requires at least 3 points");
  if (auto fast = detail::max_cocircular_modular(points, kMersenne61)) return *fast;
  return detail::max_cocircular_exact(points);
}

}  // namespace bisect
