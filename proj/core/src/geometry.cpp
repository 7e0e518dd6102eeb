#include "ttk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ttk {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long floor_to_long(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!r.fits_slong_p()) throw std::overflow_error("floor_to_long: out of range");
  return r.get_si();
}

long ceil_to_long(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!r.fits_slong_p()) throw std::overflow_error("ceil_to_long: out of range");
  return r.get_si();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational frac(const Rational& q) { return q - floor_to_long(q); }

int orientation(const Point& a, const Point& b, const Point& c) {
  // Floating-point filter; exact arithmetic only when the sign is in doubt. The
  // bound covers input rounding (under one ulp per coordinate) and the
  // arithmetic, with a margin.
  const double ax = a.x.get_d(), ay = a.y.get_d(), bx = b.x.get_d(), by = b.y.get_d();
  const double cx = c.x.get_d(), cy = c.y.get_d();
  const double ux = bx - ax, uy = by - ay, vx = cx - ax, vy = cy - ay;
  const double det = ux * vy - uy * vx;
  const double mag = std::max({std::abs(ax), std::abs(ay), std::abs(bx), std::abs(by), std::abs(cx), std::abs(cy), 1.0});
  const double bound = 2e-15 * mag * (std::abs(ux) + std::abs(uy) + std::abs(vx) + std::abs(vy)) +
                       1e-15 * (std::abs(ux * vy) + std::abs(uy * vx)) + 1e-29 * mag * mag;
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return sgn(cross(b - a, c - a));
}

namespace {

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return cmp(p.x, min(a.x, b.x)) >= 0 && cmp(p.x, max(a.x, b.x)) <= 0 && cmp(p.y, min(a.y, b.y)) >= 0 &&
         cmp(p.y, max(a.y, b.y)) <= 0;
}

}  // namespace

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  return o4 == 0 && on_segment(c, d, b);
}

Rational twice_signed_area(std::span<const Point> polygon) {
  Rational acc = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) acc += cross(polygon[i], polygon[(i + 1) % n]);
  return acc;
}

long lattice_winding_sum(std::span<const Point> polygon, const Point& s) {
  long total = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % n];
    if (p.y == q.y) continue;
    const bool upward = q.y > p.y;
    const Rational& lo = upward ? p.y : q.y;
    const Rational& hi = upward ? q.y : p.y;
    // Half-open rule: the edge counts for horizontal lines Y with lo <= Y < hi.
    const long bmin = ceil_to_long(lo - s.y);
    const long bmax = ceil_to_long(hi - s.y) - 1;
    for (long b = bmin; b <= bmax; ++b) {
      const Rational y = s.y + b;
      const Rational x = p.x + (q.x - p.x) * (y - p.y) / (q.y - p.y);
      const Rational rel = x - s.x;
      if (is_integer(rel)) throw std::domain_error("lattice_winding_sum: a lattice translate lies on the polygon");
      total += (upward ? 1 : -1) * ceil_to_long(rel);
    }
  }
  return total;
}

long winding_number(std::span<const Point> polygon, const Point& s) {
  long total = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % n];
    const bool upward = p.y <= s.y && q.y > s.y;
    const bool downward = q.y <= s.y && p.y > s.y;
    if (!upward && !downward) continue;
    const Rational x = p.x + (q.x - p.x) * (s.y - p.y) / (q.y - p.y);
    if (x == s.x) throw std::domain_error("winding_number: point lies on the polygon");
    if (x > s.x) total += upward ? 1 : -1;
  }
  return total;
}

}  // namespace ttk
