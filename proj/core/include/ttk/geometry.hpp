#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ttk {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
/// Parses "a" or "a/b".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

long floor_to_long(const Rational& q);
long ceil_to_long(const Rational& q);
bool is_integer(const Rational& q);
/// q - floor(q), in [0, 1).
Rational frac(const Rational& q);
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

struct IVec {
  long a = 0;
  long b = 0;
  bool operator==(const IVec&) const = default;
};

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(const Rational& s) const { return {x * s, y * s}; }
  Point operator+(const IVec& v) const { return {x + v.a, y + v.b}; }
  Point operator-(const IVec& v) const { return {x - v.a, y - v.b}; }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational cross(const IVec& u, const Point& v) { return u.a * v.y - u.b * v.x; }
inline long cross(const IVec& u, const IVec& v) { return u.a * v.b - u.b * v.a; }
inline Point lerp(const Point& p, const Point& q, const Rational& t) { return p + (q - p) * t; }

/// Sign of the orientation of (a, b, c): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// True if closed segments [a,b] and [c,d] share any point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Twice the signed area of a closed polygon (last vertex joins the first).
Rational twice_signed_area(std::span<const Point> polygon);

/// Sum over all lattice translates s + Z^2 of the winding number of the closed
/// polygon around that translate. No translate may lie on the polygon.
long lattice_winding_sum(std::span<const Point> polygon, const Point& s);

/// Winding number of the closed polygon around a single point (not on it).
long winding_number(std::span<const Point> polygon, const Point& s);

}  // namespace ttk
