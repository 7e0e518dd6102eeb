#include "ttk/diagram.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "detail/tighten.hpp"
#include "ttk/detail/convention.hpp"

namespace ttk {

namespace detail {

WindingConvention& winding_convention() {
  static WindingConvention convention;
  return convention;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Curve basics

Point PlanarCurve::vertex(long index) const {
  const long n = static_cast<long>(vertices.size());
  long t = index >= 0 ? index / n : -((-index + n - 1) / n);
  long r = index - t * n;
  return vertices[r] + IVec{t * closure.a, t * closure.b};
}

std::vector<Crossing> GenusOneDiagram::crossings() const {
  std::vector<Crossing> out;
  const long n = static_cast<long>(alpha.size());
  for (long i = 0; i < n; ++i) {
    const Point p = alpha.vertex(i), q = alpha.vertex(i + 1);
    if (is_integer(p.y) || is_integer(q.y)) throw DiagramError("alpha vertex on a beta lift (transversality)");
    const bool up = q.y > p.y;
    long lo = up ? ceil_to_long(p.y) : ceil_to_long(q.y);
    long hi = up ? floor_to_long(q.y) : floor_to_long(p.y);
    std::vector<long> hs;
    for (long h = lo; h <= hi; ++h) hs.push_back(h);
    if (!up) std::reverse(hs.begin(), hs.end());
    for (long h : hs) {
      Rational t = (Rational(h) - p.y) / (q.y - p.y);
      out.push_back({i, h, lerp(p, q, t), up});
    }
  }
  return out;
}

namespace {

struct Box {
  Rational xmin, xmax, ymin, ymax;
};

Box box_of(const Point& a, const Point& b) { return {min(a.x, b.x), max(a.x, b.x), min(a.y, b.y), max(a.y, b.y)}; }

Box box_of(std::span<const Point> pts) {
  Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
  for (const auto& p : pts) {
    if (p.x < b.xmin) b.xmin = p.x;
    if (p.x > b.xmax) b.xmax = p.x;
    if (p.y < b.ymin) b.ymin = p.y;
    if (p.y > b.ymax) b.ymax = p.y;
  }
  return b;
}

// Lattice translates t with (other + t) overlapping `target`.
std::vector<IVec> overlapping_translates(const Box& target, const Box& other) {
  std::vector<IVec> out;
  const long ax = ceil_to_long(target.xmin - other.xmax), bx = floor_to_long(target.xmax - other.xmin);
  const long ay = ceil_to_long(target.ymin - other.ymax), by = floor_to_long(target.ymax - other.ymin);
  for (long tx = ax; tx <= bx; ++tx)
    for (long ty = ay; ty <= by; ++ty) out.push_back({tx, ty});
  return out;
}

bool collinear_between(const Point& a, const Point& b, const Point& c) {
  if (cross(b - a, c - b) != 0) return false;
  const Point u = b - a, v = c - b;
  return u.x * v.x + u.y * v.y > 0;
}

// Drops vertices that sit in the middle of a straight run.
PlanarCurve simplify(const PlanarCurve& curve) {
  PlanarCurve cur = curve;
  bool changed = true;
  while (changed && cur.size() > 1) {
    changed = false;
    const long n = static_cast<long>(cur.size());
    std::vector<Point> kept;
    kept.reserve(n);
    for (long i = 0; i < n; ++i) {
      // Compare against the last kept vertex so runs collapse in one pass.
      Point prev = kept.empty() ? cur.vertex(i - 1) : kept.back();
      if (collinear_between(prev, cur.vertex(i), cur.vertex(i + 1)) && !(kept.empty() && i == 0 && n <= 2)) {
        changed = true;
        continue;
      }
      kept.push_back(cur.vertices[i]);
    }
    if (kept.empty()) kept.push_back(cur.vertices[0]);
    // The first kept vertex may have become collinear with the new last one.
    cur.vertices = std::move(kept);
  }
  return cur;
}

// Nearest lattice translate of `target` to `from`.
Point nearest_lift(const Point& target, const Point& from) {
  Point best;
  std::optional<Rational> best_d;
  const long bx = floor_to_long(from.x - target.x), by = floor_to_long(from.y - target.y);
  for (long dx = bx - 1; dx <= bx + 2; ++dx)
    for (long dy = by - 1; dy <= by + 2; ++dy) {
      Point c = target + IVec{dx, dy};
      Point d = c - from;
      Rational dist = d.x * d.x + d.y * d.y;
      if (!best_d || dist < *best_d) {
        best_d = dist;
        best = c;
      }
    }
  return best;
}

bool in_triangle(const Point& a, const Point& b, const Point& c, const Point& x) {
  const int o1 = orientation(a, b, x), o2 = orientation(b, c, x), o3 = orientation(c, a, x);
  return (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0);
}

// Piecewise-affine homeomorphism of the torus supported in a convex quadrilateral
// around the step from `from` to `to`: the star of `from` is mapped to the star
// of `to`, the boundary is fixed.
class DragStep {
 public:
  DragStep(const Point& from, const Point& to, const Rational& half_width) : from_(from), to_(to) {
    const Point s = to - from;
    const Point mid = (from + to) * Rational(1, 2);
    const Point v = abs(s.x) >= abs(s.y) ? Point(0, 1) : Point(1, 0);
    quad_ = {from - s * Rational(1, 2), mid + v * half_width, to + s * Rational(1, 2), mid - v * half_width};
    box_ = box_of(quad_);
  }

  const std::array<Point, 4>& quad() const { return quad_; }
  const Box& box() const { return box_; }

  bool contains(const Point& x) const {
    for (int i = 0; i < 4; ++i)
      if (in_triangle(from_, quad_[i], quad_[(i + 1) % 4], x)) return true;
    return false;
  }

  // Map a point already translated into this step's frame.
  Point apply_local(const Point& x) const {
    for (int i = 0; i < 4; ++i) {
      const Point& c1 = quad_[i];
      const Point& c2 = quad_[(i + 1) % 4];
      if (!in_triangle(from_, c1, c2, x)) continue;
      const Point e = c2 - c1;
      const Rational lambda = cross(e, x - c1) / cross(e, from_ - c1);
      return x + (to_ - from_) * lambda;
    }
    return x;
  }

  // Parameters in (0,1) where segment p->q crosses an edge or spoke of the quad.
  void split_parameters(const Point& p, const Point& q, std::vector<Rational>& out) const {
    auto add = [&](const Point& c, const Point& e) {
      const Point d = q - p, f = e - c;
      const Rational den = cross(d, f);
      if (den == 0) return;
      const Rational tau = cross(c - p, f) / den;
      const Rational sigma = cross(c - p, d) / den;
      if (tau > 0 && tau < 1 && sigma >= 0 && sigma <= 1) out.push_back(tau);
    };
    for (int i = 0; i < 4; ++i) {
      add(quad_[i], quad_[(i + 1) % 4]);
      add(from_, quad_[i]);
    }
  }

  PlanarCurve apply(const PlanarCurve& curve) const {
    PlanarCurve out;
    out.closure = curve.closure;
    const long n = static_cast<long>(curve.size());
    auto map_point = [&](const Point& x, const std::vector<IVec>& translates) {
      for (const auto& t : translates) {
        Point local = x - t;
        if (contains(local)) return apply_local(local) + t;
      }
      return x;
    };
    const double bx0 = box_.xmin.get_d() - 1e-7, bx1 = box_.xmax.get_d() + 1e-7;
    const double by0 = box_.ymin.get_d() - 1e-7, by1 = box_.ymax.get_d() + 1e-7;
    for (long i = 0; i < n; ++i) {
      const Point p = curve.vertex(i), q = curve.vertex(i + 1);
      const double px = p.x.get_d(), py = p.y.get_d(), qx = q.x.get_d(), qy = q.y.get_d();
      if (std::ceil(std::min(px, qx) - bx1) > std::floor(std::max(px, qx) - bx0) ||
          std::ceil(std::min(py, qy) - by1) > std::floor(std::max(py, qy) - by0)) {
        out.vertices.push_back(p);
        continue;
      }
      auto translates = overlapping_translates(box_of(p, q), box_);
      if (translates.empty()) {
        out.vertices.push_back(p);
        continue;
      }
      std::vector<Rational> params;
      for (const auto& t : translates) split_parameters(p - t, q - t, params);
      std::sort(params.begin(), params.end());
      params.erase(std::unique(params.begin(), params.end()), params.end());
      out.vertices.push_back(map_point(p, translates));
      for (const auto& tau : params) out.vertices.push_back(map_point(lerp(p, q, tau), translates));
    }
    return out;
  }

 private:
  Point from_, to_;
  std::array<Point, 4> quad_;
  Box box_;
};

bool any_lift_inside(const DragStep& step, const Point& obstacle) {
  for (const auto& t : overlapping_translates(step.box(), Box{obstacle.x, obstacle.x, obstacle.y, obstacle.y}))
    if (step.contains(obstacle + t)) return true;
  return false;
}

// Moves `mover` along the polyline `path` (path[0] == mover), dragging alpha.
PlanarCurve drag_along(PlanarCurve alpha, const std::vector<Point>& path, const Point& obstacle, int exponent) {
  for (std::size_t leg = 0; leg + 1 < path.size(); ++leg) {
    const Point a = path[leg], b = path[leg + 1];
    const Point d = b - a;
    const Rational extent = max(abs(d.x), abs(d.y));
    long steps = 1;
    while (extent / steps > Rational(1, 8)) steps *= 2;
    const Point step_vec = d * Rational(1, steps);
    for (long i = 0; i < steps; ++i) {
      const Point from = a + step_vec * Rational(i), to = a + step_vec * Rational(i + 1);
      Rational h(1, 16);
      std::optional<DragStep> step;
      for (int guard = 0; guard < 64; ++guard) {
        DragStep candidate(from, to, h);
        if (!any_lift_inside(candidate, obstacle)) {
          step = candidate;
          break;
        }
        h /= 2;
      }
      if (!step) throw DiagramError("drag step cannot avoid the other base point");
      if (exponent > 0) step = DragStep(from, to, h / (Rational(1) << exponent));
      alpha = simplify(step->apply(alpha));
      if ((i + 1) % 2 == 0 || i + 1 == steps) alpha = detail::tighten(alpha, {to, obstacle});
      if (alpha.size() > detail::winding_convention().max_vertices) throw DiagramError("alpha grew past the vertex limit");
    }
  }
  return alpha;
}

long round_to_long(const Rational& q) { return floor_to_long(q + Rational(1, 2)); }

}  // namespace

// ---------------------------------------------------------------------------
// Validation

namespace {

struct LiftedSegment {
  long index;
  IVec shift;
  Point a, b;
  double xmin, xmax, ymin, ymax;
};

bool adjacent(const LiftedSegment& s, const LiftedSegment& t, long n, const IVec& closure) {
  auto next_of = [&](const LiftedSegment& u, const LiftedSegment& v) {
    if (u.index + 1 < n) return v.index == u.index + 1 && v.shift == u.shift;
    return v.index == 0 && v.shift == IVec{u.shift.a + closure.a, u.shift.b + closure.b};
  };
  return next_of(s, t) || next_of(t, s);
}

}  // namespace

void GenusOneDiagram::validate(bool check_embedding) const {
  const long n = static_cast<long>(alpha.size());
  if (n == 0) throw DiagramError("alpha has no vertices");
  if (std::gcd(std::abs(alpha.closure.a), std::abs(alpha.closure.b)) != 1)
    throw DiagramError("alpha closure vector is not primitive");
  for (const auto& v : alpha.vertices)
    if (is_integer(v.y)) throw DiagramError("alpha vertex on a beta lift (transversality)");
  if (is_integer(z.y) || is_integer(w.y)) throw DiagramError("base point on beta");
  if (crossings().empty()) throw DiagramError("alpha does not meet beta");

  // Every lifted segment meeting the unit square; all torus intersections show up there.
  std::vector<LiftedSegment> segs;
  const Box unit{0, 1, 0, 1};
  for (long i = 0; i < n; ++i) {
    const Point p = alpha.vertex(i), q = alpha.vertex(i + 1);
    for (const auto& t : overlapping_translates(unit, box_of(p, q))) {
      Point a = p + t, b = q + t;
      segs.push_back({i, t, a, b, std::min(a.x.get_d(), b.x.get_d()), std::max(a.x.get_d(), b.x.get_d()),
                      std::min(a.y.get_d(), b.y.get_d()), std::max(a.y.get_d(), b.y.get_d())});
    }
  }
  for (const Point* bp : {&z, &w})
    for (const auto& s : segs)
      for (const auto& t : overlapping_translates(box_of(s.a, s.b), Box{bp->x, bp->x, bp->y, bp->y}))
        if (orientation(s.a, s.b, *bp + t) == 0 && box_of(s.a, s.b).xmin <= (*bp + t).x &&
            (*bp + t).x <= box_of(s.a, s.b).xmax && box_of(s.a, s.b).ymin <= (*bp + t).y &&
            (*bp + t).y <= box_of(s.a, s.b).ymax)
          throw DiagramError("base point lies on alpha");
  if (!check_embedding) return;
  std::sort(segs.begin(), segs.end(), [](const auto& u, const auto& v) { return u.xmin < v.xmin; });
  constexpr double slack = 1e-9;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size() && segs[j].xmin <= segs[i].xmax + slack; ++j) {
      const auto& s = segs[i];
      const auto& t = segs[j];
      if (t.ymin > s.ymax + slack || s.ymin > t.ymax + slack) continue;
      if (s.index == t.index && s.shift == t.shift) continue;
      if (adjacent(s, t, n, alpha.closure)) {
        // Adjacent segments share one endpoint; they must not fold back.
        const Point& shared = (s.b == t.a) ? s.b : s.a;
        const Point& far_s = (s.b == t.a) ? s.a : s.b;
        const Point& far_t = (s.b == t.a) ? t.b : t.a;
        if (orientation(far_s, shared, far_t) == 0) {
          const Point u = shared - far_s, v = far_t - shared;
          if (u.x * v.x + u.y * v.y < 0) throw DiagramError("alpha folds back on itself");
        }
        continue;
      }
      if (segments_intersect(s.a, s.b, t.a, t.b)) throw DiagramError("alpha is not embedded on the torus");
    }
}

bool GenusOneDiagram::operator==(const GenusOneDiagram& o) const {
  return alpha.closure == o.alpha.closure && alpha.vertices == o.alpha.vertices && z == o.z && w == o.w;
}

// ---------------------------------------------------------------------------
// Winding

IVec winding_vector(Turn direction, int meridians) {
  const auto& c = detail::winding_convention();
  const int sign = direction == Turn::Ccw ? c.ccw_sign : c.cw_sign;
  const long n = static_cast<long>(meridians) * c.meridian_sign;
  return {sign * (c.longitude.a + n * c.meridian.a), sign * (c.longitude.b + n * c.meridian.b)};
}

DiagramState initial_state(const TwistedTorusParams& params) {
  (void)params;
  DiagramState state;
  state.diagram.alpha.vertices = {Point(0, Rational(1, 2))};
  state.diagram.alpha.closure = {0, 1};
  state.diagram.w = Point(make_rational(1, 64), make_rational(81, 160));
  state.diagram.z = state.diagram.w + detail::winding_convention().z_offset;
  return state;
}

DiagramState wind_base_point(const DiagramState& state, BasePoint which, Turn direction, int meridians,
                             PassSide side, const BuildOptions& options) {
  if (meridians < 0) throw std::invalid_argument("wind_base_point: meridian count must be >= 0");
  const auto& conv = detail::winding_convention();
  DiagramState next = state;
  Point& mover = which == BasePoint::Z ? next.diagram.z : next.diagram.w;
  const Point& obstacle = which == BasePoint::Z ? next.diagram.w : next.diagram.z;
  const IVec dv = winding_vector(direction, meridians);
  const Point d(dv.a, dv.b);
  const Point start = mover;

  const Point near = nearest_lift(obstacle, start);
  const Point u = near - start;
  const Rational c = cross(d, u);
  if (c == 0) throw DiagramError("winding run passes through the other base point");
  const bool obstacle_on_left = c > 0;
  const bool want_obstacle_on_right = (side == PassSide::Left) == conv.left_means_obstacle_on_right;
  const bool detour = obstacle_on_left == want_obstacle_on_right;

  std::vector<Point> path{start};
  if (detour) {
    // Step around the obstacle on its trailing side so the straight run passes
    // it on the other side; the return leg retraces the detour.
    Point perp(-u.y, u.x);
    if (perp.x * d.x + perp.y * d.y > 0) perp = perp * Rational(-1);
    path.push_back(start + perp);
    path.push_back(start + perp + u * Rational(2));
    path.push_back(start + u * Rational(2));
  }
  const std::size_t out_legs = path.size();
  path.push_back(path.back() + d);
  for (std::size_t i = out_legs - 1; i-- > 0;) path.push_back(path[i] + d);

  next.diagram.alpha = drag_along(next.diagram.alpha, path, obstacle, options.corridor_exponent);
  mover = start;  // back to the same point of the torus
  next.log.push_back({which, direction, meridians, side});
  return next;
}

std::vector<WindingMove> winding_schedule(const TwistedTorusParams& params) {
  const bool torus = params.is_torus_knot();
  const int r = torus ? 0 : params.r;
  const int s = torus ? std::min(2, params.p) : params.s;
  const PassSide side = params.sign == Sign::Plus ? PassSide::Left : PassSide::Right;
  std::vector<WindingMove> moves;
  moves.push_back({BasePoint::Z, Turn::Ccw, params.k + r, side});
  for (int i = 0; i < s - 2; ++i) moves.push_back({BasePoint::W, Turn::Cw, params.k + r, side});
  for (int i = 0; i < params.p - s; ++i) moves.push_back({BasePoint::W, Turn::Cw, params.k, side});
  return moves;
}

DiagramState build_raw_state(const TwistedTorusParams& params, const BuildOptions& options) {
  std::optional<std::string> last_error;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    BuildOptions opts = options;
    opts.corridor_exponent = options.corridor_exponent + attempt;
    DiagramState state = initial_state(params);
    for (const auto& m : winding_schedule(params))
      state = wind_base_point(state, m.which, m.direction, m.meridians, m.side, opts);
    try {
      state.diagram.validate(false);
      return state;
    } catch (const DiagramError& e) {
      last_error = e.what();
    }
  }
  throw std::logic_error("build_diagram: retries exhausted (" + last_error.value_or("?") + ")");
}

GenusOneDiagram build_diagram(const TwistedTorusParams& params, const BuildOptions& options) {
  DiagramState state = build_raw_state(params, options);
  return options.reduce ? reduce_diagram(state.diagram) : state.diagram;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

struct ReducibleBigon {
  std::size_t first;  // crossing index; the bigon runs to first + 1
};

// Polygon of the alpha arc between consecutive crossings i and i+1.
std::vector<Point> arc_polygon(const PlanarCurve& alpha, const Crossing& a, long b_segment, const Point& b_at) {
  std::vector<Point> poly{a.at};
  for (long v = a.segment + 1; v <= b_segment; ++v) poly.push_back(alpha.vertex(v));
  poly.push_back(b_at);
  return poly;
}

bool strictly_inside_mod1(const Rational& lo, const Rational& hi, const Rational& x) {
  const long u = floor_to_long(lo - x) + 1;
  return x + u < hi;
}

std::optional<GenusOneDiagram> remove_one_bigon(const GenusOneDiagram& dg) {
  const auto cs = dg.crossings();
  const long m = static_cast<long>(cs.size());
  const long n = static_cast<long>(dg.alpha.size());
  if (m < 2) return std::nullopt;
  for (long i = 0; i < m; ++i) {
    const Crossing& a = cs[i];
    Crossing b = cs[(i + 1) % m];
    if (i + 1 == m) {
      b.segment += n;
      b.height += dg.alpha.closure.b;
      b.at = b.at + dg.alpha.closure;
    }
    if (a.height != b.height) continue;
    const Rational lo = min(a.at.x, b.at.x), hi = max(a.at.x, b.at.x);
    if (hi - lo >= 1) continue;
    bool innermost = true;
    for (const auto& c : cs)
      if (strictly_inside_mod1(lo, hi, c.at.x)) {
        innermost = false;
        break;
      }
    if (!innermost) continue;
    const auto poly = arc_polygon(dg.alpha, a, b.segment, b.at);
    if (lattice_winding_sum(poly, dg.z) != 0 || lattice_winding_sum(poly, dg.w) != 0) continue;

    // Push the arc across the beta line to height h - side*eps.
    const int side = a.upward ? 1 : -1;
    const Point va = dg.alpha.vertex(a.segment), vb = dg.alpha.vertex(b.segment + 1);
    const Rational h(a.height);
    Rational eps = min(Rational(1, 4), min(abs(va.y - h), abs(vb.y - h))) / 2;
    for (int guard = 0; guard < 80; ++guard, eps /= 2) {
      const Rational y = h - side * eps;
      const Point r1 = lerp(va, a.at, (y - va.y) / (a.at.y - va.y));
      const Point r2 = lerp(b.at, vb, (y - b.at.y) / (vb.y - b.at.y));
      // Swept region must stay free of base points.
      std::vector<Point> swept{r1};
      swept.insert(swept.end(), poly.begin(), poly.end());
      swept.push_back(r2);
      if (lattice_winding_sum(swept, dg.z) != 0 || lattice_winding_sum(swept, dg.w) != 0) continue;
      bool clash = false;
      const Box bb = box_of(r1, r2);
      for (long s = 0; s < n && !clash; ++s) {
        const Point p = dg.alpha.vertex(s), q = dg.alpha.vertex(s + 1);
        for (const auto& t : overlapping_translates(bb, box_of(p, q))) {
          const long ext_a = a.segment, ext_b = b.segment;
          auto same_lift = [&](long ext) {
            const long tt = ext >= 0 ? ext / n : -((-ext + n - 1) / n);
            return s == ext - tt * n && t == IVec{tt * dg.alpha.closure.a, tt * dg.alpha.closure.b};
          };
          if (same_lift(ext_a) || same_lift(ext_b)) continue;
          if (segments_intersect(r1, r2, p + t, q + t)) {
            clash = true;
            break;
          }
        }
      }
      if (clash) continue;
      GenusOneDiagram out = dg;
      out.alpha.vertices.clear();
      out.alpha.vertices.push_back(va);
      out.alpha.vertices.push_back(r1);
      out.alpha.vertices.push_back(r2);
      for (long v = b.segment + 1; v < a.segment + n; ++v) out.alpha.vertices.push_back(dg.alpha.vertex(v));
      out.alpha = simplify(out.alpha);
      return out;
    }
    throw std::logic_error("reduce_diagram: could not realize the isotopy of an empty bigon");
  }
  return std::nullopt;
}

}  // namespace

std::size_t count_empty_bigons(const GenusOneDiagram& dg) {
  const auto cs = dg.crossings();
  const long m = static_cast<long>(cs.size());
  const long n = static_cast<long>(dg.alpha.size());
  std::size_t count = 0;
  if (m < 2) return 0;
  for (long i = 0; i < m; ++i) {
    const Crossing& a = cs[i];
    Crossing b = cs[(i + 1) % m];
    if (i + 1 == m) {
      b.segment += n;
      b.height += dg.alpha.closure.b;
      b.at = b.at + dg.alpha.closure;
    }
    if (a.height != b.height) continue;
    const auto poly = arc_polygon(dg.alpha, a, b.segment, b.at);
    if (lattice_winding_sum(poly, dg.z) == 0 && lattice_winding_sum(poly, dg.w) == 0) ++count;
  }
  return count;
}

GenusOneDiagram reduce_diagram(const GenusOneDiagram& diagram) {
  GenusOneDiagram cur = diagram;
  while (auto next = remove_one_bigon(cur)) cur = std::move(*next);
  return cur;
}

// ---------------------------------------------------------------------------
// Serialization

void write_diagram(std::ostream& out, const GenusOneDiagram& d) {
  out << "ttk-diagram 1\n";
  out << "closure " << d.alpha.closure.a << " " << d.alpha.closure.b << "\n";
  out << "z " << d.z.x.get_str() << " " << d.z.y.get_str() << "\n";
  out << "w " << d.w.x.get_str() << " " << d.w.y.get_str() << "\n";
  out << "vertices " << d.alpha.size() << "\n";
  for (const auto& v : d.alpha.vertices) out << v.x.get_str() << " " << v.y.get_str() << "\n";
}

GenusOneDiagram read_diagram(std::istream& in) {
  auto expect = [&](const std::string& word) {
    std::string got;
    if (!(in >> got) || got != word) throw DiagramError("diagram file: expected '" + word + "'");
  };
  auto read_q = [&]() {
    std::string tok;
    if (!(in >> tok)) throw DiagramError("diagram file: truncated");
    return parse_rational(tok);
  };
  expect("ttk-diagram");
  int version = 0;
  in >> version;
  if (version != 1) throw DiagramError("diagram file: unsupported version");
  GenusOneDiagram d;
  expect("closure");
  in >> d.alpha.closure.a >> d.alpha.closure.b;
  expect("z");
  d.z.x = read_q();
  d.z.y = read_q();
  expect("w");
  d.w.x = read_q();
  d.w.y = read_q();
  expect("vertices");
  std::size_t n = 0;
  in >> n;
  if (!in || n == 0) throw DiagramError("diagram file: bad vertex count");
  for (std::size_t i = 0; i < n; ++i) {
    Point p;
    p.x = read_q();
    p.y = read_q();
    d.alpha.vertices.push_back(p);
  }
  return d;
}

}  // namespace ttk
