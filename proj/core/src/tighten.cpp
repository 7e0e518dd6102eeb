#include "detail/tighten.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ttk::detail {

namespace {

constexpr int kGrid = 16;
constexpr double kPad = 1e-7;

struct DBox {
  double xmin, xmax, ymin, ymax;
};

DBox dbox(const Point& a, const Point& b) {
  const double ax = a.x.get_d(), ay = a.y.get_d(), bx = b.x.get_d(), by = b.y.get_d();
  return {std::min(ax, bx) - kPad, std::max(ax, bx) + kPad, std::min(ay, by) - kPad, std::max(ay, by) + kPad};
}

struct DPt {
  double x, y;
};

// Sign of orient(a, b, c) in doubles, or 0 when too close to call. The bound
// covers the rounding of the inputs (mpq_get_d is off by under one ulp) and of
// the arithmetic, with a margin.
int filtered_orientation(const DPt& a, const DPt& b, const DPt& c) {
  const double ux = b.x - a.x, uy = b.y - a.y, vx = c.x - a.x, vy = c.y - a.y;
  const double det = ux * vy - uy * vx;
  const double mag = std::max({std::fabs(a.x), std::fabs(a.y), std::fabs(b.x), std::fabs(b.y), std::fabs(c.x),
                               std::fabs(c.y), 1.0});
  const double bound = 2e-15 * mag * (std::fabs(ux) + std::fabs(uy) + std::fabs(vx) + std::fabs(vy)) +
                       1e-15 * (std::fabs(ux * vy) + std::fabs(uy * vx)) + 1e-29 * mag * mag;
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return 0;
}

int wrap(long v) { return static_cast<int>(((v % kGrid) + kGrid) % kGrid); }

// Visits grid buckets (mod the torus) covered by a box.
template <class F>
void for_buckets(const DBox& b, F&& f) {
  long x0 = static_cast<long>(std::floor(b.xmin * kGrid)), x1 = static_cast<long>(std::floor(b.xmax * kGrid));
  long y0 = static_cast<long>(std::floor(b.ymin * kGrid)), y1 = static_cast<long>(std::floor(b.ymax * kGrid));
  if (x1 - x0 >= kGrid) x0 = 0, x1 = kGrid - 1;
  if (y1 - y0 >= kGrid) y0 = 0, y1 = kGrid - 1;
  for (long x = x0; x <= x1; ++x)
    for (long y = y0; y <= y1; ++y) f(wrap(x) * kGrid + wrap(y));
}

class Tightener {
 public:
  Tightener(const PlanarCurve& curve, const std::vector<Point>& punctures)
      : closure_(curve.closure), punctures_(punctures) {
    const std::size_t n = curve.size();
    pts_ = curve.vertices;
    next_.resize(n);
    prev_.resize(n);
    wraps_.assign(n, 0);
    alive_.assign(n, 1);
    version_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      next_[i] = (i + 1) % n;
      prev_[i] = (i + n - 1) % n;
    }
    wraps_[n - 1] = 1;
    count_ = n;
    buckets_.resize(kGrid * kGrid);
    stamp_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) insert(i);
  }

  PlanarCurve run() {
    bool changed = true;
    while (changed && count_ > 1) {
      changed = false;
      for (std::size_t v = 0; v < pts_.size(); ++v)
        if (alive_[v] && count_ > 1 && try_remove(v)) changed = true;
    }
    for (std::size_t v = 0; v < pts_.size(); ++v)
      if (alive_[v] && count_ > 2) try_snap(v);
    PlanarCurve out;
    out.closure = closure_;
    // Start from a vertex whose incoming edge wraps, so coordinates stay in one period.
    std::size_t start = 0;
    while (!alive_[start]) ++start;
    std::size_t v = start;
    while (!wraps_[prev_[v]]) v = prev_[v];
    const std::size_t first = v;
    do {
      out.vertices.push_back(pts_[v]);
      v = next_[v];
    } while (v != first);
    return out;
  }

 private:
  Point end_of(std::size_t s) const {
    return wraps_[s] ? pts_[next_[s]] + closure_ : pts_[next_[s]];
  }

  void insert(std::size_t s) {
    ++version_[s];
    for_buckets(dbox(pts_[s], end_of(s)), [&](int b) { buckets_[b].push_back({s, version_[s]}); });
  }

  struct Skip {
    std::size_t segment;
    IVec lift;
  };

  // Does any lift of an alpha segment meet [a, b]? The listed lifts share an
  // endpoint with [a, b] and are ignored.
  bool blocked(const Point& a, const Point& b, const std::array<Skip, 4>& skips) {
    ++tick_;
    bool hit = false;
    for_buckets(dbox(a, b), [&](int bucket) {
      auto& list = buckets_[bucket];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto [s, ver] = list[i];
        if (!alive_[s] || ver != version_[s]) continue;  // stale entry, compact it away
        list[keep++] = list[i];
        if (hit || stamp_[s] == tick_) continue;
        stamp_[s] = tick_;
        if (meets_lift(s, a, b, skips)) hit = true;
      }
      list.resize(keep);
    });
    return hit;
  }

  bool meets_lift(std::size_t s, const Point& a, const Point& b, const std::array<Skip, 4>& skips) const {
    const DBox sb = dbox(pts_[s], end_of(s)), qb = dbox(a, b);
    const long tx0 = static_cast<long>(std::ceil(qb.xmin - sb.xmax)), tx1 = static_cast<long>(std::floor(qb.xmax - sb.xmin));
    const long ty0 = static_cast<long>(std::ceil(qb.ymin - sb.ymax)), ty1 = static_cast<long>(std::floor(qb.ymax - sb.ymin));
    if (tx0 > tx1 || ty0 > ty1) return false;
    const Point p = pts_[s], q = end_of(s);
    const DPt pd{p.x.get_d(), p.y.get_d()}, qd{q.x.get_d(), q.y.get_d()};
    const DPt ad{a.x.get_d(), a.y.get_d()}, bd{b.x.get_d(), b.y.get_d()};
    for (long tx = tx0; tx <= tx1; ++tx)
      for (long ty = ty0; ty <= ty1; ++ty) {
        const IVec t{tx, ty};
        bool skipped = false;
        for (const auto& sk : skips) skipped = skipped || (sk.segment == s && sk.lift == t);
        if (skipped) continue;
        const DPt p2{pd.x + tx, pd.y + ty}, q2{qd.x + tx, qd.y + ty};
        const int o1 = filtered_orientation(ad, bd, p2), o2 = filtered_orientation(ad, bd, q2);
        if (o1 != 0 && o1 == o2) continue;
        const int o3 = filtered_orientation(p2, q2, ad), o4 = filtered_orientation(p2, q2, bd);
        if (o3 != 0 && o3 == o4) continue;
        if (o1 * o2 < 0 && o3 * o4 < 0) return true;
        if (segments_intersect(p + t, q + t, a, b)) return true;
      }
    return false;
  }

  bool puncture_in(const Point& a, const Point& v, const Point& b) const {
    const Rational xmin = min(min(a.x, v.x), b.x), xmax = max(max(a.x, v.x), b.x);
    const Rational ymin = min(min(a.y, v.y), b.y), ymax = max(max(a.y, v.y), b.y);
    for (const auto& p : punctures_) {
      for (long tx = ceil_to_long(xmin - p.x); tx <= floor_to_long(xmax - p.x); ++tx)
        for (long ty = ceil_to_long(ymin - p.y); ty <= floor_to_long(ymax - p.y); ++ty) {
          const Point c = p + IVec{tx, ty};
          const int o1 = orientation(a, v, c), o2 = orientation(v, b, c), o3 = orientation(b, a, c);
          if ((o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0)) return true;
        }
    }
    return false;
  }

  bool try_remove(std::size_t v) {
    const std::size_t a = prev_[v], b = next_[v];
    if (a == v || b == a) return false;
    // Frame where pts_[a] is untranslated.
    const Point A = pts_[a];
    const Point V = wraps_[a] ? pts_[v] + closure_ : pts_[v];
    const int shift = wraps_[a] + wraps_[v];
    Point B = pts_[b];
    for (int i = 0; i < shift; ++i) B = B + closure_;
    if (cross(V - A, B - V) == 0) {
      // Collinear: drop only when it is not a fold.
      const Point u = V - A, w = B - V;
      if (u.x * w.x + u.y * w.y <= 0) return false;
    } else {
      if (puncture_in(A, V, B)) return false;
      const IVec c1{closure_.a, closure_.b}, c0{0, 0};
      const std::size_t pa = prev_[a];
      const IVec pa_lift = wraps_[pa] ? IVec{-c1.a, -c1.b} : c0;
      const IVec v_lift = wraps_[a] ? c1 : c0;
      const IVec b_lift = shift ? c1 : c0;
      // The neighbouring segments touch A and B; they only interfere by folding back.
      const Point P = pts_[pa] + pa_lift, Q = end_of(b) + b_lift;
      if (orientation(P, A, B) == 0 && (A.x - P.x) * (B.x - A.x) + (A.y - P.y) * (B.y - A.y) < 0) return false;
      if (orientation(A, B, Q) == 0 && (B.x - A.x) * (Q.x - B.x) + (B.y - A.y) * (Q.y - B.y) < 0) return false;
      if (blocked(A, B, {Skip{pa, pa_lift}, Skip{a, c0}, Skip{v, v_lift}, Skip{b, b_lift}})) return false;
    }
    alive_[v] = 0;
    next_[a] = b;
    prev_[b] = a;
    wraps_[a] = static_cast<char>(shift);
    --count_;
    insert(a);
    return true;
  }

  static std::size_t den_bits(const Point& p) {
    return std::max(mpz_sizeinbase(p.x.get_den_mpz_t(), 2), mpz_sizeinbase(p.y.get_den_mpz_t(), 2));
  }

  static Rational round_to(const Rational& q, int bits) {
    mpz_class scaled = q.get_num() << bits;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
    Rational out(r, mpz_class(1) << bits);
    out.canonicalize();
    return out;
  }

  // Moves a vertex with a long denominator onto a nearby dyadic point when the
  // move sweeps no puncture and no other strand.
  void try_snap(std::size_t v) {
    if (den_bits(pts_[v]) <= kSnapBits) return;
    const std::size_t a = prev_[v], b = next_[v];
    if (a == v || a == b) return;
    const IVec c1{closure_.a, closure_.b}, c0{0, 0};
    const Point A = pts_[a];
    const IVec v_lift = wraps_[a] ? c1 : c0;
    const Point V = pts_[v] + v_lift;
    const IVec b_lift = (wraps_[a] + wraps_[v]) ? c1 : c0;
    const Point B = pts_[b] + b_lift;
    const Point VA = A - V, VB = B - V;
    const Rational reach = min(max(abs(VA.x), abs(VA.y)), max(abs(VB.x), abs(VB.y))) / 8;
    for (int bits : {kSnapBits / 2, kSnapBits * 3 / 4, kSnapBits}) {
      const Point S(round_to(V.x, bits), round_to(V.y, bits));
      if (is_integer(S.y) || S == V) continue;
      const Point d = S - V;
      if (max(abs(d.x), abs(d.y)) >= reach) continue;
      if (orientation(A, V, S) != 0 && puncture_in(A, V, S)) continue;
      if (orientation(V, B, S) != 0 && puncture_in(V, B, S)) continue;
      const std::size_t pa = prev_[a];
      const IVec pa_lift = wraps_[pa] ? IVec{-c1.a, -c1.b} : c0;
      const std::array<Skip, 4> skips{Skip{pa, pa_lift}, Skip{a, c0}, Skip{v, v_lift}, Skip{b, b_lift}};
      if (blocked(A, S, skips) || blocked(S, B, skips)) continue;
      pts_[v] = S - v_lift;
      insert(a);
      insert(v);
      return;
    }
  }

  static constexpr int kSnapBits = 32;

  IVec closure_;
  std::vector<Point> punctures_;
  std::vector<Point> pts_;
  std::vector<std::size_t> next_, prev_;
  std::vector<char> wraps_, alive_;
  std::vector<unsigned> version_;
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> buckets_;
  std::vector<unsigned> stamp_;
  unsigned tick_ = 0;
  std::size_t count_ = 0;
};

}  // namespace

PlanarCurve tighten(const PlanarCurve& curve, const std::vector<Point>& punctures) {
  if (curve.size() < 2) return curve;
  return Tightener(curve, punctures).run();
}

}  // namespace ttk::detail
