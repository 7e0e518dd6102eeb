#include "ttk/cover.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

namespace ttk {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LiftEvent LiftedAlpha::event(long index) const {
  const long m = size();
  const long t = floor_div(index, m);
  LiftEvent e = events[static_cast<std::size_t>(index - t * m)];
  e.index = index;
  e.height += t * period.b;
  e.x += t * period.a;
  e.segment += t * static_cast<long>(alpha.size());
  return e;
}

LiftedAlpha lift_alpha(const GenusOneDiagram& diagram) {
  LiftedAlpha out;
  out.alpha = diagram.alpha;
  out.period = diagram.alpha.closure;
  long i = 0;
  for (const auto& c : diagram.crossings()) out.events.push_back({i++, c.height, c.at.x, c.upward, c.segment});
  return out;
}

std::vector<Bigon> enumerate_bigons(const LiftedAlpha& lifted, const Point& z, const Point& w) {
  const long m = lifted.size();
  const long b = lifted.period.b;
  if (b != 1 && b != -1) throw std::logic_error("enumerate_bigons: alpha must cross beta once homologically");
  // Every event class meets the line y = 0 exactly once. A bigon is an arc of
  // alpha between two such meetings that leaves and returns on the same side,
  // never crosses the open segment between its ends, and encloses a region
  // lying on that side of the segment (both corners convex).
  std::vector<LiftEvent> on_line;
  for (long i = 0; i < m; ++i)
    on_line.push_back(lifted.event(i - lifted.events[static_cast<std::size_t>(i)].height * b * m));
  std::sort(on_line.begin(), on_line.end(), [](const auto& u, const auto& v) { return u.index < v.index; });
  if (on_line.empty()) return {};

  // Prefix sums of cross(v_k, v_k+1) over the alpha vertices spanned.
  const long first_seg = on_line.front().segment, last_seg = on_line.back().segment;
  std::vector<Rational> prefix{0};
  for (long k = first_seg + 1; k < last_seg; ++k)
    prefix.push_back(prefix.back() + cross(lifted.alpha.vertex(k), lifted.alpha.vertex(k + 1)));
  auto chain_sum = [&](long from_vertex, long to_vertex) {  // sum over edges from..to
    return prefix[static_cast<std::size_t>(to_vertex - first_seg - 1)] -
           prefix[static_cast<std::size_t>(from_vertex - first_seg - 1)];
  };

  std::vector<Bigon> out;
  const std::size_t n = on_line.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LiftEvent& e1 = on_line[i];
    std::set<Rational> between;  // x positions of the meetings strictly inside the arc
    for (std::size_t j = i + 1; j < n; ++j) {
      const LiftEvent& e2 = on_line[j];
      if (j > i + 1) between.insert(on_line[j - 1].x);
      const bool leaves_up = e1.upward;
      const bool arrives_from_above = !e2.upward;
      if (leaves_up != arrives_from_above) continue;
      const Rational& lo = min(e1.x, e2.x);
      const Rational& hi = max(e1.x, e2.x);
      auto it = between.upper_bound(lo);
      if (it != between.end() && *it < hi) continue;
      const long s1 = e1.segment + 1, s2 = e2.segment;
      const Point v1 = lifted.alpha.vertex(s1), v2 = lifted.alpha.vertex(s2);
      const Rational area = e1.x * v1.y + chain_sum(s1, s2) - v2.y * e2.x;
      const int orient = sgn(area);
      if (orient == 0) throw std::logic_error("enumerate_bigons: degenerate bigon");
      // The closing segment runs from e2 back to e1; the interior lies on its
      // left when orient > 0.
      const bool segment_westward = e2.x > e1.x;
      const bool region_below = (orient > 0) == segment_westward;
      if (region_below == leaves_up) continue;

      std::vector<Point> poly{Point(e1.x, 0)};
      for (long k = s1; k <= s2; ++k) poly.push_back(lifted.alpha.vertex(k));
      poly.emplace_back(e2.x, 0);
      const int g1 = static_cast<int>(e1.index - floor_div(e1.index, m) * m);
      const int g2 = static_cast<int>(e2.index - floor_div(e2.index, m) * m);
      Bigon bg;
      // Traversing the boundary alpha-arc first with the interior on the left,
      // the alpha-to-beta corner is the target.
      bg.from = orient > 0 ? g1 : g2;
      bg.to = orient > 0 ? g2 : g1;
      bg.n_z = static_cast<int>(orient * lattice_winding_sum(poly, z));
      bg.n_w = static_cast<int>(orient * lattice_winding_sum(poly, w));
      bg.side = leaves_up ? BigonSide::Above : BigonSide::Below;
      if (bg.n_z < 0 || bg.n_w < 0) throw std::logic_error("enumerate_bigons: negative multiplicity");
      out.push_back(bg);
    }
  }
  return out;
}

std::vector<Bigon> enumerate_bigons(const GenusOneDiagram& diagram) {
  return enumerate_bigons(lift_alpha(diagram), diagram.z, diagram.w);
}

// ---------------------------------------------------------------------------
// Faces

namespace {

// Darts: 4*j + 0 alpha edge j forward, +1 backward; 4*b + 2 beta edge b
// eastward, +3 westward.
constexpr int kAlphaFwd = 0, kAlphaBack = 1, kBetaEast = 2, kBetaWest = 3;

struct Darts {
  int m;
  std::vector<std::array<int, 4>> ccw;  // outgoing darts per vertex, counter-clockwise from east
  std::vector<int> vertex_of, slot_of;  // tail vertex and slot of each dart
};

Darts build_darts(const std::vector<Crossing>& cs, const std::vector<int>& beta_rank,
                  const std::vector<int>& beta_order) {
  const int m = static_cast<int>(cs.size());
  Darts d{m, std::vector<std::array<int, 4>>(m), std::vector<int>(4 * m), std::vector<int>(4 * m)};
  for (int v = 0; v < m; ++v) {
    const int prev_alpha = (v + m - 1) % m;
    const int rank = beta_rank[v];
    const int prev_beta = (rank + m - 1) % m;
    const int east = 4 * rank + kBetaEast, west = 4 * prev_beta + kBetaWest;
    const int fwd = 4 * v + kAlphaFwd, back = 4 * prev_alpha + kAlphaBack;
    d.ccw[v] = cs[v].upward ? std::array<int, 4>{east, fwd, west, back} : std::array<int, 4>{east, back, west, fwd};
    for (int s = 0; s < 4; ++s) {
      d.vertex_of[d.ccw[v][s]] = v;
      d.slot_of[d.ccw[v][s]] = s;
    }
  }
  (void)beta_order;
  return d;
}

int reverse_dart(int dart) { return dart ^ 1; }

// Index of the generator that `frac_x` follows on beta, cyclically.
int beta_edge_at(const std::vector<Rational>& sorted_frac, const Rational& f) {
  auto it = std::lower_bound(sorted_frac.begin(), sorted_frac.end(), f);
  if (it != sorted_frac.end() && *it == f) throw std::domain_error("beta_edge_at: point on a crossing");
  const long idx = static_cast<long>(it - sorted_frac.begin()) - 1;
  return static_cast<int>(idx < 0 ? static_cast<long>(sorted_frac.size()) - 1 : idx);
}

struct RayHit {
  Rational s;  // parameter along the ray from the base point
  long segment;
  Rational u;  // parameter along the segment
  Point at;
  Point dir;
};

// Face containing a base point: shoot a short ray down to the beta line below
// it and take the face on the near side of the first edge met.
int locate_face(const GenusOneDiagram& d, const Regions& r, const std::vector<Crossing>& cs,
                const std::vector<Rational>& crossing_param, const std::vector<Rational>& sorted_frac,
                const Point& base) {
  const PlanarCurve& a = d.alpha;
  const long n = static_cast<long>(a.size());
  const Rational h(floor_to_long(base.y));
  for (long attempt = 0; attempt < 64; ++attempt) {
    const Rational delta = Rational(1, 1024) + Rational(attempt, 1 << 20);
    const Point end(base.x + delta, h);
    if (std::binary_search(sorted_frac.begin(), sorted_frac.end(), frac(end.x))) continue;
    bool degenerate = false;
    std::optional<RayHit> best;
    for (long i = 0; i < n && !degenerate; ++i) {
      const Point p = a.vertex(i), q = a.vertex(i + 1);
      const long amin = ceil_to_long(base.x - max(p.x, q.x)), amax = floor_to_long(end.x - min(p.x, q.x));
      const long bmin = ceil_to_long(h - max(p.y, q.y)), bmax = floor_to_long(base.y - min(p.y, q.y));
      for (long sa = amin; sa <= amax && !degenerate; ++sa)
        for (long sb = bmin; sb <= bmax; ++sb) {
          const Point p2 = p + IVec{sa, sb}, q2 = q + IVec{sa, sb};
          const int o1 = orientation(base, end, p2), o2 = orientation(base, end, q2);
          if (o1 == o2 && o1 != 0) continue;
          const int o3 = orientation(p2, q2, base), o4 = orientation(p2, q2, end);
          if (o3 == o4 && o3 != 0) continue;
          if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
            degenerate = true;
            break;
          }
          const Point ray = end - base, seg = q2 - p2;
          const Rational den = cross(ray, seg);
          const Rational s = cross(p2 - base, seg) / den;
          const Rational u = cross(p2 - base, ray) / den;
          if (!best || s < best->s) best = RayHit{s, i, u, lerp(p2, q2, u), seg};
        }
    }
    if (degenerate) continue;
    if (!best) return r.beta_left[beta_edge_at(sorted_frac, frac(end.x))];
    // Alpha edge containing the hit: the last crossing before it along alpha.
    long edge = -1;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      if (cs[c].segment < best->segment || (cs[c].segment == best->segment && crossing_param[c] < best->u))
        edge = static_cast<long>(c);
    }
    if (edge < 0) edge = static_cast<long>(cs.size()) - 1;
    const bool left = sgn(cross(best->dir, base - best->at)) > 0;
    return left ? r.alpha_left[edge] : r.alpha_right[edge];
  }
  throw std::logic_error("locate_face: no generic ray found");
}

}  // namespace

std::vector<int> Regions::corner_faces(int generator) const {
  const int m = static_cast<int>(alpha_left.size());
  const int rank = beta_rank[generator];
  return {alpha_left[generator], alpha_right[(generator + m - 1) % m], beta_left[rank],
          beta_right[(rank + m - 1) % m]};
}

Regions regions(const GenusOneDiagram& diagram) {
  const auto cs = diagram.crossings();
  const int m = static_cast<int>(cs.size());
  if (m == 0) throw DiagramError("regions: alpha and beta are disjoint");
  Regions r;
  r.beta_order.resize(m);
  std::iota(r.beta_order.begin(), r.beta_order.end(), 0);
  std::vector<Rational> fr(m);
  for (int i = 0; i < m; ++i) fr[i] = frac(cs[i].at.x);
  std::sort(r.beta_order.begin(), r.beta_order.end(), [&](int a, int b) { return fr[a] < fr[b]; });
  r.beta_rank.resize(m);
  for (int k = 0; k < m; ++k) r.beta_rank[r.beta_order[k]] = k;
  std::vector<Rational> sorted_frac(m);
  for (int k = 0; k < m; ++k) sorted_frac[k] = fr[r.beta_order[k]];

  const Darts d = build_darts(cs, r.beta_rank, r.beta_order);
  // Head of a dart is the tail of its reverse.
  std::vector<int> face(4 * m, -1);
  for (int start = 0; start < 4 * m; ++start) {
    if (face[start] >= 0) continue;
    int corners = 0;
    for (int cur = start; face[cur] < 0;) {
      face[cur] = r.count;
      ++corners;
      const int back = reverse_dart(cur);
      const int v = d.vertex_of[back];
      cur = d.ccw[v][(d.slot_of[back] + 3) % 4];
    }
    r.corners.push_back(corners);
    ++r.count;
  }
  r.alpha_left.resize(m);
  r.alpha_right.resize(m);
  r.beta_left.resize(m);
  r.beta_right.resize(m);
  for (int j = 0; j < m; ++j) {
    r.alpha_left[j] = face[4 * j + kAlphaFwd];
    r.alpha_right[j] = face[4 * j + kAlphaBack];
    r.beta_left[j] = face[4 * j + kBetaEast];
    r.beta_right[j] = face[4 * j + kBetaWest];
  }

  std::vector<Rational> param(m);
  for (int c = 0; c < m; ++c) {
    const Point p = diagram.alpha.vertex(cs[c].segment), q = diagram.alpha.vertex(cs[c].segment + 1);
    param[c] = (Rational(cs[c].height) - p.y) / (q.y - p.y);
  }
  r.z_face = locate_face(diagram, r, cs, param, sorted_frac, diagram.z);
  r.w_face = locate_face(diagram, r, cs, param, sorted_frac, diagram.w);
  return r;
}

// ---------------------------------------------------------------------------
// Domains

namespace {

// Affine form c0 + c1*u + c2*v in the two free boundary constants.
using Form = std::array<Rational, 3>;

Form operator+(const Form& a, const Form& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Form operator-(const Form& a, const Form& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

}  // namespace

DomainVector connecting_domain(const GenusOneDiagram& diagram, const Regions& r, int x, int y) {
  (void)diagram;
  const int m = static_cast<int>(r.alpha_left.size());
  if (x < 0 || y < 0 || x >= m || y >= m) throw std::out_of_range("connecting_domain: generator id");
  DomainVector out{x, y, std::vector<long>(r.count, 0)};
  if (x == y) return out;

  // Boundary coefficients along alpha and beta, up to a constant each:
  // alpha part has boundary y - x, beta part x - y.
  std::vector<Form> a_coef(m), b_coef(m);
  Rational run = 0;
  for (int j = 0; j < m; ++j) {
    run += (j == x) - (j == y);
    a_coef[j] = {run, 1, 0};
  }
  run = 0;
  for (int k = 0; k < m; ++k) {
    const int v = r.beta_order[k];
    run += (v == y) - (v == x);
    b_coef[k] = {run, 0, 1};
  }

  // Crossing an edge from its right face to its left face adds its coefficient.
  struct Adj { int to; int edge; bool alpha; bool forward; };
  std::vector<std::vector<Adj>> adj(r.count);
  for (int j = 0; j < m; ++j) {
    adj[r.alpha_right[j]].push_back({r.alpha_left[j], j, true, true});
    adj[r.alpha_left[j]].push_back({r.alpha_right[j], j, true, false});
    adj[r.beta_right[j]].push_back({r.beta_left[j], j, false, true});
    adj[r.beta_left[j]].push_back({r.beta_right[j], j, false, false});
  }
  std::vector<std::optional<Form>> mult(r.count);
  mult[0] = Form{0, 0, 0};
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int f = q.front();
    q.pop();
    for (const auto& e : adj[f]) {
      if (mult[e.to]) continue;
      const Form& c = e.alpha ? a_coef[e.edge] : b_coef[e.edge];
      mult[e.to] = e.forward ? *mult[f] + c : *mult[f] - c;
      q.push(e.to);
    }
  }
  // Every edge must be consistent; collect the constraints on (u, v).
  std::vector<Form> eqs;
  for (int j = 0; j < m; ++j) {
    eqs.push_back(*mult[r.alpha_left[j]] - *mult[r.alpha_right[j]] - a_coef[j]);
    eqs.push_back(*mult[r.beta_left[j]] - *mult[r.beta_right[j]] - b_coef[j]);
  }
  // Solve c1*u + c2*v = -c0 by elimination on at most two pivots.
  Rational u = 0, v = 0;
  std::optional<Form> first;
  for (const auto& e : eqs) {
    if (e[1] == 0 && e[2] == 0) continue;
    if (!first) {
      first = e;
      continue;
    }
    const Rational det = (*first)[1] * e[2] - (*first)[2] * e[1];
    if (det != 0) {
      u = (-(*first)[0] * e[2] + (*first)[2] * e[0]) / det;
      v = (-(*first)[1] * e[0] + (*first)[0] * e[1]) / det;
      first.reset();
      break;
    }
  }
  if (first) {
    if ((*first)[1] != 0) u = -(*first)[0] / (*first)[1];
    else v = -(*first)[0] / (*first)[2];
  }
  for (const auto& e : eqs)
    if (e[0] + e[1] * u + e[2] * v != 0) throw std::logic_error("connecting_domain: infeasible boundary system");

  long lowest = 0;
  for (int f = 0; f < r.count; ++f) {
    const Rational val = (*mult[f])[0] + (*mult[f])[1] * u + (*mult[f])[2] * v;
    if (!is_integer(val)) throw std::logic_error("connecting_domain: non-integral domain");
    out.multiplicities[f] = floor_to_long(val);
    lowest = f == 0 ? out.multiplicities[f] : std::min(lowest, out.multiplicities[f]);
  }
  for (auto& v2 : out.multiplicities) v2 -= lowest;
  return out;
}

DomainVector connecting_domain(const GenusOneDiagram& diagram, int x, int y) {
  return connecting_domain(diagram, regions(diagram), x, y);
}

long maslov_index(const Regions& r, const DomainVector& domain) {
  long four_times = 0;
  for (int f = 0; f < r.count; ++f) four_times += domain.multiplicities[f] * (4 - r.corners[f]);
  for (int g : {domain.from, domain.to})
    for (int f : r.corner_faces(g)) four_times += domain.multiplicities[f];
  if (four_times % 4 != 0) throw std::logic_error("maslov_index: non-integral index");
  return four_times / 4;
}

long maslov_index(const GenusOneDiagram& diagram, const DomainVector& domain) {
  return maslov_index(regions(diagram), domain);
}

}  // namespace ttk
