#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <sstream>

namespace ttk::cli {

namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 20.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

// Torus square [0,1]^2 to SVG coordinates (y axis pointing up).
double sx(double x) { return kMargin + x * kSize; }
double sy(double y) { return kMargin + (1.0 - y) * kSize; }

}  // namespace

std::string render_diagram_svg(const GenusOneDiagram& d) {
  std::ostringstream o;
  const double full = kSize + 2 * kMargin;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(full) << "\" height=\"" << num(full)
    << "\" viewBox=\"0 0 " << num(full) << " " << num(full) << "\">\n";
  o << "<defs><clipPath id=\"square\"><rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
    << num(kSize) << "\" height=\"" << num(kSize) << "\"/></clipPath></defs>\n";
  o << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kSize) << "\" height=\""
    << num(kSize) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  // beta is the bottom edge, identified with the top edge.
  for (double y : {0.0, 1.0})
    o << "<line class=\"beta\" x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(y)) << "\" x2=\"" << num(sx(1))
      << "\" y2=\"" << num(sy(y)) << "\" stroke=\"blue\" stroke-width=\"2\"/>\n";

  o << "<g class=\"alpha\" clip-path=\"url(#square)\" stroke=\"red\" stroke-width=\"1.2\" fill=\"none\">\n";
  const long n = static_cast<long>(d.alpha.size());
  for (long i = 0; i < n; ++i) {
    const Point p = d.alpha.vertex(i), q = d.alpha.vertex(i + 1);
    const double px = p.x.get_d(), py = p.y.get_d(), qx = q.x.get_d(), qy = q.y.get_d();
    const long ax0 = static_cast<long>(std::floor(std::min(px, qx))), ax1 = static_cast<long>(std::floor(std::max(px, qx)));
    const long ay0 = static_cast<long>(std::floor(std::min(py, qy))), ay1 = static_cast<long>(std::floor(std::max(py, qy)));
    for (long a = ax0; a <= ax1; ++a)
      for (long b = ay0; b <= ay1; ++b)
        o << "<line x1=\"" << num(sx(px - a)) << "\" y1=\"" << num(sy(py - b)) << "\" x2=\"" << num(sx(qx - a))
          << "\" y2=\"" << num(sy(qy - b)) << "\"/>\n";
  }
  o << "</g>\n";
  for (const auto& c : d.crossings())
    o << "<circle class=\"crossing\" cx=\"" << num(sx(frac(c.at.x).get_d())) << "\" cy=\"" << num(sy(0))
      << "\" r=\"2.5\" fill=\"black\"/>\n";
  const auto dot = [&](const Point& p, const char* name, const char* colour) {
    const double x = frac(p.x).get_d(), y = frac(p.y).get_d();
    o << "<circle class=\"" << name << "\" cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y))
      << "\" r=\"5\" fill=\"" << colour << "\"/>\n";
    o << "<text x=\"" << num(sx(x) + 7) << "\" y=\"" << num(sy(y) - 7) << "\" font-size=\"14\">" << name
      << "</text>\n";
  };
  dot(d.z, "z", "black");
  dot(d.w, "w", "gray");
  o << "</svg>\n";
  return o.str();
}

std::string render_staircase_svg(const KnotComplex& c) {
  const int m = static_cast<int>(c.generators.size());
  // Plane position (i, j): an arrow x -> y steps by (-n_w, -n_z).
  std::vector<long> pi(m, 0), pj(m, 0);
  std::vector<bool> placed(m, false);
  std::vector<std::vector<const Arrow*>> adj(m);
  for (const auto& a : c.arrows) {
    adj[a.from].push_back(&a);
    adj[a.to].push_back(&a);
  }
  long next_offset = 0;
  for (int root = 0; root < m; ++root) {
    if (placed[root]) continue;
    placed[root] = true;
    pi[root] = next_offset;
    pj[root] = c.generators[root].alexander + next_offset;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const Arrow* a : adj[v]) {
        const int u = a->from == v ? a->to : a->from;
        if (placed[u]) continue;
        const long sgn = a->from == v ? -1 : 1;
        pi[u] = pi[v] + sgn * a->n_w;
        pj[u] = pj[v] + sgn * a->n_z;
        placed[u] = true;
        q.push(u);
      }
    }
    next_offset += 2;
  }
  long imin = 0, imax = 0, jmin = 0, jmax = 0;
  for (int v = 0; v < m; ++v) {
    if (v == 0 || pi[v] < imin) imin = pi[v];
    if (v == 0 || pi[v] > imax) imax = pi[v];
    if (v == 0 || pj[v] < jmin) jmin = pj[v];
    if (v == 0 || pj[v] > jmax) jmax = pj[v];
  }
  const double cell = 40.0;
  const double width = (imax - imin + 2) * cell, height = (jmax - jmin + 2) * cell;
  auto X = [&](long i) { return (i - imin + 1) * cell; };
  auto Y = [&](long j) { return (jmax - j + 1) * cell; };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
    << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  o << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"8\" refY=\"4\" orient=\"auto\">"
       "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n";
  for (const auto& a : c.arrows) {
    const char* kind = a.n_z == 0 ? "horizontal" : (a.n_w == 0 ? "vertical" : "diagonal");
    o << "<line class=\"arrow " << kind << "\" x1=\"" << num(X(pi[a.from])) << "\" y1=\"" << num(Y(pj[a.from]))
      << "\" x2=\"" << num(X(pi[a.to])) << "\" y2=\"" << num(Y(pj[a.to]))
      << "\" stroke=\"black\" stroke-width=\"1.5\" marker-end=\"url(#head)\"/>\n";
  }
  for (int v = 0; v < m; ++v) {
    const auto& g = c.generators[v];
    o << "<circle class=\"generator\" cx=\"" << num(X(pi[v])) << "\" cy=\"" << num(Y(pj[v]))
      << "\" r=\"4\" fill=\"black\"/>\n";
    o << "<text x=\"" << num(X(pi[v]) + 6) << "\" y=\"" << num(Y(pj[v]) - 6) << "\" font-size=\"10\">(" << g.alexander
      << "," << g.maslov << ")</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace ttk::cli
