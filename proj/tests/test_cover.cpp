#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "ttk/cover.hpp"
#include "ttk/diagram.hpp"

using namespace ttk;

namespace {

std::vector<std::pair<int, int>> disk_multiset(const std::vector<Bigon>& bigons) {
  std::vector<std::pair<int, int>> out;
  for (const auto& b : bigons) out.emplace_back(b.n_z, b.n_w);
  std::sort(out.begin(), out.end());
  return out;
}

// Same curve, vertex list started `shift` places later.
GenusOneDiagram rotate_start(const GenusOneDiagram& d, long shift) {
  GenusOneDiagram out = d;
  const long n = static_cast<long>(d.alpha.size());
  for (long i = 0; i < n; ++i) out.alpha.vertices[i] = d.alpha.vertex(i + shift);
  return out;
}

// Bigons keyed by crossing positions on beta instead of generator ids.
std::set<std::tuple<Rational, Rational, int, int>> keyed(const GenusOneDiagram& d) {
  const auto cs = d.crossings();
  std::set<std::tuple<Rational, Rational, int, int>> out;
  for (const auto& b : enumerate_bigons(d)) out.emplace(frac(cs[b.from].at.x), frac(cs[b.to].at.x), b.n_z, b.n_w);
  return out;
}

}  // namespace

TEST_CASE("K(3,4;2,2) disk list") {
  const GenusOneDiagram d = build_diagram(make_params(3, 1, Sign::Plus, 2, 2));
  const auto bigons = enumerate_bigons(d);
  CHECK(bigons.size() == 8);
  const std::vector<std::pair<int, int>> expected{{0, 1}, {0, 1}, {0, 1}, {0, 2}, {1, 0}, {1, 0}, {1, 0}, {2, 0}};
  CHECK(disk_multiset(bigons) == expected);
  // Four generators emit two disks each, the other five emit none.
  std::map<int, int> out_degree;
  for (const auto& b : bigons) ++out_degree[b.from];
  CHECK(out_degree.size() == 4);
  for (const auto& [g, n] : out_degree) CHECK(n == 2);
}

TEST_CASE("trefoil disks share their source") {
  const auto bigons = enumerate_bigons(build_diagram(make_params(2, 1, Sign::Plus, 1, 0)));
  REQUIRE(bigons.size() == 2);
  CHECK(bigons[0].from == bigons[1].from);
  CHECK(disk_multiset(bigons) == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("lifted alpha has one event per generator") {
  const GenusOneDiagram d = build_diagram(make_params(4, 1, Sign::Plus, 2, 1));
  const LiftedAlpha lifted = lift_alpha(d);
  CHECK(lifted.size() == 11);
  CHECK(lifted.period == d.alpha.closure);
  for (long i = 0; i < 11; ++i) CHECK(lifted.event(i + 11).x == lifted.event(i).x + lifted.period.a);
}

TEST_CASE("enumeration does not depend on where alpha starts") {
  for (const auto& params : {make_params(3, 1, Sign::Plus, 2, 2), make_params(4, 1, Sign::Plus, 2, 2)}) {
    CAPTURE(params.label());
    const GenusOneDiagram d = build_diagram(params);
    const auto base = keyed(d);
    for (long shift : {1L, 3L, static_cast<long>(d.alpha.size()) / 2}) CHECK(keyed(rotate_start(d, shift)) == base);
  }
}

TEST_CASE("regions tile the torus") {
  for (const auto& params : {make_params(3, 1, Sign::Plus, 2, 2), make_params(5, 1, Sign::Minus, 3, 2)}) {
    CAPTURE(params.label());
    const GenusOneDiagram d = build_diagram(params);
    const Regions r = regions(d);
    const int m = static_cast<int>(d.intersection_count());
    CHECK(r.count == m);  // V - E + F = 0 with V = m, E = 2m
    CHECK(std::accumulate(r.corners.begin(), r.corners.end(), 0) == 4 * m);
    CHECK(r.z_face != r.w_face);
    for (int g = 0; g < m; ++g) CHECK(r.corner_faces(g).size() == 4);
  }
}

TEST_CASE("bigons are index-one domains") {
  for (const auto& params : {make_params(3, 1, Sign::Plus, 2, 2), make_params(4, 1, Sign::Plus, 2, 2)}) {
    CAPTURE(params.label());
    const GenusOneDiagram d = build_diagram(params);
    const Regions r = regions(d);
    for (const auto& b : enumerate_bigons(d)) {
      const DomainVector dom = connecting_domain(d, r, b.from, b.to);
      CHECK(dom.n_z(r) == b.n_z);
      CHECK(dom.n_w(r) == b.n_w);
      CHECK(maslov_index(r, dom) == 1);
    }
  }
}

TEST_CASE("domain data modulo the periodic domain") {
  const GenusOneDiagram d = build_diagram(make_params(4, 1, Sign::Plus, 2, 2));
  const Regions r = regions(d);
  const int m = static_cast<int>(d.intersection_count());
  DomainVector torus{0, 0, std::vector<long>(r.count, 1)};
  CHECK(torus.n_z(r) == 1);
  CHECK(torus.n_w(r) == 1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const DomainVector dom = connecting_domain(d, r, x, y);
      CHECK(*std::min_element(dom.multiplicities.begin(), dom.multiplicities.end()) == 0);
      DomainVector shifted = dom;
      for (auto& v : shifted.multiplicities) v += 1;
      CHECK(shifted.n_z(r) - shifted.n_w(r) == dom.n_z(r) - dom.n_w(r));
      CHECK(maslov_index(r, shifted) - 2 * shifted.n_w(r) == maslov_index(r, dom) - 2 * dom.n_w(r));
      if (x == y) CHECK(maslov_index(r, dom) == 0);
    }
}

TEST_CASE("no empty disks on reduced diagrams") {
  for (int p = 2; p <= 4; ++p)
    for (int s = 1; s < p; ++s) {
      const auto params = make_params(p, 2, Sign::Minus, s, 2);
      CAPTURE(params.label());
      for (const auto& b : enumerate_bigons(build_diagram(params))) CHECK(b.n_z + b.n_w > 0);
    }
}
