#include <doctest.h>

#include <set>
#include <sstream>

#include "support/reference.hpp"
#include "ttk/chain.hpp"
#include "ttk/oracle.hpp"

using namespace ttk;

namespace {

KnotComplex complex_of(const TwistedTorusParams& params) {
  const GenusOneDiagram d = build_diagram(params);
  return build_complex(d, enumerate_bigons(d));
}

}  // namespace

TEST_CASE("trefoil gradings") {
  const KnotComplex c = complex_of(make_params(2, 1, Sign::Plus, 1, 0));
  std::set<std::pair<int, int>> am;
  for (const auto& g : c.generators) am.emplace(g.alexander, g.maslov);
  CHECK(am == std::set<std::pair<int, int>>{{1, 0}, {0, -1}, {-1, -2}});
  CHECK(hat_hfk_ranks(c).total() == 3);
  CHECK(alexander_poly(hat_hfk_ranks(c)).to_string() == "t^1 - 1 + t^-1");
}

TEST_CASE("K(3,4;2,2) complex") {
  const KnotComplex c = complex_of(make_params(3, 1, Sign::Plus, 2, 2));
  CHECK(c.generators.size() == 9);
  CHECK(c.arrows.size() == 8);
  CHECK_NOTHROW(check_complex(c));
  const BigradedRanks ranks = hat_hfk_ranks(c);
  CHECK(ranks.total() == 9);
  CHECK(ranks.top_alexander() == 5);
  CHECK(alexander_poly(ranks) == burau_alexander(braid_word(make_params(3, 1, Sign::Plus, 2, 2))));
  CHECK_NOTHROW(check_rank_symmetry(ranks));
  const BigradedRanks hf = hf_s3_check(c);
  CHECK(hf.total() == 1);
  CHECK(hf.ranks.count({0, 0}) == 1);
}

TEST_CASE("arrow grading drops") {
  for (const auto& params : {make_params(4, 1, Sign::Plus, 2, 2), make_params(5, 1, Sign::Minus, 2, 2)}) {
    const KnotComplex c = complex_of(params);
    for (const auto& a : c.arrows) {
      const auto &x = c.generators[a.from], &y = c.generators[a.to];
      CHECK(x.maslov - y.maslov == 1 - 2 * a.n_w);
      CHECK(x.alexander - y.alexander == a.n_z - a.n_w);
    }
  }
}

TEST_CASE("K(4,5;2,2) is thin but carries a coefficient above one") {
  const KnotComplex c = complex_of(make_params(4, 1, Sign::Plus, 2, 2));
  CHECK_NOTHROW(check_complex(c));
  const BigradedRanks ranks = hat_hfk_ranks(c);
  const LaurentPoly delta = alexander_poly(ranks);
  CHECK(ranks.total() == 17);
  CHECK(delta.l1_norm() == 17);
  CHECK(delta.coeff(0) == 3);
  CHECK(ranks.at_alexander(1) == 2);
  CHECK(ranks.top_alexander() == ref::expected_genus(4, 5, 2, 2));
}

TEST_CASE("hat homology with diagram-relative gradings") {
  const GenusOneDiagram d = build_diagram(make_params(3, 1, Sign::Plus, 2, 1));
  const BigradedRanks hf = hf_s3_check(d, enumerate_bigons(d));
  CHECK(hf.total() == 1);
}

TEST_CASE("check_complex rejects a broken differential") {
  // a -> b -> c with no cancelling path: d^2(a) = c.
  KnotComplex chain;
  chain.generators = {{0, 0, 2}, {1, 0, 1}, {2, 0, 0}};
  chain.arrows = {{0, 1, 0, 0}, {1, 2, 0, 0}};
  CHECK_THROWS_AS(check_complex(chain), InvariantViolation);
  // A square a -> b -> d, a -> c -> d cancels.
  KnotComplex square;
  square.generators = {{0, 0, 2}, {1, 0, 1}, {2, 0, 1}, {3, 0, 0}};
  square.arrows = {{0, 1, 0, 0}, {0, 2, 0, 0}, {1, 3, 0, 0}, {2, 3, 0, 0}};
  CHECK_NOTHROW(check_complex(square));
  KnotComplex regraded = complex_of(make_params(3, 1, Sign::Plus, 2, 2));
  regraded.generators[regraded.arrows[0].from].maslov += 2;
  CHECK_THROWS_AS(check_complex(regraded), InvariantViolation);
}

TEST_CASE("rank symmetry check rejects asymmetric ranks") {
  BigradedRanks r;
  r.ranks[{0, 1}] = 1;
  CHECK_THROWS_AS(check_rank_symmetry(r), InvariantViolation);
  CHECK_THROWS_AS(alexander_poly(r), InvariantViolation);
}

TEST_CASE("complex serialization round trip") {
  const KnotComplex c = complex_of(make_params(4, 1, Sign::Plus, 2, 1));
  std::stringstream buf;
  write_complex(buf, c);
  CHECK(read_complex(buf) == c);
}
