#include <doctest.h>

#include "support/reference.hpp"
#include "ttk/invariants.hpp"

using namespace ttk;

namespace {

KnotComplex staircase(const std::vector<int>& steps) {
  // steps: lengths of alternating horizontal / vertical arrows from the top.
  KnotComplex c;
  int a = 0, m = 0;
  c.generators.push_back({0, a, m});
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int id = static_cast<int>(c.generators.size());
    const int len = steps[i];
    if (i % 2 == 0) {
      // id -> id - 1 horizontal: A drops by -len, so A(id) = A(id-1) - len.
      a -= len;
      m -= 1 - 2 * len;
      c.generators.push_back({id, a, m});
      c.arrows.push_back({id, id - 1, 0, len});
    } else {
      // id - 1 -> id vertical.
      a -= len;
      m -= 1;
      c.generators.push_back({id, a, m});
      c.arrows.push_back({id - 1, id, len, 0});
    }
  }
  return c;
}

}  // namespace

TEST_CASE("predicate table") {
  CHECK(theorem1_predicate(make_params(3, 1, Sign::Plus, 2, 5)));
  CHECK(theorem1_predicate(make_params(5, 1, Sign::Plus, 2, 1)));
  CHECK(theorem1_predicate(make_params(5, 1, Sign::Plus, 3, 1)));
  CHECK_FALSE(theorem1_predicate(make_params(5, 1, Sign::Plus, 3, 2)));
  CHECK_FALSE(theorem1_predicate(make_params(6, 1, Sign::Plus, 3, 1)));
  CHECK(theorem1_predicate(make_params(2, 1, Sign::Plus, 1, 1)));
  CHECK_THROWS_AS(theorem1_predicate(make_params(4, 1, Sign::Plus, 2, 0)), PredicateNotApplicable);
  CHECK_THROWS_AS(theorem1_predicate(make_params(4, 1, Sign::Plus, 1, 2)), PredicateNotApplicable);
  for (int p = 2; p <= 8; ++p)
    for (int s = p == 2 ? 1 : 2; s < p; ++s)
      for (int r = 1; r <= 4; ++r) CHECK(theorem1_predicate(make_params(p, 1, Sign::Plus, s, r)) == ref::expected_lspace(p, s, r));
}

TEST_CASE("handmade staircases") {
  KnotComplex c = staircase({1, 1, 2, 2});
  StaircaseResult s = is_staircase(c);
  CHECK(s.is_staircase);
  CHECK(s.ordering.size() == 5);
  for (std::size_t i = 1; i < s.ordering.size(); ++i)
    CHECK(c.generators[s.ordering[i]].alexander > c.generators[s.ordering[i - 1]].alexander);

  KnotComplex one;
  one.generators.push_back({0, 0, 0});
  CHECK(is_staircase(one).is_staircase);
}

TEST_CASE("non-staircases carry a witness") {
  KnotComplex even = staircase({1, 1, 2});
  CHECK_FALSE(is_staircase(even).is_staircase);
  CHECK_FALSE(is_staircase(even).witness.empty());

  KnotComplex diagonal = staircase({1, 1});
  diagonal.arrows[0].n_z = 1;
  CHECK_FALSE(is_staircase(diagonal).is_staircase);

  KnotComplex reversed = staircase({1, 1});
  std::swap(reversed.arrows[1].from, reversed.arrows[1].to);
  CHECK_FALSE(is_staircase(reversed).is_staircase);

  KnotComplex dropped = staircase({1, 1, 1, 1});
  dropped.arrows.pop_back();
  CHECK_FALSE(is_staircase(dropped).is_staircase);
}

TEST_CASE("rank obstruction") {
  BigradedRanks r;
  r.ranks[{0, 2}] = 1;
  r.ranks[{-1, 1}] = 1;
  CHECK_FALSE(rank_obstruction(r).obstructed);
  r.ranks[{-2, 1}] = 1;
  const RankObstruction o = rank_obstruction(r);
  CHECK(o.obstructed);
  CHECK(o.grading == 1);
}

TEST_CASE("anchor classifications") {
  const ClassificationResult a = classify(make_params(3, 1, Sign::Plus, 2, 2));
  CHECK(a.is_lspace == LSpace::Yes);
  CHECK(a.reason == Reason::Staircase);
  CHECK(a.complex.generators.size() == 9);
  CHECK_FALSE(a.obstruction.obstructed);

  const ClassificationResult b = classify(make_params(4, 1, Sign::Plus, 2, 1));
  CHECK(b.is_lspace == LSpace::Yes);
  CHECK(b.reason == Reason::Staircase);
  CHECK(b.complex.generators.size() == 11);

  const ClassificationResult c = classify(make_params(4, 1, Sign::Plus, 2, 2));
  CHECK(c.is_lspace == LSpace::No);
  CHECK(c.reason == Reason::RankObstruction);
  CHECK_FALSE(c.staircase.is_staircase);
  CHECK(to_string(c.is_lspace) == "no");
  CHECK(to_string(c.reason) == "rank_obstruction");
}

TEST_CASE("full twist trades against one strand of the torus part") {
  // K(p, kp+1; p-1, r) and K(p, (k+1)p-1; p-1, r-1) carry the same invariant.
  for (int p = 2; p <= 5; ++p)
    for (int k = 1; k <= 2; ++k)
      for (int r = 1; r <= 3; ++r) {
        const auto lhs = make_params(p, k, Sign::Plus, p - 1, r), rhs = make_params(p, k + 1, Sign::Minus, p - 1, r - 1);
        CAPTURE(lhs.label());
        CHECK(classify(lhs).ranks == classify(rhs).ranks);
      }
  CHECK(classify(make_params(3, 1, Sign::Plus, 2, 2)).ranks == classify(make_params(3, 2, Sign::Minus, 2, 1)).ranks);
}
