#include <doctest.h>

#include <numeric>

#include "support/reference.hpp"
#include "ttk/oracle.hpp"

using namespace ttk;

TEST_CASE("Burau recovers torus knots") {
  for (int p = 2; p <= 6; ++p)
    for (int k = 1; k <= 13; ++k)
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        const int q = k * p + static_cast<int>(sign);
        if (q > 13) continue;
        for (int r : {0, 1, 3}) {
          const auto params = make_params(p, k, sign, 1, r);
          CAPTURE(params.label());
          CHECK(burau_alexander(braid_word(params)) == torus_alexander(p, q));
        }
      }
}

TEST_CASE("trefoil and the (2,5) torus knot") {
  BraidWord trefoil{2, {{1, true}, {1, true}, {1, true}}};
  CHECK(burau_alexander(trefoil).to_string() == "t^1 - 1 + t^-1");
  BraidWord cinquefoil{2, std::vector<BraidLetter>(5, BraidLetter{1, true})};
  CHECK(burau_alexander(cinquefoil).to_string() == "t^2 - t^1 + 1 - t^-1 + t^-2");
}

TEST_CASE("negative letters are rejected") {
  BraidWord figure_eight{3, {{1, true}, {2, false}, {1, true}, {2, false}}};
  CHECK_THROWS_AS(burau_alexander(figure_eight), std::invalid_argument);
}

TEST_CASE("two-component closures are rejected") {
  BraidWord hopf{2, {{1, true}, {1, true}}};
  CHECK_THROWS_AS(burau_alexander(hopf), std::invalid_argument);
}

TEST_CASE("symmetric, one at t = 1, invariant under conjugation, matches an independent minor") {
  for (int p = 2; p <= 6; ++p)
    for (int k = 1; k <= 2; ++k)
      for (Sign sign : {Sign::Plus, Sign::Minus})
        for (int s = 1; s < p; ++s)
          for (int r = 1; r <= 3; ++r) {
            if (k * p + static_cast<int>(sign) == 1) continue;
            const auto params = make_params(p, k, sign, s, r);
            CAPTURE(params.label());
            const BraidWord w = braid_word(params);
            const LaurentPoly d = burau_alexander(w);
            CHECK(d.is_symmetric());
            CHECK(d.at_one() == 1);
            BraidWord rotated = w;
            std::rotate(rotated.letters.begin(), rotated.letters.begin() + (w.letters.size() / 3),
                        rotated.letters.end());
            CHECK(burau_alexander(rotated) == d);
            CHECK(ref::matches_braid_closure(d, w));
          }
}
