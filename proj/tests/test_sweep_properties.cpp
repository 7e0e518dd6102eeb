// Property checks over the full swept family: p in [2, 6], k in [1, 2],
// r in [1, 3], s in [2, p - 1] (s = 1 when p = 2), both signs, q != 1.

#include <doctest.h>

#include <memory>

#include "support/reference.hpp"
#include "ttk/invariants.hpp"
#include "ttk/oracle.hpp"

using namespace ttk;

namespace {

struct Knot {
  TwistedTorusParams params;
  KnotComplex complex;
  ClassificationResult result;
  std::string error;
};

const std::vector<Knot>& family() {
  static const std::vector<Knot> knots = [] {
    std::vector<Knot> out;
    for (int p = 2; p <= 6; ++p)
      for (int k = 1; k <= 2; ++k)
        for (Sign sign : {Sign::Plus, Sign::Minus})
          for (int s = p == 2 ? 1 : 2; s < p; ++s)
            for (int r = 1; r <= 3; ++r) {
              if (k * p + static_cast<int>(sign) == 1) continue;
              Knot kn;
              kn.params = make_params(p, k, sign, s, r);
              try {
                const GenusOneDiagram d = build_diagram(kn.params);
                kn.complex = build_complex(d, enumerate_bigons(d));
                kn.result = classify(kn.complex);
              } catch (const std::exception& e) {
                kn.error = e.what();
              }
              out.push_back(std::move(kn));
            }
    return out;
  }();
  return knots;
}

template <class F>
void each(F&& f) {
  for (const Knot& k : family()) {
    CAPTURE(k.params.label());
    if (!k.error.empty()) {
      FAIL_CHECK(k.error);
      continue;
    }
    f(k);
  }
}

}  // namespace

TEST_CASE("the family has 129 knots, all computed") {
  CHECK(family().size() == 129);
  each([](const Knot&) {});
}

TEST_CASE("classification agrees with the closed-form predicate, never undecided") {
  each([](const Knot& k) {
    CHECK(k.result.is_lspace != LSpace::Undecided);
    const bool predicted = ref::expected_lspace(k.params.p, k.params.s, k.params.r);
    CHECK(theorem1_predicate(k.params) == predicted);
    CHECK((k.result.is_lspace == LSpace::Yes) == predicted);
  });
}

TEST_CASE("hat ranks give the braid Alexander polynomial") {
  each([](const Knot& k) {
    const LaurentPoly delta = alexander_poly(k.result.ranks);
    const BraidWord w = braid_word(k.params);
    CHECK(delta == burau_alexander(w));
    CHECK(ref::matches_braid_closure(delta, w));
  });
}

TEST_CASE("d^2 = 0 with U powers and grading drops") {
  each([](const Knot& k) {
    CHECK_NOTHROW(check_complex(k.complex));
    for (const auto& a : k.complex.arrows) {
      const auto &x = k.complex.generators[a.from], &y = k.complex.generators[a.to];
      CHECK(x.maslov - y.maslov == 1 - 2 * a.n_w);
      CHECK(x.alexander - y.alexander == a.n_z - a.n_w);
    }
  });
}

TEST_CASE("rank symmetry") {
  each([](const Knot& k) {
    CHECK_NOTHROW(check_rank_symmetry(k.result.ranks));
    for (const auto& [key, rank] : k.result.ranks.ranks) {
      const auto [m, s] = key;
      const auto it = k.result.ranks.ranks.find({m - 2 * s, -s});
      CHECK((it != k.result.ranks.ranks.end() && it->second == rank));
    }
  });
}

TEST_CASE("hat homology of the three-sphere has rank one at Maslov zero") {
  each([](const Knot& k) {
    const BigradedRanks hf = hf_s3_check(k.complex);
    CHECK(hf.total() == 1);
    CHECK(hf.ranks.count({0, 0}) == 1);
  });
}

TEST_CASE("top Alexander grading is the genus") {
  each([](const Knot& k) {
    const auto& t = k.params;
    CHECK(k.result.ranks.top_alexander() == ref::expected_genus(t.p, t.q, t.s, t.r));
    CHECK(k.result.ranks.top_alexander() == positive_braid_genus(t));
  });
}

TEST_CASE("total rank bounds the Alexander norm, sharply exactly for L-space knots") {
  each([](const Knot& k) {
    const long total = k.result.ranks.total();
    const long norm = alexander_poly(k.result.ranks).l1_norm();
    CHECK(total >= norm);
    CHECK((total == norm) == ref::expected_lspace(k.params.p, k.params.s, k.params.r));
  });
}

TEST_CASE("staircase and rank obstruction exclude each other") {
  each([](const Knot& k) {
    CHECK_FALSE((k.result.staircase.is_staircase && k.result.obstruction.obstructed));
    const auto& order = k.result.staircase.ordering;
    for (std::size_t i = 1; i < order.size(); ++i)
      CHECK(k.complex.generators[order[i]].alexander > k.complex.generators[order[i - 1]].alexander);
  });
}
