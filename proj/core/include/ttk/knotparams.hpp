#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ttk/laurent.hpp"

namespace ttk {

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sign { Plus = 1, Minus = -1 };

/// K(p, q; s, r) with q = k*p + sign: a (p, q) torus knot with r positive full
/// twists on s adjacent strands.
struct TwistedTorusParams {
  int p = 0;
  int k = 0;
  Sign sign = Sign::Plus;
  int s = 0;
  int r = 0;
  int q = 0;

  /// s == 1 or r == 0: the knot is the torus knot T(p, q).
  bool is_torus_knot() const { return s == 1 || r == 0; }
  std::string label() const;
  bool operator==(const TwistedTorusParams&) const = default;
};

TwistedTorusParams make_params(int p, int k, Sign sign, int s, int r);

struct BraidLetter {
  int generator;  // sigma_generator, 1-based
  bool positive = true;
  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  int strand_count = 1;
  std::vector<BraidLetter> letters;

  /// Permutation induced on strands (0-based): strand i ends at perm[i].
  std::vector<int> permutation() const;
  bool closure_is_knot() const;
};

/// (s1 ... s_{p-1})^q (s1 ... s_{s-1})^{s r} on p strands.
BraidWord braid_word(const TwistedTorusParams& params);

/// Seifert genus of a positive braid closure, (c - n + 1) / 2.
int positive_braid_genus(const BraidWord& word);
int positive_braid_genus(const TwistedTorusParams& params);

/// Symmetrized Alexander polynomial of T(p, q).
LaurentPoly torus_alexander(int p, int q);

/// Delta_P(t) * Delta_K(t^winding).
LaurentPoly satellite_alexander(const LaurentPoly& pattern, const LaurentPoly& companion, int winding);

}  // namespace ttk
