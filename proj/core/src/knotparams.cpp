#include "ttk/knotparams.hpp"

#include <numeric>

namespace ttk {

std::string TwistedTorusParams::label() const {
  return "K(" + std::to_string(p) + "," + std::to_string(q) + ";" + std::to_string(s) + "," + std::to_string(r) + ")";
}

TwistedTorusParams make_params(int p, int k, Sign sign, int s, int r) {
  if (p < 2) throw ParamError("p must be >= 2 (got " + std::to_string(p) + ")");
  if (k < 1) throw ParamError("k must be >= 1 (got " + std::to_string(k) + ")");
  if (sign != Sign::Plus && sign != Sign::Minus) throw ParamError("sign must be +1 or -1");
  if (s <= 0 || s >= p) throw ParamError("s must satisfy 0 < s < p (got s=" + std::to_string(s) + ", p=" + std::to_string(p) + ")");
  if (r < 0) throw ParamError("r must be >= 0 (got " + std::to_string(r) + ")");
  TwistedTorusParams t{p, k, sign, s, r, k * p + static_cast<int>(sign)};
  if (t.q < 1) throw ParamError("q = k*p + sign must be >= 1");
  if (std::gcd(t.p, t.q) != 1) throw ParamError("gcd(p, q) must be 1");
  return t;
}

std::vector<int> BraidWord::permutation() const {
  // at[j] = strand currently at position j.
  std::vector<int> at(strand_count);
  std::iota(at.begin(), at.end(), 0);
  for (const auto& l : letters) std::swap(at[l.generator - 1], at[l.generator]);
  std::vector<int> pos(strand_count);
  for (int j = 0; j < strand_count; ++j) pos[at[j]] = j;
  return pos;
}

bool BraidWord::closure_is_knot() const {
  auto perm = permutation();
  int cur = 0, len = 0;
  do {
    cur = perm[cur];
    ++len;
  } while (cur != 0 && len <= strand_count);
  return len == strand_count;
}

BraidWord braid_word(const TwistedTorusParams& params) {
  BraidWord w;
  w.strand_count = params.p;
  for (int rep = 0; rep < params.q; ++rep)
    for (int g = 1; g < params.p; ++g) w.letters.push_back({g, true});
  for (int rep = 0; rep < params.s * params.r; ++rep)
    for (int g = 1; g < params.s; ++g) w.letters.push_back({g, true});
  return w;
}

int positive_braid_genus(const BraidWord& word) {
  for (const auto& l : word.letters)
    if (!l.positive) throw std::invalid_argument("positive_braid_genus: braid word is not positive");
  if (!word.closure_is_knot()) throw std::invalid_argument("positive_braid_genus: closure is not a knot");
  int c = static_cast<int>(word.letters.size());
  return (c - word.strand_count + 1) / 2;
}

int positive_braid_genus(const TwistedTorusParams& params) { return positive_braid_genus(braid_word(params)); }

LaurentPoly torus_alexander(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("torus_alexander: p, q must be positive");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("torus_alexander: p and q must be coprime");
  auto t_minus_one = [](int n) { return LaurentPoly::monomial(1, n) - LaurentPoly(1); };
  LaurentPoly num = t_minus_one(p * q) * t_minus_one(1);
  LaurentPoly den = t_minus_one(p) * t_minus_one(q);
  return num.exact_divide(den).symmetrized();
}

LaurentPoly satellite_alexander(const LaurentPoly& pattern, const LaurentPoly& companion, int winding) {
  if (winding < 0) throw std::invalid_argument("satellite_alexander: winding must be >= 0");
  return pattern * companion.substitute_power(winding);
}

}  // namespace ttk
