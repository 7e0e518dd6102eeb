#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttk/chain.hpp"
#include "ttk/knotparams.hpp"

namespace ttk {

class PredicateNotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class LSpace { Yes, No, Undecided };
enum class Reason { Staircase, RankObstruction, None };

std::string to_string(LSpace v);
std::string to_string(Reason v);

struct StaircaseResult {
  bool is_staircase = false;
  /// Generator ids x_1, ..., x_m with increasing Alexander grading.
  std::vector<int> ordering;
  /// Why the complex is not a staircase.
  std::string witness;
};

struct RankObstruction {
  bool obstructed = false;
  /// Highest Alexander grading with total rank >= 2.
  std::optional<int> grading;
};

struct ClassificationResult {
  LSpace is_lspace = LSpace::Undecided;
  Reason reason = Reason::None;
  StaircaseResult staircase;
  RankObstruction obstruction;
  KnotComplex complex;
  BigradedRanks ranks;
};

/// Alternating path x_1 <- x_2 -> x_3 <- ... with one horizontal (n_w only)
/// and one vertical (n_z only) arrow out of every even generator.
StaircaseResult is_staircase(const KnotComplex& complex);

RankObstruction rank_obstruction(const BigradedRanks& ranks);

/// s = p - 1, or s in {2, p - 2} and r = 1. Throws PredicateNotApplicable for
/// r = 0 and for s = 1 with p >= 3.
bool theorem1_predicate(const TwistedTorusParams& params);

/// Diagram, bigons, complex and ranks, then the two criteria in turn.
ClassificationResult classify(const TwistedTorusParams& params);
ClassificationResult classify(const KnotComplex& complex);

}  // namespace ttk
