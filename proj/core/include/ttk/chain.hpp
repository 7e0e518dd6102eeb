#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ttk/cover.hpp"
#include "ttk/laurent.hpp"

namespace ttk {

/// A structural invariant of a complex or its homology failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Generator {
  int id = 0;
  int alexander = 0;
  int maslov = 0;
  bool operator==(const Generator&) const = default;
};

/// Differential term from -> U^n_w to; n_z is kept for the filtration.
struct Arrow {
  int from = 0;
  int to = 0;
  int n_z = 0;
  int n_w = 0;
  bool operator==(const Arrow&) const = default;
};

/// Bigraded knot Floer complex over the two-element field.
struct KnotComplex {
  std::vector<Generator> generators;
  std::vector<Arrow> arrows;
  /// Number of generator pairs whose relative grading needed a connecting domain.
  int domain_links = 0;
  bool operator==(const KnotComplex& o) const { return generators == o.generators && arrows == o.arrows; }
};

/// Ranks keyed by (maslov, alexander).
struct BigradedRanks {
  std::map<std::pair<int, int>, long> ranks;

  long total() const;
  /// Total rank in one Alexander grading.
  long at_alexander(int a) const;
  /// Largest Alexander grading with nonzero rank.
  int top_alexander() const;
  bool operator==(const BigradedRanks&) const = default;
};

/// Generators with pinned gradings and the bigon arrows. Throws
/// InvariantViolation when the relative gradings are inconsistent or the two
/// pinnings disagree.
KnotComplex build_complex(const GenusOneDiagram& diagram, const std::vector<Bigon>& bigons);

/// Homology of the complex keeping only arrows with n_z = n_w = 0.
BigradedRanks hat_hfk_ranks(const KnotComplex& complex);

/// Sum of (-1)^m rank t^s. Throws InvariantViolation if not symmetric.
LaurentPoly alexander_poly(const BigradedRanks& ranks);

/// Homology (Maslov grading only, reported under Alexander grading 0) of the
/// complex of arrows with n_w = 0. Throws InvariantViolation unless the total
/// rank is one. The diagram form works in relative gradings normalized so the
/// surviving class sits at 0; the complex form uses the pinned gradings.
BigradedRanks hf_s3_check(const GenusOneDiagram& diagram, const std::vector<Bigon>& bigons);
BigradedRanks hf_s3_check(const KnotComplex& complex);

/// Checks d^2 = 0 over F2[U, V] (U counts n_w, V counts n_z) and the grading
/// drop of every arrow. Throws InvariantViolation on failure.
void check_complex(const KnotComplex& complex);

/// Checks rank(m, s) == rank(m - 2s, -s). Throws InvariantViolation on failure.
void check_rank_symmetry(const BigradedRanks& ranks);

/// Versioned plain-text form.
void write_complex(std::ostream& out, const KnotComplex& complex);
KnotComplex read_complex(std::istream& in);

}  // namespace ttk
