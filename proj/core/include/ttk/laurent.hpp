#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace ttk {

/// Integer Laurent polynomial in one variable t. Zero coefficients are never
/// stored, so two polynomials are equal iff their coefficient maps are equal.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  explicit LaurentPoly(Coeff constant);
  static LaurentPoly monomial(Coeff c, int exponent);
  static LaurentPoly from_coefficients(const std::map<int, Coeff>& coeffs);

  Coeff coeff(int exponent) const;
  void add_term(Coeff c, int exponent);

  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  const std::map<int, Coeff>& terms() const { return terms_; }

  /// Value at t = 1.
  Coeff at_one() const;
  /// Sum of absolute values of the coefficients.
  Coeff l1_norm() const;
  /// coeff(e) == coeff(-e) for all e.
  bool is_symmetric() const;

  /// Precompose with t -> t^k (k >= 0; k == 0 collapses to the constant p(1)).
  LaurentPoly substitute_power(int k) const;
  LaurentPoly shifted(int by) const;

  /// Multiply by +-t^j so the exponents are centered and p(1) > 0. Throws if
  /// the exponent span is odd or the polynomial is zero.
  LaurentPoly symmetrized() const;

  /// Exact division; throws std::domain_error when the remainder is nonzero.
  LaurentPoly exact_divide(const LaurentPoly& divisor) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const = default;

  /// Human-readable form, highest exponent first: "t^1 - 1 + t^-1".
  std::string to_string() const;

 private:
  std::map<int, Coeff> terms_;
};

namespace detail {
LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
}  // namespace detail

}  // namespace ttk
