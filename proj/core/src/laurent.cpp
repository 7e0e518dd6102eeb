#include "ttk/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace ttk {

namespace detail {

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
  return r;
}

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
  return r;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
  LaurentPoly p;
  p.add_term(c, exponent);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::map<int, Coeff>& coeffs) {
  LaurentPoly p;
  for (auto [e, c] : coeffs) p.add_term(c, e);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(Coeff c, int exponent) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
  Coeff s = 0;
  for (auto [e, c] : terms_) s = checked_add(s, c);
  return s;
}

LaurentPoly::Coeff LaurentPoly::l1_norm() const {
  Coeff s = 0;
  for (auto [e, c] : terms_) s = checked_add(s, c < 0 ? -c : c);
  return s;
}

bool LaurentPoly::is_symmetric() const {
  for (auto [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k < 0) throw std::invalid_argument("substitute_power: negative power");
  LaurentPoly r;
  for (auto [e, c] : terms_) r.add_term(c, e * k);
  return r;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_[e + by] = c;
  return r;
}

LaurentPoly LaurentPoly::symmetrized() const {
  if (is_zero()) throw std::domain_error("cannot symmetrize the zero polynomial");
  int lo = min_exponent(), hi = max_exponent();
  if ((hi - lo) % 2 != 0) throw std::domain_error("cannot symmetrize: odd exponent span");
  LaurentPoly r = shifted(-(lo + hi) / 2);
  if (r.at_one() < 0) r = -r;
  return r;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const int dlo = divisor.min_exponent(), dhi = divisor.max_exponent();
  const Coeff lead = divisor.coeff(dhi);
  LaurentPoly rem = *this, quot;
  while (!rem.is_zero() && rem.max_exponent() - rem.min_exponent() >= dhi - dlo) {
    const int e = rem.max_exponent();
    const Coeff c = rem.coeff(e);
    if (c % lead != 0) break;
    LaurentPoly term = monomial(c / lead, e - dhi);
    quot += term;
    rem -= term * divisor;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact Laurent polynomial division");
  return quot;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) r.add_term(checked_mul(c1, c2), e1 + e2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(-c, e);
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "t^" << e;
    }
    first = false;
  }
  return out.str();
}

}  // namespace ttk
