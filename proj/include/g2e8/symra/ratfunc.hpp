#pragma once

// Rational functions kept as  numerator / (positive integer * product of
// irreducible-ish factors).  Denominator factors are normalized (no monomial
// factor, content 1, positive leading coefficient) and binomials of the form
// m^k -/+ 1 are split into cyclotomic pieces, so common factors such as
// 1 - x^2 q^14 = (1 - x q^7)(1 + x q^7) are recognized when adding.

#include "g2e8/symra/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2e8::symra {

class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const LaurentPoly& num);
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  static RatFunc constant(RingPtr ring, const mpz_class& c) { return RatFunc(LaurentPoly::constant(std::move(ring), c)); }

  const RingPtr& ring() const { return num_.ring(); }
  const LaurentPoly& num() const { return num_; }
  const mpz_class& den_const() const { return dconst_; }
  /// Denominator factors with multiplicities, keyed by canonical text.
  const std::map<std::string, std::pair<LaurentPoly, int>>& den_factors() const { return factors_; }
  /// Full expanded denominator.
  LaurentPoly den() const;
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is trivial (value is a Laurent polynomial).
  bool is_poly() const { return factors_.empty() && dconst_ == 1; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc pow(int k) const;

  /// Exact equality via cross multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Cancel denominator factors that divide the numerator.
  RatFunc& simplify();

  /// Numerator as a polynomial; throws InexactDivision if the denominator
  /// does not cancel completely.
  LaurentPoly to_poly() const;

  /// Expansion in nonnegative powers of the variable `var`, keeping degrees
  /// up to `max_deg`.  Each denominator factor must have a unit monomial as
  /// its lowest `var`-degree part.
  LaurentPoly series(std::string_view var, int max_deg) const;

  RatFunc substitute(const RingPtr& target, const std::vector<LaurentPoly>& images) const;
  RatFunc embed(const RingPtr& target) const;
  mpq_class evaluate(const std::vector<mpq_class>& point) const;

  std::string str() const;

 private:
  void divide_by(const LaurentPoly& p, int mult);
  LaurentPoly num_;
  mpz_class dconst_ = 1;
  std::map<std::string, std::pair<LaurentPoly, int>> factors_;
};

/// The d-th cyclotomic polynomial evaluated at a monomial.
LaurentPoly cyclotomic(const RingPtr& ring, unsigned d, const Mono& m);

}  // namespace g2e8::symra
