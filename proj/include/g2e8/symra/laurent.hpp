#pragma once

// Exact multivariate Laurent polynomials over arbitrary-precision integers.
//
// A polynomial lives in a Ring, which is nothing more than an ordered list of
// variable names.  Terms are kept sorted in descending graded-lexicographic
// order with no zero coefficients, so two polynomials over the same ring are
// equal iff their term vectors are identical.

#include <gmpxx.h>

#include "g2e8/error.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace g2e8::symra {

struct InexactDivision : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct RingMismatch : Error {
  using Error::Error;
};

inline constexpr std::size_t kMaxVars = 24;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a variable; throws if absent.
  std::size_t index(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;

  bool same_as(const Ring& other) const { return this == &other || names_ == other.names_; }

 private:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

/// Exponent vector.  Unused slots stay zero.
struct Mono {
  std::array<int16_t, kMaxVars> e{};

  int total() const {
    int s = 0;
    for (auto v : e) s += v;
    return s;
  }
  bool is_one() const {
    for (auto v : e)
      if (v != 0) return false;
    return true;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
  friend Mono operator*(const Mono& a, const Mono& b);
  friend Mono operator/(const Mono& a, const Mono& b);
  Mono pow(int k) const;
};

/// Strict graded-lex "greater than".
bool mono_greater(const Mono& a, const Mono& b);

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept;
};

struct Term {
  Mono mono;
  mpz_class coeff;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static LaurentPoly constant(RingPtr ring, const mpz_class& c);
  static LaurentPoly monomial(RingPtr ring, const Mono& m, const mpz_class& c = 1);
  static LaurentPoly var(RingPtr ring, std::string_view name, int power = 1);
  /// Parse a sum of terms such as "3*x^2*q^-1 - a*b + 7".
  static LaurentPoly parse(RingPtr ring, std::string_view text);
  /// Build from unsorted, possibly repeated terms.
  static LaurentPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Single term with coefficient +1 or -1.
  bool is_unit() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  mpz_class coeff(const Mono& m) const;
  mpz_class content() const;

  int max_degree(std::size_t var) const;
  int min_degree(std::size_t var) const;
  /// Componentwise minimum exponent (the largest monomial dividing every term).
  Mono min_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly mul_term(const Mono& m, const mpz_class& c) const;
  LaurentPoly mul_scalar(const mpz_class& c) const;
  /// Divide every coefficient by c; throws InexactDivision if c does not divide.
  LaurentPoly div_scalar(const mpz_class& c) const;
  LaurentPoly pow(unsigned k) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Keep only terms whose exponent in `var` is <= max_deg.
  LaurentPoly truncate_degree(std::size_t var, int max_deg) const;
  /// Terms whose exponent in `var` equals d, with that variable's exponent kept.
  LaurentPoly degree_part(std::size_t var, int d) const;

  /// Rewrite into another ring whose variable list contains every variable
  /// actually used here.
  LaurentPoly embed(const RingPtr& target) const;

  /// Canonical text: terms in descending grlex order, explicit exponents.
  std::string str() const;

 private:
  friend class LaurentBuilder;
  void check_ring(const LaurentPoly& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Accumulator for sums of many terms; finishes into a canonical polynomial.
class LaurentBuilder {
 public:
  explicit LaurentBuilder(RingPtr ring) : ring_(std::move(ring)) {}
  void add(const Mono& m, const mpz_class& c);
  void add(const LaurentPoly& p);
  void add_product(const LaurentPoly& p, const Mono& m, const mpz_class& c);
  LaurentPoly finish();

 private:
  RingPtr ring_;
  std::unordered_map<Mono, mpz_class, MonoHash> acc_;
};

/// Exact quotient f/g.  Throws InexactDivision when g does not divide f and
/// DivisionByZero when g is zero.
LaurentPoly divexact(const LaurentPoly& f, const LaurentPoly& g);
std::optional<LaurentPoly> try_divexact(const LaurentPoly& f, const LaurentPoly& g);

/// Replace variables by polynomials (possibly in a different ring).
/// `images[i]` is the image of source variable i; negative exponents require
/// the image to be a unit monomial.
LaurentPoly substitute(const LaurentPoly& f, const RingPtr& target, const std::vector<LaurentPoly>& images);
/// Convenience: substitute by variable name within the same ring.  Variables
/// not mentioned map to themselves.
LaurentPoly substitute(const LaurentPoly& f, const std::map<std::string, LaurentPoly>& assignment);

/// Product with every term of x-degree above `max_deg` dropped ("x" being
/// the variable at index `var`).
LaurentPoly mul_truncated(const LaurentPoly& a, const LaurentPoly& b, std::size_t var, int max_deg);

/// Evaluate at a rational point (one value per ring variable).
mpq_class evaluate(const LaurentPoly& f, const std::vector<mpq_class>& point);

}  // namespace g2e8::symra
