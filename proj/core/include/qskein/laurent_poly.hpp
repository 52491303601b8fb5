#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qskein {

using Integer = mpz_class;

/**
 * Dense Laurent polynomial in a single formal variable with arbitrary
 * precision integer coefficients.
 *
 * Entry j of coeffs() is the coefficient of x^(min_exp() + j). The zero
 * polynomial is stored as (min_exp = 0, coeffs = {}); every other value has a
 * nonzero first and last coefficient, so structural equality is value
 * equality.
 *
 * The library works in the variable A throughout. The conventions a = A^2
 * and q = A^4 only appear as exponent multiples.
 */
class LaurentPoly {
 public:
  static constexpr const char* kDefaultVariable = "A";

  LaurentPoly() = default;
  LaurentPoly(int min_exp, std::vector<Integer> coeffs,
              std::string variable = kDefaultVariable);

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, int exp);
  /// Shorthand for building small test values: coefficients ascending from
  /// min_exp.
  static LaurentPoly from_ints(int min_exp, std::initializer_list<long> coeffs);

  const std::string& variable() const { return variable_; }
  int min_exp() const { return min_exp_; }
  /// Largest exponent with a nonzero coefficient. Undefined for zero.
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return coeffs_.size() == 1; }
  Integer coeff(int exp) const;
  const Integer& lowest_coeff() const { return coeffs_.front(); }
  const Integer& leading_coeff() const { return coeffs_.back(); }

  /// Multiply by x^k.
  LaurentPoly shifted(int k) const;
  /// Replace x by x^{-1}.
  LaurentPoly inverted() const;
  LaurentPoly operator-() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const Integer& rhs) { return lhs *= rhs; }

  /// Equality ignores the variable tag only when both sides are zero.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void canonicalize();
  void check_same_variable(const LaurentPoly& other) const;

  std::string variable_ = kDefaultVariable;
  int min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g);

/// Exact quotient f / g in Z[x, x^-1]. Throws NotDivisible when g does not
/// divide f with an integral quotient, ZeroDenominator when g is zero.
LaurentPoly lp_divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// GCD over Q[x, x^-1], normalized: integer content 1, min_exp 0, positive
/// leading coefficient. gcd(0, 0) throws InvalidParams.
LaurentPoly lp_gcd(const LaurentPoly& f, const LaurentPoly& g);

LaurentPoly lp_substitute_invert(const LaurentPoly& f);

/// Non-negative gcd of all coefficients (0 for the zero polynomial).
Integer content(const LaurentPoly& f);
/// f divided by its content, sign preserved.
LaurentPoly primitive_part(const LaurentPoly& f);

/// Text form with descending exponents, e.g. "-A^2 - A^-2".
std::string to_string(const LaurentPoly& f);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace qskein
