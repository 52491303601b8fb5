#pragma once

#include <iosfwd>
#include <string>

#include "qskein/laurent_poly.hpp"

namespace qskein {

/**
 * Reduced quotient num/den of Laurent polynomials.
 *
 * Canonical form:
 *  - num and den are coprime over Q[A, A^-1];
 *  - den has min_exp 0 (monomial factors live in num);
 *  - den has a positive lowest coefficient;
 *  - the joint integer content of (num, den) is 1;
 *  - zero is 0/1.
 * With this form, equality of values is equality of the stored pairs.
 */
class RationalFn {
 public:
  /// The zero function.
  RationalFn();
  /// A polynomial viewed as p/1.
  RationalFn(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  /// Reduces num/den. Throws ZeroDenominator when den is zero.
  RationalFn(const LaurentPoly& num, const LaurentPoly& den);

  static RationalFn integer(long c);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFn operator-() const;
  RationalFn inverse() const;
  /// A -> A^-1 on both numerator and denominator.
  RationalFn inverted() const;

  friend RationalFn operator+(const RationalFn& x, const RationalFn& y);
  friend RationalFn operator-(const RationalFn& x, const RationalFn& y) { return x + (-y); }
  friend RationalFn operator*(const RationalFn& x, const RationalFn& y);
  friend RationalFn operator/(const RationalFn& x, const RationalFn& y);
  RationalFn& operator+=(const RationalFn& y) { return *this = *this + y; }
  RationalFn& operator*=(const RationalFn& y) { return *this = *this * y; }
  RationalFn& operator/=(const RationalFn& y) { return *this = *this / y; }

  friend bool operator==(const RationalFn& x, const RationalFn& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  struct Reduced {};
  // num/den already coprime; only the monomial, content and sign rules are
  // applied.
  RationalFn(Reduced, LaurentPoly num, LaurentPoly den);
  void normalize_units();

  LaurentPoly num_;
  LaurentPoly den_;
};

RationalFn rf_make(const LaurentPoly& num, const LaurentPoly& den);
RationalFn rf_add(const RationalFn& x, const RationalFn& y);
RationalFn rf_mul(const RationalFn& x, const RationalFn& y);
RationalFn rf_div(const RationalFn& x, const RationalFn& y);

/// "num" when the denominator is 1, otherwise "(num) / (den)".
std::string to_string(const RationalFn& x);
std::ostream& operator<<(std::ostream& os, const RationalFn& x);

}  // namespace qskein
