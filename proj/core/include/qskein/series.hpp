#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qskein/laurent_poly.hpp"

namespace qskein {

class RationalFn;

/**
 * Truncated Laurent series in q with integer coefficients.
 *
 * Represents q^shift * (c_0 + c_1 q + ... + c_{order-1} q^{order-1}) + O(q^{shift+order}).
 * Coefficients below q^shift are exactly zero; coefficients from
 * q^{shift+order} on are unknown. Every operation returns the window it can
 * prove and never reports a coefficient outside it.
 */
class TruncatedSeries {
 public:
  /// Throws EmptyWindow when coeffs is empty.
  TruncatedSeries(int shift, std::vector<Integer> coeffs);

  /// Exact polynomial sum_j coeffs[j] q^{shift+j} observed through `order` terms.
  static TruncatedSeries from_terms(int shift, const std::vector<Integer>& coeffs, int order);
  static TruncatedSeries one(int order) { return monomial(1, 0, order); }
  static TruncatedSeries monomial(const Integer& c, int exp, int order);

  int shift() const { return shift_; }
  int order() const { return static_cast<int>(coeffs_.size()); }
  /// One past the last trusted exponent.
  int window_end() const { return shift_ + order(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of q^exp; zero below the shift. Throws InsufficientOrder
  /// past the window.
  Integer coeff(int exp) const;
  /// Index of the first nonzero coefficient, or order() if all are zero.
  int valuation_offset() const;

  /// Keep only exponents below `end`.
  TruncatedSeries truncated(int end) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.shift_ == b.shift_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int shift_;
  std::vector<Integer> coeffs_;
};

/// Sum over the joint window [min shift, min window_end). Throws EmptyWindow
/// when that range is empty.
TruncatedSeries ts_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries ts_sub(const TruncatedSeries& f, const TruncatedSeries& g);

/**
 * Product. Writing f = q^{s_f}(F + O(q^{o_f})) and letting v_f be the offset
 * of the first nonzero coefficient of F, the error terms are
 * F*O(q^{o_g}) + G*O(q^{o_f}), which lie in O(q^{min(o_g + v_f, o_f + v_g)}).
 * The result has shift s_f + s_g and that many coefficients. An all-zero
 * operand contributes v = o.
 */
TruncatedSeries ts_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplicative inverse. Leading zeros are skipped; the first nonzero
/// coefficient must be +-1 (NonUnitLeading otherwise). The inverse of
/// q^s(c + ...) has shift -s and the same number of trusted terms.
TruncatedSeries ts_invert(const TruncatedSeries& f);

/// (q;q)_infinity mod q^order through the pentagonal number theorem.
TruncatedSeries qpoch_infinite(int order);

/// Shift so that the lowest nonzero coefficient sits at q^0. Throws
/// ZeroSeries if no tracked coefficient is nonzero.
TruncatedSeries ts_normalize(const TruncatedSeries& f);

/// Equality up to q^{+-s} mod q^n: the normalized series agree on q^0..q^{n-1}.
/// Throws InsufficientOrder if either normalized window is shorter than n.
bool ts_doteq(const TruncatedSeries& f, const TruncatedSeries& g, int n);

/**
 * Reinterpret a Laurent polynomial in A as a series in q = A^4.
 * The lowest exponent is shifted to zero first (the monomial is dropped, the
 * result has shift 0); the remaining exponents must all be multiples of 4.
 */
TruncatedSeries lp_to_series(const LaurentPoly& f, int order);

/**
 * Lowest-order expansion of a rational function in A as a q-series.
 * Numerator and denominator are each shifted to a nonzero constant term and
 * reinterpreted through lp_to_series; the monomial ratio is dropped, so the
 * result has shift 0. The denominator's constant term must be +-1.
 */
TruncatedSeries rf_to_series(const RationalFn& f, int order);

/// Ascending text form, e.g. "1 - 2q + q^2 - 2q^4"; only the trusted window
/// is printed, without an O() term.
std::string to_string(const TruncatedSeries& f);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

}  // namespace qskein
