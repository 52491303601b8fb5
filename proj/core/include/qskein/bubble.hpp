#pragma once

#include <string_view>
#include <vector>

#include "qskein/rational_fn.hpp"

namespace qskein {

/// Indices of the bubble skein element B^{m,n}_{m',n'}(k,l): colors m, n on
/// top, m', n' on the bottom, k strands across the top of the bubble and l
/// across the bottom. Valid tuples satisfy m+k = m'+l and n+k = n'+l.
struct BubbleParams {
  int m = 0;
  int n = 0;
  int m_prime = 0;
  int n_prime = 0;
  int k = 0;
  int l = 0;

  /// Throws ConstraintViolation naming the first relation that fails.
  void validate() const;
};

/// One summand of a bubble expansion: coeff times the basis element whose
/// two internal bands carry top_label and bottom_label.
struct ExpansionTerm {
  int i = 0;
  RationalFn coeff;
  int top_label = 0;
  int bottom_label = 0;

  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

enum class CoeffMethod { closed, recursive, quantum };

std::string_view to_string(CoeffMethod method);
/// Accepts "closed", "recursive", "quantum"; throws InvalidParams otherwise.
CoeffMethod parse_coeff_method(std::string_view name);

// The three evaluations of the coefficient [m n; k l]_i. All require
// m, n >= 0 and k >= l >= 0 (InvalidParams otherwise) and return zero for i
// outside 0..min(m, n, l). For l = 0 the coefficient is 1 at i = 0.

/// Delta-product closed form with the sign/monomial factor (-A^2)^{i(i-l)}
/// and the Gaussian binomial [l choose i] at q = A^4.
RationalFn bubble_coeff_closed(int m, int n, int k, int l, int i);

/// Two-term recursion in (l, i) with alpha and beta weights, memoized per
/// call.
RationalFn bubble_coeff_recursive(int m, int n, int k, int l, int i);

/// Quantum-integer form with sign (-1)^{i+l} and monomial a^{i(i-l)}.
RationalFn bubble_coeff_quantum(int m, int n, int k, int l, int i);

RationalFn bubble_coeff(CoeffMethod method, int m, int n, int k, int l, int i);

/**
 * Full expansion of B^{m,n}_{m',n'}(k,l) over the fused basis.
 *
 * For k >= l the terms are i = 0..min(m, n, l) with coefficient
 * [m n; k l]_i and labels (top, bottom) = (i, k-l+i).
 *
 * For l > k the bubble is read upside down: rotating by 180 degrees turns it
 * into B^{n',m'}_{n,m}(l,k), whose expansion has the larger band on top. The
 * coefficients are therefore [n' m'; l k]_i with the larger band count l in
 * the third slot, for i = 0..min(m', n', k), and rotating the basis back
 * gives labels (top, bottom) = (l-k+i, i).
 */
std::vector<ExpansionTerm> bubble_expand(const BubbleParams& p, CoeffMethod method = CoeffMethod::closed);

/// Theta graph evaluation Lambda(m,n,k) = [m n; k k]_0 * Delta_{m+n}.
RationalFn theta(int m, int n, int k);

}  // namespace qskein
