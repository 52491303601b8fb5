#pragma once

#include <optional>
#include <string_view>

#include "qskein/laurent_poly.hpp"
#include "qskein/rational_fn.hpp"
#include "qskein/series.hpp"

namespace qskein {

// ---------------------------------------------------------------------------
// Tail series of the 8_5 family
// ---------------------------------------------------------------------------

enum class TailMethod { direct, double_sum };

std::string_view to_string(TailMethod method);
/// Accepts "direct" and "double-sum" (also "double_sum").
TailMethod parse_tail_method(std::string_view name);

struct TailSeries {
  TruncatedSeries terms;  // shift 0, q^0 coefficient 1
  TailMethod provenance;
};

/**
 * T(q) = (q;q)_inf^2 * sum_{k>=0} q^{k+k^2}/(q;q)_k * sum_{i=0}^{k} q^{-2i(k-i)} [k choose i]_q^2
 * mod q^order.
 *
 * Term k starts at q^{k + k^2 - 2 floor(k/2) ceil(k/2)}; the outer sum stops
 * at the first k whose starting exponent reaches `order` (the starting
 * exponent is increasing in k).
 */
TailSeries tail_85(int order);

/// Same series from the rearranged double sum
/// sum_i sum_{k>=i} q^{k+k^2-2i(k-i)}/(q;q)_k [k choose i]_q^2.
TailSeries tail_85_double_sum(int order);

TailSeries tail_85(int order, TailMethod method);

// ---------------------------------------------------------------------------
// State sum for S_B^(n)(Gamma) and the identities used to simplify it
// ---------------------------------------------------------------------------

struct StateSumValue {
  int n = 0;
  /// Exact value in Q(A). For n >= 1 the denominator does not clear; see
  /// README ("State sum").
  RationalFn value;
};

/**
 * sum_{i,j=0}^{n} [n n; n n]_i [n n; n n]_j [i n; n n-j]_0 [j n; n n-i]_0 [j i; n n]_0
 *                 * Delta_{2n}/Delta_{n+i} * Delta_{2n}/Delta_{n+j} * Delta_{i+j}
 *
 * Every summand is assembled in factored form and the sum is taken over a
 * common product-of-Deltas denominator, so only the final reduction needs a
 * polynomial gcd.
 */
StateSumValue sb_state_sum(int n);

/// One summand P(n,i,j) of the q-Pochhammer rewrite of the state sum,
/// evaluated exactly in A (q = A^4, q^{1/2} = A^2). Requires 0 <= i, j <= n.
RationalFn p_term(int n, int i, int j);

/// Result of comparing two exact expressions lhs and rhs.
struct IdentityCheck {
  bool holds = false;
  /// lhs == rhs exactly.
  bool exact = false;
  /// lhs/rhs when that ratio is a unit monomial +-A^s.
  std::optional<LaurentPoly> discrepancy;
  /// Extra consistency condition, where the identity has one (theta graph
  /// argument order for identity_mn3); true otherwise.
  bool side_condition = true;
};

/// Compare lhs and rhs up to a unit monomial; `holds` is set when the ratio
/// is +-A^s.
IdentityCheck compare_up_to_unit(const RationalFn& lhs, const RationalFn& rhs);

/// prod_{i=0}^{j} [n-i] = q^{(2+3j+j^2-2n-2jn)/4} (1-q)^{-1-j} (q;q)_n/(q;q)_{n-j-1}.
/// Requires 0 <= j and j+1 <= n. `holds` demands exact equality.
IdentityCheck identity_fact(int n, int j);

/// q-Pochhammer form of [n n; n n]_i. Requires 0 <= i <= n.
IdentityCheck identity_mn(int n, int i);

/// q-Pochhammer form of [j n; n n-i]_0. Requires 0 <= i <= n, j >= 0.
IdentityCheck identity_mn1(int n, int i, int j);

/// q-Pochhammer form of [i j; n n]_0 * Delta_{i+j}; the side condition checks
/// that this product equals theta(i, j, n) and theta(n, i, j).
IdentityCheck identity_mn3(int n, int i, int j);

/// Stabilization of the state sum against the tail.
struct StabilizationReport {
  int n = 0;
  bool matches = false;
  /// sb_state_sum(n)/Delta_n expanded and normalized, n+1 coefficients.
  TruncatedSeries state_series;
  /// tail_85(n+1).
  TruncatedSeries tail;
};

/// Expands sb_state_sum(n)/Delta_n as a q-series (rf_to_series) and compares
/// its normalized form with the tail through q^n. Requires n >= 1.
StabilizationReport stabilization_report(int n);
bool stabilization_check(int n);

}  // namespace qskein
