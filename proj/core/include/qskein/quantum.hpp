#pragma once

#include "qskein/laurent_poly.hpp"
#include "qskein/rational_fn.hpp"
#include "qskein/series.hpp"

namespace qskein {

/// Quantum integer [n] = (a^n - a^-n)/(a - a^-1) with a = A^2. [0] = 0 and
/// [-n] = -[n].
LaurentPoly qint(int n);

/// Delta_n = (-1)^n [n+1], the value of an n-colored unknot. Defined for all
/// integers by the same formula, so Delta_{-1} = 0 and Delta_{-n-2} = -Delta_n.
LaurentPoly delta(int n);

/// (q;q)_n = prod_{j=1}^{n} (1 - q^j) as an exact polynomial in A (q = A^4).
LaurentPoly qpoch_poly(int n);

/// (q;q)_n as a q-series truncated to `order` coefficients.
TruncatedSeries qpoch_finite(int n, int order);

/// Gaussian binomial [l choose i]_q as a polynomial in A with exponents in
/// 4Z, built by the Pascal recursion. Zero when i < 0 or i > l.
LaurentPoly gauss_binom(int l, int i);

/// Checks Delta_{m+k} Delta_{n+k-1} - Delta_m Delta_{n-1} = Delta_{m+n+k} Delta_{k-1}.
bool delta_product_identity(int m, int n, int k);

/// alpha^k_{m,n} = (Delta_{n+k} Delta_{m+k-1} - Delta_n Delta_{m-1}) / (Delta_{n+k-1} Delta_{m+k-1}).
RationalFn alpha(int m, int n, int k);
/// The same function through the product identity:
/// Delta_{m+n+k} Delta_{k-1} / (Delta_{n+k-1} Delta_{m+k-1}).
RationalFn alpha_product_form(int m, int n, int k);
/// beta^k_{m,n} = Delta_{m-1} Delta_{n-1} / (Delta_{n+k-1} Delta_{m+k-1}).
RationalFn beta(int m, int n, int k);

}  // namespace qskein
