#pragma once

// Reference implementations used only by tests. They share no code with the
// library beyond mpz_class/mpq_class and the LaurentPoly container.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qskein/laurent_poly.hpp"
#include "qskein/rational_fn.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// Point evaluation at a rational value of A
// ---------------------------------------------------------------------------

inline mpq_class pow_q(const mpq_class& x, int e) {
  mpq_class r = 1;
  const mpq_class b = e >= 0 ? x : mpq_class(1) / x;
  for (int t = 0; t < (e >= 0 ? e : -e); ++t) r *= b;
  return r;
}

inline mpq_class eval(const qskein::LaurentPoly& f, const mpq_class& a) {
  mpq_class r = 0;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f.coeffs()[j] != 0) r += mpq_class(f.coeffs()[j]) * pow_q(a, f.min_exp() + static_cast<int>(j));
  return r;
}

inline mpq_class eval(const qskein::RationalFn& f, const mpq_class& a) { return eval(f.num(), a) / eval(f.den(), a); }

// Formulas evaluated directly at A = x, written from the definitions.
struct AtPoint {
  mpq_class A;

  mpq_class a() const { return A * A; }
  mpq_class q() const { return pow_q(A, 4); }
  mpq_class qint(int n) const {
    return (pow_q(a(), n) - pow_q(a(), -n)) / (a() - pow_q(a(), -1));
  }
  mpq_class delta(int n) const { return (n % 2 == 0 ? 1 : -1) * qint(n + 1); }
  mpq_class qpoch(int n) const {
    mpq_class r = 1;
    for (int j = 1; j <= n; ++j) r *= 1 - pow_q(q(), j);
    return r;
  }
  mpq_class gauss(int l, int i) const {
    if (i < 0 || i > l) return 0;
    return qpoch(l) / (qpoch(i) * qpoch(l - i));
  }

  mpq_class alpha(int m, int n, int k) const {
    return (delta(n + k) * delta(m + k - 1) - delta(n) * delta(m - 1)) / (delta(n + k - 1) * delta(m + k - 1));
  }
  mpq_class beta(int m, int n, int k) const {
    return delta(m - 1) * delta(n - 1) / (delta(n + k - 1) * delta(m + k - 1));
  }

  mpq_class closed(int m, int n, int k, int l, int i) const {
    if (i < 0 || i > std::min({m, n, l})) return 0;
    mpq_class r = pow_q(-a(), i * (i - l)) * gauss(l, i);
    for (int j = 0; j <= l - i - 1; ++j) r *= delta(k - j - 1) * delta(m + n + k - i - j);
    for (int s = 0; s <= i - 1; ++s) r *= delta(n - s - 1) * delta(m - s - 1);
    for (int t = 0; t <= l - 1; ++t) r /= delta(n + k - t - 1) * delta(m + k - t - 1);
    return r;
  }

  // Plain recursion with no memo: fine for the small grids tests use.
  mpq_class recursive(int m, int n, int k, int l, int i) const {
    if (i < 0 || i > std::min({m, n, l})) return 0;
    if (l == 0) return 1;
    if (l == 1) return i == 0 ? alpha(m, n, k) : beta(m, n, k);
    mpq_class r = alpha(m, n, k) * recursive(m, n, k - 1, l - 1, i);
    if (i >= 1) r += beta(m, n, k) * recursive(m - 1, n - 1, k, l - 1, i - 1);
    return r;
  }

  mpq_class theta(int m, int n, int k) const { return closed(m, n, k, k, 0) * delta(m + n); }
};

// Sample points away from roots of unity and from each other.
inline std::vector<mpq_class> sample_points() { return {mpq_class(2), mpq_class(3, 2), mpq_class(-5, 7)}; }

// ---------------------------------------------------------------------------
// Polynomials over Q in one variable, dense, ascending, exponent offset
// ---------------------------------------------------------------------------

struct QPoly {
  std::vector<mpq_class> c;  // c[j] is the coefficient of x^j

  static QPoly from(const qskein::LaurentPoly& f) {
    QPoly p;
    for (const auto& x : f.coeffs()) p.c.emplace_back(x);
    p.trim();
    return p;
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
};

inline QPoly mul(const QPoly& f, const QPoly& g) {
  QPoly r;
  if (f.zero() || g.zero()) return r;
  r.c.assign(f.c.size() + g.c.size() - 1, 0);
  for (std::size_t i = 0; i < f.c.size(); ++i)
    for (std::size_t j = 0; j < g.c.size(); ++j) r.c[i + j] += f.c[i] * g.c[j];
  r.trim();
  return r;
}

inline std::pair<QPoly, QPoly> divmod(QPoly f, const QPoly& g) {
  QPoly q;
  if (f.deg() < g.deg()) return {q, f};
  q.c.assign(static_cast<std::size_t>(f.deg() - g.deg() + 1), 0);
  while (!f.zero() && f.deg() >= g.deg()) {
    const int s = f.deg() - g.deg();
    const mpq_class t = f.c.back() / g.c.back();
    q.c[static_cast<std::size_t>(s)] = t;
    for (int j = 0; j <= g.deg(); ++j) f.c[static_cast<std::size_t>(j + s)] -= t * g.c[static_cast<std::size_t>(j)];
    f.trim();
  }
  q.trim();
  return {q, f};
}

// Monic gcd by the Euclidean algorithm over Q.
inline QPoly gcd(QPoly f, QPoly g) {
  while (!g.zero()) {
    QPoly r = divmod(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.zero()) {
    const mpq_class lead = f.c.back();
    for (auto& x : f.c) x /= lead;
  }
  return f;
}

// Integer polynomial with content 1 and positive leading coefficient,
// proportional to f.
inline qskein::LaurentPoly primitive_integer(const QPoly& f) {
  mpz_class den = 1;
  for (const auto& x : f.c) {
    mpz_class d = x.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& x : f.c) {
    mpq_class y = x * den;
    z.push_back(y.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  for (auto& x : z) x /= g;
  if (z.back() < 0)
    for (auto& x : z) x = -x;
  return qskein::LaurentPoly(0, z);
}

// ---------------------------------------------------------------------------
// Power series in q with integer coefficients, plain vectors, exponents 0..N-1
// ---------------------------------------------------------------------------

using Series = std::vector<mpz_class>;

inline Series series_mul(const Series& f, const Series& g, std::size_t n) {
  Series r(n, 0);
  for (std::size_t i = 0; i < std::min(n, f.size()); ++i)
    for (std::size_t j = 0; j < g.size() && i + j < n; ++j) r[i + j] += f[i] * g[j];
  return r;
}

// 1/f by long division, f[0] = +-1.
inline Series series_inverse(const Series& f, std::size_t n) {
  Series r(n, 0);
  Series rem(n, 0);
  rem[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    r[k] = rem[k] / f[0];
    for (std::size_t j = 0; j < f.size() && k + j < n; ++j) rem[k + j] -= r[k] * f[j];
  }
  return r;
}

// prod_{j=1}^{count} (1 - q^j) mod q^n, factor by factor.
inline Series qpoch_product(int count, std::size_t n) {
  Series r(n, 0);
  r[0] = 1;
  for (int j = 1; j <= count; ++j) {
    Series f(static_cast<std::size_t>(j) + 1, 0);
    f[0] = 1;
    f[static_cast<std::size_t>(j)] = -1;
    r = series_mul(r, f, n);
  }
  return r;
}

// Gaussian binomial as a q-polynomial from the Pochhammer quotient.
inline Series gauss_q(int l, int i) {
  if (i < 0 || i > l) return {};
  auto poly = [](int count) {
    QPoly p;
    p.c = {1};
    for (int j = 1; j <= count; ++j) {
      QPoly f;
      f.c.assign(static_cast<std::size_t>(j) + 1, 0);
      f.c[0] = 1;
      f.c[static_cast<std::size_t>(j)] = -1;
      p = mul(p, f);
    }
    return p;
  };
  const QPoly q = divmod(poly(l), mul(poly(i), poly(l - i))).first;
  Series s;
  for (const auto& x : q.c) s.push_back(x.get_num());
  return s;
}

// T(q) mod q^n straight from the definition with the outer sum cut at a
// generous bound K (terms with k > K start beyond q^n for the sizes tested).
inline Series tail(std::size_t n, int K) {
  Series sum(n, 0);
  for (int k = 0; k <= K; ++k) {
    const Series inv = series_inverse(qpoch_product(k, n), n);
    for (int i = 0; i <= k; ++i) {
      const long e = static_cast<long>(k) + static_cast<long>(k) * k - 2L * i * (k - i);
      if (e >= static_cast<long>(n)) continue;
      const Series g = gauss_q(k, i);
      const Series g2 = series_mul(g, g, n);
      Series shifted(n, 0);
      for (std::size_t t = 0; t + static_cast<std::size_t>(e) < n && t < g2.size(); ++t)
        shifted[t + static_cast<std::size_t>(e)] = g2[t];
      const Series term = series_mul(shifted, inv, n);
      for (std::size_t t = 0; t < n; ++t) sum[t] += term[t];
    }
  }
  const Series p = qpoch_product(static_cast<int>(n), n);
  return series_mul(series_mul(sum, p, n), p, n);
}

}  // namespace oracle
