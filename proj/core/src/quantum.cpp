#include "qskein/quantum.hpp"

#include <string>
#include <vector>

#include "qskein/errors.hpp"

namespace qskein {

LaurentPoly qint(int n) {
  if (n == 0) return LaurentPoly();
  if (n < 0) return -qint(-n);
  // a^{n-1} + a^{n-3} + ... + a^{1-n}, i.e. A-exponents 2(1-n), ..., 2(n-1)
  // in steps of 4.
  std::vector<Integer> c(static_cast<std::size_t>(4 * (n - 1) + 1), Integer(0));
  for (std::size_t j = 0; j < c.size(); j += 4) c[j] = 1;
  return LaurentPoly(2 * (1 - n), std::move(c));
}

LaurentPoly delta(int n) {
  LaurentPoly v = qint(n + 1);
  return (n % 2 == 0) ? v : -v;
}

LaurentPoly qpoch_poly(int n) {
  if (n < 0) throw InvalidParams("(q;q)_n requires n >= 0, got " + std::to_string(n));
  LaurentPoly r = LaurentPoly::constant(1);
  for (int j = 1; j <= n; ++j) {
    std::vector<Integer> f(static_cast<std::size_t>(4 * j + 1), Integer(0));
    f.front() = 1;
    f.back() = -1;
    r *= LaurentPoly(0, std::move(f));
  }
  return r;
}

TruncatedSeries qpoch_finite(int n, int order) {
  if (n < 0) throw InvalidParams("(q;q)_n requires n >= 0, got " + std::to_string(n));
  if (order < 1) throw EmptyWindow("qpoch_finite needs order >= 1");
  std::vector<Integer> c(static_cast<std::size_t>(order), Integer(0));
  c[0] = 1;
  // Multiply in place by (1 - q^j), highest index first.
  for (int j = 1; j <= n && j < order; ++j)
    for (int e = order - 1; e >= j; --e) c[static_cast<std::size_t>(e)] -= c[static_cast<std::size_t>(e - j)];
  return TruncatedSeries(0, std::move(c));
}

LaurentPoly gauss_binom(int l, int i) {
  if (l < 0 || i < 0 || i > l) return LaurentPoly();
  // Row-by-row Pascal table in q: [r, s] = [r-1, s] + q^{r-s} [r-1, s-1].
  // Rows are stored as dense q-coefficient vectors.
  std::vector<std::vector<Integer>> row{{Integer(1)}};
  for (int r = 1; r <= l; ++r) {
    const int smax = std::min(r, i);
    std::vector<std::vector<Integer>> next(static_cast<std::size_t>(smax + 1));
    for (int s = 0; s <= smax; ++s) {
      std::vector<Integer> v(static_cast<std::size_t>(s * (r - s) + 1), Integer(0));
      if (s <= r - 1 && s < static_cast<int>(row.size())) {
        const auto& up = row[static_cast<std::size_t>(s)];
        for (std::size_t t = 0; t < up.size(); ++t) v[t] += up[t];
      }
      if (s >= 1) {
        const auto& diag = row[static_cast<std::size_t>(s - 1)];
        const auto off = static_cast<std::size_t>(r - s);
        for (std::size_t t = 0; t < diag.size(); ++t) v[t + off] += diag[t];
      }
      next[static_cast<std::size_t>(s)] = std::move(v);
    }
    row = std::move(next);
  }
  const auto& q = row[static_cast<std::size_t>(i)];
  std::vector<Integer> a((q.size() - 1) * 4 + 1, Integer(0));
  for (std::size_t t = 0; t < q.size(); ++t) a[4 * t] = q[t];
  return LaurentPoly(0, std::move(a));
}

bool delta_product_identity(int m, int n, int k) {
  const LaurentPoly lhs = delta(m + k) * delta(n + k - 1) - delta(m) * delta(n - 1);
  const LaurentPoly rhs = delta(m + n + k) * delta(k - 1);
  return lhs == rhs;
}

namespace {

LaurentPoly alpha_beta_den(int m, int n, int k) {
  LaurentPoly den = delta(n + k - 1) * delta(m + k - 1);
  if (den.is_zero())
    throw ZeroDenominator("alpha/beta denominator vanishes at (m,n,k)=(" + std::to_string(m) + "," +
                          std::to_string(n) + "," + std::to_string(k) + ")");
  return den;
}

}  // namespace

RationalFn alpha(int m, int n, int k) {
  const LaurentPoly num = delta(n + k) * delta(m + k - 1) - delta(n) * delta(m - 1);
  return RationalFn(num, alpha_beta_den(m, n, k));
}

RationalFn alpha_product_form(int m, int n, int k) {
  return RationalFn(delta(m + n + k) * delta(k - 1), alpha_beta_den(m, n, k));
}

RationalFn beta(int m, int n, int k) {
  return RationalFn(delta(m - 1) * delta(n - 1), alpha_beta_den(m, n, k));
}

}  // namespace qskein
