#include "qskein/bubble.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "qskein/detail/factor_ratio.hpp"
#include "qskein/errors.hpp"
#include "qskein/quantum.hpp"

namespace qskein {

void BubbleParams::validate() const {
  if (m < 0 || n < 0 || m_prime < 0 || n_prime < 0 || k < 0 || l < 0)
    throw ConstraintViolation("all bubble indices must be non-negative");
  if (m + k != m_prime + l)
    throw ConstraintViolation("m+k = m'+l fails: " + std::to_string(m + k) + " != " + std::to_string(m_prime + l));
  if (n + k != n_prime + l)
    throw ConstraintViolation("n+k = n'+l fails: " + std::to_string(n + k) + " != " + std::to_string(n_prime + l));
}

std::string_view to_string(CoeffMethod method) {
  switch (method) {
    case CoeffMethod::closed:
      return "closed";
    case CoeffMethod::recursive:
      return "recursive";
    case CoeffMethod::quantum:
      return "quantum";
  }
  return "closed";
}

CoeffMethod parse_coeff_method(std::string_view name) {
  if (name == "closed") return CoeffMethod::closed;
  if (name == "recursive") return CoeffMethod::recursive;
  if (name == "quantum") return CoeffMethod::quantum;
  throw InvalidParams("unknown coefficient method '" + std::string(name) + "'");
}

namespace {

void check_params(int m, int n, int k, int l) {
  if (m < 0 || n < 0 || k < 0 || l < 0)
    throw InvalidParams("bubble coefficient indices must be non-negative");
  if (k < l)
    throw InvalidParams("bubble coefficient needs k >= l (got k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                        "); use bubble_expand for l > k");
}

bool outside_support(int m, int n, int l, int i) { return i < 0 || i > std::min({m, n, l}); }

}  // namespace

namespace detail {

FactorRatio bubble_coeff_closed_factors(int m, int n, int k, int l, int i) {
  check_params(m, n, k, l);
  if (outside_support(m, n, l, i)) return FactorRatio(LaurentPoly());
  // (-A^2)^{i(i-l)}
  const int e = i * (i - l);
  FactorRatio r(LaurentPoly::monomial((e % 2 == 0) ? 1 : -1, 2 * e) * gauss_binom(l, i));
  for (int j = 0; j <= l - i - 1; ++j) {
    r.up(k - j - 1);
    r.up(m + n + k - i - j);
  }
  for (int s = 0; s <= i - 1; ++s) {
    r.up(n - s - 1);
    r.up(m - s - 1);
  }
  for (int t = 0; t <= l - 1; ++t) {
    r.down(n + k - t - 1);
    r.down(m + k - t - 1);
  }
  return r;
}

}  // namespace detail

RationalFn bubble_coeff_closed(int m, int n, int k, int l, int i) {
  const detail::FactorRatio r = detail::bubble_coeff_closed_factors(m, n, k, l, i);
  if (r.scalar().is_zero()) return RationalFn();
  return r.evaluate([](int idx) { return delta(idx); });
}

RationalFn bubble_coeff_quantum(int m, int n, int k, int l, int i) {
  check_params(m, n, k, l);
  if (outside_support(m, n, l, i)) return RationalFn();
  // (-1)^{i+l} a^{i(i-l)} with a = A^2
  detail::FactorRatio r(LaurentPoly::monomial(((i + l) % 2 == 0) ? 1 : -1, 2 * i * (i - l)) * gauss_binom(l, i));
  for (int j = 0; j <= l - i - 1; ++j) {
    r.up(k - j);
    r.up(m + n + k - i - j + 1);
  }
  for (int s = 0; s <= i - 1; ++s) {
    r.up(n - s);
    r.up(m - s);
  }
  for (int t = 0; t <= l - 1; ++t) {
    r.down(n + k - t);
    r.down(m + k - t);
  }
  return r.evaluate([](int idx) { return qint(idx); });
}

namespace {

using Key = std::tuple<int, int, int, int, int>;

class Recursion {
 public:
  const RationalFn& coeff(int m, int n, int k, int l, int i) {
    const Key key{m, n, k, l, i};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    return memo_.emplace(key, compute(m, n, k, l, i)).first->second;
  }

 private:
  RationalFn compute(int m, int n, int k, int l, int i) {
    if (outside_support(m, n, l, i)) return RationalFn();
    if (l == 0) return RationalFn::integer(1);
    if (l == 1) return i == 0 ? alpha(m, n, k) : beta(m, n, k);
    RationalFn r = alpha(m, n, k) * coeff(m, n, k - 1, l - 1, i);
    if (i >= 1) r += beta(m, n, k) * coeff(m - 1, n - 1, k, l - 1, i - 1);
    return r;
  }

  std::map<Key, RationalFn> memo_;
};

}  // namespace

RationalFn bubble_coeff_recursive(int m, int n, int k, int l, int i) {
  check_params(m, n, k, l);
  Recursion rec;
  return rec.coeff(m, n, k, l, i);
}

RationalFn bubble_coeff(CoeffMethod method, int m, int n, int k, int l, int i) {
  switch (method) {
    case CoeffMethod::recursive:
      return bubble_coeff_recursive(m, n, k, l, i);
    case CoeffMethod::quantum:
      return bubble_coeff_quantum(m, n, k, l, i);
    case CoeffMethod::closed:
      break;
  }
  return bubble_coeff_closed(m, n, k, l, i);
}

std::vector<ExpansionTerm> bubble_expand(const BubbleParams& p, CoeffMethod method) {
  p.validate();
  std::vector<ExpansionTerm> terms;
  if (p.k >= p.l) {
    for (int i = 0; i <= std::min({p.m, p.n, p.l}); ++i)
      terms.push_back({i, bubble_coeff(method, p.m, p.n, p.k, p.l, i), i, p.k - p.l + i});
  } else {
    for (int i = 0; i <= std::min({p.m_prime, p.n_prime, p.k}); ++i)
      terms.push_back({i, bubble_coeff(method, p.n_prime, p.m_prime, p.l, p.k, i), p.l - p.k + i, i});
  }
  return terms;
}

RationalFn theta(int m, int n, int k) {
  if (m < 0 || n < 0 || k < 0) throw InvalidParams("theta graph colors must be non-negative");
  return bubble_coeff_closed(m, n, k, k, 0) * RationalFn(delta(m + n));
}

}  // namespace qskein
