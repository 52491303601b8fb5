#include "qskein/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qskein/errors.hpp"
#include "qskein/rational_fn.hpp"

namespace qskein {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

TruncatedSeries::TruncatedSeries(int shift, std::vector<Integer> coeffs)
    : shift_(shift), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw EmptyWindow("truncated series needs at least one trusted coefficient");
}

TruncatedSeries TruncatedSeries::from_terms(int shift, const std::vector<Integer>& coeffs, int order) {
  if (order < 1) throw EmptyWindow("order must be positive");
  std::vector<Integer> c(idx(order), Integer(0));
  const std::size_t n = std::min(c.size(), coeffs.size());
  std::copy_n(coeffs.begin(), n, c.begin());
  return TruncatedSeries(shift, std::move(c));
}

TruncatedSeries TruncatedSeries::monomial(const Integer& c, int exp, int order) {
  return from_terms(exp, {c}, order);
}

Integer TruncatedSeries::coeff(int exp) const {
  if (exp < shift_) return 0;
  if (exp >= window_end())
    throw InsufficientOrder("q^" + std::to_string(exp) + " lies outside the trusted window ending at q^" +
                            std::to_string(window_end() - 1));
  return coeffs_[idx(exp - shift_)];
}

int TruncatedSeries::valuation_offset() const {
  auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  return static_cast<int>(std::distance(coeffs_.begin(), it));
}

TruncatedSeries TruncatedSeries::truncated(int end) const {
  if (end >= window_end()) return *this;
  if (end <= shift_) throw EmptyWindow("truncation leaves no trusted coefficients");
  return TruncatedSeries(shift_, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + (end - shift_)));
}

namespace {

TruncatedSeries combine(const TruncatedSeries& f, const TruncatedSeries& g, bool subtract) {
  const int lo = std::min(f.shift(), g.shift());
  const int hi = std::min(f.window_end(), g.window_end());
  if (hi <= lo) throw EmptyWindow("operands share no trusted coefficients");
  std::vector<Integer> c(idx(hi - lo), Integer(0));
  for (int e = f.shift(); e < hi; ++e) c[idx(e - lo)] += f.coeffs()[idx(e - f.shift())];
  for (int e = g.shift(); e < hi; ++e) {
    if (subtract)
      c[idx(e - lo)] -= g.coeffs()[idx(e - g.shift())];
    else
      c[idx(e - lo)] += g.coeffs()[idx(e - g.shift())];
  }
  return TruncatedSeries(lo, std::move(c));
}

}  // namespace

TruncatedSeries ts_add(const TruncatedSeries& f, const TruncatedSeries& g) { return combine(f, g, false); }

TruncatedSeries ts_sub(const TruncatedSeries& f, const TruncatedSeries& g) { return combine(f, g, true); }

TruncatedSeries ts_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int vf = f.valuation_offset();
  const int vg = g.valuation_offset();
  const int order = std::min(g.order() + vf, f.order() + vg);
  std::vector<Integer> c(idx(order), Integer(0));
  for (int i = vf; i < f.order() && i < order; ++i) {
    const auto& a = f.coeffs()[idx(i)];
    if (a == 0) continue;
    const int jmax = std::min(g.order(), order - i);
    for (int j = vg; j < jmax; ++j)
      mpz_addmul(c[idx(i + j)].get_mpz_t(), a.get_mpz_t(), g.coeffs()[idx(j)].get_mpz_t());
  }
  return TruncatedSeries(f.shift() + g.shift(), std::move(c));
}

TruncatedSeries ts_invert(const TruncatedSeries& f) {
  const int v = f.valuation_offset();
  if (v == f.order()) throw NonUnitLeading("cannot invert a series with no nonzero tracked coefficient");
  const auto& a = f.coeffs();
  const Integer& lead = a[idx(v)];
  if (lead != 1 && lead != -1)
    throw NonUnitLeading("leading coefficient " + lead.get_str() + " is not a unit");
  const int n = f.order() - v;
  std::vector<Integer> r(idx(n), Integer(0));
  r[0] = lead;
  Integer acc;
  for (int k = 1; k < n; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j)
      mpz_addmul(acc.get_mpz_t(), a[idx(v + j)].get_mpz_t(), r[idx(k - j)].get_mpz_t());
    // r_k = -acc / lead, and 1/lead = lead for a unit.
    r[idx(k)] = -acc * lead;
  }
  return TruncatedSeries(-(f.shift() + v), std::move(r));
}

TruncatedSeries qpoch_infinite(int order) {
  if (order < 1) throw EmptyWindow("order must be positive");
  std::vector<Integer> c(idx(order), Integer(0));
  c[0] = 1;
  for (long k = 1;; ++k) {
    const long e1 = k * (3 * k - 1) / 2;
    const long e2 = k * (3 * k + 1) / 2;
    if (e1 >= order) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(e1)] += sign;
    if (e2 < order) c[static_cast<std::size_t>(e2)] += sign;
  }
  return TruncatedSeries(0, std::move(c));
}

TruncatedSeries ts_normalize(const TruncatedSeries& f) {
  const int v = f.valuation_offset();
  if (v == f.order()) throw ZeroSeries("series has no nonzero tracked coefficient");
  return TruncatedSeries(0, std::vector<Integer>(f.coeffs().begin() + v, f.coeffs().end()));
}

bool ts_doteq(const TruncatedSeries& f, const TruncatedSeries& g, int n) {
  if (n < 1) throw InvalidParams("doteq precision must be positive");
  const TruncatedSeries nf = ts_normalize(f);
  const TruncatedSeries ng = ts_normalize(g);
  if (nf.order() < n || ng.order() < n)
    throw InsufficientOrder("doteq_" + std::to_string(n) + " needs " + std::to_string(n) +
                            " normalized coefficients, have " + std::to_string(std::min(nf.order(), ng.order())));
  return std::equal(nf.coeffs().begin(), nf.coeffs().begin() + n, ng.coeffs().begin());
}

TruncatedSeries lp_to_series(const LaurentPoly& f, int order) {
  if (order < 1) throw EmptyWindow("order must be positive");
  std::vector<Integer> c(idx(order), Integer(0));
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f.coeffs()[j] == 0) continue;
    if (j % 4 != 0)
      throw ExponentNotMultipleOf4("A-exponent gap " + std::to_string(j) + " in " + to_string(f) +
                                   " is not a multiple of 4");
    if (j / 4 < c.size()) c[j / 4] = f.coeffs()[j];
  }
  return TruncatedSeries(0, std::move(c));
}

TruncatedSeries rf_to_series(const RationalFn& f, int order) {
  const TruncatedSeries num = lp_to_series(f.num(), order);
  const TruncatedSeries den = lp_to_series(f.den(), order);
  return ts_mul(num, ts_invert(den)).truncated(order);
}

std::string to_string(const TruncatedSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < f.order(); ++j) {
    const Integer& c = f.coeffs()[idx(j)];
    if (c == 0) continue;
    const int e = f.shift() + j;
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) { return os << to_string(f); }

}  // namespace qskein
