#include <string>

#include "qskein/errors.hpp"
#include "qskein/quantum.hpp"
#include "qskein/tail_gamma.hpp"

namespace qskein {

std::string_view to_string(TailMethod method) {
  return method == TailMethod::direct ? "direct" : "double-sum";
}

TailMethod parse_tail_method(std::string_view name) {
  if (name == "direct") return TailMethod::direct;
  if (name == "double-sum" || name == "double_sum") return TailMethod::double_sum;
  throw InvalidParams("unknown tail method '" + std::string(name) + "'");
}

namespace {

// [k choose i]_q^2 as dense q-coefficients.
std::vector<Integer> gauss_binom_squared(int k, int i) {
  const LaurentPoly g = gauss_binom(k, i);
  const LaurentPoly g2 = g * g;
  std::vector<Integer> c;
  c.reserve(g2.size() / 4 + 1);
  for (std::size_t j = 0; j < g2.size(); j += 4) c.push_back(g2.coeffs()[j]);
  return c;
}

// q^start * poly / (q;q)_k mod q^order, as a series trusted up to q^order.
TruncatedSeries over_qpoch(int start, const std::vector<Integer>& poly, int k, int order) {
  const int width = order - start;
  const TruncatedSeries top = TruncatedSeries::from_terms(start, poly, width);
  return ts_mul(top, ts_invert(qpoch_finite(k, width))).truncated(order);
}

TailSeries finish(const TruncatedSeries& sum, int order, TailMethod method) {
  const TruncatedSeries pinf = qpoch_infinite(order);
  TruncatedSeries t = ts_mul(ts_mul(sum, pinf), pinf).truncated(order);
  return {ts_normalize(t), method};
}

int min_exponent_direct(int k) { return k + k * k - 2 * (k / 2) * ((k + 1) / 2); }

}  // namespace

TailSeries tail_85(int order) {
  if (order < 1) throw InvalidParams("tail order must be >= 1");
  TruncatedSeries sum = TruncatedSeries::from_terms(0, {}, order);
  for (int k = 0; min_exponent_direct(k) < order; ++k) {
    // Inner sum over i, collected on exponents relative to the minimum.
    const int lo = min_exponent_direct(k);
    std::vector<Integer> inner;
    for (int i = 0; i <= k; ++i) {
      const int offset = k + k * k - 2 * i * (k - i) - lo;
      const auto sq = gauss_binom_squared(k, i);
      if (inner.size() < offset + sq.size()) inner.resize(offset + sq.size(), Integer(0));
      for (std::size_t t = 0; t < sq.size(); ++t) inner[static_cast<std::size_t>(offset) + t] += sq[t];
    }
    sum = ts_add(sum, over_qpoch(lo, inner, k, order));
  }
  return finish(sum, order, TailMethod::direct);
}

TailSeries tail_85_double_sum(int order) {
  if (order < 1) throw InvalidParams("tail order must be >= 1");
  TruncatedSeries sum = TruncatedSeries::from_terms(0, {}, order);
  // Exponent k + k^2 - 2i(k-i) = (k-i)^2 + i^2 + k grows with k for k >= i,
  // and its minimum over k >= i is i^2 + i.
  for (int i = 0; i * i + i < order; ++i) {
    for (int k = i;; ++k) {
      const int start = k + k * k - 2 * i * (k - i);
      if (start >= order) break;
      sum = ts_add(sum, over_qpoch(start, gauss_binom_squared(k, i), k, order));
    }
  }
  return finish(sum, order, TailMethod::double_sum);
}

TailSeries tail_85(int order, TailMethod method) {
  return method == TailMethod::direct ? tail_85(order) : tail_85_double_sum(order);
}

}  // namespace qskein
