#pragma once

#include <cstdlib>
#include <map>

#include "qskein/laurent_poly.hpp"
#include "qskein/rational_fn.hpp"

namespace qskein::detail {

/// A scalar polynomial times a product of indexed factors raised to integer
/// powers, e.g. prod Delta_j^{e_j}. Factors appearing on both sides cancel by
/// index before anything is multiplied out.
class FactorRatio {
 public:
  explicit FactorRatio(LaurentPoly scalar = LaurentPoly::constant(1)) : scalar_(std::move(scalar)) {}

  void up(int index, int times = 1) { bump(index, times); }
  void down(int index, int times = 1) { bump(index, -times); }
  void scale(const LaurentPoly& p) { scalar_ *= p; }

  FactorRatio& operator*=(const FactorRatio& other) {
    scalar_ *= other.scalar_;
    for (const auto& [index, c] : other.powers_) bump(index, c);
    return *this;
  }

  const LaurentPoly& scalar() const { return scalar_; }
  const std::map<int, int>& powers() const { return powers_; }

  /// Product of factor(index)^power over the positive (num) or negative
  /// (den) powers.
  template <class Factor>
  LaurentPoly side(bool numerator, Factor&& factor) const {
    LaurentPoly r = LaurentPoly::constant(1);
    for (const auto& [index, c] : powers_) {
      if ((c > 0) != numerator) continue;
      const LaurentPoly f = factor(index);
      for (int t = 0; t < std::abs(c); ++t) r *= f;
    }
    return r;
  }

  template <class Factor>
  RationalFn evaluate(Factor&& factor) const {
    return RationalFn(scalar_ * side(true, factor), side(false, factor));
  }

 private:
  void bump(int index, int by) {
    auto& c = powers_[index];
    c += by;
    if (c == 0) powers_.erase(index);
  }

  LaurentPoly scalar_;
  std::map<int, int> powers_;
};

/// Factored closed form of the bubble coefficient: scalar and Delta powers.
/// Preconditions as bubble_coeff_closed; returns a zero scalar outside the
/// support.
FactorRatio bubble_coeff_closed_factors(int m, int n, int k, int l, int i);

}  // namespace qskein::detail
