#include "qskein/rational_fn.hpp"

#include <ostream>

#include "qskein/errors.hpp"

namespace qskein {

namespace {

const LaurentPoly& one_poly() {
  static const LaurentPoly one = LaurentPoly::constant(1);
  return one;
}

}  // namespace

RationalFn::RationalFn() : num_(), den_(one_poly()) {}

RationalFn::RationalFn(const LaurentPoly& p) : num_(p), den_(one_poly()) {}

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = one_poly();
    return;
  }
  const LaurentPoly g = lp_gcd(num, den);
  if (g.is_one()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = lp_divide_exact(num, g);
    den_ = lp_divide_exact(den, g);
  }
  normalize_units();
}

RationalFn::RationalFn(Reduced, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  normalize_units();
}

RationalFn RationalFn::integer(long c) { return RationalFn(LaurentPoly::constant(c)); }

void RationalFn::normalize_units() {
  if (num_.is_zero()) {
    den_ = one_poly();
    return;
  }
  if (den_.min_exp() != 0) {
    num_ = num_.shifted(-den_.min_exp());
    den_ = den_.shifted(-den_.min_exp());
  }
  Integer g = content(den_);
  if (g != 1) {
    Integer h;
    mpz_gcd(h.get_mpz_t(), g.get_mpz_t(), content(num_).get_mpz_t());
    if (h != 1) {
      std::vector<Integer> n = num_.coeffs();
      std::vector<Integer> d = den_.coeffs();
      for (auto& c : n) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), h.get_mpz_t());
      for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), h.get_mpz_t());
      num_ = LaurentPoly(num_.min_exp(), std::move(n), num_.variable());
      den_ = LaurentPoly(den_.min_exp(), std::move(d), den_.variable());
    }
  }
  if (den_.lowest_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero");
  return RationalFn(Reduced{}, den_, num_);
}

RationalFn RationalFn::inverted() const { return RationalFn(Reduced{}, num_.inverted(), den_.inverted()); }

// Henrici-style operations: only the gcds that can be nontrivial are taken.
RationalFn operator+(const RationalFn& x, const RationalFn& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_.is_one() && y.den_.is_one()) return RationalFn(x.num_ + y.num_);
  const LaurentPoly g = lp_gcd(x.den_, y.den_);
  if (g.is_one()) {
    return RationalFn(RationalFn::Reduced{}, x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  const LaurentPoly xd = lp_divide_exact(x.den_, g);
  const LaurentPoly yd = lp_divide_exact(y.den_, g);
  const LaurentPoly t = x.num_ * yd + y.num_ * xd;
  if (t.is_zero()) return RationalFn();
  const LaurentPoly g2 = lp_gcd(t, g);
  if (g2.is_one()) return RationalFn(RationalFn::Reduced{}, t, xd * y.den_);
  return RationalFn(RationalFn::Reduced{}, lp_divide_exact(t, g2), xd * lp_divide_exact(y.den_, g2));
}

RationalFn operator*(const RationalFn& x, const RationalFn& y) {
  if (x.is_zero() || y.is_zero()) return RationalFn();
  LaurentPoly xn = x.num_, xd = x.den_, yn = y.num_, yd = y.den_;
  if (!yd.is_one()) {
    const LaurentPoly g1 = lp_gcd(xn, yd);
    if (!g1.is_one()) {
      xn = lp_divide_exact(xn, g1);
      yd = lp_divide_exact(yd, g1);
    }
  }
  if (!xd.is_one()) {
    const LaurentPoly g2 = lp_gcd(yn, xd);
    if (!g2.is_one()) {
      yn = lp_divide_exact(yn, g2);
      xd = lp_divide_exact(xd, g2);
    }
  }
  return RationalFn(RationalFn::Reduced{}, xn * yn, xd * yd);
}

RationalFn operator/(const RationalFn& x, const RationalFn& y) {
  if (y.is_zero()) throw ZeroDenominator("division by the zero rational function");
  return x * y.inverse();
}

RationalFn rf_make(const LaurentPoly& num, const LaurentPoly& den) { return RationalFn(num, den); }
RationalFn rf_add(const RationalFn& x, const RationalFn& y) { return x + y; }
RationalFn rf_mul(const RationalFn& x, const RationalFn& y) { return x * y; }
RationalFn rf_div(const RationalFn& x, const RationalFn& y) { return x / y; }

std::string to_string(const RationalFn& x) {
  if (x.is_polynomial()) return to_string(x.num());
  return "(" + to_string(x.num()) + ") / (" + to_string(x.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFn& x) { return os << to_string(x); }

}  // namespace qskein
