#include "qskein/laurent_poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qskein/errors.hpp"

namespace qskein {

namespace {

// Dense univariate polynomial over Z, index = degree, no trailing zeros.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& p) {
  Integer g = dense_content(p);
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b >= 1 not required; b nonzero).
// The running remainder is made primitive after each elimination step, which
// keeps coefficient growth in check; the result is only used up to a unit.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  const bool unit_lead = (lb == 1 || lb == -1);
  Integer t;
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    if (unit_lead) {
      if (lb == -1) la = -la;
      for (std::size_t j = 0; j <= db; ++j)
        mpz_submul(a[j + shift].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    } else {
      Integer g;
      mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
      Integer ma = lb / g;
      Integer mb = la / g;
      for (auto& c : a) c *= ma;
      for (std::size_t j = 0; j <= db; ++j)
        mpz_submul(a[j + shift].get_mpz_t(), mb.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(a);
    if (!unit_lead) make_primitive(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return Dense{1};
    Dense r = pseudo_remainder(std::move(a), b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(int min_exp, std::vector<Integer> coeffs, std::string variable)
    : variable_(std::move(variable)), min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  canonicalize();
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(const Integer& c, int exp) { return LaurentPoly(exp, {c}); }

LaurentPoly LaurentPoly::from_ints(int min_exp, std::initializer_list<long> coeffs) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return LaurentPoly(min_exp, std::move(v));
}

void LaurentPoly::canonicalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  auto lead = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Integer& c) { return c != 0; });
  coeffs_.erase(lead.base(), coeffs_.end());
  const auto skip = std::distance(coeffs_.begin(), first);
  coeffs_.erase(coeffs_.begin(), first);
  min_exp_ += static_cast<int>(skip);
}

void LaurentPoly::check_same_variable(const LaurentPoly& other) const {
  if (variable_ != other.variable_)
    throw VariableMismatch("cannot combine polynomials in " + variable_ + " and " + other.variable_);
}

bool LaurentPoly::is_one() const { return coeffs_.size() == 1 && min_exp_ == 0 && coeffs_[0] == 1; }

Integer LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return *this;
  LaurentPoly r = *this;
  std::reverse(r.coeffs_.begin(), r.coeffs_.end());
  r.min_exp_ = -max_exp();
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_variable(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    min_exp_ = rhs.min_exp_;
    coeffs_ = rhs.coeffs_;
    return *this;
  }
  const int lo = std::min(min_exp_, rhs.min_exp_);
  const int hi = std::max(max_exp(), rhs.max_exp());
  if (lo < min_exp_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), Integer(0));
  min_exp_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
    coeffs_[static_cast<std::size_t>(rhs.min_exp_ - lo) + j] += rhs.coeffs_[j];
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  lhs.check_same_variable(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return LaurentPoly(0, {}, lhs.variable_);
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    const auto& a = lhs.coeffs_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
  }
  return LaurentPoly(lhs.min_exp_ + rhs.min_exp_, std::move(out), lhs.variable_);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Integer& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    min_exp_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.variable_ == b.variable_ && a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }

LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly lp_divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw ZeroDenominator("division by the zero polynomial");
  if (f.is_zero()) return LaurentPoly(0, {}, f.variable());
  if (f.variable() != g.variable()) throw VariableMismatch("mismatched variables in division");

  // Both operands have nonzero constant term after the shift, so Laurent
  // divisibility reduces to polynomial divisibility.
  const auto& b = g.coeffs();
  std::vector<Integer> r = f.coeffs();
  if (r.size() < b.size()) throw NotDivisible("degree of divisor exceeds dividend");
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  std::vector<Integer> quot(r.size() - db, Integer(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw NotDivisible("quotient is not integral");
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(r[k + j].get_mpz_t(), quot[k].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t j = 0; j < db; ++j)
    if (r[j] != 0) throw NotDivisible("nonzero remainder in exact division");
  return LaurentPoly(f.min_exp() - g.min_exp(), std::move(quot), f.variable());
}

Integer content(const LaurentPoly& f) { return dense_content(f.coeffs()); }

LaurentPoly primitive_part(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  std::vector<Integer> c = f.coeffs();
  make_primitive(c);
  return LaurentPoly(f.min_exp(), std::move(c), f.variable());
}

LaurentPoly lp_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidParams("gcd(0, 0) is undefined");
  const std::string& var = f.is_zero() ? g.variable() : f.variable();
  if (!f.is_zero() && !g.is_zero() && f.variable() != g.variable())
    throw VariableMismatch("mismatched variables in gcd");

  // Positions of nonzero coefficients relative to min_exp; a common stride s
  // lets the Euclidean loop run in x = var^s.
  int stride = 0;
  auto scan = [&stride](const LaurentPoly& p) {
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.coeffs()[j] != 0) stride = std::gcd(stride, static_cast<int>(j));
  };
  scan(f);
  scan(g);
  if (stride == 0) {
    // Both are monomials (or one is zero and the other a monomial).
    return LaurentPoly(0, {Integer(1)}, var);
  }
  auto compress = [stride](const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    d.reserve(p.size() / static_cast<std::size_t>(stride) + 1);
    for (std::size_t j = 0; j < p.size(); j += static_cast<std::size_t>(stride)) d.push_back(p.coeffs()[j]);
    return d;
  };
  Dense h;
  if (f.is_zero()) {
    h = compress(g);
    make_primitive(h);
  } else if (g.is_zero()) {
    h = compress(f);
    make_primitive(h);
  } else {
    h = dense_gcd(compress(f), compress(g));
  }
  if (h.back() < 0)
    for (auto& c : h) c = -c;
  std::vector<Integer> out((h.size() - 1) * static_cast<std::size_t>(stride) + 1, Integer(0));
  for (std::size_t j = 0; j < h.size(); ++j) out[j * static_cast<std::size_t>(stride)] = h[j];
  return LaurentPoly(0, std::move(out), var);
}

LaurentPoly lp_substitute_invert(const LaurentPoly& f) { return f.inverted(); }

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = f.max_exp(); e >= f.min_exp(); --e) {
    const Integer c = f.coeff(e);
    if (c == 0) continue;
    const bool neg = c < 0;
    Integer mag = neg ? Integer(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << f.variable();
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

}  // namespace qskein
