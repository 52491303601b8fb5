#include "qskein_cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "qskein/bubble.hpp"
#include "qskein/errors.hpp"
#include "qskein/quantum.hpp"
#include "qskein/tail_gamma.hpp"

namespace qskein::cli {

namespace {

// Records cases of one property and keeps the first failure.
class Property {
 public:
  explicit Property(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.cases;
    if (ok || !r_.passed) return;
    r_.passed = false;
    r_.detail = describe();
  }

  void note(std::string detail) {
    if (r_.passed) r_.detail = std::move(detail);
  }

  PropertyResult done() { return std::move(r_); }

 private:
  PropertyResult r_;
};

std::string args(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : " ") << k << '=' << v;
    first = false;
  }
  return os.str();
}

void bubble_suite(int max, std::vector<PropertyResult>& out) {
  Property agree("bubble.closed-recursive-quantum");
  Property swap("bubble.swap-m-n");
  Property support("bubble.vanishes-outside-support");
  Property alpha_sym("bubble.alpha-symmetric");
  Property product("bubble.delta-product-identity");
  for (int m = 0; m <= max; ++m) {
    for (int n = 0; n <= max; ++n) {
      for (int k = 1; k <= max; ++k) {
        alpha_sym.check(alpha(m, n, k) == alpha(n, m, k), [&] { return args({{"m", m}, {"n", n}, {"k", k}}); });
        for (int l = 1; l <= k; ++l) {
          for (int i = 0; i <= std::min({m, n, l}); ++i) {
            const RationalFn c = bubble_coeff_closed(m, n, k, l, i);
            const RationalFn r = bubble_coeff_recursive(m, n, k, l, i);
            const RationalFn q = bubble_coeff_quantum(m, n, k, l, i);
            const auto where = [&] { return args({{"m", m}, {"n", n}, {"k", k}, {"l", l}, {"i", i}}); };
            agree.check(c == r && c == q, [&] {
              return where() + ": closed " + to_string(c) + ", recursive " + to_string(r) + ", quantum " +
                     to_string(q);
            });
            swap.check(c == bubble_coeff_closed(n, m, k, l, i), where);
          }
          for (int i : {-1, l + 1})
            support.check(bubble_coeff_closed(m, n, k, l, i).is_zero(),
                          [&] { return args({{"m", m}, {"n", n}, {"k", k}, {"l", l}, {"i", i}}); });
        }
      }
    }
  }
  for (int m = 0; m <= max; ++m)
    for (int n = 0; n <= max; ++n)
      for (int k = 0; k <= max; ++k)
        product.check(delta_product_identity(m, n, k), [&] { return args({{"m", m}, {"n", n}, {"k", k}}); });
  out.push_back(agree.done());
  out.push_back(swap.done());
  out.push_back(support.done());
  out.push_back(alpha_sym.done());
  out.push_back(product.done());
}

void theta_suite(int max, std::vector<PropertyResult>& out) {
  Property sym("theta.three-way-symmetry");
  Property unknot("theta.edge-cases");
  for (int m = 0; m <= max; ++m) {
    for (int n = 0; n <= max; ++n) {
      for (int k = 0; k <= max; ++k) {
        const RationalFn t = theta(m, n, k);
        sym.check(t == theta(m, k, n) && t == theta(n, k, m) && t == theta(n, m, k),
                  [&] { return args({{"m", m}, {"n", n}, {"k", k}}) + ": " + to_string(t); });
      }
      unknot.check(theta(m, n, 0) == RationalFn(delta(m + n)), [&] { return args({{"m", m}, {"n", n}, {"k", 0}}); });
    }
    unknot.check(theta(0, 0, m) == RationalFn(delta(m)), [&] { return args({{"m", 0}, {"n", 0}, {"k", m}}); });
  }
  out.push_back(sym.done());
  out.push_back(unknot.done());
}

void identity_suite(int max, std::vector<PropertyResult>& out) {
  auto run = [&](const char* name, const std::function<void(const std::function<void(IdentityCheck, std::string)>&)>& grid) {
    Property p(name);
    std::set<std::string> seen;
    grid([&](const IdentityCheck& c, const std::string& where) {
      if (c.discrepancy) seen.insert(to_string(*c.discrepancy));
      p.check(c.holds && c.side_condition, [&] {
        return where + (c.holds ? ": side condition fails" : ": ratio is not a unit monomial");
      });
    });
    std::string d = "discrepancies:";
    for (const auto& s : seen) d += " " + s;
    p.note(d);
    out.push_back(p.done());
  };
  run("identities.fact", [&](const auto& report) {
    for (int n = 1; n <= max; ++n)
      for (int j = 0; j + 1 <= n; ++j) report(identity_fact(n, j), args({{"n", n}, {"j", j}}));
  });
  run("identities.mn", [&](const auto& report) {
    for (int n = 0; n <= max; ++n)
      for (int i = 0; i <= n; ++i) report(identity_mn(n, i), args({{"n", n}, {"i", i}}));
  });
  run("identities.mn1", [&](const auto& report) {
    for (int n = 0; n <= max; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) report(identity_mn1(n, i, j), args({{"n", n}, {"i", i}, {"j", j}}));
  });
  run("identities.mn3", [&](const auto& report) {
    for (int n = 0; n <= max; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) report(identity_mn3(n, i, j), args({{"n", n}, {"i", i}, {"j", j}}));
  });
}

void tail_suite(std::vector<PropertyResult>& out) {
  const auto& golden = golden_tail();
  const int order = static_cast<int>(golden.size());
  const TailSeries direct = tail_85(order);
  Property g("tail.golden-" + std::to_string(order));
  for (int e = 0; e < order; ++e)
    g.check(direct.terms.coeff(e) == golden[static_cast<std::size_t>(e)], [&] {
      return "q^" + std::to_string(e) + ": computed " + direct.terms.coeff(e).get_str() + ", expected " +
             golden[static_cast<std::size_t>(e)].get_str();
    });
  out.push_back(g.done());
  const TailSeries dbl = tail_85_double_sum(order);
  Property r("tail.double-sum-agrees");
  for (int e = 0; e < order; ++e)
    r.check(direct.terms.coeff(e) == dbl.terms.coeff(e), [&] {
      return "q^" + std::to_string(e) + ": direct " + direct.terms.coeff(e).get_str() + ", double sum " +
             dbl.terms.coeff(e).get_str();
    });
  out.push_back(r.done());
}

void stabilization_suite(int max, std::vector<PropertyResult>& out) {
  Property p("stabilization");
  for (int n = 1; n <= max; ++n) {
    const StabilizationReport r = stabilization_report(n);
    p.check(r.matches, [&] {
      return args({{"n", n}}) + ": state sum " + to_string(r.state_series) + ", tail " + to_string(r.tail);
    });
  }
  out.push_back(p.done());
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "bubble", "theta", "identities", "tail", "stabilization"};
  return names;
}

std::vector<PropertyResult> run_suite(std::string_view suite, std::optional<int> max) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw InvalidParams("unknown suite '" + std::string(suite) + "'");
  if (max && *max < 0) throw InvalidParams("--max must be non-negative");
  const bool all = suite == "all";
  std::vector<PropertyResult> out;
  if (all || suite == "bubble") bubble_suite(max.value_or(5), out);
  if (all || suite == "theta") theta_suite(max.value_or(5), out);
  if (all || suite == "identities") identity_suite(max.value_or(5), out);
  if (all || suite == "tail") tail_suite(out);
  if (all || suite == "stabilization") stabilization_suite(max.value_or(4), out);
  return out;
}

}  // namespace qskein::cli
