#include "qskein_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "qskein/bubble.hpp"
#include "qskein/errors.hpp"
#include "qskein/json_io.hpp"
#include "qskein/quantum.hpp"
#include "qskein/tail_gamma.hpp"
#include "qskein_cli/verify.hpp"

namespace qskein::cli {

using nlohmann::json;

namespace {

struct Output {
  std::ostream& out;
  std::string format;

  void emit(const std::string& command, const json& params, const json& result, const std::string& text) const {
    if (format == "json") {
      const json envelope{{"command", command}, {"params", params}, {"result", result}, {"format_version", kFormatVersion}};
      out << envelope.dump() << '\n';
    } else {
      out << text << '\n';
    }
  }
};

struct Options {
  int n = 0;
  int m = 0;
  int k = 0;
  int l = 0;
  int i = 0;
  int m_prime = 0;
  int n_prime = 0;
  int terms = 0;
  int max = 0;
  std::string method;
  std::string suite = "all";
};

std::string expansion_text(const std::vector<ExpansionTerm>& terms) {
  std::ostringstream os;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& e = terms[t];
    if (t > 0) os << '\n';
    os << "i=" << e.i << " top=" << e.top_label << " bottom=" << e.bottom_label << " coeff=" << to_string(e.coeff);
  }
  return os.str();
}

int cmd_bubble(const Output& o, const Options& a, const CLI::App& sub) {
  BubbleParams p{a.m, a.n, a.m + a.k - a.l, a.n + a.k - a.l, a.k, a.l};
  if (sub.count("--mp") > 0) p.m_prime = a.m_prime;
  if (sub.count("--np") > 0) p.n_prime = a.n_prime;
  const CoeffMethod method = parse_coeff_method(a.method);
  json params{{"m", p.m}, {"n", p.n}, {"mp", p.m_prime}, {"np", p.n_prime}, {"k", p.k}, {"l", p.l},
              {"method", std::string(to_string(method))}};
  const std::vector<ExpansionTerm> terms = bubble_expand(p, method);
  if (sub.count("--i") > 0) {
    params["i"] = a.i;
    auto it = std::find_if(terms.begin(), terms.end(), [&](const ExpansionTerm& t) { return t.i == a.i; });
    const RationalFn c = it == terms.end() ? RationalFn() : it->coeff;
    o.emit("bubble", params, to_json(c), to_string(c));
    return kSuccess;
  }
  json list = json::array();
  for (const auto& t : terms) list.push_back(to_json(t));
  o.emit("bubble", params, list, expansion_text(terms));
  return kSuccess;
}

int cmd_verify(const Output& o, const Options& a, const CLI::App& sub) {
  std::optional<int> max;
  json params{{"suite", a.suite}};
  if (sub.count("--max") > 0) {
    max = a.max;
    params["max"] = a.max;
  }
  const std::vector<PropertyResult> results = run_suite(a.suite, max);
  bool all = true;
  json list = json::array();
  std::ostringstream text;
  long passed = 0;
  for (const auto& r : results) {
    all = all && r.passed;
    passed += r.passed ? 1 : 0;
    list.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    text << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.detail.empty()) text << (r.passed ? " " : ": ") << r.detail;
    text << '\n';
  }
  text << passed << '/' << results.size() << " properties passed";
  o.emit("verify", params, json{{"passed", all}, {"properties", list}}, text.str());
  return all ? kSuccess : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> default_format) {
  CLI::App app{"Exact bubble skein expansion calculus", "qskein"};
  app.require_subcommand(1);
  Options a;
  std::string format = default_format.value_or("text");
  app.add_option("--format", format, "Output format (default from QSKEIN_FORMAT, else text)")
      ->check(CLI::IsMember({"text", "json"}));

  auto* qint_cmd = app.add_subcommand("qint", "Quantum integer [n]");
  qint_cmd->add_option("--n", a.n, "Index")->required();
  auto* delta_cmd = app.add_subcommand("delta", "Unknot value Delta_n");
  delta_cmd->add_option("--n", a.n, "Index")->required();

  auto* bubble_cmd = app.add_subcommand("bubble", "Bubble expansion coefficients");
  bubble_cmd->add_option("--m", a.m, "Top-left color")->required();
  bubble_cmd->add_option("--n", a.n, "Top-right color")->required();
  bubble_cmd->add_option("--k", a.k, "Strands above the bubble")->required();
  bubble_cmd->add_option("--l", a.l, "Strands below the bubble")->required();
  bubble_cmd->add_option("--i", a.i, "Single term index");
  bubble_cmd->add_option("--mp", a.m_prime, "Bottom-left color (default m+k-l)");
  bubble_cmd->add_option("--np", a.n_prime, "Bottom-right color (default n+k-l)");
  a.method = "closed";
  bubble_cmd->add_option("--method", a.method, "closed, recursive or quantum")
      ->check(CLI::IsMember({"closed", "recursive", "quantum"}));

  auto* theta_cmd = app.add_subcommand("theta", "Theta graph evaluation");
  theta_cmd->add_option("--m", a.m)->required();
  theta_cmd->add_option("--n", a.n)->required();
  theta_cmd->add_option("--k", a.k)->required();

  auto* tail_cmd = app.add_subcommand("tail85", "Tail series of the 8_5 family");
  tail_cmd->add_option("--terms", a.terms, "Number of coefficients")->required();
  std::string tail_method = "direct";
  tail_cmd->add_option("--method", tail_method, "direct or double-sum")
      ->check(CLI::IsMember({"direct", "double-sum"}));

  auto* sb_cmd = app.add_subcommand("sbsum", "Exact all-B state sum");
  sb_cmd->add_option("--n", a.n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", a.suite, "all, bubble, theta, identities, tail or stabilization");
  verify_cmd->add_option("--max", a.max, "Grid bound");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }
  if (format != "text" && format != "json") {
    err << "unknown output format '" << format << "'\n";
    return kUsage;
  }
  const Output o{out, format};

  try {
    if (qint_cmd->parsed()) {
      const LaurentPoly v = qint(a.n);
      o.emit("qint", {{"n", a.n}}, to_json(v), to_string(v));
    } else if (delta_cmd->parsed()) {
      const LaurentPoly v = delta(a.n);
      o.emit("delta", {{"n", a.n}}, to_json(v), to_string(v));
    } else if (bubble_cmd->parsed()) {
      return cmd_bubble(o, a, *bubble_cmd);
    } else if (theta_cmd->parsed()) {
      const RationalFn v = theta(a.m, a.n, a.k);
      o.emit("theta", {{"m", a.m}, {"n", a.n}, {"k", a.k}}, to_json(v), to_string(v));
    } else if (tail_cmd->parsed()) {
      if (a.terms < 1) throw InvalidParams("--terms must be at least 1");
      const TailSeries t = tail_85(a.terms, parse_tail_method(tail_method));
      o.emit("tail85", {{"terms", a.terms}, {"method", tail_method}}, to_json(t.terms), to_string(t.terms));
    } else if (sb_cmd->parsed()) {
      const StateSumValue v = sb_state_sum(a.n);
      o.emit("sbsum", {{"n", a.n}}, to_json(v.value), to_string(v.value));
    } else if (verify_cmd->parsed()) {
      return cmd_verify(o, a, *verify_cmd);
    }
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kSuccess;
}

}  // namespace qskein::cli
