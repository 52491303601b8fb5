#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "qskein/json_io.hpp"
#include "qskein/quantum.hpp"
#include "qskein/tail_gamma.hpp"
#include "qskein_cli/cli.hpp"
#include "qskein_cli/verify.hpp"

using nlohmann::json;
using qskein::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, std::optional<std::string> fmt = std::nullopt) {
  std::ostringstream out, err;
  const int code = run(args, out, err, fmt);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, QintAndDelta) {
  EXPECT_EQ(call({"delta", "--n", "1"}).out, "-A^2 - A^-2\n");
  EXPECT_EQ(call({"qint", "--n", "0"}).out, "0\n");
  const auto r = call({"qint", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("command"), "qint");
  EXPECT_EQ(j.at("params").at("n"), 2);
  EXPECT_EQ(j.at("format_version"), qskein::cli::kFormatVersion);
  EXPECT_EQ(qskein::poly_from_json(j.at("result")), qskein::qint(2));
}

TEST(Cli, FormatFromEnvironmentDefault) {
  const auto r = call({"delta", "--n", "0"}, "json");
  EXPECT_EQ(json::parse(r.out).at("result").at("coeffs"), json({"1"}));
  EXPECT_EQ(call({"--format", "text", "delta", "--n", "0"}, "json").out, "1\n");
  EXPECT_EQ(call({"delta", "--n", "0"}, "yaml").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"qint"}).code, 2);
  EXPECT_EQ(call({"qint", "--n", "x"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"tail85", "--terms", "0"}).code, 2);
  EXPECT_EQ(call({"verify", "--suite", "unknown"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, Bubble) {
  const auto r = call({"bubble", "--m", "1", "--n", "1", "--k", "1", "--l", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json terms = json::parse(r.out).at("result");
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(qskein::term_from_json(terms[1]).coeff,
            qskein::RationalFn(qskein::LaurentPoly::constant(1), qskein::delta(1) * qskein::delta(1)));
  EXPECT_EQ(call({"bubble", "--m", "1", "--n", "1", "--k", "1", "--l", "1", "--i", "7"}).out, "0\n");
  EXPECT_EQ(call({"bubble", "--m", "3", "--n", "2", "--k", "3", "--l", "2", "--method", "recursive"}).out,
            call({"bubble", "--m", "3", "--n", "2", "--k", "3", "--l", "2"}).out);
  EXPECT_EQ(call({"bubble", "--m", "1", "--n", "1", "--k", "1", "--l", "1", "--method", "nope"}).code, 2);
}

TEST(Cli, BubbleConstraintViolation) {
  const auto r = call({"bubble", "--m", "1", "--n", "1", "--k", "1", "--l", "1", "--mp", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("m+k = m'+l"), std::string::npos);
  const auto s = call({"bubble", "--m", "1", "--n", "1", "--k", "1", "--l", "1", "--np", "0"});
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.err.find("n+k = n'+l"), std::string::npos);
}

TEST(Cli, Theta) {
  EXPECT_EQ(call({"theta", "--m", "0", "--n", "0", "--k", "3"}).out, to_string(qskein::delta(3)) + "\n");
  EXPECT_EQ(call({"theta", "--m", "1", "--n", "1", "--k", "0"}).out, to_string(qskein::delta(2)) + "\n");
  EXPECT_EQ(call({"theta", "--m", "1", "--n", "1", "--k", "1"}).out,
            "(-A^10 - A^6 - 2A^2 - A^-2 - A^-6) / (A^4 + 1)\n");
}

TEST(Cli, Tail) {
  EXPECT_EQ(call({"tail85", "--terms", "6"}).out, "1 - 2q + q^2 - 2q^4 + 3q^5\n");
  EXPECT_EQ(call({"tail85", "--terms", "1"}).out, "1\n");
  const auto r = call({"tail85", "--terms", "121", "--method", "double-sum", "--format", "json"});
  const auto s = qskein::series_from_json(json::parse(r.out).at("result"));
  EXPECT_EQ(s.coeff(120), -324);
}

TEST(Cli, StateSum) {
  EXPECT_EQ(call({"sbsum", "--n", "0"}).out, "1\n");
  const auto r = call({"sbsum", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(qskein::rational_from_json(json::parse(r.out).at("result")), qskein::sb_state_sum(2).value);
  EXPECT_EQ(call({"sbsum", "--n", "-1"}).code, 2);
}

TEST(Cli, Verify) {
  const auto tail = call({"verify", "--suite", "tail"});
  EXPECT_EQ(tail.code, 0) << tail.out;
  EXPECT_NE(tail.out.find("PASS tail.golden-121"), std::string::npos);
  const auto bubble = call({"verify", "--suite", "bubble", "--max", "4", "--format", "json"});
  EXPECT_EQ(bubble.code, 0);
  EXPECT_TRUE(json::parse(bubble.out).at("result").at("passed").get<bool>());
}

TEST(Cli, EmbeddedFixtureMatchesFile) {
  const auto& golden = qskein::cli::golden_tail();
  ASSERT_EQ(golden.size(), 121u);
  EXPECT_EQ(golden.front(), 1);
  EXPECT_EQ(golden.back(), -324);
}
