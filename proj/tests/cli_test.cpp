#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "test_support.hpp"

namespace msn {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_lines(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(cli::detail::split(line, ','));
  return lines;
}

std::vector<Rational> rationals(const json& arr) {
  std::vector<Rational> v;
  for (const auto& s : arr) v.push_back(Rational::parse(s.get<std::string>()));
  return v;
}

TEST(CliTable, Msn1Example) {
  Outcome r = run({"table", "msn1", "--n", "2", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = r.doc();
  EXPECT_EQ(doc["family"], "msn1");
  EXPECT_EQ(doc["k"], "1");
  EXPECT_EQ(doc["n_max"], 2);
  EXPECT_EQ(doc["rows"], json::parse(R"([["1"],["-1","1"],["2","-3","1"]])"));
}

TEST(CliTable, Stirling1Csv) {
  Outcome r = run({"--format", "csv", "table", "stirling1", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto lines = csv_lines(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[3], (std::vector<std::string>{"0", "2", "-3", "1"}));
  EXPECT_EQ(lines[0], (std::vector<std::string>{"1"}));
}

TEST(CliTable, RStirlingRows) {
  Outcome r = run({"table", "r_stirling", "--n", "6", "--r", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = r.doc();
  EXPECT_EQ(doc["r"], 2);
  for (long i = 0; i <= 6; ++i) {
    auto row = rationals(doc["rows"][i]);
    ASSERT_EQ(row.size(), static_cast<std::size_t>(i + 1));
    for (long j = 0; j <= i; ++j) EXPECT_EQ(row[j], Rational(r_stirling_first(i, j, 2)));
  }
}

TEST(CliTable, RationalKRendersCanonically) {
  Outcome r = run({"table", "msn2", "--n", "3", "--k", "-6/14"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = r.doc();
  EXPECT_EQ(doc["k"], "-3/7");
  MsnTable expected = msn2_table(3, Rational(-3, 7));
  for (long i = 0; i <= 3; ++i) EXPECT_EQ(rationals(doc["rows"][i]), expected.row(i));
}

TEST(CliTable, InputErrors) {
  EXPECT_EQ(run({"table", "msn1", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"table", "stirling1", "--n", "3", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"table", "r_stirling", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"table", "msn1", "--n", "3", "--k", "1", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"table", "msn1", "--n=-1", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"table", "bell", "--n", "3"}).code, 2);
  for (const char* bad : {"1/0", "abc", "1.5", "2/", "/3", "1/-2", ""}) {
    Outcome r = run({"table", "msn1", "--n", "2", "--k", bad});
    EXPECT_EQ(r.code, 2) << bad;
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(CliVerify, Examples) {
  Outcome r = run({"verify", "inversion", "--n", "8", "--k", "0,1,-2,3/2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.doc()["pass"]);

  r = run({"verify", "all", "--n", "6", "--k", "0,1,1/2"});
  EXPECT_EQ(r.code, 0) << r.err;
  json doc = r.doc();
  ASSERT_EQ(doc["reports"].size(), identity_catalog.size());
  for (std::size_t t = 0; t < identity_catalog.size(); ++t) {
    EXPECT_EQ(doc["reports"][t]["identity"], std::string(identity_catalog[t]));
    EXPECT_TRUE(doc["reports"][t]["pass"]);
  }

  EXPECT_EQ(run({"verify", "nosuch"}).code, 2);
  EXPECT_EQ(run({"verify", "harmonic_closed_form", "--k", "1/2"}).code, 2);
  EXPECT_EQ(run({"verify", "inversion", "--k", "1,x"}).code, 2);
}

TEST(CliVerify, FailingReportShape) {
  IdentityReport report;
  report.identity_name = "demo";
  report.parameter_ranges = "n <= 2";
  report.checked_count = 3;
  report.failures.push_back({"a", {{"i", 2}, {"j", 1}}, {Rational(1, 2)}, Rational(3), Rational(-1, 4)});
  json doc = cli::detail::report_json(report);
  EXPECT_EQ(doc["pass"], false);
  EXPECT_EQ(doc["checked"], 3);
  ASSERT_EQ(doc["failures"].size(), 1u);
  const json& f = doc["failures"][0];
  EXPECT_EQ(f["clause"], "a");
  EXPECT_EQ(f["indices"]["i"], 2);
  EXPECT_EQ(f["indices"]["j"], 1);
  EXPECT_EQ(f["k"], json::parse(R"(["1/2"])"));
  EXPECT_EQ(f["lhs"], "3");
  EXPECT_EQ(f["rhs"], "-1/4");
}

TEST(CliVerify, CsvCarriesSameReports) {
  std::vector<std::string> args = {"verify", "all", "--n", "4", "--k", "1,-1/2"};
  json doc = run(args).doc();
  args.insert(args.begin(), {"--format", "csv"});
  Outcome csv = run(args);
  ASSERT_EQ(csv.code, 0) << csv.err;
  auto lines = csv_lines(csv.out);
  ASSERT_EQ(lines.size(), doc["reports"].size() + 1);
  for (std::size_t t = 0; t < doc["reports"].size(); ++t) {
    const json& rep = doc["reports"][t];
    const auto& line = lines[t + 1];
    EXPECT_EQ(line.front(), rep["identity"].get<std::string>());
    // parameter_ranges may be quoted and contain commas; count from the end.
    ASSERT_GE(line.size(), 9u);
    EXPECT_EQ(line[line.size() - 7], std::to_string(rep["checked"].get<long>()));
    EXPECT_EQ(line[line.size() - 6], "true");
  }
}

TEST(CliMoments, Examples) {
  Outcome r = run({"moments", "poisson", "--lambda", "2", "--m", "3", "--kind", "factorial"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["values"], json::parse(R"(["1","2","4","8"])"));
  EXPECT_EQ(r.doc()["kind"], "factorial");

  r = run({"moments", "ph", "--p", "1", "--P", "1/2", "--m", "2", "--kind", "factorial"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["values"], json::parse(R"(["1","2","4"])"));

  r = run({"moments", "convert", "--from", "ordinary", "--to", "central", "--values", "1,2,6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["values"], json::parse(R"(["1","0","2"])"));
  EXPECT_EQ(r.doc()["mean"], "2");
}

TEST(CliMoments, TwoPhaseInstance) {
  Outcome r = run({"moments", "ph", "--p", "1/2,1/2", "--P", "1/4,1/4;0,1/2", "--m", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  PhaseType x({Rational(1, 2), Rational(1, 2)},
              RationalMatrix{{Rational(1, 4), Rational(1, 4)}, {0, Rational(1, 2)}});
  EXPECT_EQ(rationals(r.doc()["values"]), ph_moments(x, MomentKind::ordinary, 3).values());
}

TEST(CliMoments, ExitCodes) {
  // I - P singular: phase 0 never leaks.
  EXPECT_EQ(run({"moments", "ph", "--p", "1,0", "--P", "1,0;0,1/2", "--m", "2"}).code, 3);
  EXPECT_EQ(run({"moments", "ph", "--p", "1", "--P", "3/2", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"moments", "ph", "--p", "1/2", "--P", "1/2", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"moments", "ph", "--p", "1,0", "--P", "1/2", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"moments", "convert", "--from", "ordinary", "--to", "central", "--values", "2,1"}).code, 2);
  EXPECT_EQ(run({"moments", "convert", "--from", "central", "--to", "ordinary", "--values", "1,0,2"}).code, 2);
  EXPECT_EQ(run({"moments", "convert", "--from", "central", "--to", "ordinary", "--values", "1,1", "--mean", "0"}).code, 2);
  EXPECT_EQ(run({"moments", "convert", "--from", "raw", "--to", "central", "--values", "1"}).code, 2);
  EXPECT_EQ(run({"moments", "poisson", "--lambda", "0", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"moments", "poisson", "--lambda", "-1", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"moments"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliMoments, JsonRoundTripWithSwappedKinds) {
  std::mt19937 rng(31);
  const char* kinds[] = {"ordinary", "factorial", "central"};
  for (int t = 0; t < 6; ++t) {
    std::vector<Rational> values = testing::random_rationals(rng, 6);
    values[0] = 1;
    for (const char* from : kinds) {
      for (const char* to : kinds) {
        std::vector<Rational> input = values;
        std::vector<std::string> args = {"moments", "convert", "--from", from, "--to", to};
        std::string mean = testing::random_rational(rng).str();
        if (std::string(from) == "central") {
          input[1] = 0;
          args.insert(args.end(), {"--mean", mean});
        }
        args.insert(args.end(), {"--values", cli::detail::csv_row(input)});
        Outcome forward = run(args);
        ASSERT_EQ(forward.code, 0) << forward.err;
        json doc = forward.doc();
        std::vector<std::string> back = {"moments", "convert", "--from", to, "--to", from,
                                         "--values", cli::detail::csv_row(rationals(doc["values"]))};
        if (std::string(to) == "central") {
          back.insert(back.end(), {"--mean", doc["mean"].get<std::string>()});
        }
        Outcome reverse = run(back);
        ASSERT_EQ(reverse.code, 0) << reverse.err;
        EXPECT_EQ(rationals(reverse.doc()["values"]), input) << from << "->" << to;
        if (std::string(from) == "central") EXPECT_EQ(reverse.doc()["mean"], mean);
      }
    }
  }
}

TEST(CliFormats, CsvAndJsonCarryIdenticalData) {
  std::vector<std::vector<std::string>> commands = {
      {"table", "msn1", "--n", "5", "--k", "1/2"},
      {"table", "stirling2", "--n", "5"},
      {"table", "r_stirling", "--n", "5", "--r", "1"},
  };
  for (auto args : commands) {
    json doc = run(args).doc();
    args.insert(args.begin(), {"--format", "csv"});
    auto lines = csv_lines(run(args).out);
    ASSERT_EQ(lines.size(), doc["rows"].size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      EXPECT_EQ(json(lines[i]), doc["rows"][i]);
    }
  }

  std::vector<std::string> moments = {"moments", "poisson", "--lambda", "7/3", "--m", "4",
                                      "--kind", "central"};
  json doc = run(moments).doc();
  moments.insert(moments.begin(), {"--format", "csv"});
  auto lines = csv_lines(run(moments).out);
  ASSERT_EQ(lines.size(), doc["values"].size() + 1);
  EXPECT_EQ(lines[0], (std::vector<std::string>{"kind", "mean", "order", "value"}));
  for (std::size_t m = 0; m < doc["values"].size(); ++m) {
    EXPECT_EQ(lines[m + 1][0], doc["kind"].get<std::string>());
    EXPECT_EQ(lines[m + 1][1], doc["mean"].get<std::string>());
    EXPECT_EQ(lines[m + 1][2], std::to_string(m));
    EXPECT_EQ(lines[m + 1][3], doc["values"][m].get<std::string>());
  }
}

TEST(CliHelp, ExitsZero) {
  Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
  EXPECT_EQ(run({"moments", "convert", "--help"}).code, 0);
}

}  // namespace
}  // namespace msn
