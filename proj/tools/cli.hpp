#pragma once

// Command-line front end: table generation, identity verification and
// moment conversion. Kept in a header so the test suite can drive run()
// in-process.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "msn/all.hpp"

namespace msn::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIdentityFailure = 1,
  kInputError = 2,
  kSingular = 3,
};

enum class Format { json, csv };

namespace detail {

using nlohmann::json;

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline std::vector<Rational> parse_list(std::string_view text) {
  std::vector<Rational> values;
  for (const auto& part : split(text, ',')) values.push_back(Rational::parse(part));
  return values;
}

inline RationalMatrix parse_matrix(std::string_view text) {
  std::vector<RowVector> rows;
  for (const auto& row : split(text, ';')) rows.push_back(parse_list(row));
  return RationalMatrix::from_rows(rows);
}

inline json to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

template <typename Row>
std::string csv_row(const Row& row) {
  std::string line;
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (t) line += ',';
    line += Rational(row[t]).str();
  }
  return line;
}

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

inline void emit_moments(const MomentVector& v, Format format, std::ostream& out) {
  if (format == Format::json) {
    json doc = {{"kind", std::string(to_string(v.kind()))},
                {"mean", v.mean().str()},
                {"values", to_json(v.values())}};
    out << doc.dump() << '\n';
    return;
  }
  out << "kind,mean,order,value\n";
  for (std::size_t m = 0; m < v.size(); ++m) {
    out << to_string(v.kind()) << ',' << v.mean() << ',' << m << ',' << v[m] << '\n';
  }
}

struct TableArgs {
  std::string family;
  long n = -1;
  std::optional<std::string> k;
  std::optional<long> r;
};

inline void run_table(const TableArgs& a, Format format, std::ostream& out) {
  static const std::vector<std::string> families = {"msn1", "msn2", "stirling1",
                                                    "stirling2", "r_stirling"};
  if (std::find(families.begin(), families.end(), a.family) == families.end()) {
    throw usage_error("unknown table family '" + a.family + "'");
  }
  if (a.n < 0) throw usage_error("--n must be >= 0");
  const bool is_msn = a.family == "msn1" || a.family == "msn2";
  if (is_msn && !a.k) throw usage_error(a.family + " needs --k");
  if (is_msn && a.r) throw usage_error(a.family + " does not take --r");
  if (!is_msn && a.k) throw usage_error(a.family + " does not take --k");
  if (a.family == "r_stirling" && !a.r) throw usage_error("r_stirling needs --r");
  if (a.family != "r_stirling" && !is_msn && a.r) {
    throw usage_error(a.family + " does not take --r");
  }

  std::vector<std::vector<Rational>> rows;
  json meta = {{"family", a.family}, {"n_max", a.n}};
  if (is_msn) {
    Rational k = Rational::parse(*a.k);
    meta["k"] = k.str();
    MsnTable t = a.family == "msn1" ? msn1_table(a.n, k) : msn2_table(a.n, k);
    rows = t.rows();
  } else if (a.family == "r_stirling") {
    if (*a.r < 0) throw usage_error("--r must be >= 0");
    meta["r"] = *a.r;
    RStirlingTable t = RStirlingTable::build(*a.r, a.n);
    for (long i = 0; i <= a.n; ++i) rows.emplace_back(t.row(i).begin(), t.row(i).end());
  } else {
    auto kind = a.family == "stirling1" ? StirlingKind::first_signed : StirlingKind::second;
    StirlingTable t = StirlingTable::build(kind, a.n);
    for (long i = 0; i <= a.n; ++i) rows.emplace_back(t.row(i).begin(), t.row(i).end());
  }

  if (format == Format::json) {
    json doc = meta;
    doc["rows"] = json::array();
    for (const auto& row : rows) doc["rows"].push_back(to_json(row));
    out << doc.dump() << '\n';
  } else {
    for (const auto& row : rows) out << csv_row(row) << '\n';
  }
}

inline json report_json(const IdentityReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json indices = json::object();
    for (const auto& [name, value] : f.indices) indices[name] = value;
    failures.push_back({{"clause", f.clause},
                        {"indices", indices},
                        {"k", to_json(f.k_values)},
                        {"lhs", f.lhs.str()},
                        {"rhs", f.rhs.str()}});
  }
  return {{"identity", r.identity_name},
          {"parameter_ranges", r.parameter_ranges},
          {"checked", r.checked_count},
          {"pass", r.pass()},
          {"failures", failures}};
}

struct VerifyArgs {
  std::string identity;
  long n = 8;
  std::string k = "0,1,-1,2,1/2,-3/7";
};

inline int run_verify(const VerifyArgs& a, Format format, std::ostream& out) {
  if (a.n < 0) throw usage_error("--n must be >= 0");
  std::vector<Rational> ks = parse_list(a.k);
  std::vector<IdentityReport> reports;
  if (a.identity == "all") {
    reports = verify_all(a.n, ks);
  } else {
    reports.push_back(verify_identity(a.identity, a.n, ks));
  }
  const bool pass = std::all_of(reports.begin(), reports.end(),
                                [](const IdentityReport& r) { return r.pass(); });
  if (format == Format::json) {
    json doc = {{"pass", pass}, {"reports", json::array()}};
    for (const auto& r : reports) doc["reports"].push_back(report_json(r));
    out << doc.dump() << '\n';
  } else {
    // One row per failure, or a single row with empty failure fields.
    out << "identity,parameter_ranges,checked,pass,clause,indices,k,lhs,rhs\n";
    for (const auto& r : reports) {
      const std::string head = r.identity_name + ',' + csv_quote(r.parameter_ranges) + ',' +
                               std::to_string(r.checked_count) + ',' +
                               (r.pass() ? "true" : "false") + ',';
      if (r.failures.empty()) out << head << ",,,,\n";
      for (const auto& f : r.failures) {
        std::string indices, ks;
        for (const auto& [name, value] : f.indices) {
          if (!indices.empty()) indices += ';';
          indices += name + '=' + std::to_string(value);
        }
        for (const auto& k : f.k_values) {
          if (!ks.empty()) ks += ';';
          ks += k.str();
        }
        out << head << f.clause << ',' << indices << ',' << ks << ',' << f.lhs << ',' << f.rhs
            << '\n';
      }
    }
  }
  return pass ? kSuccess : kIdentityFailure;
}

struct ConvertArgs {
  std::string from;
  std::string to;
  std::string values;
  std::optional<std::string> mean;
};

inline void run_convert(const ConvertArgs& a, Format format, std::ostream& out) {
  MomentKind from = parse_moment_kind(a.from);
  MomentKind to = parse_moment_kind(a.to);
  std::optional<Rational> mean;
  if (a.mean) mean = Rational::parse(*a.mean);
  MomentVector v = MomentVector::make(from, parse_list(a.values), mean);
  emit_moments(convert(v, to), format, out);
}

struct PoissonArgs {
  std::string lambda;
  long m = 0;
  std::string kind = "ordinary";
};

inline void run_poisson(const PoissonArgs& a, Format format, std::ostream& out) {
  MomentVector v = poisson_moments(Rational::parse(a.lambda), a.m);
  emit_moments(convert(v, parse_moment_kind(a.kind)), format, out);
}

struct PhaseTypeArgs {
  std::string p;
  std::string P;
  long m = 0;
  std::string kind = "ordinary";
};

inline void run_ph(const PhaseTypeArgs& a, Format format, std::ostream& out) {
  PhaseType x(parse_list(a.p), parse_matrix(a.P));
  emit_moments(ph_moments(x, parse_moment_kind(a.kind), a.m), format, out);
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moment generating Stirling numbers and moment conversions", "msn"};
  app.require_subcommand(1);
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  detail::TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print a triangle of numbers");
  table->fallthrough();
  table->add_option("family", table_args.family, "msn1|msn2|stirling1|stirling2|r_stirling")
      ->required();
  table->add_option("--n", table_args.n, "Largest row index")->required();
  table->add_option("--k", table_args.k, "Rational parameter k (msn1, msn2)");
  table->add_option("--r", table_args.r, "r (r_stirling)");

  detail::VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check catalog identities exactly");
  verify->fallthrough();
  verify->add_option("identity", verify_args.identity, "Identity name or 'all'")->required();
  verify->add_option("--n", verify_args.n, "Largest index")->capture_default_str();
  verify->add_option("--k", verify_args.k, "Comma-separated rational k values")->capture_default_str();

  auto* moments = app.add_subcommand("moments", "Moment computations");
  moments->fallthrough();
  moments->require_subcommand(1);

  detail::ConvertArgs convert_args;
  auto* convert_cmd = moments->add_subcommand("convert", "Convert a moment vector");
  convert_cmd->fallthrough();
  convert_cmd->add_option("--from", convert_args.from, "Input kind")->required();
  convert_cmd->add_option("--to", convert_args.to, "Output kind")->required();
  convert_cmd->add_option("--values", convert_args.values, "Comma-separated moments")
      ->required();
  convert_cmd->add_option("--mean", convert_args.mean, "Mean (central input)");

  detail::PoissonArgs poisson_args;
  auto* poisson = moments->add_subcommand("poisson", "Moments of a Poisson distribution");
  poisson->fallthrough();
  poisson->add_option("--lambda", poisson_args.lambda, "Rate")->required();
  poisson->add_option("--m", poisson_args.m, "Largest order")->required();
  poisson->add_option("--kind", poisson_args.kind, "ordinary|factorial|central")->capture_default_str();

  detail::PhaseTypeArgs ph_args;
  auto* ph = moments->add_subcommand("ph", "Moments of a discrete phase-type distribution");
  ph->fallthrough();
  ph->add_option("--p", ph_args.p, "Initial vector, comma-separated")->required();
  ph->add_option("--P", ph_args.P, "Transition rows, ';'-separated")->required();
  ph->add_option("--m", ph_args.m, "Largest order")->required();
  ph->add_option("--kind", ph_args.kind, "ordinary|factorial|central")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const Format format = format_name == "csv" ? Format::csv : Format::json;
  try {
    if (*table) {
      detail::run_table(table_args, format, out);
      return kSuccess;
    }
    if (*verify) return detail::run_verify(verify_args, format, out);
    if (*convert_cmd) detail::run_convert(convert_args, format, out);
    if (*poisson) detail::run_poisson(poisson_args, format, out);
    if (*ph) detail::run_ph(ph_args, format, out);
    return kSuccess;
  } catch (const singular_matrix_error& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const arithmetic_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace msn::cli
