#include "trigsum/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigsum/closed_forms.hpp"
#include "trigsum/cotangent.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/genfunc.hpp"
#include "trigsum/transcribed.hpp"
#include "trigsum/verify.hpp"
#include "trigsum/walks.hpp"

namespace trigsum::cli {
namespace {

using nlohmann::ordered_json;

// Thrown for parameter combinations CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, else to the command's stdout.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
  file << text;
}

ordered_json rational_json(const Rational& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

TrigKind parse_kind(const std::string& text) {
  auto kind = kind_from_name(text);
  if (!kind) throw UsageError("unknown kind '" + text + "' (expected cos or sin)");
  return *kind;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string family;
  std::string kind = "cos";
  std::uint32_t m = 0;
  std::uint32_t n = 1;
  std::uint32_t q = 1;
  std::uint32_t k = 2;
  std::optional<unsigned> digits;
  bool json = false;
  std::string out;
};

struct Evaluated {
  Rational value;
  ordered_json params;
};

Evaluated evaluate_family(const EvalArgs& a) {
  if (a.family == "cot") {
    if (a.n < 1 || a.k < 2) throw DomainError("cot: requires n >= 1 and k >= 2");
    return {cot_power_sum(a.n, a.k), {{"n", a.n}, {"k", a.k}}};
  }
  if (a.family == "byrne-smith") {
    if (a.n < 1 || a.k < 1) throw DomainError("byrne-smith: requires n >= 1 and k >= 1");
    return {byrne_smith_sum(a.n, a.k), {{"n", a.n}, {"k", a.k}}};
  }
  if (a.family == "walks-path") return {Rational(path_closed_walks(a.n, a.m)), {{"m", a.m}, {"n", a.n}}};
  if (a.family == "walks-cycle") return {Rational(cycle_closed_walks(a.n, a.m)), {{"m", a.m}, {"n", a.n}}};
  if (a.family == "sigma") return {sigma(a.k, a.n), {{"k", a.k}, {"n", a.n}}};
  if (a.family == "sigma-minus") return {sigma_minus(a.k, a.n), {{"k", a.k}, {"n", a.n}}};
  if (a.family == "barbero-naive") {
    return {transcribed::barbero_single_branch(a.m, a.n), {{"m", a.m}, {"n", a.n}}};
  }
  const auto family = family_from_name(a.family);
  if (!family) throw UsageError("unknown family '" + a.family + "'");
  const SumSpec spec{*family, parse_kind(a.kind), a.m, a.n, a.q};
  ordered_json params;
  if (family_uses_kind(spec.family)) params["kind"] = kind_name(spec.kind);
  params["m"] = spec.m;
  params["n"] = spec.n;
  if (family_uses_q(spec.family)) params["q"] = spec.q;
  return {evaluate(spec), params};
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Evaluated e = evaluate_family(a);
  std::string text;
  if (a.json) {
    ordered_json doc{{"family", a.family}, {"params", e.params}, {"value", rational_json(e.value)}};
    if (a.digits) doc["decimal"] = to_decimal(e.value, *a.digits);
    text = doc.dump() + "\n";
  } else {
    text = to_string(e.value) + "\n";
    if (a.digits) text += to_decimal(e.value, *a.digits) + "\n";
  }
  emit(text, a.out, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  verify::CampaignOptions campaign;
  bool json = false;
  bool verbose = false;
  std::string out;
};

std::string report_text(const verify::VerificationReport& report, bool verbose) {
  std::ostringstream s;
  for (const auto& c : report.cases) {
    if (!verbose && c.match) continue;
    s << (c.match ? "ok       " : "MISMATCH ") << c.label() << "  closed=" << c.closed_form
      << "  oracle=" << c.oracle << "\n";
  }
  for (const auto& e : report.errata) {
    s << "erratum " << e.name << ": " << (e.reproduced ? "reproduced" : "NOT reproduced") << "  "
      << e.detail << "\n";
  }
  s << "cases: " << report.total() << ", mismatches: " << report.mismatches() << "\n";
  return s.str();
}

std::string report_json(const verify::VerificationReport& report) {
  ordered_json cases = ordered_json::array();
  for (const auto& c : report.cases) {
    ordered_json params = ordered_json::object();
    if (!c.kind.empty()) params["kind"] = c.kind;
    for (const auto& [key, value] : c.params) params[key] = value;
    cases.push_back({{"spec", {{"family", c.family}, {"params", params}}},
                     {"closed_form", c.closed_form},
                     {"oracle", c.oracle},
                     {"match", c.match},
                     {"micros_closed", c.micros_closed},
                     {"micros_oracle", c.micros_oracle}});
  }
  ordered_json doc{{"cases", cases},
                   {"summary", {{"total", report.total()}, {"mismatches", report.mismatches()}}}};
  if (!report.errata.empty()) {
    ordered_json errata = ordered_json::array();
    for (const auto& e : report.errata) {
      errata.push_back({{"name", e.name}, {"reproduced", e.reproduced}, {"detail", e.detail}});
    }
    doc["errata"] = errata;
  }
  return doc.dump(2) + "\n";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto report = verify::run_campaign(a.campaign);
  emit(a.json ? report_json(report) : report_text(report, a.verbose), a.out, out);
  return report.mismatches() == 0 && report.errata_reproduced() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::string kind;
  std::uint32_t n = 1;
  std::uint32_t k_max = 10;
  std::uint32_t m_max = 10;
  std::string format = "csv";
  std::string out;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

Table build_table(const TableArgs& a) {
  Table t;
  if (a.kind == "sigma" || a.kind == "sigma-minus") {
    if (a.n < 1) throw DomainError("sigma: n must be >= 1");
    t.columns = {"k", "n", "value"};
    for (std::uint32_t k = 0; k <= a.k_max; ++k) {
      const Rational v = a.kind == "sigma" ? sigma(k, a.n) : sigma_minus(k, a.n);
      t.rows.push_back({std::to_string(k), std::to_string(a.n), to_string(v)});
    }
  } else if (a.kind == "walks-path" || a.kind == "walks-cycle") {
    const bool path = a.kind == "walks-path";
    t.columns = {"m", "length", "walks"};
    for (std::uint32_t m = 1; m <= a.m_max; ++m) {
      const Integer w = path ? path_closed_walks(a.n, m) : cycle_closed_walks(a.n, m);
      t.rows.push_back({std::to_string(m), std::to_string(2 * m), w.get_str()});
    }
  } else if (a.kind == "cot-poly") {
    if (a.n < 1) throw DomainError("cot-poly: n must be >= 1");
    const CotPolynomial poly = cot_sum_polynomial(a.n);
    t.columns = {"power", "coefficient"};
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
      t.rows.push_back({std::to_string(j), to_string(poly.coefficients[j])});
    }
  } else {
    throw UsageError("unknown table kind '" + a.kind + "'");
  }
  return t;
}

std::string render_table(const Table& t, const std::string& format) {
  std::ostringstream s;
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) s << (i ? "," : "") << t.columns[i];
    s << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << row[i];
      s << "\n";
    }
  } else if (format == "json") {
    ordered_json records = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json r;
      for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
      records.push_back(r);
    }
    s << records.dump(2) << "\n";
  } else {
    // b-file: "index value", first and last column
    for (const auto& row : t.rows) s << row.front() << " " << row.back() << "\n";
  }
  return s.str();
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  verify::BenchOptions options;
  std::string kind = "cos";
  bool json = false;
};

int cmd_bench(BenchArgs a, std::ostream& out) {
  a.options.kind = parse_kind(a.kind);
  const auto r = verify::run_bench(a.options);
  if (a.json) {
    ordered_json doc{{"label", r.label},
                     {"closed_form", r.closed_form},
                     {"micros_closed", r.micros_closed}};
    if (r.oracle) {
      doc["oracle"] = *r.oracle;
      doc["micros_oracle"] = *r.micros_oracle;
      doc["values_equal"] = r.values_equal();
    }
    out << doc.dump(2) << "\n";
  } else {
    out << r.label << "\n";
    out << "closed form: " << r.micros_closed << " us\n";
    if (r.oracle) {
      const double ratio = static_cast<double>(*r.micros_oracle) /
                           static_cast<double>(std::max<std::int64_t>(r.micros_closed, 1));
      out << "oracle:      " << *r.micros_oracle << " us (" << std::fixed << std::setprecision(1)
          << ratio << "x)\n";
      out << "values equal: " << (r.values_equal() ? "yes" : "NO") << "\n";
    }
  }
  return r.values_equal() ? kExitOk : kExitMismatch;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("TRIGSUM_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs > 0) return static_cast<unsigned>(jobs);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact trigonometric power sums with differential verification", "trigsum"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one sum exactly");
  eval_cmd->add_option("--family", eval.family, "Sum family")->required();
  eval_cmd->add_option("--kind", eval.kind, "cos or sin, for families with both");
  eval_cmd->add_option("--m", eval.m, "Half-power m (p for the Merca sums)");
  eval_cmd->add_option("--n", eval.n, "Angle denominator n");
  eval_cmd->add_option("--q", eval.q, "Multiplier q (scaled, coprime, gcd)");
  eval_cmd->add_option("--k", eval.k, "k for cot, byrne-smith and sigma");
  eval_cmd->add_option("--digits", eval.digits, "Also print a decimal with D places");
  eval_cmd->add_flag("--json", eval.json, "Machine-readable output");
  eval_cmd->add_option("--out", eval.out, "Write output to FILE");

  VerifyArgs ver;
  ver.campaign.jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against the oracle");
  verify_cmd->add_option("--family", ver.campaign.families, "Comma-separated families")
      ->delimiter(',');
  verify_cmd->add_option("--m-min", ver.campaign.m_min);
  verify_cmd->add_option("--m-max", ver.campaign.m_max);
  verify_cmd->add_option("--n-min", ver.campaign.n_min);
  verify_cmd->add_option("--n-max", ver.campaign.n_max);
  verify_cmd->add_option("--k-max", ver.campaign.k_max, "Largest k for cot and byrne-smith");
  verify_cmd->add_option("--jobs", ver.campaign.jobs, "Worker threads (default TRIGSUM_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--expect-known-errata", ver.campaign.expect_known_errata,
                       "Also reproduce the documented misprints");
  verify_cmd->add_flag("--json", ver.json);
  verify_cmd->add_flag("--verbose", ver.verbose, "List matching cases too");
  verify_cmd->add_option("--out", ver.out, "Write the report to FILE");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Emit coefficient and walk tables");
  table_cmd->add_option("--kind", table.kind, "sigma, sigma-minus, walks-path, walks-cycle, cot-poly")
      ->required();
  table_cmd->add_option("--n", table.n);
  table_cmd->add_option("--k-max", table.k_max);
  table_cmd->add_option("--m-max", table.m_max);
  table_cmd->add_option("--format", table.format)
      ->check(CLI::IsMember({"csv", "json", "bfile"}));
  table_cmd->add_option("--out", table.out, "Write the table to FILE");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time closed form (and oracle)");
  bench_cmd->add_option("--family", bench.options.family);
  bench_cmd->add_option("--kind", bench.kind);
  bench_cmd->add_option("--m", bench.options.m);
  bench_cmd->add_option("--n", bench.options.n);
  bench_cmd->add_option("--q", bench.options.q);
  bench_cmd->add_option("--k", bench.options.k);
  bench_cmd->add_flag("--with-oracle", bench.options.with_oracle);
  bench_cmd->add_option("--repeat", bench.options.repeat)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--json", bench.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*verify_cmd) return cmd_verify(ver, out);
    if (*table_cmd) {
      emit(render_table(build_table(table), table.format), table.out, out);
      return kExitOk;
    }
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // Anything else escaping a command is a failed check, not a usage error.
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace trigsum::cli
