#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycubic/arith.hpp"
#include "cycubic/error.hpp"
#include "cycubic/periods.hpp"
#include "cycubic/report.hpp"
#include "cycubic/table.hpp"
#include "cycubic/verify.hpp"

namespace cycubic::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::uint64_t conductor = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::string kind;
  double tolerance = kDefaultTolerance;
  std::string format = "json";
  std::string out_path;
  std::string golden_path;
  unsigned threads = 0;
};

class Diagnostics {
 public:
  explicit Diagnostics(std::ostream& err) : err_(err) {
    color_ = &err == &std::cerr && std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO);
  }

  void error(const std::string& msg) { line("error", "\033[31m", msg); }
  void fail(const std::string& msg) { line("FAIL", "\033[33m", msg); }
  void note(const std::string& msg) { err_ << msg << '\n'; }

 private:
  void line(const char* tag, const char* color, const std::string& msg) {
    if (color_) {
      err_ << color << tag << "\033[0m: " << msg << '\n';
    } else {
      err_ << tag << ": " << msg << '\n';
    }
  }

  std::ostream& err_;
  bool color_ = false;
};

// Writes to --out when given, else to `out`.
bool write_report(const Options& opt, const std::string& text, std::ostream& out, Diagnostics& diag) {
  if (opt.out_path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file || !(file << text)) {
    diag.error("cannot write " + opt.out_path);
    return false;
  }
  return true;
}

std::optional<Conductor> conductor_arg(const Options& opt, Diagnostics& diag) {
  std::string reason;
  auto f = try_validate_conductor(opt.conductor, &reason);
  if (!f) diag.error("InvalidConductor: " + reason);
  return f;
}

int cmd_enumerate(const Options& opt, ReportFormat format, std::ostream& out, Diagnostics& diag) {
  const auto f = conductor_arg(opt, diag);
  if (!f) return kInvalidInput;
  const ConductorRow row = to_row(*f, enumerate_fields(*f));
  return write_report(opt, emit(row, format), out, diag) ? kPass : kInvalidInput;
}

int cmd_verify(const Options& opt, ReportFormat format, std::ostream& out, Diagnostics& diag) {
  const auto f = conductor_arg(opt, diag);
  if (!f) return kInvalidInput;
  const ConductorReport report = verify_conductor(*f, opt.tolerance);
  if (!write_report(opt, emit(to_row(report), format), out, diag)) return kInvalidInput;
  if (!report.all_pass()) {
    diag.fail(report.first_failure());
    return kVerificationFailure;
  }
  return kPass;
}

int cmd_scan(const Options& opt, ReportFormat format, std::ostream& out, Diagnostics& diag) {
  if (opt.min > opt.max) {
    diag.error("empty range: --min " + std::to_string(opt.min) + " > --max " + std::to_string(opt.max));
    return kInvalidInput;
  }
  std::optional<Ramification> kind;
  if (!opt.kind.empty()) kind = parse_ramification(opt.kind);
  const auto conductors = conductors_in_range(opt.min, opt.max, kind);
  const auto reports = verify_conductors(conductors, opt.tolerance, opt.threads);

  std::size_t total_fields = 0, failed = 0;
  double worst = 0.0;
  std::string first_failure;
  for (const auto& r : reports) {
    total_fields += r.fields.size();
    worst = std::max(worst, r.max_residual());
    if (!r.all_pass()) {
      ++failed;
      if (first_failure.empty()) first_failure = r.first_failure();
    }
  }

  std::string text;
  if (format == ReportFormat::Json) {
    json j;
    j["min"] = opt.min;
    j["max"] = opt.max;
    j["kind"] = opt.kind.empty() ? json(nullptr) : json(opt.kind);
    j["conductors"] = reports.size();
    j["fields"] = total_fields;
    j["failed"] = failed;
    j["all_pass"] = failed == 0;
    j["max_residual"] = worst;
    if (!first_failure.empty()) j["first_failure"] = first_failure;
    j["results"] = json::array();
    for (const auto& r : reports) {
      j["results"].push_back({{"conductor", r.conductor.value},
                              {"kind", std::string(to_string(r.conductor.kind))},
                              {"fields", r.fields.size()},
                              {"all_pass", r.all_pass()},
                              {"residual", r.max_residual()}});
    }
    text = j.dump(2) + "\n";
  } else if (format == ReportFormat::Csv) {
    std::vector<ConductorRow> rows;
    for (const auto& r : reports) rows.push_back(to_row(r));
    text = emit_csv(rows);
  } else {
    std::ostringstream os;
    os << "## Scan " << opt.min << ".." << opt.max;
    if (!opt.kind.empty()) os << " (" << opt.kind << ")";
    os << "\n\n| conductor | kind | fields | pass | residual |\n|---|---|---|---|---|\n";
    for (const auto& r : reports) {
      os << "| " << r.conductor.value << " | " << to_string(r.conductor.kind) << " | " << r.fields.size() << " | "
         << (r.all_pass() ? "yes" : "no") << " | " << json(r.max_residual()).dump() << " |\n";
    }
    os << "\nconductors: " << reports.size() << ", fields: " << total_fields << ", failed: " << failed
       << ", max residual: " << json(worst).dump() << "\n";
    text = os.str();
  }
  if (!write_report(opt, text, out, diag)) return kInvalidInput;
  if (failed > 0) {
    diag.fail(first_failure);
    return kVerificationFailure;
  }
  return kPass;
}

int cmd_table(const Options& opt, ReportFormat format, std::ostream& out, Diagnostics& diag) {
  std::string golden = golden_table();
  if (!opt.golden_path.empty()) {
    std::ifstream file(opt.golden_path, std::ios::binary);
    if (!file) {
      diag.error("cannot read " + opt.golden_path);
      return kInvalidInput;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    golden = buf.str();
  }

  std::vector<TableRow> rows;
  try {
    rows = compute_table(opt.tolerance);
  } catch (const Error& e) {
    diag.fail(e.what());
    return kVerificationFailure;
  }
  const std::string rendered = render_table(rows);

  std::string text;
  if (format == ReportFormat::Json) {
    json j;
    j["conductor"] = kTableConductor;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"n1", r.n1.get_si()},
                           {"n2", r.n2.get_si()},
                           {"shanks", r.shanks},
                           {"period_poly", r.period},
                           {"relation", r.relation}});
    }
    text = j.dump(2) + "\n";
  } else if (format == ReportFormat::Csv) {
    std::ostringstream os;
    os << "n1,n2,shanks,period_poly,relation\n";
    for (const auto& r : rows) {
      os << r.n1.get_str() << ',' << r.n2.get_str() << ',' << r.shanks << ',' << r.period << ",\"" << r.relation
         << "\"\n";
    }
    text = os.str();
  } else {
    text = rendered;
  }
  if (!write_report(opt, text, out, diag)) return kInvalidInput;

  const auto diff = diff_lines(golden, rendered);
  if (!diff.empty()) {
    diag.fail("table differs from the golden fixture");
    for (const auto& line : diff) diag.note("  " + line);
    return kVerificationFailure;
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Diagnostics diag(err);
  Options opt;
  CLI::App app{"Cyclic cubic fields: representations, Shanks cubics and Gaussian periods", "cycubic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  const auto positive = CLI::PositiveNumber;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--out", opt.out_path, "Write the report to this file");
  };
  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", opt.tolerance, "Numeric tolerance (default 1e-6)")->check(positive);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List representations, Shanks cubics and period polynomials");
  enumerate->add_option("--conductor", opt.conductor, "Conductor f")->required();
  add_format(enumerate);

  auto* verify = app.add_subcommand("verify", "Run every check for one conductor");
  verify->add_option("--conductor", opt.conductor, "Conductor f")->required();
  add_tolerance(verify);
  add_format(verify);

  auto* scan = app.add_subcommand("scan", "Verify every conductor in a range");
  scan->add_option("--min", opt.min, "Smallest conductor")->required()->check(positive);
  scan->add_option("--max", opt.max, "Largest conductor")->required()->check(positive);
  scan->add_option("--kind", opt.kind, "Restrict to tame or wild conductors")->check(CLI::IsMember({"tame", "wild"}));
  scan->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  add_tolerance(scan);
  add_format(scan);

  auto* table = app.add_subcommand("table", "Reproduce the conductor-819 table and diff it against the fixture");
  table->add_option("--golden", opt.golden_path, "Compare against this file instead of the built-in fixture");
  add_tolerance(table);
  add_format(table);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    diag.error(e.what());
    return kInvalidInput;
  }

  const ReportFormat format = parse_format(opt.format).value_or(ReportFormat::Json);
  try {
    if (*enumerate) return cmd_enumerate(opt, format, out, diag);
    if (*verify) return cmd_verify(opt, format, out, diag);
    if (*scan) return cmd_scan(opt, format, out, diag);
    if (*table) return cmd_table(opt, format, out, diag);
  } catch (const Error& e) {
    diag.fail(e.what());
    return kVerificationFailure;
  } catch (const std::exception& e) {
    diag.error(e.what());
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace cycubic::cli
