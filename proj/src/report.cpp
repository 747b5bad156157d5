#include "cycubic/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cycubic/bigint.hpp"
#include "cycubic/cubicpoly.hpp"

namespace cycubic {

using json = nlohmann::ordered_json;

namespace {

// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
json int_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

mpz_class int_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_unsigned()) return to_mpz(j.get<std::uint64_t>());
  if (j.is_number_integer()) return to_mpz(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

std::string cubic_text(const std::array<mpq_class, 4>& c) {
  return RationalCubic(c[0], c[1], c[2], c[3]).to_string();
}

std::string cubic_text(const std::array<mpz_class, 4>& c) {
  return RationalCubic(c[0], c[1], c[2], c[3]).to_string();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string number_text(double v) { return json(v).dump(); }

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view text) noexcept {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "md" || text == "markdown") return ReportFormat::Markdown;
  return std::nullopt;
}

FieldRow to_row(const FieldRecord& rec) {
  FieldRow row;
  row.M = rec.representation.M;
  row.N = rec.representation.N;
  row.n1 = rec.shanks.n1;
  row.n2 = rec.shanks.n2;
  const RationalCubic& P = rec.matched ? rec.numeric_P : rec.predicted_P;
  for (int k = 0; k < 4; ++k) {
    row.shanks[static_cast<std::size_t>(3 - k)] = rec.shanks_poly.coeff(k);
    row.period_poly[static_cast<std::size_t>(3 - k)] = P.coeff(k).get_num();
  }
  if (rec.matched) {
    row.periods = rec.periods.eta;
    for (const auto& [name, v] : rec.verdicts) row.verdicts[name] = v.passed;
    row.residual = rec.max_residual();
  }
  return row;
}

ConductorRow to_row(const ConductorReport& report) {
  ConductorRow row;
  row.conductor = report.conductor.value;
  row.kind = report.conductor.kind;
  row.nu = static_cast<int>(report.conductor.nu());
  row.all_pass = report.all_pass();
  row.notes = report.notes;
  if (report.failure) row.error = std::string(to_string(report.failure->kind)) + ": " + report.failure->message;
  for (const auto& rec : report.fields) row.fields.push_back(to_row(rec));
  return row;
}

ConductorRow to_row(const Conductor& f, const std::vector<FieldRecord>& records) {
  ConductorRow row;
  row.conductor = f.value;
  row.kind = f.kind;
  row.nu = static_cast<int>(f.nu());
  if (f.nu() == 0) row.notes.push_back("nu = 0: mu(f/9) = mu(1) = 1 and the product over p_i is empty");
  for (const auto& rec : records) row.fields.push_back(to_row(rec));
  return row;
}

std::string emit_json(const ConductorRow& row) {
  json j;
  j["conductor"] = row.conductor;
  j["kind"] = std::string(to_string(row.kind));
  j["nu"] = row.nu;
  if (row.all_pass) j["all_pass"] = *row.all_pass;
  j["notes"] = row.notes;
  if (row.error) j["error"] = *row.error;
  j["fields"] = json::array();
  for (const auto& f : row.fields) {
    json jf;
    jf["M"] = int_json(f.M);
    jf["N"] = int_json(f.N);
    jf["n1"] = int_json(f.n1);
    jf["n2"] = int_json(f.n2);
    jf["shanks"] = json::array();
    for (const auto& c : f.shanks) jf["shanks"].push_back(rational_string(c));
    jf["period_poly"] = json::array();
    for (const auto& c : f.period_poly) jf["period_poly"].push_back(int_json(c));
    if (f.periods) jf["periods"] = *f.periods;
    if (f.residual) {
      jf["verdicts"] = json::object();
      for (const auto& [name, ok] : f.verdicts) jf["verdicts"][name] = ok;
      jf["residual"] = *f.residual;
    }
    j["fields"].push_back(std::move(jf));
  }
  return j.dump(2) + "\n";
}

ConductorRow parse_json(std::string_view text) {
  const json j = json::parse(text);
  ConductorRow row;
  row.conductor = j.at("conductor").get<std::uint64_t>();
  const auto kind = parse_ramification(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("bad kind in report");
  row.kind = *kind;
  row.nu = j.at("nu").get<int>();
  if (j.contains("all_pass")) row.all_pass = j["all_pass"].get<bool>();
  row.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("error")) row.error = j["error"].get<std::string>();
  for (const auto& jf : j.at("fields")) {
    FieldRow f;
    f.M = int_from_json(jf.at("M"));
    f.N = int_from_json(jf.at("N"));
    f.n1 = int_from_json(jf.at("n1"));
    f.n2 = int_from_json(jf.at("n2"));
    for (std::size_t k = 0; k < 4; ++k) {
      f.shanks[k] = parse_rational(jf.at("shanks").at(k).get<std::string>());
      f.period_poly[k] = int_from_json(jf.at("period_poly").at(k));
    }
    if (jf.contains("periods")) f.periods = jf["periods"].get<std::array<double, 3>>();
    if (jf.contains("verdicts")) f.verdicts = jf["verdicts"].get<std::map<std::string, bool>>();
    if (jf.contains("residual")) f.residual = jf["residual"].get<double>();
    row.fields.push_back(std::move(f));
  }
  return row;
}

std::string emit_csv(const std::vector<ConductorRow>& rows) {
  std::ostringstream os;
  os << "conductor,kind,M,N,n1,n2,shanks,period_poly,eta0,eta1,eta2,all_pass,residual\n";
  for (const auto& row : rows) {
    for (const auto& f : row.fields) {
      os << row.conductor << ',' << to_string(row.kind) << ',' << f.M.get_str() << ',' << f.N.get_str() << ','
         << f.n1.get_str() << ',' << f.n2.get_str() << ',' << csv_escape(cubic_text(f.shanks)) << ','
         << csv_escape(cubic_text(f.period_poly));
      for (std::size_t i = 0; i < 3; ++i) os << ',' << (f.periods ? number_text((*f.periods)[i]) : "");
      bool pass = true;
      for (const auto& [name, ok] : f.verdicts) pass = pass && ok;
      os << ',' << (f.residual ? (pass ? "true" : "false") : "") << ','
         << (f.residual ? number_text(*f.residual) : "") << '\n';
    }
    if (row.error) {
      os << row.conductor << ',' << to_string(row.kind) << ",,,,,,,,,,false," << csv_escape(*row.error) << '\n';
    }
  }
  return os.str();
}

std::string emit_markdown(const ConductorRow& row) {
  std::ostringstream os;
  os << "## Conductor " << row.conductor << " (" << to_string(row.kind) << ", nu = " << row.nu << ")\n\n";
  for (const auto& note : row.notes) os << "- " << note << "\n";
  if (row.error) os << "- error: " << *row.error << "\n";
  if (!row.notes.empty() || row.error) os << "\n";
  const bool verified = !row.fields.empty() && row.fields.front().residual.has_value();
  os << "| M | N | (n1, n2) | f_n(X) | P(X) |";
  if (verified) os << " periods | pass | residual |";
  os << "\n|---|---|---|---|---|";
  if (verified) os << "---|---|---|";
  os << "\n";
  for (const auto& f : row.fields) {
    os << "| " << f.M.get_str() << " | " << f.N.get_str() << " | (" << f.n1.get_str() << ", " << f.n2.get_str()
       << ") | " << cubic_text(f.shanks) << " | " << cubic_text(f.period_poly) << " |";
    if (verified) {
      bool pass = true;
      for (const auto& [name, ok] : f.verdicts) pass = pass && ok;
      os << ' ';
      if (f.periods) {
        os << number_text((*f.periods)[0]) << ", " << number_text((*f.periods)[1]) << ", "
           << number_text((*f.periods)[2]);
      }
      os << " | " << (pass ? "yes" : "no") << " | " << number_text(f.residual.value_or(0.0)) << " |";
    }
    os << "\n";
  }
  if (row.all_pass) os << "\nall pass: " << (*row.all_pass ? "yes" : "no") << "\n";
  return os.str();
}

std::string emit(const ConductorRow& row, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return emit_json(row);
    case ReportFormat::Csv: return emit_csv({row});
    case ReportFormat::Markdown: return emit_markdown(row);
  }
  return {};
}

}  // namespace cycubic
