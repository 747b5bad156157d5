#include "cycubic/table.hpp"

#include <algorithm>
#include <sstream>

#include "cycubic/bigint.hpp"

namespace cycubic {

namespace {

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(" + rational_string(q) + ")";
}

std::string relation_for(const std::string& rho, const mpq_class& a, const mpq_class& b) {
  std::string out;
  if (a == -1) {
    out = "-";
  } else if (a != 1) {
    out = rational_text(a);
  }
  out += rho;
  if (sgn(b) > 0) out += "+" + rational_text(b);
  if (sgn(b) < 0) out += "-" + rational_text(mpq_class(-b));
  return out;
}

}  // namespace

std::string relation_text(const mpq_class& a, const mpq_class& b) {
  return "{" + relation_for("ρ", a, b) + ", " + relation_for("ρ′", a, b) + ", " + relation_for("ρ″", a, b) + "}";
}

std::vector<TableRow> table_rows(const std::vector<FieldRecord>& records) {
  std::vector<TableRow> rows;
  for (const auto& rec : records) {
    const mpq_class mu = rec.conductor.sign();
    TableRow row;
    row.n1 = rec.shanks.n1;
    row.n2 = rec.shanks.n2;
    row.shanks = rec.shanks_poly.to_string();
    row.period = (rec.matched ? rec.numeric_P : rec.predicted_P).to_string();
    row.relation = relation_text(mu * rec.shanks.n2, mu * period_shift(rec.conductor, rec.shanks));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.n2 < b.n2; });
  return rows;
}

std::vector<TableRow> compute_table(double tolerance) {
  return table_rows(match_fields(validate_conductor(kTableConductor), tolerance));
}

std::string render_table(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| (n1, n2) | f_n(X) | P(X) | {eta, eta', eta''} |\n";
  os << "|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| (" << r.n1.get_str() << ", " << r.n2.get_str() << ") | " << r.shanks << " | " << r.period << " | "
       << r.relation << " |\n";
  }
  return os.str();
}

const std::string& golden_table() {
  static const std::string golden =
      "| (n1, n2) | f_n(X) | P(X) | {eta, eta', eta''} |\n"
      "|---|---|---|---|\n"
      "| (-30, 1) | X^3 + 30X^2 + 27X - 1 | X^3 - 273X + 1729 | {ρ+10, ρ′+10, ρ″+10} |\n"
      "| (18, 5) | X^3 - (18/5)X^2 - (33/5)X - 1 | X^3 - 273X - 1547 | {5ρ-6, 5ρ′-6, 5ρ″-6} |\n"
      "| (-3, 10) | X^3 + (3/10)X^2 - (27/10)X - 1 | X^3 - 273X - 728 | {10ρ+1, 10ρ′+1, 10ρ″+1} |\n"
      "| (-18, 11) | X^3 + (18/11)X^2 - (15/11)X - 1 | X^3 - 273X + 91 | {11ρ+6, 11ρ′+6, 11ρ″+6} |\n";
  return golden;
}

std::vector<std::string> diff_lines(const std::string& expected, const std::string& actual) {
  std::vector<std::string> e, a, out;
  std::istringstream se(expected), sa(actual);
  for (std::string line; std::getline(se, line);) e.push_back(line);
  for (std::string line; std::getline(sa, line);) a.push_back(line);
  const std::size_t n = std::max(e.size(), a.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string* x = i < e.size() ? &e[i] : nullptr;
    const std::string* y = i < a.size() ? &a[i] : nullptr;
    if (x && y && *x == *y) continue;
    if (x) out.push_back("line " + std::to_string(i + 1) + " - " + *x);
    if (y) out.push_back("line " + std::to_string(i + 1) + " + " + *y);
  }
  return out;
}

}  // namespace cycubic
