#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cycubic/periods.hpp"
#include "cycubic/report.hpp"

namespace cycubic {

inline constexpr std::uint64_t kTableConductor = 819;  // 9 * 7 * 13

struct TableRow {
  mpz_class n1, n2;
  std::string shanks;    // f_n(X)
  std::string period;    // P(X)
  std::string relation;  // {a rho + b, a rho' + b, a rho'' + b}

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// "a rho + b" with the conventions of the table: coefficient 1 dropped, b signed.
std::string relation_text(const mpq_class& a, const mpq_class& b);

/// Rows for the conductor-819 fields, ordered by n2.
std::vector<TableRow> table_rows(const std::vector<FieldRecord>& records);
std::vector<TableRow> compute_table(double tolerance = kDefaultTolerance);

/// Canonical text rendering (a markdown table); the golden fixture uses this form.
std::string render_table(const std::vector<TableRow>& rows);
const std::string& golden_table();

/// Line-by-line differences, empty when identical.
std::vector<std::string> diff_lines(const std::string& expected, const std::string& actual);

}  // namespace cycubic
