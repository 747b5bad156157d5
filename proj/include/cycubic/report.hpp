#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycubic/arith.hpp"
#include "cycubic/verify.hpp"

namespace cycubic {

enum class ReportFormat { Json, Csv, Markdown };

std::optional<ReportFormat> parse_format(std::string_view text) noexcept;

/// Serializable view of a FieldRecord.
struct FieldRow {
  mpz_class M, N, n1, n2;
  std::array<mpq_class, 4> shanks;       // X^3, X^2, X, 1
  std::array<mpz_class, 4> period_poly;  // X^3, X^2, X, 1
  std::optional<std::array<double, 3>> periods;
  std::map<std::string, bool> verdicts;
  std::optional<double> residual;

  friend bool operator==(const FieldRow&, const FieldRow&) = default;
};

struct ConductorRow {
  std::uint64_t conductor = 0;
  Ramification kind = Ramification::Tame;
  int nu = 0;
  std::optional<bool> all_pass;
  std::vector<std::string> notes;
  std::optional<std::string> error;
  std::vector<FieldRow> fields;

  friend bool operator==(const ConductorRow&, const ConductorRow&) = default;
};

FieldRow to_row(const FieldRecord& rec);
/// Verification report (all_pass and residuals set).
ConductorRow to_row(const ConductorReport& report);
/// Enumeration only (closed-form data, no verdicts).
ConductorRow to_row(const Conductor& f, const std::vector<FieldRecord>& records);

std::string emit_json(const ConductorRow& row);
ConductorRow parse_json(std::string_view text);

std::string emit_csv(const std::vector<ConductorRow>& rows);
std::string emit_markdown(const ConductorRow& row);

std::string emit(const ConductorRow& row, ReportFormat format);

}  // namespace cycubic
