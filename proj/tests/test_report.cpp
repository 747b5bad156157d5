#include <doctest.h>

#include "cycubic/report.hpp"
#include "cycubic/table.hpp"
#include "cycubic/verify.hpp"

using namespace cycubic;

TEST_CASE("format names") {
  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK(parse_format("csv") == ReportFormat::Csv);
  CHECK(parse_format("md") == ReportFormat::Markdown);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("JSON round trip of verification reports") {
  for (std::uint64_t f : {7ULL, 9ULL, 63ULL, 819ULL, 1729ULL}) {
    CAPTURE(f);
    const ConductorRow row = to_row(verify_conductor(validate_conductor(f)));
    CHECK(row.all_pass == true);
    const std::string text = emit_json(row);
    CHECK(parse_json(text) == row);
    CHECK(emit_json(parse_json(text)) == text);
  }
}

TEST_CASE("JSON round trip of enumeration output") {
  const Conductor c = validate_conductor(63);
  const ConductorRow row = to_row(c, enumerate_fields(c));
  CHECK_FALSE(row.all_pass.has_value());
  CHECK_FALSE(row.fields[0].periods.has_value());
  CHECK(parse_json(emit_json(row)) == row);
}

TEST_CASE("schema details") {
  const ConductorRow row = to_row(verify_conductor(validate_conductor(819)));
  const std::string text = emit_json(row);
  CHECK(text.find("\"kind\": \"wild\"") != std::string::npos);
  CHECK(text.find("\"-18/5\"") != std::string::npos);
  CHECK(text.find("\"-33/5\"") != std::string::npos);
  CHECK(text.find("\"main_identity\": true") != std::string::npos);
  REQUIRE(row.fields.size() == 4);
  CHECK(row.fields[0].period_poly == std::array<mpz_class, 4>{1, 0, -273, -1547});
}

TEST_CASE("determinism") {
  const Conductor c = validate_conductor(819);
  for (ReportFormat fmt : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Markdown}) {
    CHECK(emit(to_row(verify_conductor(c)), fmt) == emit(to_row(verify_conductor(c)), fmt));
  }
  const auto one = verify_conductors(conductors_up_to(500), kDefaultTolerance, 1);
  const auto many = verify_conductors(conductors_up_to(500), kDefaultTolerance, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(emit_json(to_row(one[i])) == emit_json(to_row(many[i])));
}

TEST_CASE("csv and markdown") {
  const ConductorRow row = to_row(verify_conductor(validate_conductor(819)));
  const std::string csv = emit_csv({row});
  CHECK(csv.rfind("conductor,kind,M,N,n1,n2,", 0) == 0);
  CHECK(csv.find("819,wild,51,5,18,5,X^3 - (18/5)X^2 - (33/5)X - 1,X^3 - 273X - 1547,") != std::string::npos);
  const std::string md = emit_markdown(row);
  CHECK(md.find("| 51 | 5 | (18, 5) | X^3 - (18/5)X^2 - (33/5)X - 1 | X^3 - 273X - 1547 |") != std::string::npos);
  CHECK(md.find("all pass: yes") != std::string::npos);
}

TEST_CASE("failure reports") {
  const ConductorReport r = verify_conductor(validate_conductor(819), 1e-30);
  CHECK_FALSE(r.all_pass());
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->kind == ErrorKind::RoundingFailure);
  CHECK(r.first_failure().find("RoundingFailure") != std::string::npos);
  const ConductorRow row = to_row(r);
  CHECK(row.all_pass == false);
  CHECK(parse_json(emit_json(row)) == row);
}

TEST_CASE("table helpers") {
  CHECK(relation_text(1, 10) == "{ρ+10, ρ′+10, ρ″+10}");
  CHECK(relation_text(5, -6) == "{5ρ-6, 5ρ′-6, 5ρ″-6}");
  CHECK(relation_text(-1, mpq_class(1, 3)) == "{-ρ+(1/3), -ρ′+(1/3), -ρ″+(1/3)}");
  CHECK(render_table(compute_table()) == golden_table());
  CHECK(diff_lines("a\nb\n", "a\nb\n").empty());
  CHECK(diff_lines("a\nb\n", "a\nc\n").size() == 2);
}
