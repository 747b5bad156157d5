#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycubic/error.hpp"
#include "cycubic/periods.hpp"

namespace cycubic {

struct PipelineFailure {
  ErrorKind kind;
  std::string message;
};

/// Everything checked for one conductor. `failure` is set when the pipeline stopped early
/// (count, matching, rounding, ...); otherwise every field carries its verdicts.
struct ConductorReport {
  Conductor conductor;
  std::vector<FieldRecord> fields;
  std::vector<std::string> notes;
  std::optional<PipelineFailure> failure;

  bool all_pass() const;
  double max_residual() const;
  /// "conductor 819: <first failing verdict or error>", empty if all pass.
  std::string first_failure() const;
};

/// match_fields plus the sign congruences, generator and unit-action checks (wild) and the
/// cross-check of the character built from the representation against the matched kernel.
ConductorReport verify_conductor(const Conductor& f, double tolerance = kDefaultTolerance);

/// verify_conductor over a list, on up to `threads` worker threads (0 = hardware concurrency).
/// The result is in input order.
std::vector<ConductorReport> verify_conductors(const std::vector<Conductor>& conductors,
                                               double tolerance = kDefaultTolerance, unsigned threads = 0);

Verdict verify_character_kernel(const FieldRecord& rec, double tolerance = kDefaultTolerance);

}  // namespace cycubic
