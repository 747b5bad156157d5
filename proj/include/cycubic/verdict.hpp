#pragma once

#include <string>

namespace cycubic {

// Outcome of one named check. `residual` is 0 for exact checks that pass.
struct Verdict {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;

  static Verdict pass(std::string name, double residual = 0.0, std::string detail = {}) {
    return {std::move(name), true, residual, std::move(detail)};
  }
  static Verdict fail(std::string name, std::string detail, double residual = 0.0) {
    return {std::move(name), false, residual, std::move(detail)};
  }
};

}  // namespace cycubic
