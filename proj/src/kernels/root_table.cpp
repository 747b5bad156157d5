#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cycubic/kernels.hpp"

namespace cycubic::kernels {

RootTable RootTable::build(std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("RootTable: modulus must be positive");
  RootTable t;
  t.modulus = modulus;
  t.cos.resize(modulus);
  t.sin.resize(modulus);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (std::uint64_t a = 0; a < modulus; ++a) {
    const std::uint64_t mirror = modulus - a;
    const bool reflect = a != 0 && mirror < a;
    const std::uint64_t k = reflect ? mirror : a;
    const long double angle = two_pi * static_cast<long double>(k) / static_cast<long double>(modulus);
    t.cos[a] = static_cast<double>(std::cos(angle));
    const double s = static_cast<double>(std::sin(angle));
    t.sin[a] = reflect ? -s : s;
  }
  return t;
}

}  // namespace cycubic::kernels
