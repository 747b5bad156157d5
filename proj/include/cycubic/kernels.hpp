#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference implementation and,
// where the target supports it, a SIMD variant; `coset_sums` dispatches at runtime.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cycubic::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

bool isa_supported(Isa isa) noexcept;

/// The variant `coset_sums` will use: the override if set, else the best supported.
Isa active_isa() noexcept;

/// Forces a variant (tests, benchmarks). Unsupported requests fall back to Scalar.
void set_isa_override(std::optional<Isa> isa) noexcept;

/// cos(2 pi a / m) and sin(2 pi a / m) for a in [0, m). Built with the reflection
/// a -> m - a so that conjugate entries are exact negatives in the sine column.
struct RootTable {
  std::uint64_t modulus = 0;
  std::vector<double> cos;
  std::vector<double> sin;

  static RootTable build(std::uint64_t modulus);
};

/// Per-label sums of a complex table: re[k] = sum of values_re[a] over labels[a] == k, k in {0,1,2}.
/// Negative labels are skipped.
struct CosetSums {
  std::array<double, 3> re{};
  std::array<double, 3> im{};

  std::complex<double> operator[](std::size_t k) const { return {re[k], im[k]}; }
};

CosetSums coset_sums_scalar(std::span<const std::int8_t> labels, std::span<const double> values_re,
                            std::span<const double> values_im);

#if defined(CYCUBIC_HAVE_AVX2)
CosetSums coset_sums_avx2(std::span<const std::int8_t> labels, std::span<const double> values_re,
                          std::span<const double> values_im);
#endif

CosetSums coset_sums(std::span<const std::int8_t> labels, std::span<const double> values_re,
                     std::span<const double> values_im);

inline CosetSums coset_sums(std::span<const std::int8_t> labels, const RootTable& roots) {
  return coset_sums(labels, roots.cos, roots.sin);
}

}  // namespace cycubic::kernels
