#include <atomic>

#include "cycubic/kernels.hpp"

namespace cycubic::kernels {

namespace {

// -1: no override; otherwise static_cast<int>(Isa).
std::atomic<int> g_override{-1};

Isa best_supported() noexcept {
  static const Isa best = isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  return best;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(CYCUBIC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept {
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced >= 0) {
    const auto isa = static_cast<Isa>(forced);
    return isa_supported(isa) ? isa : Isa::Scalar;
  }
  return best_supported();
}

void set_isa_override(std::optional<Isa> isa) noexcept {
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

CosetSums coset_sums(std::span<const std::int8_t> labels, std::span<const double> values_re,
                     std::span<const double> values_im) {
#if defined(CYCUBIC_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return coset_sums_avx2(labels, values_re, values_im);
#endif
  return coset_sums_scalar(labels, values_re, values_im);
}

}  // namespace cycubic::kernels
