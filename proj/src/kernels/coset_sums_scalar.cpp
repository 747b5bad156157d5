#include <stdexcept>

#include "cycubic/kernels.hpp"

namespace cycubic::kernels {

CosetSums coset_sums_scalar(std::span<const std::int8_t> labels, std::span<const double> values_re,
                            std::span<const double> values_im) {
  if (values_re.size() != labels.size() || values_im.size() != labels.size()) {
    throw std::invalid_argument("coset_sums: length mismatch");
  }
  CosetSums out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int k = labels[i];
    if (k < 0 || k > 2) continue;
    out.re[static_cast<std::size_t>(k)] += values_re[i];
    out.im[static_cast<std::size_t>(k)] += values_im[i];
  }
  return out;
}

}  // namespace cycubic::kernels
