// Compiled with -mavx2 -mfma; only called after a runtime CPU check.
#include <immintrin.h>

#include <cstring>
#include <stdexcept>

#include "cycubic/kernels.hpp"

namespace cycubic::kernels {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

CosetSums coset_sums_avx2(std::span<const std::int8_t> labels, std::span<const double> values_re,
                          std::span<const double> values_im) {
  if (values_re.size() != labels.size() || values_im.size() != labels.size()) {
    throw std::invalid_argument("coset_sums: length mismatch");
  }
  const std::size_t n = labels.size();
  const std::int8_t* lab = labels.data();
  const double* re = values_re.data();
  const double* im = values_im.data();

  const __m256i k0 = _mm256_setzero_si256();
  const __m256i k1 = _mm256_set1_epi64x(1);
  const __m256i k2 = _mm256_set1_epi64x(2);
  __m256d re0 = _mm256_setzero_pd(), re1 = re0, re2 = re0;
  __m256d im0 = re0, im1 = re0, im2 = re0;

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    std::int32_t packed;
    std::memcpy(&packed, lab + i, sizeof packed);
    const __m256i l = _mm256_cvtepi8_epi64(_mm_cvtsi32_si128(packed));
    const __m256d m0 = _mm256_castsi256_pd(_mm256_cmpeq_epi64(l, k0));
    const __m256d m1 = _mm256_castsi256_pd(_mm256_cmpeq_epi64(l, k1));
    const __m256d m2 = _mm256_castsi256_pd(_mm256_cmpeq_epi64(l, k2));
    const __m256d c = _mm256_loadu_pd(re + i);
    const __m256d s = _mm256_loadu_pd(im + i);
    re0 = _mm256_add_pd(re0, _mm256_and_pd(m0, c));
    re1 = _mm256_add_pd(re1, _mm256_and_pd(m1, c));
    re2 = _mm256_add_pd(re2, _mm256_and_pd(m2, c));
    im0 = _mm256_add_pd(im0, _mm256_and_pd(m0, s));
    im1 = _mm256_add_pd(im1, _mm256_and_pd(m1, s));
    im2 = _mm256_add_pd(im2, _mm256_and_pd(m2, s));
  }

  CosetSums out;
  out.re = {hsum(re0), hsum(re1), hsum(re2)};
  out.im = {hsum(im0), hsum(im1), hsum(im2)};
  for (; i < n; ++i) {
    const int k = lab[i];
    if (k < 0 || k > 2) continue;
    out.re[static_cast<std::size_t>(k)] += re[i];
    out.im[static_cast<std::size_t>(k)] += im[i];
  }
  return out;
}

}  // namespace cycubic::kernels
