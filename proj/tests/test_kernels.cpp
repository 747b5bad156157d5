#include <doctest.h>

#include <random>

#include "cycubic/arith.hpp"
#include "cycubic/kernels.hpp"
#include "cycubic/periods.hpp"

using namespace cycubic;
using namespace cycubic::kernels;

namespace {

struct IsaGuard {
  ~IsaGuard() { set_isa_override(std::nullopt); }
};

void check_close(const CosetSums& a, const CosetSums& b, double tol) {
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(a.re[k] == doctest::Approx(b.re[k]).epsilon(tol).scale(1.0));
    CHECK(a.im[k] == doctest::Approx(b.im[k]).epsilon(tol).scale(1.0));
  }
}

}  // namespace

TEST_CASE("scalar kernel on a hand example") {
  const std::vector<std::int8_t> labels{-1, 0, 1, 2, 0, -1};
  const std::vector<double> re{100, 1, 2, 3, 4, 100}, im{100, 1, -1, 0.5, 2, 100};
  const CosetSums s = coset_sums_scalar(labels, re, im);
  CHECK(s.re == std::array<double, 3>{5, 2, 3});
  CHECK(s.im == std::array<double, 3>{3, -1, 0.5});
  CHECK_THROWS_AS(coset_sums_scalar(labels, std::vector<double>{1}, im), std::invalid_argument);
}

TEST_CASE("root table symmetry") {
  const RootTable t = RootTable::build(819);
  for (std::uint64_t a = 1; a < 819; ++a) {
    REQUIRE(t.cos[a] == t.cos[819 - a]);
    REQUIRE(t.sin[a] == -t.sin[819 - a]);
  }
  CHECK(t.cos[0] == 1.0);
  CHECK(t.sin[0] == 0.0);
}

TEST_CASE("dispatch") {
  IsaGuard guard;
  set_isa_override(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  set_isa_override(std::nullopt);
  CHECK(isa_supported(Isa::Scalar));
  if (isa_supported(Isa::Avx2)) CHECK(active_isa() == Isa::Avx2);
  CHECK(to_string(Isa::Avx2) == "avx2");
}

#if defined(CYCUBIC_HAVE_AVX2)
TEST_CASE("AVX2 kernel matches the scalar reference on random input") {
  if (!isa_supported(Isa::Avx2)) return;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> label(-1, 2);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 15, 16, 17, 63, 64, 65, 1000, 4099}) {
    CAPTURE(n);
    std::vector<std::int8_t> labels(n);
    std::vector<double> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = static_cast<std::int8_t>(label(rng));
      re[i] = val(rng);
      im[i] = val(rng);
    }
    check_close(coset_sums_scalar(labels, re, im), coset_sums_avx2(labels, re, im), 1e-12);
  }
}

TEST_CASE("AVX2 and scalar give the same periods for every kernel up to 2000") {
  if (!isa_supported(Isa::Avx2)) return;
  for (const Conductor& f : conductors_up_to(2000)) {
    const RootTable roots = RootTable::build(f.value);
    for (const auto& k : primitive_cubic_kernels(f)) {
      const auto a = coset_sums_scalar(k.labels(), roots.cos, roots.sin);
      const auto b = coset_sums_avx2(k.labels(), roots.cos, roots.sin);
      for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(std::abs(a.re[i] - b.re[i]) < 1e-10);
        REQUIRE(std::abs(a.im[i] - b.im[i]) < 1e-10);
      }
    }
  }
}
#endif
