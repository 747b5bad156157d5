#include <doctest.h>

#include <set>

#include "cycubic/bigint.hpp"
#include "cycubic/error.hpp"
#include "cycubic/quadform.hpp"

using namespace cycubic;

namespace {

std::vector<std::pair<long, long>> pairs(std::uint64_t f) {
  std::vector<std::pair<long, long>> out;
  for (const auto& r : representations(validate_conductor(f))) out.emplace_back(r.M.get_si(), r.N.get_si());
  return out;
}

}  // namespace

TEST_CASE("representations examples") {
  using P = std::vector<std::pair<long, long>>;
  CHECK(pairs(819) == P{{51, 5}, {24, 10}, {-3, 11}, {-57, 1}});
  CHECK(pairs(9) == P{{-3, 1}});
  CHECK(pairs(7) == P{{-1, 1}});
  CHECK(pairs(63) == P{{15, 1}, {-12, 2}});
  CHECK(pairs(91) == P{{11, 3}, {-16, 2}});
  const auto r63 = representations(validate_conductor(63));
  CHECK(*r63[0].M0 == 5);
  CHECK(*r63[1].M0 == -4);
}

TEST_CASE("shanks_params examples") {
  const auto check = [](std::uint64_t f, long M, long n1, long n2) {
    for (const auto& r : representations(validate_conductor(f))) {
      if (r.M != M) continue;
      const ShanksParams sp = shanks_params(r);
      CHECK(sp.n1 == n1);
      CHECK(sp.n2 == n2);
      CHECK(sp.delta == static_cast<long>(f));
      return;
    }
    FAIL("representation not found");
  };
  check(819, 51, 18, 5);
  check(9, -3, -3, 1);
  check(7, -1, -2, 1);
}

TEST_CASE("shanks_params rejects a parity mismatch") {
  Representation r{2, 1, std::nullopt, validate_conductor(7)};
  try {
    shanks_params(r);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParityError);
  }
}

TEST_CASE("counts and invariants for every conductor up to 1e5") {
  for (const Conductor& f : conductors_up_to(100000)) {
    CAPTURE(f.value);
    const auto reps = representations(f);
    const std::size_t expected = f.is_wild() ? std::size_t{1} << f.nu() : std::size_t{1} << (f.nu() - 1);
    REQUIRE(reps.size() == expected);
    std::set<long> seen;
    for (const auto& r : reps) {
      REQUIRE(4 * to_mpz(f.value) - r.M * r.M - 27 * r.N * r.N == 0);
      REQUIRE(is_normalized(r));
      REQUIRE(seen.insert(r.M.get_si()).second);
      const ShanksParams sp = shanks_params(r);
      REQUIRE(sp.M() == r.M);
      REQUIRE(sp.n2 == r.N);
      REQUIRE(sp.delta == to_mpz(f.value));
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), sp.n1.get_mpz_t(), sp.n2.get_mpz_t());
      REQUIRE(g == 1);
      if (f.is_wild()) {
        REQUIRE(mod_u64(sp.n1, 3) == 0);
        REQUIRE(mod_u64(mpz_class(2 * sp.n1 / 3 + sp.n2), 3) == 2);
      }
    }
  }
}
