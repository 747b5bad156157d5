#include <doctest.h>

#include <map>
#include <random>

#include "cycubic/groupring.hpp"

using namespace cycubic;

namespace {

using G = GroupRingElement;

mpq_class frac(long n, long d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

bool contains(const std::vector<G>& xs, const G& x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

std::map<int, int> order_histogram(const std::vector<G>& xs) {
  std::map<int, int> h;
  for (const auto& x : xs) ++h[element_order(x)];
  return h;
}

}  // namespace

TEST_CASE("gr_mul and idempotents") {
  CHECK(gr_mul(G::sigma(1), G::sigma(2)) == G::one());
  const auto [e1, ef] = idempotents();
  CHECK(gr_mul(e1, e1) == e1);
  CHECK(gr_mul(ef, ef) == ef);
  CHECK(e1 + ef == G::one());
  CHECK(gr_mul(e1, ef) == G{0, 0, 0});
  const G u = G::one() - mpq_class(2) * e1;
  CHECK(gr_mul(u, u) == G::one());
  CHECK(ef == G{mpq_class(2, 3), mpq_class(-1, 3), mpq_class(-1, 3)});
}

TEST_CASE("ring axioms on a small grid") {
  std::vector<G> grid;
  for (int a : {-1, 0, 2}) {
    for (int b : {0, 1}) {
      for (int c : {-2, 1}) grid.push_back(G{frac(a, 2), b, frac(c, 3)});
    }
  }
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      REQUIRE(x * y == y * x);
      for (const auto& z : grid) {
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
      }
    }
  }
}

TEST_CASE("unit lists") {
  for (bool wild : {false, true}) {
    CAPTURE(wild);
    const auto units = unit_list_p3(wild);
    REQUIRE(units.size() == (wild ? 12u : 6u));
    for (const auto& x : units) {
      bool has_inverse = false;
      for (const auto& y : units) {
        REQUIRE(contains(units, x * y));
        has_inverse = has_inverse || x * y == G::one();
      }
      REQUIRE(has_inverse);
      REQUIRE(6 % element_order(x) == 0);
    }
  }
  // Z/6 for the tame list, Z/2 x Z/6 for the wild list.
  CHECK(order_histogram(unit_list_p3(false)) == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  CHECK(order_histogram(unit_list_p3(true)) == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}, {6, 6}});
}

TEST_CASE("apply") {
  const ConjugateVector v{1.0, 2.0, 4.0};
  CHECK(cycubic::apply(G::sigma(1), v) == ConjugateVector{2.0, 4.0, 1.0});
  const auto e = cycubic::apply(idempotents().first, v);
  for (double x : e) CHECK(x == doctest::Approx(7.0 / 3.0));

  const ConjugateVector alpha{1.5, -0.25, -1.25};
  const G u = G::one() - mpq_class(2) * idempotents().first;
  const auto got = cycubic::apply(u, {alpha[0] + 1, alpha[1] + 1, alpha[2] + 1});
  for (std::size_t i = 0; i < 3; ++i) CHECK(got[i] == doctest::Approx(alpha[i] - 1));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  std::uniform_real_distribution<double> r(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const G x{frac(d(rng), 3), d(rng), frac(d(rng), 2)};
    const G y{d(rng), frac(d(rng), 5), d(rng)};
    const ConjugateVector w{r(rng), r(rng), r(rng)};
    const auto lhs = cycubic::apply(x * y, w);
    const auto rhs = cycubic::apply(x, cycubic::apply(y, w));
    for (std::size_t k = 0; k < 3; ++k) REQUIRE(lhs[k] == doctest::Approx(rhs[k]).epsilon(1e-12));
  }
}

TEST_CASE("verify_generators") {
  const auto recs = match_fields(validate_conductor(819));
  for (const auto& rec : recs) {
    CHECK(verify_generators(rec).passed);
    CHECK(verify_unit_action(rec).passed);
    if (rec.shanks.n1 == 18) {
      const RationalCubic h = substitute_affine(mpq_class(125) * rec.shanks_poly, mpq_class(1, 5), mpq_class(6, 5));
      CHECK(h == RationalCubic::monic(0, -273, -1547));
      CHECK(h == rec.numeric_P);
    }
  }
  const auto r9 = match_fields(validate_conductor(9));
  CHECK(verify_generators(r9[0]).passed);
  CHECK(r9[0].periods.by_coset[0] + 1 == doctest::Approx(2.532089));

  auto broken = recs[0];
  broken.periods.by_coset[0] += 0.5;
  const Verdict v = verify_generators(broken);
  CHECK_FALSE(v.passed);
  CHECK(v.detail.find("(b)") != std::string::npos);

  CHECK_THROWS_AS(verify_generators(match_fields(validate_conductor(7))[0]), std::invalid_argument);
}

TEST_CASE("verify_generators on every wild field up to 1e4") {
  for (const Conductor& f : conductors_up_to(10000, Ramification::Wild)) {
    for (const auto& rec : match_fields(f)) {
      CAPTURE(f.value);
      REQUIRE(verify_generators(rec).passed);
    }
  }
}
