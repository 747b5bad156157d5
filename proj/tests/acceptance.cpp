// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cycubic/arith.hpp"
#include "cycubic/cubicpoly.hpp"
#include "cycubic/groupring.hpp"
#include "cycubic/periods.hpp"
#include "cycubic/quadform.hpp"

using namespace cycubic;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && passed) {
      passed = false;
      detail = why;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

constexpr std::uint64_t kBound = 10000;

const char* const kTable =
    "| (n1, n2) | f_n(X) | P(X) | {eta, eta', eta''} |\n"
    "|---|---|---|---|\n"
    "| (-30, 1) | X^3 + 30X^2 + 27X - 1 | X^3 - 273X + 1729 | {ρ+10, ρ′+10, ρ″+10} |\n"
    "| (18, 5) | X^3 - (18/5)X^2 - (33/5)X - 1 | X^3 - 273X - 1547 | {5ρ-6, 5ρ′-6, 5ρ″-6} |\n"
    "| (-3, 10) | X^3 + (3/10)X^2 - (27/10)X - 1 | X^3 - 273X - 728 | {10ρ+1, 10ρ′+1, 10ρ″+1} |\n"
    "| (-18, 11) | X^3 + (18/11)X^2 - (15/11)X - 1 | X^3 - 273X + 91 | {11ρ+6, 11ρ′+6, 11ρ″+6} |\n";

Outcome ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"cycubic", "table", "--format", "md"}, out, err);
  const double dt = seconds_since(t0);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(out.str() == kTable, "table output differs:\n" + out.str());
  o.require(dt < 1.0, "took " + fmt("%.3f s", dt));
  if (o.passed) o.detail = "4 rows byte-exact, " + fmt("%.3f s", dt);
  return o;
}

Outcome main_identity(Ramification kind, double budget) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (const Conductor& f : conductors_up_to(kBound, kind)) {
    for (const auto& r : representations(f)) {
      const auto check = verify_main_identity(f, shanks_params(r));
      o.require(check.verdict.passed, "f = " + std::to_string(f.value) + ": " + check.verdict.detail);
      ++checked;
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < budget, "took " + fmt("%.2f s", dt));
  if (o.passed) o.detail = std::to_string(checked) + " identities exact, " + fmt("%.2f s", dt);
  return o;
}

struct Corpus {
  std::vector<Conductor> conductors;
  std::vector<std::vector<FieldRecord>> records;
  std::vector<std::string> errors;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus c;
    c.conductors = conductors_up_to(kBound);
    for (const auto& f : c.conductors) {
      try {
        c.records.push_back(match_fields(f));
      } catch (const std::exception& e) {
        c.records.emplace_back();
        c.errors.push_back("f = " + std::to_string(f.value) + ": " + e.what());
      }
    }
    return c;
  }();
  return c;
}

Outcome for_each_record(const std::function<void(const FieldRecord&, Outcome&)>& fn, std::size_t* count = nullptr) {
  Outcome o;
  const Corpus& c = corpus();
  if (!c.errors.empty()) o.require(false, c.errors.front());
  std::size_t n = 0;
  for (const auto& recs : c.records) {
    for (const auto& rec : recs) {
      fn(rec, o);
      ++n;
    }
  }
  if (count) *count = n;
  return o;
}

Outcome ac4() {
  double worst = 0.0;
  std::size_t n = 0;
  Outcome o = for_each_record(
      [&](const FieldRecord& rec, Outcome& o) {
        const Verdict v = verify_period_relation(rec, 1e-6);
        worst = std::max(worst, v.residual);
        o.require(v.passed && v.residual < 1e-6, "f = " + std::to_string(rec.conductor.value) + ": " + v.detail);
      },
      &n);
  if (o.passed) o.detail = std::to_string(n) + " fields, max multiset distance " + fmt("%.2e", worst);
  return o;
}

Outcome ac5() {
  double worst = 0.0;
  std::size_t n = 0;
  Outcome o = for_each_record(
      [&](const FieldRecord& rec, Outcome& o) {
        worst = std::max(worst, rec.rounding_residual);
        o.require(rec.numeric_P == period_poly_formula(rec.conductor, rec.representation) &&
                      rec.rounding_residual < 1e-6,
                  "f = " + std::to_string(rec.conductor.value) + ": " + rec.numeric_P.to_string());
      },
      &n);
  if (o.passed) o.detail = std::to_string(n) + " fields, max rounding residual " + fmt("%.2e", worst);
  return o;
}

Outcome ac6() {
  Outcome o;
  const Corpus& c = corpus();
  if (!c.errors.empty()) o.require(false, c.errors.front());
  for (std::size_t i = 0; i < c.conductors.size(); ++i) {
    const Conductor& f = c.conductors[i];
    const std::size_t expected = f.is_wild() ? std::size_t{1} << f.nu() : std::size_t{1} << (f.nu() - 1);
    const std::string tag = "f = " + std::to_string(f.value);
    o.require(representations(f).size() == expected, tag + ": representation count");
    o.require(primitive_cubic_kernels(f).size() == expected, tag + ": kernel count");
    o.require(c.records[i].size() == expected, tag + ": matching size");
    // Bijection: every record uses a different kernel.
    for (std::size_t a = 0; a < c.records[i].size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        o.require(!c.records[i][a].kernel.character->same_kernel(*c.records[i][b].kernel.character),
                  tag + ": kernel used twice");
      }
    }
  }
  if (o.passed) o.detail = std::to_string(c.conductors.size()) + " conductors, counts and bijection hold";
  return o;
}

Outcome ac7() {
  std::size_t n = 0;
  Outcome o = for_each_record([&](const FieldRecord& rec, Outcome& o) {
    if (!rec.conductor.is_wild()) return;
    ++n;
    const Verdict v = verify_sign_congruences(rec);
    o.require(v.passed, "f = " + std::to_string(rec.conductor.value) + ": " + v.detail);
  });
  if (o.passed) o.detail = std::to_string(n) + " wild fields";
  return o;
}

Outcome ac8() {
  Outcome o;
  for (bool wild : {false, true}) {
    const auto units = unit_list_p3(wild);
    o.require(units.size() == (wild ? 12u : 6u), "unit list size");
    for (const auto& x : units) {
      bool inverse = false;
      for (const auto& y : units) {
        const auto xy = gr_mul(x, y);
        o.require(std::find(units.begin(), units.end(), xy) != units.end(), "unit list not closed");
        inverse = inverse || xy == GroupRingElement::one();
      }
      o.require(inverse, "missing inverse");
    }
  }
  const GroupRingElement u = GroupRingElement::one() - mpq_class(2) * idempotents().first;
  o.require(gr_mul(u, u) == GroupRingElement::one(), "(1 - 2e1)^2 != 1");
  std::size_t n = 0;
  for (const Conductor& f : conductors_up_to(1000, Ramification::Wild)) {
    for (const auto& rec : match_fields(f)) {
      const Verdict v = verify_unit_action(rec);
      o.require(v.passed, "f = " + std::to_string(f.value) + ": " + v.detail);
      ++n;
    }
  }
  if (o.passed) o.detail = "orders 6 and 12 closed with inverses, unit action on " + std::to_string(n) + " wild fields";
  return o;
}

Outcome ac9() {
  Outcome o;
  const std::uint64_t n = 1000000;
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p; m <= n; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = -mu[m];
    }
    for (std::uint64_t m = p * p; m <= n; m += p * p) mu[m] = 0;
  }
  for (std::uint64_t m = 1; m <= n && o.passed; ++m) o.require(moebius(m) == mu[m], "moebius(" + std::to_string(m) + ")");

  std::size_t applied = 0;
  for (const Conductor& f : conductors_up_to(kBound)) {
    for (const auto& r : representations(f)) {
      const ShanksParams sp = shanks_params(r);
      if (!irreducibility_criterion_applies(sp.n1, sp.n2)) continue;
      ++applied;
      o.require(is_irreducible_cubic(shanks_poly(sp.n())), "reducible f_n for f = " + std::to_string(f.value));
    }
  }

  std::mt19937_64 rng(918273645);
  std::uniform_int_distribution<long> num(-99, 99), den(1, 20);
  auto q = [&] {
    mpq_class v(num(rng), den(rng));
    v.canonicalize();
    return v;
  };
  for (int i = 0; i < 1000; ++i) {
    const RationalCubic p(q(), q(), q(), q());
    mpq_class a = q();
    while (a == 0) a = q();
    const mpq_class b = q();
    const mpq_class inv_a = 1 / a, back_b = -b / a;
    o.require(substitute_affine(substitute_affine(p, a, b), inv_a, back_b) == p, "affine round trip failed");
  }
  if (o.passed) {
    o.detail = "moebius to 1e6, " + std::to_string(applied) + " irreducibility-criterion cases irreducible, 1000 round trips";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "table reproduction", ac1},
      {"AC2", "main identity, wild, exact", [] { return main_identity(Ramification::Wild, 30.0); }},
      {"AC3", "main identity, tame, exact", [] { return main_identity(Ramification::Tame, 30.0); }},
      {"AC4", "period relation", ac4},
      {"AC5", "oracle equivalence", ac5},
      {"AC6", "counting and bijection", ac6},
      {"AC7", "sign congruences", ac7},
      {"AC8", "group ring", ac8},
      {"AC9", "property suites", ac9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s  %s: %s\n", c.id, o.passed ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.passed;
  }
  return failures == 0 ? 0 : 1;
}
