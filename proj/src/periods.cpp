#include "cycubic/periods.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cycubic/bigint.hpp"
#include "cycubic/error.hpp"

namespace cycubic {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::vector<std::uint64_t> component_moduli(const Conductor& f) {
  std::vector<std::uint64_t> out;
  if (f.is_wild()) out.push_back(9);
  out.insert(out.end(), f.odd_primes.begin(), f.odd_primes.end());
  return out;
}

// Discrete logarithm table base g on (Z/qZ)^x; non-units map to -1.
std::vector<std::int64_t> dlog_table(std::uint64_t q, std::uint64_t g, std::uint64_t order) {
  std::vector<std::int64_t> table(q, -1);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    table[x] = static_cast<std::int64_t>(k);
    x = mul_mod(x, g, q);
  }
  return table;
}

}  // namespace

std::uint64_t UnitGroup::order() const noexcept {
  std::uint64_t n = 1;
  for (const auto& c : components) n *= c.order;
  return n;
}

UnitGroup unit_group(const Conductor& f) {
  UnitGroup g;
  g.modulus = f.value;
  for (std::uint64_t q : component_moduli(f)) {
    UnitGroupComponent c;
    c.prime_power = q;
    c.generator = primitive_root(q);
    c.order = q == 9 ? 6 : q - 1;
    // CRT: lifted = generator mod q, 1 mod f/q.
    const std::uint64_t other = f.value / q;
    const std::uint64_t e = mul_mod(other, inverse_mod(other % q, q), f.value);  // 1 mod q, 0 mod other
    const std::uint64_t e_other = (f.value + 1 - e) % f.value;                     // 0 mod q, 1 mod other
    c.lifted = (mul_mod(c.generator, e, f.value) + e_other) % f.value;
    g.components.push_back(c);
  }
  return g;
}

std::vector<CubicKernel> primitive_cubic_kernels(const Conductor& f) {
  const UnitGroup group = unit_group(f);
  const std::size_t k = group.components.size();
  std::vector<std::vector<std::int64_t>> logs;
  for (const auto& c : group.components) logs.push_back(dlog_table(c.prime_power, c.generator, c.order));

  std::vector<CubicKernel> out;
  const std::size_t combos = k == 0 ? 0 : std::size_t{1} << (k - 1);
  for (std::size_t mask = 0; mask < combos; ++mask) {
    CubicKernel kernel;
    kernel.exponents.assign(k, 1);
    for (std::size_t j = 1; j < k; ++j) kernel.exponents[j] = (mask >> (j - 1)) & 1 ? 2 : 1;
    auto chi = std::make_shared<CubicCharacter>();
    chi->modulus = f.value;
    chi->conductor = f.value;
    chi->values.assign(f.value, -1);
    for (std::uint64_t a = 1; a < f.value; ++a) {
      int v = 0;
      bool unit = true;
      for (std::size_t j = 0; j < k && unit; ++j) {
        const std::int64_t l = logs[j][a % group.components[j].prime_power];
        if (l < 0) {
          unit = false;
        } else {
          v += static_cast<int>(l % 3) * kernel.exponents[j];
        }
      }
      if (unit) chi->values[a] = static_cast<std::int8_t>(v % 3);
    }
    kernel.character = std::move(chi);
    out.push_back(std::move(kernel));
  }

  // Index 3 and primitivity (nontrivial on every component).
  const std::uint64_t expected_size = group.order() / 3;
  std::size_t good = 0;
  for (const auto& kernel : out) {
    bool primitive = true;
    for (const auto& c : group.components) primitive = primitive && kernel.contains(c.lifted) == false;
    if (primitive && kernel.residues().size() == expected_size) ++good;
  }
  const std::size_t expected = predicted_representation_count(f);
  if (good != expected || out.size() != expected) {
    throw Error(ErrorKind::CountMismatch, "conductor " + std::to_string(f.value) + ": " + std::to_string(good) +
                                              " primitive cubic kernels, expected " + std::to_string(expected));
  }
  return out;
}

PeriodTriple gaussian_periods(const Conductor& f, const CubicKernel& kernel, double tolerance) {
  return gaussian_periods(f, kernel, kernels::RootTable::build(f.value), tolerance);
}

PeriodTriple gaussian_periods(const Conductor& f, const CubicKernel& kernel, const kernels::RootTable& roots,
                              double tolerance) {
  if (roots.modulus != f.value || kernel.character->modulus != f.value) {
    throw std::invalid_argument("gaussian_periods: modulus mismatch");
  }
  const kernels::CosetSums sums = kernels::coset_sums(kernel.labels(), roots);
  PeriodTriple pt;
  pt.by_coset = sums.re;
  pt.eta = sums.re;
  std::sort(pt.eta.begin(), pt.eta.end(), std::greater<>());
  for (double im : sums.im) pt.imag_residual = std::max(pt.imag_residual, std::abs(im));
  const double expected = f.is_wild() ? 0.0 : static_cast<double>(moebius(f.value));
  pt.sum_residual = std::abs(pt.eta[0] + pt.eta[1] + pt.eta[2] - expected);
  if (pt.imag_residual > tolerance || pt.sum_residual > tolerance) {
    throw Error(ErrorKind::ToleranceExceeded, "conductor " + std::to_string(f.value) + ": imaginary residue " +
                                                  fmt(pt.imag_residual) + ", trace residue " +
                                                  fmt(pt.sum_residual) + ", tolerance " + fmt(tolerance));
  }
  return pt;
}

RationalCubic numeric_period_poly(const PeriodTriple& pt, double tolerance, double* residual) {
  const long double a = pt.eta[0], b = pt.eta[1], c = pt.eta[2];
  const std::array<long double, 3> coeffs{-(a * b * c), a * b + a * c + b * c, -(a + b + c)};  // X^0, X^1, X^2
  std::array<mpz_class, 3> rounded;
  double worst = 0.0;
  int worst_k = 0;
  for (int k = 0; k < 3; ++k) {
    const long double r = std::round(coeffs[static_cast<std::size_t>(k)]);
    const double err = static_cast<double>(std::abs(coeffs[static_cast<std::size_t>(k)] - r));
    if (err > worst || k == 0) {
      if (err > worst) worst_k = k;
      worst = std::max(worst, err);
    }
    rounded[static_cast<std::size_t>(k)] = mpz_class(std::to_string(std::llround(r)));
  }
  if (residual) *residual = worst;
  if (worst > tolerance) {
    throw Error(ErrorKind::RoundingFailure, "coefficient of X^" + std::to_string(worst_k) + " is " +
                                                fmt(worst) + " from an integer (tolerance " + fmt(tolerance) + ")");
  }
  return RationalCubic::monic(rounded[2], rounded[1], rounded[0]);
}

std::array<double, 3> real_roots_cubic(const RationalCubic& p) {
  if (p.degree() != 3) throw std::invalid_argument("real_roots_cubic: degree must be 3");
  if (sgn(discriminant(p)) <= 0) {
    throw Error(ErrorKind::ComplexRoots, p.to_string() + " does not have three distinct real roots");
  }
  const mpq_class lead = p.coeff(3);
  const long double b = mpq_class(p.coeff(2) / lead).get_d();
  const long double c = mpq_class(p.coeff(1) / lead).get_d();
  const long double d = mpq_class(p.coeff(0) / lead).get_d();
  // x = t - b/3: t^3 + P t + Q.
  const long double P = c - b * b / 3;
  const long double Q = 2 * b * b * b / 27 - b * c / 3 + d;
  const long double m = 2 * std::sqrt(-P / 3);
  long double arg = 3 * Q / (P * m);
  arg = std::clamp(arg, -1.0L, 1.0L);
  const long double theta = std::acos(arg) / 3;
  const long double two_pi_3 = 2 * std::numbers::pi_v<long double> / 3;
  std::array<double, 3> roots;
  for (int k = 0; k < 3; ++k) {
    long double x = m * std::cos(theta - two_pi_3 * k) - b / 3;
    // Newton polish on the monic polynomial.
    for (int it = 0; it < 2; ++it) {
      const long double fx = ((x + b) * x + c) * x + d;
      const long double dfx = (3 * x + 2 * b) * x + c;
      if (dfx == 0) break;
      x -= fx / dfx;
    }
    roots[static_cast<std::size_t>(k)] = static_cast<double>(x);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

double multiset_distance(std::array<double, 3> a, std::array<double, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool FieldRecord::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.passed; });
}

double FieldRecord::max_residual() const {
  double r = 0.0;
  for (const auto& [name, v] : verdicts) r = std::max(r, v.residual);
  return r;
}

Verdict verify_period_relation(const FieldRecord& rec, double tolerance) {
  const int mu = rec.conductor.sign();
  const double n2 = rec.shanks.n2.get_d();
  const double shift = period_shift(rec.conductor, rec.shanks).get_d();
  std::array<double, 3> mapped;
  for (std::size_t i = 0; i < 3; ++i) mapped[i] = mu * (n2 * rec.shanks_roots[i] + shift);
  const double dist = multiset_distance(mapped, rec.periods.eta);
  if (dist <= tolerance) return Verdict::pass("period_relation", dist);
  return Verdict::fail("period_relation", "RelationFailure: multiset distance " + fmt(dist), dist);
}

Verdict verify_sign_congruences(const FieldRecord& rec) {
  const Conductor& f = rec.conductor;
  if (!f.is_wild() || !rec.representation.M0) {
    throw std::invalid_argument("verify_sign_congruences: wild records only");
  }
  // eta0 eta1 eta2 = -P(0).
  const mpz_class product = -rec.numeric_P.coeff(0).get_num();
  const int expected_product = f.nu() % 2 == 0 ? -1 : 1;  // (-1)^(nu+1)
  const bool product_ok = mpz_fdiv_ui(mpz_class(product - expected_product).get_mpz_t(), 3) == 0;

  const mpz_class fM = to_mpz(f.value) * rec.representation.M;
  mpz_class odd_product = 1;
  for (std::uint64_t p : f.odd_primes) odd_product *= to_mpz(p);
  const bool exact = mpz_divisible_ui_p(fM.get_mpz_t(), 27) != 0 && fM / 27 == odd_product * *rec.representation.M0;
  const bool alpha_ok = exact && mpz_fdiv_ui(mpz_class(fM / 27 + 1).get_mpz_t(), 3) == 0;

  if (product_ok && alpha_ok) return Verdict::pass("sign_congruences");
  std::string detail = "CongruenceFailure:";
  if (!product_ok) detail += " eta-product " + product.get_str() + " != (-1)^(nu+1) mod 3;";
  if (!alpha_ok) detail += " fM/27 = p_1...p_nu M0 = -1 mod 3 fails;";
  return Verdict::fail("sign_congruences", detail, 1.0);
}

std::vector<FieldRecord> enumerate_fields(const Conductor& f) {
  std::vector<FieldRecord> out;
  for (const auto& rep : representations(f)) {
    FieldRecord rec;
    rec.conductor = f;
    rec.representation = rep;
    rec.shanks = shanks_params(rep);
    rec.shanks_poly = shanks_poly(rec.shanks.n());
    rec.predicted_P = period_poly_formula(f, rep);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<FieldRecord> match_fields(const Conductor& f, double tolerance) {
  const auto kernels_list = primitive_cubic_kernels(f);
  const auto roots = kernels::RootTable::build(f.value);
  // The trace and reality checks are sanity checks on the sums, scaled with f; the caller's
  // tolerance governs coefficient rounding and the root relation.
  const double partition_tolerance = std::max(tolerance, 1e-9 * static_cast<double>(f.value));

  struct Candidate {
    PeriodTriple periods;
    RationalCubic poly;
    double residual = 0.0;
    bool used = false;
  };
  std::vector<Candidate> candidates;
  for (const auto& kernel : kernels_list) {
    Candidate c;
    c.periods = gaussian_periods(f, kernel, roots, partition_tolerance);
    c.poly = numeric_period_poly(c.periods, tolerance, &c.residual);
    candidates.push_back(std::move(c));
  }

  std::vector<FieldRecord> out = enumerate_fields(f);
  for (auto& rec : out) {
    const Representation& rep = rec.representation;

    std::size_t hit = candidates.size();
    std::size_t hits = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].poly == rec.predicted_P) {
        hit = i;
        ++hits;
      }
    }
    if (hits != 1 || candidates[hit].used) {
      throw Error(ErrorKind::MatchingFailure, "conductor " + std::to_string(f.value) + ", M = " + rep.M.get_str() +
                                                  ": " + std::to_string(hits) + " kernels give " +
                                                  rec.predicted_P.to_string());
    }
    candidates[hit].used = true;
    rec.matched = true;
    rec.kernel = kernels_list[hit];
    rec.periods = candidates[hit].periods;
    rec.numeric_P = candidates[hit].poly;
    rec.rounding_residual = candidates[hit].residual;
    rec.shanks_roots = real_roots_cubic(rec.shanks_poly);

    mpz_class g;
    mpz_gcd(g.get_mpz_t(), rec.shanks.n1.get_mpz_t(), rec.shanks.n2.get_mpz_t());
    rec.add(g == 1 ? Verdict::pass("coprime") : Verdict::fail("coprime", "gcd(n1, n2) = " + g.get_str(), 1.0));
    rec.add(rec.shanks.delta == to_mpz(f.value)
                ? Verdict::pass("delta")
                : Verdict::fail("delta", "delta = " + rec.shanks.delta.get_str(), 1.0));
    const bool irreducible = is_irreducible_cubic(rec.shanks_poly);
    rec.add(irreducible ? Verdict::pass("irreducible") : Verdict::fail("irreducible", rec.shanks_poly.to_string(), 1.0));
    if (f.is_wild()) {
      const bool applies = irreducibility_criterion_applies(rec.shanks.n1, rec.shanks.n2);
      rec.add(applies && irreducible ? Verdict::pass("irreducibility_criterion")
                                     : Verdict::fail("irreducibility_criterion", applies ? "hypotheses hold but reducible"
                                                                        : "hypotheses fail for a wild pair",
                                                     1.0));
    }
    rec.add(discriminant_check(rec.shanks.n()));
    rec.add(Verdict::pass("partition", std::max(rec.periods.sum_residual, rec.periods.imag_residual)));
    rec.add(rec.numeric_P == rec.predicted_P
                ? Verdict::pass("oracle_equivalence", rec.rounding_residual)
                : Verdict::fail("oracle_equivalence", rec.numeric_P.to_string() + " vs " + rec.predicted_P.to_string(),
                                rec.rounding_residual));
    rec.add(verify_main_identity(f, rec.shanks, rec.numeric_P).verdict);
    rec.add(verify_period_relation(rec, tolerance));
  }
  return out;
}

}  // namespace cycubic
