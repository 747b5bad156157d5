#include "cycubic/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cycubic/bigint.hpp"
#include "cycubic/error.hpp"
#include "cycubic/kernels.hpp"

namespace cycubic {

namespace {

const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

int mod3(int k) { return ((k % 3) + 3) % 3; }

// Rounds num/den to the nearest integer (ties away from zero), den > 0.
mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  mpz_class q;
  mpz_class twice = 2 * num + den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  return q;
}

}  // namespace

EisensteinInt EisensteinInt::zeta_power(int k) {
  switch (mod3(k)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};
  }
}

std::complex<double> EisensteinInt::to_complex() const {
  return {a.get_d() - 0.5 * b.get_d(), kHalfSqrt3 * b.get_d()};
}

std::string EisensteinInt::to_string() const {
  std::string out = a.get_str();
  out += sgn(b) < 0 ? "-" : "+";
  out += mpz_class(abs(b)).get_str() + "w";
  return out;
}

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) { return {x.a + y.a, x.b + y.b}; }
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) { return {x.a - y.a, x.b - y.b}; }
EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = -1 - w.
  const mpz_class bd = x.b * y.b;
  return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
}

mpz_class norm(const EisensteinInt& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

EisensteinInt conj(const EisensteinInt& x) { return {x.a - x.b, -x.b}; }

std::optional<EisensteinInt> divide_exact(const EisensteinInt& x, const EisensteinInt& y) {
  const mpz_class n = norm(y);
  if (n == 0) return std::nullopt;
  const EisensteinInt t = x * conj(y);
  if (mpz_divisible_p(t.a.get_mpz_t(), n.get_mpz_t()) == 0 || mpz_divisible_p(t.b.get_mpz_t(), n.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return EisensteinInt{t.a / n, t.b / n};
}

bool divides(const EisensteinInt& y, const EisensteinInt& x) {
  if (y.is_zero()) return x.is_zero();
  return divide_exact(x, y).has_value();
}

EisensteinInt euclidean_quotient(const EisensteinInt& x, const EisensteinInt& y) {
  const mpz_class n = norm(y);
  const EisensteinInt t = x * conj(y);
  return {round_div(t.a, n), round_div(t.b, n)};
}

std::vector<EisensteinInt> associates(const EisensteinInt& x) {
  std::vector<EisensteinInt> out;
  out.reserve(6);
  for (int s : {1, -1}) {
    for (int k = 0; k < 3; ++k) {
      EisensteinInt u = EisensteinInt::zeta_power(k);
      if (s < 0) u = -u;
      out.push_back(u * x);
    }
  }
  return out;
}

EisensteinInt canonical_associate(const EisensteinInt& x) {
  if (x.is_zero()) return x;
  std::optional<EisensteinInt> best;
  for (EisensteinInt& cand : associates(x)) {
    if (sgn(cand.a) <= 0 || sgn(cand.b) < 0) continue;
    if (!best || cand.b < best->b) best = std::move(cand);
  }
  return *best;
}

EisensteinInt eis_gcd(EisensteinInt x, EisensteinInt y) {
  while (!y.is_zero()) {
    EisensteinInt r = x - euclidean_quotient(x, y) * y;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_associate(x);
}

bool congruent_one_mod_three(const EisensteinInt& x) {
  return mpz_fdiv_ui(x.a.get_mpz_t(), 3) == 1 && mpz_divisible_ui_p(x.b.get_mpz_t(), 3) != 0;
}

EisensteinInt primary_associate(const EisensteinInt& x) {
  for (EisensteinInt& cand : associates(x)) {
    if (congruent_one_mod_three(cand)) return cand;
  }
  throw std::invalid_argument("primary_associate: no associate is 1 mod 3 (" + x.to_string() + ")");
}

std::pair<EisensteinInt, double> nearest_eisenstein(std::complex<double> z) {
  const double v = z.imag() / kHalfSqrt3;
  const double u = z.real() + 0.5 * v;
  // Rounding the two coordinates can miss the nearest point by one step; check neighbours.
  const double u0 = std::round(u), v0 = std::round(v);
  EisensteinInt best;
  double best_dist = INFINITY;
  for (double du : {-1.0, 0.0, 1.0}) {
    for (double dv : {-1.0, 0.0, 1.0}) {
      const EisensteinInt cand{mpz_class(u0 + du), mpz_class(v0 + dv)};
      const double dist = std::abs(cand.to_complex() - z);
      if (dist < best_dist) {
        best_dist = dist;
        best = cand;
      }
    }
  }
  return {best, best_dist};
}

RhsFactorization factor_rhs(const Representation& r) {
  RhsFactorization out;
  // (M + 3N(1 + 2 zeta)) / 2; M + 3N is even because M = N mod 2.
  const mpz_class twice_a = r.M + 3 * r.N;
  if (mpz_even_p(twice_a.get_mpz_t()) == 0) {
    throw Error(ErrorKind::FactorizationMismatch, "M + 3N is odd for M = " + r.M.get_str());
  }
  out.rhs = {twice_a / 2, 3 * r.N};
  EisensteinInt rest = out.rhs;
  const bool wild = r.conductor.is_wild();
  if (wild) {
    auto q = divide_exact(rest, {3, 0});
    if (!q) throw Error(ErrorKind::FactorizationMismatch, "3 does not divide " + out.rhs.to_string());
    rest = *q;
  }
  for (std::uint64_t p : r.conductor.odd_primes) {
    const EisensteinInt g = eis_gcd({to_mpz(p), 0}, rest);
    if (norm(g) != to_mpz(p)) {
      throw Error(ErrorKind::FactorizationMismatch,
                  "gcd(" + std::to_string(p) + ", " + rest.to_string() + ") has norm " + norm(g).get_str());
    }
    const EisensteinInt pi = primary_associate(g);
    rest = *divide_exact(rest, pi);
    out.primes.push_back(p);
    out.pis.push_back(pi);
  }
  // `rest` is now a unit; it must be zeta^{+-1} (wild) or 1 (tame).
  int exponent = -2;
  for (int k = 0; k < 3; ++k) {
    if (rest == EisensteinInt::zeta_power(k)) exponent = k == 2 ? -1 : k;
  }
  const bool shape_ok = wild ? (exponent == 1 || exponent == -1) : exponent == 0;
  if (!shape_ok) {
    throw Error(ErrorKind::FactorizationMismatch,
                "leftover unit " + rest.to_string() + " for " + out.rhs.to_string());
  }
  out.zeta_exponent = exponent;

  EisensteinInt product = EisensteinInt::zeta_power(exponent);
  if (wild) product = product * EisensteinInt{3, 0};
  for (const auto& pi : out.pis) product = product * pi;
  if (product != out.rhs) {
    throw Error(ErrorKind::FactorizationMismatch, product.to_string() + " != " + out.rhs.to_string());
  }
  return out;
}

CubicCharacter CubicCharacter::conjugate() const {
  CubicCharacter out = *this;
  for (auto& v : out.values) {
    if (v > 0) v = static_cast<std::int8_t>(3 - v);
  }
  return out;
}

std::vector<std::uint64_t> CubicCharacter::kernel() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < modulus; ++a) {
    if (values[a] == 0) out.push_back(a);
  }
  return out;
}

bool CubicCharacter::same_kernel(const CubicCharacter& other) const {
  if (modulus != other.modulus) return false;
  for (std::uint64_t a = 0; a < modulus; ++a) {
    if ((values[a] == 0) != (other.values[a] == 0)) return false;
  }
  return true;
}

CubicCharacter cubic_residue_character(std::uint64_t p, const EisensteinInt& pi) {
  if (norm(pi) != to_mpz(p) || p % 3 != 1) {
    throw std::invalid_argument("cubic_residue_character: need norm(pi) = p = 1 mod 3");
  }
  // a + b w = 0 mod pi  =>  w = -a / b mod p (b is a unit mod p since p^2 does not divide norm).
  const std::uint64_t a = mod_u64(pi.a, p);
  const std::uint64_t b = mod_u64(pi.b, p);
  const std::uint64_t omega = mul_mod((p - a) % p, inverse_mod(b, p), p);
  const std::uint64_t omega2 = mul_mod(omega, omega, p);
  if (omega == 1 || mul_mod(omega2, omega, p) != 1) {
    throw Error(ErrorKind::NotPrimitiveRoot, "zeta mod " + pi.to_string() + " is not a primitive cube root of 1");
  }
  const std::uint64_t g = primitive_root(p);
  const std::uint64_t c = pow_mod(g, (p - 1) / 3, p);
  int step;
  if (c == omega) {
    step = 1;
  } else if (c == omega2) {
    step = 2;
  } else {
    throw Error(ErrorKind::NotPrimitiveRoot, "g^((p-1)/3) outside {1, w, w^2} modulo " + pi.to_string());
  }
  CubicCharacter chi;
  chi.modulus = p;
  chi.conductor = p;
  chi.values.assign(p, -1);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    chi.values[x] = static_cast<std::int8_t>((k % 3) * static_cast<std::uint64_t>(step) % 3);
    x = mul_mod(x, g, p);
  }
  return chi;
}

CubicCharacter chi9(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("chi9: sign must be +1 or -1");
  CubicCharacter chi;
  chi.modulus = 9;
  chi.conductor = 9;
  chi.values.assign(9, -1);
  for (int a = 1; a < 9; ++a) {
    if (a % 3 == 0) continue;
    chi.values[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(mod3(sign * (a * a - 1) / 3));
  }
  return chi;
}

CubicCharacter character_product(const CubicCharacter& x, const CubicCharacter& y) {
  CubicCharacter out;
  out.modulus = x.modulus * y.modulus;
  out.conductor = x.conductor * y.conductor;
  out.values.resize(out.modulus);
  for (std::uint64_t a = 0; a < out.modulus; ++a) {
    const int u = x.values[a % x.modulus];
    const int v = y.values[a % y.modulus];
    out.values[a] = (u < 0 || v < 0) ? std::int8_t{-1} : static_cast<std::int8_t>((u + v) % 3);
  }
  return out;
}

std::complex<double> gaussian_sum(const CubicCharacter& chi) {
  const auto roots = kernels::RootTable::build(chi.modulus);
  const kernels::CosetSums sums = kernels::coset_sums(chi.values, roots);
  const std::complex<double> w(-0.5, kHalfSqrt3);
  return sums[0] + w * sums[1] + w * w * sums[2];
}

CharacterConstruction character_for_representation(const Representation& r, double tolerance) {
  CharacterConstruction out;
  out.factors = factor_rhs(r);
  int unit = out.factors.zeta_exponent;
  CubicCharacter chi;
  bool have_chi = false;
  for (std::size_t i = 0; i < out.factors.primes.size(); ++i) {
    const std::uint64_t p = out.factors.primes[i];
    EisensteinInt& pi = out.factors.pis[i];
    const CubicCharacter chi_p = cubic_residue_character(p, pi);
    const std::complex<double> tau = gaussian_sum(chi_p);
    out.prime_gauss_sums.push_back(tau);
    const std::complex<double> target = -tau * tau * tau / static_cast<double>(p);
    // Associates define the same character; pick the one with -tau^3 = p pi and move the
    // unit difference into the zeta power.
    bool found = false;
    const auto assoc = associates(pi);
    for (std::size_t k = 0; k < assoc.size(); ++k) {
      const double residual = std::abs(assoc[k].to_complex() - target);
      if (residual > tolerance) continue;
      if (k >= 3) break;  // a sign change cannot be absorbed into zeta^{+-1}
      unit -= static_cast<int>(k);
      pi = assoc[k];
      out.normalization_residual = std::max(out.normalization_residual, residual);
      found = true;
      break;
    }
    if (!found) {
      throw Error(ErrorKind::NormalizationFailure, "no associate of " + pi.to_string() +
                                                       " satisfies -tau^3 = p pi for p = " + std::to_string(p));
    }
    chi = have_chi ? character_product(chi, chi_p) : chi_p;
    have_chi = true;
  }
  unit = mod3(unit);
  if (r.conductor.is_wild()) {
    if (unit == 0) {
      throw Error(ErrorKind::NormalizationFailure, "normalized unit is 1, expected zeta^{+-1}");
    }
    out.factors.zeta_exponent = unit == 1 ? 1 : -1;
    const CubicCharacter c9 = chi9(out.factors.zeta_exponent);
    const std::complex<double> tau9 = gaussian_sum(c9);
    const std::complex<double> expected =
        27.0 * EisensteinInt::zeta_power(out.factors.zeta_exponent).to_complex();
    out.tau9 = tau9;
    out.tau9_equals_27_zeta = std::abs(tau9 - expected) <= tolerance;
    out.tau9_cubed_equals_27_zeta = std::abs(tau9 * tau9 * tau9 - expected) <= tolerance;
    chi = have_chi ? character_product(c9, chi) : c9;
  } else if (unit != 0) {
    throw Error(ErrorKind::NormalizationFailure, "tame representation left a nontrivial unit");
  } else {
    out.factors.zeta_exponent = 0;
  }
  out.chi = std::move(chi);
  return out;
}

}  // namespace cycubic
