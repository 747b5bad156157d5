#include "cycubic/cubicpoly.hpp"

#include <stdexcept>
#include <vector>

#include "cycubic/bigint.hpp"
#include "cycubic/error.hpp"

namespace cycubic {

namespace {

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

std::vector<mpz_class> positive_divisors(const mpz_class& v) {
  const auto small = to_u64(abs(v));
  if (!small) throw std::domain_error("rational-root search: coefficient exceeds 64 bits");
  const Factorization fac = factorize(*small);
  std::vector<mpz_class> divs{1};
  for (const PrimePower& pp : fac.factors) {
    const std::size_t base = divs.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= to_mpz(pp.prime);
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

RationalCubic::RationalCubic(mpq_class c3, mpq_class c2, mpq_class c1, mpq_class c0)
    : coeffs_{canonical(std::move(c0)), canonical(std::move(c1)), canonical(std::move(c2)),
              canonical(std::move(c3))} {}

int RationalCubic::degree() const {
  for (int k = 3; k >= 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
  }
  return -1;
}

bool RationalCubic::is_integral() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

long double RationalCubic::evaluate(long double x) const {
  long double acc = 0;
  for (int k = 3; k >= 0; --k) acc = acc * x + static_cast<long double>(coeffs_[static_cast<std::size_t>(k)].get_d());
  return acc;
}

mpq_class RationalCubic::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (int k = 3; k >= 0; --k) acc = acc * x + coeffs_[static_cast<std::size_t>(k)];
  return acc;
}

std::string RationalCubic::to_string() const {
  std::string out;
  for (int k = 3; k >= 0; --k) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    const mpq_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mag_str;
    if (mag.get_den() == 1) {
      mag_str = mag.get_num().get_str();
    } else {
      mag_str = "(" + mag.get_num().get_str() + "/" + mag.get_den().get_str() + ")";
    }
    if (k == 0) {
      out += mag_str;
    } else {
      if (mag != 1) out += mag_str;
      out += k == 1 ? "X" : "X^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

RationalCubic operator*(const mpq_class& s, const RationalCubic& p) {
  RationalCubic out;
  for (std::size_t k = 0; k < 4; ++k) out.coeffs_[k] = canonical(s * p.coeffs_[k]);
  return out;
}

RationalCubic operator+(const RationalCubic& a, const RationalCubic& b) {
  RationalCubic out;
  for (std::size_t k = 0; k < 4; ++k) out.coeffs_[k] = canonical(a.coeffs_[k] + b.coeffs_[k]);
  return out;
}

RationalCubic operator-(const RationalCubic& a, const RationalCubic& b) {
  RationalCubic out;
  for (std::size_t k = 0; k < 4; ++k) out.coeffs_[k] = canonical(a.coeffs_[k] - b.coeffs_[k]);
  return out;
}

RationalCubic shanks_poly(const mpq_class& n) { return RationalCubic::monic(-n, -(n + 3), -1); }

RationalCubic period_poly_formula(const Conductor& f, const Representation& r) {
  const mpq_class fq(to_mpz(f.value));
  const mpq_class M(r.M);
  RationalCubic p;
  if (f.is_wild()) {
    const int mu = moebius(f.value / 9);
    p = RationalCubic::monic(0, -fq / 3, -mu * fq * M / 27);
  } else {
    const int mu = moebius(f.value);
    p = RationalCubic::monic(-mu, (1 - fq) / 3, -mu * ((M - 3) * fq + 1) / 27);
  }
  if (!p.is_integral()) {
    throw Error(ErrorKind::NonIntegralCoefficient,
                "conductor " + std::to_string(f.value) + " with M = " + r.M.get_str() + " gives " + p.to_string());
  }
  return p;
}

RationalCubic substitute_affine(const RationalCubic& p, const mpq_class& a, const mpq_class& b) {
  // Horner in the polynomial ring: acc <- acc * (aX + b) + c_k.
  std::array<mpq_class, 4> acc{};
  for (int k = 3; k >= 0; --k) {
    std::array<mpq_class, 4> next{};
    for (std::size_t i = 0; i < 3; ++i) {
      next[i + 1] += acc[i] * a;
      next[i] += acc[i] * b;
    }
    next[0] += p.coeff(k);
    acc = std::move(next);
  }
  return {acc[3], acc[2], acc[1], acc[0]};
}

mpz_class delta(const mpz_class& n1, const mpz_class& n2) { return n1 * n1 + 3 * n1 * n2 + 9 * n2 * n2; }

mpq_class discriminant(const RationalCubic& p) {
  const mpq_class &a = p.coeff(3), &b = p.coeff(2), &c = p.coeff(1), &d = p.coeff(0);
  return canonical(b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d);
}

bool is_irreducible_cubic(const RationalCubic& p) {
  if (p.degree() != 3) throw std::invalid_argument("is_irreducible_cubic: degree must be 3");
  mpz_class den = 1;
  for (int k = 0; k <= 3; ++k) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.coeff(k).get_den_mpz_t());
  std::array<mpz_class, 4> a;
  for (int k = 0; k <= 3; ++k) {
    const mpq_class scaled = p.coeff(k) * den;
    a[static_cast<std::size_t>(k)] = scaled.get_num();
  }
  if (a[0] == 0) return false;
  const auto scaled_value = [&](const mpz_class& r, const mpz_class& s) -> mpz_class {
    // s^3 * p(r/s) over the integers.
    return a[3] * r * r * r + a[2] * r * r * s + a[1] * r * s * s + a[0] * s * s * s;
  };
  const auto numerators = positive_divisors(a[0]);
  const auto denominators = positive_divisors(a[3]);
  for (const mpz_class& r : numerators) {
    for (const mpz_class& s : denominators) {
      if (scaled_value(r, s) == 0 || scaled_value(-r, s) == 0) return false;
    }
  }
  return true;
}

bool irreducibility_criterion_applies(const mpz_class& n1, const mpz_class& n2) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
  if (g != 1) throw std::invalid_argument("irreducibility_criterion_applies: n1 and n2 must be coprime");
  if (mpz_divisible_ui_p(n1.get_mpz_t(), 3) == 0) return false;
  const mpz_class d = delta(n1, n2);
  if (mpz_divisible_ui_p(d.get_mpz_t(), 9) == 0 || mpz_divisible_ui_p(d.get_mpz_t(), 27) != 0) return false;
  const auto rest = to_u64(mpz_class(d / 9));
  if (!rest) throw std::domain_error("irreducibility_criterion_applies: delta/9 exceeds 64 bits");
  return factorize(*rest).is_squarefree();
}

mpq_class period_shift(const Conductor& f, const ShanksParams& sp) {
  if (f.is_wild()) return canonical(mpq_class(-sp.n1, 3));
  return canonical(mpq_class(1 - sp.n1, 3));
}

IdentityCheck verify_main_identity(const Conductor& f, const ShanksParams& sp, const RationalCubic& period_poly) {
  const int mu = f.sign();
  const mpq_class n2(sp.n2);
  IdentityCheck out;
  out.lhs = mpq_class(mu * sp.n2 * sp.n2 * sp.n2) * shanks_poly(sp.n());
  out.rhs = substitute_affine(period_poly, mu * n2, mu * period_shift(f, sp));
  if (out.lhs == out.rhs) {
    out.verdict = Verdict::pass("main_identity");
    return out;
  }
  std::string diff;
  for (int k = 3; k >= 0; --k) {
    if (out.lhs.coeff(k) != out.rhs.coeff(k)) {
      diff += " X^" + std::to_string(k) + ": " + rational_string(out.lhs.coeff(k)) + " vs " +
              rational_string(out.rhs.coeff(k)) + ";";
    }
  }
  out.verdict = Verdict::fail("main_identity", "IdentityFailure:" + diff, 1.0);
  return out;
}

IdentityCheck verify_main_identity(const Conductor& f, const ShanksParams& sp) {
  const Representation r{sp.M(), sp.n2, f.is_wild() ? std::optional<mpz_class>(sp.M() / 3) : std::nullopt, f};
  return verify_main_identity(f, sp, period_poly_formula(f, r));
}

Verdict discriminant_check(const mpq_class& n) {
  const mpq_class disc = discriminant(shanks_poly(n));
  const mpq_class base = n * n + 3 * n + 9;
  const mpq_class expected = canonical(base * base);
  if (disc == expected) return Verdict::pass("discriminant", 0.0, rational_string(disc));
  return Verdict::fail("discriminant",
                       "IdentityFailure: disc = " + rational_string(disc) + ", expected " + rational_string(expected), 1.0);
}

}  // namespace cycubic
