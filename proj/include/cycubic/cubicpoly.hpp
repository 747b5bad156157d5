#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

#include "cycubic/arith.hpp"
#include "cycubic/quadform.hpp"
#include "cycubic/verdict.hpp"

namespace cycubic {

/// c3 X^3 + c2 X^2 + c1 X + c0 with exact rational coefficients kept in lowest terms.
class RationalCubic {
 public:
  RationalCubic() = default;
  RationalCubic(mpq_class c3, mpq_class c2, mpq_class c1, mpq_class c0);

  static RationalCubic monic(mpq_class c2, mpq_class c1, mpq_class c0) {
    return {1, std::move(c2), std::move(c1), std::move(c0)};
  }

  /// Coefficient of X^k, k in [0, 3].
  const mpq_class& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const;
  bool is_integral() const;

  long double evaluate(long double x) const;
  mpq_class evaluate(const mpq_class& x) const;

  /// Human-readable form, e.g. "X^3 - (18/5)X^2 - (33/5)X - 1".
  std::string to_string() const;

  friend bool operator==(const RationalCubic& a, const RationalCubic& b) { return a.coeffs_ == b.coeffs_; }
  friend RationalCubic operator*(const mpq_class& s, const RationalCubic& p);
  friend RationalCubic operator+(const RationalCubic& a, const RationalCubic& b);
  friend RationalCubic operator-(const RationalCubic& a, const RationalCubic& b);

 private:
  std::array<mpq_class, 4> coeffs_{};  // index k multiplies X^k
};

/// f_n(X) = X^3 - n X^2 - (n + 3) X - 1.
RationalCubic shanks_poly(const mpq_class& n);

/// Closed form of the period polynomial for a conductor and one of its representations.
/// Throws NonIntegralCoefficient if a coefficient is not an integer.
RationalCubic period_poly_formula(const Conductor& f, const Representation& r);

/// p(a X + b), expanded exactly.
RationalCubic substitute_affine(const RationalCubic& p, const mpq_class& a, const mpq_class& b);

/// n1^2 + 3 n1 n2 + 9 n2^2.
mpz_class delta(const mpz_class& n1, const mpz_class& n2);

/// Exact discriminant of a cubic (resultant formula).
mpq_class discriminant(const RationalCubic& p);

/// A cubic over Q is irreducible iff it has no rational root. Requires degree 3.
bool is_irreducible_cubic(const RationalCubic& p);

/// 3 | n1, 9 || delta and delta/9 squarefree. Requires gcd(n1, n2) = 1.
bool irreducibility_criterion_applies(const mpz_class& n1, const mpz_class& n2);

struct IdentityCheck {
  Verdict verdict;
  RationalCubic lhs;
  RationalCubic rhs;
};

/// n2^3 mu f_n(X) == P(mu (n2 X + shift)) with shift = -n1/3 (wild) or (1 - n1)/3 (tame),
/// mu = mu(f/9) or mu(f). `period_poly` is the P to test against.
IdentityCheck verify_main_identity(const Conductor& f, const ShanksParams& sp, const RationalCubic& period_poly);

/// Same, with P taken from the closed form for M = 2 n1 + 3 n2.
IdentityCheck verify_main_identity(const Conductor& f, const ShanksParams& sp);

/// disc(f_n) == (n^2 + 3n + 9)^2.
Verdict discriminant_check(const mpq_class& n);

/// The affine shift in the period relation: -n1/3 (wild) or (1 - n1)/3 (tame).
mpq_class period_shift(const Conductor& f, const ShanksParams& sp);

}  // namespace cycubic
