#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycubic/quadform.hpp"

namespace cycubic {

/// a + b zeta, zeta = exp(2 pi i / 3), zeta^2 = -1 - zeta.
struct EisensteinInt {
  mpz_class a;
  mpz_class b;

  static EisensteinInt zeta_power(int k);
  /// sqrt(-3) = 1 + 2 zeta.
  static EisensteinInt sqrt_minus_three() { return {1, 2}; }

  bool is_zero() const { return a == 0 && b == 0; }
  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x);
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);

/// a^2 - ab + b^2.
mpz_class norm(const EisensteinInt& x);
EisensteinInt conj(const EisensteinInt& x);

/// x / y when y divides x exactly.
std::optional<EisensteinInt> divide_exact(const EisensteinInt& x, const EisensteinInt& y);
bool divides(const EisensteinInt& y, const EisensteinInt& x);

/// Nearest-lattice-point quotient; the remainder has norm < norm(y).
EisensteinInt euclidean_quotient(const EisensteinInt& x, const EisensteinInt& y);

/// The six unit multiples of x, in the order 1, zeta, zeta^2, -1, -zeta, -zeta^2.
std::vector<EisensteinInt> associates(const EisensteinInt& x);

/// Associate with a > 0 and b >= 0, smallest b on ties; zero maps to zero.
EisensteinInt canonical_associate(const EisensteinInt& x);

/// Canonical gcd; not both arguments zero.
EisensteinInt eis_gcd(EisensteinInt x, EisensteinInt y);

bool congruent_one_mod_three(const EisensteinInt& x);

/// The unique associate congruent to 1 mod 3 (requires 3 not dividing norm(x)).
EisensteinInt primary_associate(const EisensteinInt& x);

/// Nearest Eisenstein integer to a complex number, with the distance to it.
std::pair<EisensteinInt, double> nearest_eisenstein(std::complex<double> z);

/// (M + 3N sqrt(-3)) / 2 = 3^w zeta^e pi_1 ... pi_nu with w = 1 (wild) or 0 (tame),
/// e in {-1, +1} (wild) or 0 (tame), norm(pi_i) = p_i, pi_i = 1 mod 3.
struct RhsFactorization {
  EisensteinInt rhs;
  int zeta_exponent = 0;
  std::vector<std::uint64_t> primes;
  std::vector<EisensteinInt> pis;
};

/// Throws FactorizationMismatch if the product does not reproduce the left side.
RhsFactorization factor_rhs(const Representation& r);

/// A Dirichlet character of order dividing 3, stored as exponents of zeta:
/// values[a] in {0, 1, 2} for gcd(a, modulus) = 1, -1 otherwise.
struct CubicCharacter {
  std::uint64_t modulus = 1;
  std::uint64_t conductor = 1;
  std::vector<std::int8_t> values;

  int operator()(std::uint64_t a) const { return values[a % modulus]; }
  CubicCharacter conjugate() const;
  /// The kernel as a sorted residue list.
  std::vector<std::uint64_t> kernel() const;
  /// Same kernel (a character and its conjugate share one).
  bool same_kernel(const CubicCharacter& other) const;
};

/// a -> e with a^((p-1)/3) = zeta^e (mod pi), realized through the residue of zeta mod pi.
/// Throws NotPrimitiveRoot if the power lands outside {1, zeta, zeta^2}.
CubicCharacter cubic_residue_character(std::uint64_t p, const EisensteinInt& pi);

/// a -> sign (a^2 - 1)/3 mod 3 on (Z/9Z)^x.
CubicCharacter chi9(int sign);

/// Character mod m1 m2 from characters with coprime moduli (CRT).
CubicCharacter character_product(const CubicCharacter& x, const CubicCharacter& y);

/// tau(chi) = sum over units a of zeta^chi(a) exp(2 pi i a / modulus).
std::complex<double> gaussian_sum(const CubicCharacter& chi);

struct CharacterConstruction {
  CubicCharacter chi;
  RhsFactorization factors;
  /// tau(chi_{p_i}) for each prime, and max |-tau^3/p - pi| over them.
  std::vector<std::complex<double>> prime_gauss_sums;
  double normalization_residual = 0.0;
  /// Wild only: tau(chi_9), and whether tau or tau^3 equals 27 zeta^{+-1} within tolerance.
  std::optional<std::complex<double>> tau9;
  bool tau9_equals_27_zeta = false;
  bool tau9_cubed_equals_27_zeta = false;
};

/// chi = [chi_9] chi_{p_1} ... chi_{p_nu}, normalized by -tau(chi_{p_i})^3 = p_i pi_i.
/// Throws NormalizationFailure if no associate choice satisfies the Gauss-sum condition.
CharacterConstruction character_for_representation(const Representation& r, double tolerance = 1e-6);

}  // namespace cycubic
