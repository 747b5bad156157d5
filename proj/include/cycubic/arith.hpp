#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cycubic {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of `value`; `factors` sorted by strictly increasing prime.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  bool is_squarefree() const noexcept;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Modular helpers on 64-bit residues (128-bit intermediates).
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;
/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// Trial division up to 10^6, then Pollard-rho (Brent) on the cofactor.
Factorization factorize(std::uint64_t m);

int moebius(std::uint64_t m);
int moebius(const Factorization& fac) noexcept;

/// Smallest primitive root modulo an odd prime power q = p^k (p odd).
std::uint64_t primitive_root(std::uint64_t q);

enum class Ramification { Tame, Wild };

std::string_view to_string(Ramification kind) noexcept;
std::optional<Ramification> parse_ramification(std::string_view text) noexcept;

/// A conductor of a cyclic cubic field: p_1...p_nu (tame) or 9 p_1...p_nu (wild),
/// all p_i distinct and congruent to 1 mod 3.
struct Conductor {
  std::uint64_t value = 0;
  Ramification kind = Ramification::Tame;
  std::vector<std::uint64_t> odd_primes;

  std::size_t nu() const noexcept { return odd_primes.size(); }
  bool is_wild() const noexcept { return kind == Ramification::Wild; }
  /// value / 9 for wild conductors, value otherwise.
  std::uint64_t prime_to_three_part() const noexcept { return is_wild() ? value / 9 : value; }
  /// mu(f) for tame, mu(f/9) for wild: the sign appearing in the main identity.
  int sign() const noexcept;

  friend bool operator==(const Conductor&, const Conductor&) = default;
};

/// Throws Error{InvalidConductor} with the reason when f is not of the required shape.
Conductor validate_conductor(std::uint64_t f);

/// Non-throwing variant; fills `reason` on rejection when given.
std::optional<Conductor> try_validate_conductor(std::uint64_t f, std::string* reason = nullptr);

std::vector<Conductor> conductors_up_to(std::uint64_t bound,
                                        std::optional<Ramification> kind = std::nullopt);

/// Conductors in [lo, hi], ascending.
std::vector<Conductor> conductors_in_range(std::uint64_t lo, std::uint64_t hi,
                                           std::optional<Ramification> kind = std::nullopt);

}  // namespace cycubic
