#include "cycubic/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "cycubic/error.hpp"

namespace cycubic {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

using u128 = unsigned __int128;

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, g = 1, q = 1, x = 0, ys = 0;
    const std::uint64_t block = 128;
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split_large(d, out);
  split_large(n / d, out);
}

}  // namespace

bool Factorization::is_squarefree() const noexcept {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: arguments are not coprime");
  old_s %= static_cast<__int128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<std::uint64_t>(old_s);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t m) {
  if (m == 0) throw std::domain_error("factorize: argument must be positive");
  Factorization fac;
  fac.value = m;
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p <= kTrialLimit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  split_large(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (std::uint64_t p : primes) {
    if (!fac.factors.empty() && fac.factors.back().prime == p) {
      ++fac.factors.back().exponent;
    } else {
      fac.factors.push_back({p, 1});
    }
  }
  return fac;
}

int moebius(const Factorization& fac) noexcept {
  if (!fac.is_squarefree()) return 0;
  return fac.factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(std::uint64_t m) { return moebius(factorize(m)); }

std::uint64_t primitive_root(std::uint64_t q) {
  const Factorization qf = factorize(q);
  if (qf.factors.size() != 1 || qf.factors[0].prime == 2) {
    throw std::domain_error("primitive_root: modulus must be an odd prime power");
  }
  const std::uint64_t p = qf.factors[0].prime;
  const std::uint64_t phi = q / p * (p - 1);
  const Factorization phif = factorize(phi);
  for (std::uint64_t g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    const bool ok = std::all_of(phif.factors.begin(), phif.factors.end(), [&](const PrimePower& pp) {
      return pow_mod(g, phi / pp.prime, q) != 1;
    });
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

std::string_view to_string(Ramification kind) noexcept {
  return kind == Ramification::Tame ? "tame" : "wild";
}

std::optional<Ramification> parse_ramification(std::string_view text) noexcept {
  if (text == "tame") return Ramification::Tame;
  if (text == "wild") return Ramification::Wild;
  return std::nullopt;
}

int Conductor::sign() const noexcept {
  // prime_to_three_part is a product of nu distinct primes.
  return nu() % 2 == 0 ? 1 : -1;
}

std::optional<Conductor> try_validate_conductor(std::uint64_t f, std::string* reason) {
  auto reject = [&](std::string why) -> std::optional<Conductor> {
    if (reason) *reason = std::move(why);
    return std::nullopt;
  };
  if (f == 0) return reject("conductor must be positive");
  if (f % 2 == 0) return reject(std::to_string(f) + " is even");
  const Factorization fac = factorize(f);
  Conductor c;
  c.value = f;
  c.kind = Ramification::Tame;
  for (const PrimePower& pp : fac.factors) {
    if (pp.prime == 3) {
      if (pp.exponent != 2) {
        return reject("the 3-part of " + std::to_string(f) + " is 3^" + std::to_string(pp.exponent) +
                      ", expected 1 or 9");
      }
      c.kind = Ramification::Wild;
      continue;
    }
    if (pp.exponent != 1) {
      return reject(std::to_string(f) + " is not squarefree away from 9 (" + std::to_string(pp.prime) +
                    "^" + std::to_string(pp.exponent) + " divides it)");
    }
    if (pp.prime % 3 != 1) {
      return reject("prime " + std::to_string(pp.prime) + " divides " + std::to_string(f) +
                    " and is 2 mod 3");
    }
    c.odd_primes.push_back(pp.prime);
  }
  if (c.kind == Ramification::Tame && c.odd_primes.empty()) {
    return reject("1 is not a conductor (a tame conductor needs at least one prime)");
  }
  return c;
}

Conductor validate_conductor(std::uint64_t f) {
  std::string reason;
  auto c = try_validate_conductor(f, &reason);
  if (!c) throw Error(ErrorKind::InvalidConductor, reason);
  return *std::move(c);
}

std::vector<Conductor> conductors_in_range(std::uint64_t lo, std::uint64_t hi,
                                           std::optional<Ramification> kind) {
  std::vector<Conductor> out;
  for (std::uint64_t f = std::max<std::uint64_t>(lo, 1); f <= hi; ++f) {
    // Cheap prefilters; the full check is try_validate_conductor.
    if (f % 2 == 0 || f % 27 == 0 || (f % 3 == 0 && f % 9 != 0)) continue;
    if (kind && (*kind == Ramification::Wild) != (f % 9 == 0)) continue;
    if (auto c = try_validate_conductor(f)) out.push_back(*std::move(c));
  }
  return out;
}

std::vector<Conductor> conductors_up_to(std::uint64_t bound, std::optional<Ramification> kind) {
  return conductors_in_range(1, bound, kind);
}

}  // namespace cycubic
