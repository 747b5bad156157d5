#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace cycubic {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 data model expected");

inline mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }
inline mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

inline std::optional<std::uint64_t> to_u64(const mpz_class& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) return std::nullopt;
  return static_cast<std::uint64_t>(v.get_ui());
}

/// Residue of v modulo m in [0, m).
inline std::uint64_t mod_u64(const mpz_class& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
}

/// "p/q" in lowest terms with q > 0 (integers print as "p/1").
inline std::string rational_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
mpq_class parse_rational(const std::string& text);

}  // namespace cycubic
