#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cycubic/arith.hpp"

namespace cycubic {

/// A normalized solution of 4f = M^2 + 27 N^2.
///   tame: M = 2 mod 3, N > 0
///   wild: M = 3 M0, M0 = 2 mod 3, N != 0 mod 3, N > 0
struct Representation {
  mpz_class M;
  mpz_class N;
  std::optional<mpz_class> M0;
  Conductor conductor;
};

/// Shanks parameter n = n1/n2 with n1 = (M - 3N)/2, n2 = N, and delta = n1^2 + 3 n1 n2 + 9 n2^2.
struct ShanksParams {
  mpz_class n1;
  mpz_class n2;
  mpz_class delta;

  mpq_class n() const;
  /// M = 2 n1 + 3 n2.
  mpz_class M() const { return 2 * n1 + 3 * n2; }
};

/// Number of representations predicted for a conductor: 2^(nu-1) tame, 2^nu wild.
std::size_t predicted_representation_count(const Conductor& f) noexcept;

/// Exhaustive search over 1 <= N <= floor(sqrt(4f/27)); sorted by M descending.
/// Throws CountMismatch if the count differs from the prediction.
std::vector<Representation> representations(const Conductor& f);

/// Throws ParityError when M and N have different parity.
ShanksParams shanks_params(const Representation& r);

/// True iff r satisfies 4f = M^2 + 27N^2 and the side conditions for its conductor kind.
bool is_normalized(const Representation& r);

}  // namespace cycubic
