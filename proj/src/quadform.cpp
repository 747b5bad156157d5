#include "cycubic/quadform.hpp"

#include <algorithm>
#include <string>

#include "cycubic/bigint.hpp"
#include "cycubic/error.hpp"

namespace cycubic {

namespace {

// Nonnegative residue of x modulo 3.
unsigned long mod3(const mpz_class& x) { return mpz_fdiv_ui(x.get_mpz_t(), 3); }

}  // namespace

mpq_class ShanksParams::n() const {
  mpq_class q(n1, n2);
  q.canonicalize();
  return q;
}

std::size_t predicted_representation_count(const Conductor& f) noexcept {
  const std::size_t nu = f.nu();
  if (f.is_wild()) return std::size_t{1} << nu;
  return nu == 0 ? 0 : std::size_t{1} << (nu - 1);
}

bool is_normalized(const Representation& r) {
  const mpz_class four_f = 4 * to_mpz(r.conductor.value);
  if (four_f != r.M * r.M + 27 * r.N * r.N) return false;
  if (r.N <= 0) return false;
  if (!r.conductor.is_wild()) return mod3(r.M) == 2 && !r.M0;
  if (!r.M0 || r.M != 3 * *r.M0) return false;
  return mod3(*r.M0) == 2 && mod3(r.N) != 0;
}

std::vector<Representation> representations(const Conductor& f) {
  const mpz_class four_f = 4 * to_mpz(f.value);
  std::vector<Representation> out;
  mpz_class rest, root;
  for (mpz_class N = 1; 27 * N * N <= four_f; ++N) {
    rest = four_f - 27 * N * N;
    if (mpz_perfect_square_p(rest.get_mpz_t()) == 0) continue;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    // Only one of +root, -root can satisfy the mod-3 side condition (root != 0 mod 3 tame,
    // root/3 != 0 mod 3 wild); trying both keeps the search literal.
    for (const mpz_class& M : {mpz_class(root), mpz_class(-root)}) {
      Representation r{M, N, std::nullopt, f};
      if (f.is_wild()) {
        if (mpz_divisible_ui_p(M.get_mpz_t(), 3) == 0) continue;
        r.M0 = M / 3;
      }
      if (is_normalized(r)) out.push_back(std::move(r));
      if (root == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) { return a.M > b.M; });
  const std::size_t expected = predicted_representation_count(f);
  if (out.size() != expected) {
    throw Error(ErrorKind::CountMismatch, "conductor " + std::to_string(f.value) + ": found " +
                                              std::to_string(out.size()) + " representations, expected " +
                                              std::to_string(expected));
  }
  return out;
}

ShanksParams shanks_params(const Representation& r) {
  const mpz_class diff = r.M - 3 * r.N;
  if (mpz_even_p(diff.get_mpz_t()) == 0) {
    throw Error(ErrorKind::ParityError,
                "M = " + r.M.get_str() + " and N = " + r.N.get_str() + " have different parity");
  }
  ShanksParams sp;
  sp.n1 = diff / 2;
  sp.n2 = r.N;
  sp.delta = sp.n1 * sp.n1 + 3 * sp.n1 * sp.n2 + 9 * sp.n2 * sp.n2;
  return sp;
}

}  // namespace cycubic
