#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cycubic/arith.hpp"
#include "cycubic/cubicpoly.hpp"
#include "cycubic/eisenstein.hpp"
#include "cycubic/kernels.hpp"
#include "cycubic/quadform.hpp"
#include "cycubic/verdict.hpp"

namespace cycubic {

inline constexpr double kDefaultTolerance = 1e-6;

/// One cyclic factor of (Z/fZ)^x: `generator` generates (Z/qZ)^x, `lifted` is the residue
/// mod f that is `generator` mod q and 1 mod every other component.
struct UnitGroupComponent {
  std::uint64_t prime_power = 0;
  std::uint64_t generator = 0;
  std::uint64_t lifted = 0;
  std::uint64_t order = 0;
};

struct UnitGroup {
  std::uint64_t modulus = 0;
  std::vector<UnitGroupComponent> components;

  std::uint64_t order() const noexcept;
};

UnitGroup unit_group(const Conductor& f);

/// Kernel of a conjugate pair of primitive cubic characters mod f. The character is chi with
/// chi(lifted generator j) = zeta^exponents[j]; exponents[0] == 1 picks one of the pair.
struct CubicKernel {
  std::vector<int> exponents;
  std::shared_ptr<const CubicCharacter> character;

  bool contains(std::uint64_t a) const { return (*character)(a) == 0; }
  std::vector<std::uint64_t> residues() const { return character->kernel(); }
  std::span<const std::int8_t> labels() const { return character->values; }
};

/// 2^(nu-1) kernels (tame) or 2^nu (wild); throws CountMismatch otherwise.
std::vector<CubicKernel> primitive_cubic_kernels(const Conductor& f);

/// eta[] is sorted descending; by_coset[0] is the trace of zeta_f (the coset of 1),
/// by_coset[1] and by_coset[2] the cosets where the kernel character takes zeta, zeta^2.
struct PeriodTriple {
  std::array<double, 3> eta{};
  std::array<double, 3> by_coset{};
  double imag_residual = 0.0;
  double sum_residual = 0.0;
};

/// Throws ToleranceExceeded when imaginary parts or the trace identity miss by more than `tolerance`.
PeriodTriple gaussian_periods(const Conductor& f, const CubicKernel& kernel, double tolerance = kDefaultTolerance);
PeriodTriple gaussian_periods(const Conductor& f, const CubicKernel& kernel, const kernels::RootTable& roots,
                              double tolerance = kDefaultTolerance);

/// (X - eta0)(X - eta1)(X - eta2) rounded to integers. Throws RoundingFailure if some
/// coefficient is farther than `tolerance` from an integer; `residual` receives the max distance.
RationalCubic numeric_period_poly(const PeriodTriple& pt, double tolerance = kDefaultTolerance,
                                  double* residual = nullptr);

/// Three real roots, sorted descending. Throws ComplexRoots if the discriminant is not positive.
std::array<double, 3> real_roots_cubic(const RationalCubic& p);

/// max |a_i - b_i| after sorting both triples (optimal matching on the line).
double multiset_distance(std::array<double, 3> a, std::array<double, 3> b);

struct FieldRecord {
  Conductor conductor;
  Representation representation;
  ShanksParams shanks;
  RationalCubic shanks_poly;
  RationalCubic predicted_P;
  RationalCubic numeric_P;
  double rounding_residual = 0.0;
  CubicKernel kernel;
  PeriodTriple periods;
  std::array<double, 3> shanks_roots{};
  std::map<std::string, Verdict> verdicts;
  /// False for records built from the closed form alone (no kernel, periods or verdicts).
  bool matched = false;

  void add(Verdict v) { verdicts[v.name] = std::move(v); }
  bool all_pass() const;
  double max_residual() const;
};

/// Representation, Shanks data and closed-form P for every representation; no numerics.
std::vector<FieldRecord> enumerate_fields(const Conductor& f);

/// Pairs every representation with the kernel whose numeric period polynomial equals the
/// closed form; throws MatchingFailure unless this is a bijection. Each record carries the
/// exact and numeric verdicts that need nothing beyond this module.
std::vector<FieldRecord> match_fields(const Conductor& f, double tolerance = kDefaultTolerance);

/// {eta_i} == {mu (n2 rho + shift)} as multisets within `tolerance`.
Verdict verify_period_relation(const FieldRecord& rec, double tolerance = kDefaultTolerance);

/// Wild records: eta0 eta1 eta2 = (-1)^(nu+1) mod 3 and f M / 27 = p_1...p_nu M0 = -1 mod 3.
Verdict verify_sign_congruences(const FieldRecord& rec);

}  // namespace cycubic
