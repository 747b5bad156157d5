#pragma once

#include <gmpxx.h>

#include <array>
#include <utility>
#include <vector>

#include "cycubic/periods.hpp"
#include "cycubic/verdict.hpp"

namespace cycubic {

/// c0 + c1 s + c2 s^2 in Q[C3], s^3 = 1.
struct GroupRingElement {
  mpq_class c0, c1, c2;

  static GroupRingElement one() { return {1, 0, 0}; }
  static GroupRingElement sigma(int k = 1);

  const mpq_class& operator[](int k) const;
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
  }
  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a);
  friend GroupRingElement operator*(const mpq_class& s, const GroupRingElement& a);
};

GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y);
inline GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) { return gr_mul(x, y); }

/// (e1, ef) = ((1 + s + s^2)/3, (2 - s - s^2)/3).
std::pair<GroupRingElement, GroupRingElement> idempotents();

/// {+-1, +-s, +-s^2}, and for wild also +-(1 - 2 e1) s^i.
std::vector<GroupRingElement> unit_list_p3(bool wild);

/// Multiplicative order, or 0 if it exceeds `limit`.
int element_order(const GroupRingElement& x, int limit = 12);

/// (x, s x, s^2 x) for an element x of a cyclic cubic field.
using ConjugateVector = std::array<double, 3>;

/// s acts as the cyclic shift (a, b, c) -> (b, c, a), extended linearly.
ConjugateVector apply(const GroupRingElement& x, const ConjugateVector& v);

/// Checks on a wild record with alpha = n2 rho - n1/3:
///  (a) Tr(alpha) = 0; (b) eta_0 + 1 is one of the 12 values +-alpha^(i) +- 1;
///  (c) h(X) = mu P(mu X) exactly, where n2^3 f_n(X) = h(n2 X - n1/3), and h, h(X -+ 1) are integral.
Verdict verify_generators(const FieldRecord& rec, double tolerance = kDefaultTolerance);

/// (1 - 2 e1)(alpha + 1) = alpha - 1 on the conjugate vector of alpha.
Verdict verify_unit_action(const FieldRecord& rec, double tolerance = kDefaultTolerance);

}  // namespace cycubic
