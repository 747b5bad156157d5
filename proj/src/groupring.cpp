#include "cycubic/groupring.hpp"

#include <cmath>
#include <stdexcept>

#include "cycubic/cubicpoly.hpp"

namespace cycubic {

GroupRingElement GroupRingElement::sigma(int k) {
  GroupRingElement x{0, 0, 0};
  switch (((k % 3) + 3) % 3) {
    case 0: x.c0 = 1; break;
    case 1: x.c1 = 1; break;
    default: x.c2 = 1; break;
  }
  return x;
}

const mpq_class& GroupRingElement::operator[](int k) const {
  switch (((k % 3) + 3) % 3) {
    case 0: return c0;
    case 1: return c1;
    default: return c2;
  }
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
}

GroupRingElement operator-(const GroupRingElement& a) { return {-a.c0, -a.c1, -a.c2}; }

GroupRingElement operator*(const mpq_class& s, const GroupRingElement& a) { return {s * a.c0, s * a.c1, s * a.c2}; }

GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y) {
  return {x.c0 * y.c0 + x.c1 * y.c2 + x.c2 * y.c1,
          x.c0 * y.c1 + x.c1 * y.c0 + x.c2 * y.c2,
          x.c0 * y.c2 + x.c1 * y.c1 + x.c2 * y.c0};
}

std::pair<GroupRingElement, GroupRingElement> idempotents() {
  const mpq_class third(1, 3);
  return {{third, third, third}, {mpq_class(2, 3), -third, -third}};
}

std::vector<GroupRingElement> unit_list_p3(bool wild) {
  std::vector<GroupRingElement> out;
  const auto e1 = idempotents().first;
  const GroupRingElement u = GroupRingElement::one() - mpq_class(2) * e1;
  for (int sign : {1, -1}) {
    for (int k = 0; k < 3; ++k) out.push_back(mpq_class(sign) * GroupRingElement::sigma(k));
  }
  if (wild) {
    for (int sign : {1, -1}) {
      for (int k = 0; k < 3; ++k) out.push_back(mpq_class(sign) * gr_mul(u, GroupRingElement::sigma(k)));
    }
  }
  return out;
}

int element_order(const GroupRingElement& x, int limit) {
  GroupRingElement p = x;
  for (int k = 1; k <= limit; ++k) {
    if (p == GroupRingElement::one()) return k;
    p = gr_mul(p, x);
  }
  return 0;
}

ConjugateVector apply(const GroupRingElement& x, const ConjugateVector& v) {
  ConjugateVector out{};
  for (int k = 0; k < 3; ++k) {
    double acc = 0.0;
    for (int j = 0; j < 3; ++j) acc += x[j].get_d() * v[static_cast<std::size_t>((k + j) % 3)];
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

namespace {

ConjugateVector alpha_vector(const FieldRecord& rec) {
  const double n1 = rec.shanks.n1.get_d(), n2 = rec.shanks.n2.get_d();
  ConjugateVector a{};
  for (std::size_t i = 0; i < 3; ++i) a[i] = n2 * rec.shanks_roots[i] - n1 / 3.0;
  return a;
}

}  // namespace

Verdict verify_generators(const FieldRecord& rec, double tolerance) {
  if (!rec.conductor.is_wild()) throw std::invalid_argument("verify_generators: wild records only");
  const auto& sp = rec.shanks;
  std::string failed;
  double residual = 0.0;

  // (a) Tr(alpha) = n2 n - n1, exactly and numerically.
  const ConjugateVector alpha = alpha_vector(rec);
  const double trace = alpha[0] + alpha[1] + alpha[2];
  residual = std::max(residual, std::abs(trace));
  if (mpq_class(sp.n2 * sp.n() - sp.n1) != 0 || std::abs(trace) > tolerance) failed += " (a) trace";

  // (b) eta_0 + 1 among +-alpha^(i) +- 1.
  const double target = rec.periods.by_coset[0] + 1.0;
  double best = INFINITY;
  for (double a : alpha) {
    for (double s : {1.0, -1.0}) {
      for (double t : {1.0, -1.0}) best = std::min(best, std::abs(target - (s * a + t)));
    }
  }
  residual = std::max(residual, best);
  if (best > tolerance) failed += " (b) eta_0 + 1 not a generator";

  // (c) h(X) = mu P(mu X); h and h(X -+ 1) integral.
  const mpq_class n2 = sp.n2;
  const mpq_class mu = rec.conductor.sign();
  const RationalCubic h = substitute_affine(mpq_class(n2 * n2 * n2) * rec.shanks_poly, 1 / n2, sp.n1 / (3 * n2));
  const RationalCubic expected = mu * substitute_affine(rec.numeric_P, mu, 0);
  const bool integral = h.is_integral() && substitute_affine(h, 1, 1).is_integral() &&
                        substitute_affine(h, 1, -1).is_integral();
  if (!(h == expected) || !integral) failed += " (c) h(X) = " + h.to_string();

  if (failed.empty()) return Verdict::pass("generators", residual);
  return Verdict::fail("generators", "GeneratorFailure:" + failed, residual);
}

Verdict verify_unit_action(const FieldRecord& rec, double tolerance) {
  const auto e1 = idempotents().first;
  const GroupRingElement u = GroupRingElement::one() - mpq_class(2) * e1;
  ConjugateVector alpha = alpha_vector(rec);
  ConjugateVector plus{}, minus{};
  for (std::size_t i = 0; i < 3; ++i) {
    plus[i] = alpha[i] + 1.0;
    minus[i] = alpha[i] - 1.0;
  }
  const ConjugateVector got = cycubic::apply(u, plus);
  double residual = 0.0;
  for (std::size_t i = 0; i < 3; ++i) residual = std::max(residual, std::abs(got[i] - minus[i]));
  if (residual <= tolerance) return Verdict::pass("unit_action", residual);
  return Verdict::fail("unit_action", "(1 - 2e1)(alpha + 1) != alpha - 1", residual);
}

}  // namespace cycubic
