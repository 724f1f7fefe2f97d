#include "xcoh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xcoh {

namespace {

using Mat4 = std::array<Complex, 16>;

Mat4 to_mat(const Herm4& h) {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i * 4 + j] = h(i, j);
  return m;
}

Mat4 mul(const Mat4& x, const Mat4& y) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex xik = x[i * 4 + k];
      for (int j = 0; j < 4; ++j) out[i * 4 + j] += xik * y[k * 4 + j];
    }
  return out;
}

Mat4 sub(const Mat4& x, const Mat4& y) {
  Mat4 out;
  for (int i = 0; i < 16; ++i) out[i] = x[i] - y[i];
  return out;
}

Complex trace(const Mat4& x) {
  return x[0] + x[5] + x[10] + x[15];
}

}  // namespace

double c_rel(const XState& s) {
  const auto diag = s.diagonal();
  const auto spectrum = eigenvalues_closed_form(s);
  return shannon_entropy(diag) - shannon_entropy(spectrum);
}

double c_l1(const XState& s) {
  return 2.0 * (std::abs(s.r14()) + std::abs(s.r23()));
}

double c_skew(const XState& s) {
  const Herm4 root = sqrt_xstate(s);
  const auto diag = s.diagonal();
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double rii = root.diag(i);
    total += diag[i] - rii * rii;
  }
  return total;
}

double k_coherence_summand(const XState& s, int i) {
  if (i < 0 || i > 3)
    throw std::out_of_range("k_coherence_summand: basis index out of range");
  const Mat4 root = to_mat(sqrt_xstate(s));
  Mat4 projector{};
  projector[i * 4 + i] = Complex(1.0, 0.0);
  const Mat4 comm = sub(mul(root, projector), mul(projector, root));
  return -0.5 * trace(mul(comm, comm)).real();
}

double concurrence(const XState& s) {
  const double outer =
      std::abs(s.r14()) - std::sqrt(std::max(0.0, s.r22() * s.r33()));
  const double inner =
      std::abs(s.r23()) - std::sqrt(std::max(0.0, s.r11() * s.r44()));
  return 2.0 * std::max({0.0, outer, inner});
}

double d2_first_order(const XState& s) {
  const double da2 = 2.0 * purity(reduced_diagonal(s, Subsystem::A)) - 1.0;
  const double db2 = 2.0 * purity(reduced_diagonal(s, Subsystem::B)) - 1.0;
  return 0.5 * (da2 + db2);
}

double d2_max(const XState& s) {
  const auto ev = eigenvalues_closed_form(s);
  const double a = ev[0] - ev[3];
  const double b = ev[1] - ev[2];
  return a * a + b * b;
}

double mnms_c_rel_curve(double epsilon) {
  return 1.0 - binary_entropy(0.5 * (1.0 + epsilon));
}

double mnms_c_skew_curve(double epsilon) {
  const double rad = std::max(0.0, (1.0 - epsilon) * (1.0 + epsilon));
  return 0.5 * (1.0 - std::sqrt(rad));
}

double mnms_ceiling_l1(double c, BoundaryAxis axis) {
  const double hi = axis == BoundaryAxis::CRel ? 1.0 : 0.5;
  constexpr double slack = 1e-9;
  if (c < -slack || c > hi + slack)
    throw std::domain_error(
        "mnms_ceiling_l1: abscissa outside the attainable range");
  const double target = std::clamp(c, 0.0, hi);
  if (axis == BoundaryAxis::CRel)
    return bisect_monotone(mnms_c_rel_curve, target, 0.0, 1.0);
  return bisect_monotone(mnms_c_skew_curve, target, 0.0, 1.0);
}

MeasureSet measure_all(const XState& s) {
  MeasureSet m;
  m.c_rel = c_rel(s);
  m.c_l1 = c_l1(s);
  m.c_skew = c_skew(s);
  m.c_tr = m.c_l1;
  m.c_rob = m.c_l1;
  m.concurrence = concurrence(s);
  m.d2 = d2_first_order(s);
  m.d2max = d2_max(s);
  return m;
}

}  // namespace xcoh
