#include "xcoh/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <utility>

namespace xcoh {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// splitmix64 stream keyed on (seed, index); bit-exact and dependency-free.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index)
      : state_(mix64(seed ^ mix64(index * kGolden + 0x632BE59BD9B4E019ull))) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // uniform on [0, 1)
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace

TraceError::TraceError(double trace)
    : ValidationError("trace = " + fmt_double(trace) +
                      " (diagonals must sum to 1 within 1e-12)"),
      trace_(trace) {}

PositivityError::PositivityError(std::string constraint, double violation)
    : ValidationError(constraint + " violated by " + fmt_double(violation)),
      constraint_(std::move(constraint)),
      violation_(violation) {}

XState XState::make(double r11, double r22, double r33, double r44,
                    Complex r14, Complex r23) {
  const double trace = r11 + r22 + r33 + r44;
  if (std::abs(trace - 1.0) > kValidationSlack) throw TraceError(trace);
  const std::array<std::pair<const char*, double>, 4> diag = {
      {{"rho11 >= 0", r11},
       {"rho22 >= 0", r22},
       {"rho33 >= 0", r33},
       {"rho44 >= 0", r44}}};
  for (const auto& [name, value] : diag)
    if (value < -kValidationSlack) throw PositivityError(name, -value);
  const double outer = r11 * r44 - std::norm(r14);
  if (outer < -kValidationSlack)
    throw PositivityError("rho11*rho44 >= |rho14|^2", -outer);
  const double inner = r22 * r33 - std::norm(r23);
  if (inner < -kValidationSlack)
    throw PositivityError("rho22*rho33 >= |rho23|^2", -inner);
  return XState(r11, r22, r33, r44, r14, r23);
}

XState canonicalize(const XState& s) {
  return XState::make(s.r11(), s.r22(), s.r33(), s.r44(),
                      Complex(std::abs(s.r14()), 0.0),
                      Complex(std::abs(s.r23()), 0.0));
}

Herm4 to_herm4(const XState& s) {
  Herm4 m;
  m.set(0, 0, s.r11());
  m.set(1, 1, s.r22());
  m.set(2, 2, s.r33());
  m.set(3, 3, s.r44());
  m.set(0, 3, s.r14());
  m.set(1, 2, s.r23());
  return m;
}

std::array<double, 4> eigenvalues_closed_form(const XState& s) {
  const double ho = s.r11() + s.r44();
  const double go =
      std::sqrt((s.r11() - s.r44()) * (s.r11() - s.r44()) + 4.0 * std::norm(s.r14()));
  const double hi = s.r22() + s.r33();
  const double gi =
      std::sqrt((s.r22() - s.r33()) * (s.r22() - s.r33()) + 4.0 * std::norm(s.r23()));
  std::array<double, 4> ev = {0.5 * (ho + go), 0.5 * (ho - go),
                              0.5 * (hi + gi), 0.5 * (hi - gi)};
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

Herm4 sqrt_xstate(const XState& s) {
  const Herm2 outer_root = sqrt_psd_2x2({s.r11(), s.r44(), s.r14()});
  const Herm2 inner_root = sqrt_psd_2x2({s.r22(), s.r33(), s.r23()});
  Herm4 root;
  root.set(0, 0, outer_root.a);
  root.set(3, 3, outer_root.d);
  root.set(0, 3, outer_root.b);
  root.set(1, 1, inner_root.a);
  root.set(2, 2, inner_root.d);
  root.set(1, 2, inner_root.b);
  return root;
}

std::array<double, 2> reduced_diagonal(const XState& s, Subsystem which) {
  if (which == Subsystem::A)
    return {s.r11() + s.r22(), s.r33() + s.r44()};
  return {s.r11() + s.r33(), s.r22() + s.r44()};
}

double purity(const std::array<double, 2>& diag2) {
  return diag2[0] * diag2[0] + diag2[1] * diag2[1];
}

XState mix(const XState& s1, const XState& s2, double p) {
  if (p < -kValidationSlack || p > 1.0 + kValidationSlack)
    throw std::domain_error("mix: p = " + fmt_double(p) + " outside [0, 1]");
  p = std::clamp(p, 0.0, 1.0);
  const double q = 1.0 - p;
  return XState::make(p * s1.r11() + q * s2.r11(), p * s1.r22() + q * s2.r22(),
                      p * s1.r33() + q * s2.r33(), p * s1.r44() + q * s2.r44(),
                      p * s1.r14() + q * s2.r14(), p * s1.r23() + q * s2.r23());
}

double mems_g(double epsilon) {
  return epsilon >= 2.0 / 3.0 ? 0.5 * epsilon : 1.0 / 3.0;
}

XState family(FamilyKind kind, double epsilon) {
  if (epsilon < -kValidationSlack || epsilon > 1.0 + kValidationSlack)
    throw std::domain_error("family: epsilon = " + fmt_double(epsilon) +
                            " outside [0, 1]");
  epsilon = std::clamp(epsilon, 0.0, 1.0);
  const Complex zero{0.0, 0.0};
  switch (kind) {
    case FamilyKind::Mnms:
      return XState::make(0.5, 0.0, 0.0, 0.5, Complex(0.5 * epsilon, 0.0),
                          zero);
    case FamilyKind::Werner: {
      const double hi = 0.25 * (1.0 + epsilon);
      const double lo = 0.25 * (1.0 - epsilon);
      return XState::make(hi, lo, lo, hi, Complex(0.5 * epsilon, 0.0), zero);
    }
    case FamilyKind::Mems: {
      const double g = mems_g(epsilon);
      return XState::make(g, 1.0 - 2.0 * g, 0.0, g,
                          Complex(0.5 * epsilon, 0.0), zero);
    }
    case FamilyKind::RhoL:
      return XState::make(0.5 * epsilon, 1.0 - epsilon, 0.0, 0.5 * epsilon,
                          Complex(0.5 * epsilon, 0.0), zero);
  }
  throw std::logic_error("family: unknown kind");
}

XState family(const FamilySpec& spec) { return family(spec.kind, spec.epsilon); }

XState sample_random(std::uint64_t seed, std::uint64_t index, bool phases) {
  CounterRng rng(seed, index);
  std::array<double, 4> expo;
  double sum = 0.0;
  for (double& e : expo) {
    e = -std::log1p(-rng.next_unit());
    sum += e;
  }
  std::array<double, 4> diag;
  if (sum <= 0.0) {
    diag = {0.25, 0.25, 0.25, 0.25};
  } else {
    for (int i = 0; i < 4; ++i) diag[i] = expo[i] / sum;
  }
  const double m14 = rng.next_unit() * std::sqrt(diag[0] * diag[3]);
  const double m23 = rng.next_unit() * std::sqrt(diag[1] * diag[2]);
  Complex r14(m14, 0.0);
  Complex r23(m23, 0.0);
  if (phases) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    r14 = std::polar(m14, two_pi * rng.next_unit());
    r23 = std::polar(m23, two_pi * rng.next_unit());
  }
  return XState::make(diag[0], diag[1], diag[2], diag[3], r14, r23);
}

}  // namespace xcoh
