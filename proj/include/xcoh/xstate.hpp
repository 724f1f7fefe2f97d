#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "xcoh/numerics.hpp"

namespace xcoh {

/// Slack applied to every inequality constraint during validation, so that
/// states round-tripped through CSV are never rejected.
inline constexpr double kValidationSlack = 1e-12;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Diagonal entries do not sum to one.
class TraceError : public ValidationError {
 public:
  explicit TraceError(double trace);
  double trace() const { return trace_; }

 private:
  double trace_;
};

/// A diagonal entry is negative, or a coherence exceeds its geometric-mean
/// bound. constraint() names the violated inequality, violation() says by
/// how much it failed.
class PositivityError : public ValidationError {
 public:
  PositivityError(std::string constraint, double violation);
  const std::string& constraint() const { return constraint_; }
  double violation() const { return violation_; }

 private:
  std::string constraint_;
  double violation_;
};

/// Two-qubit X-state density matrix in the computational basis: four diagonal
/// populations plus the two anti-diagonal coherences r14 (the {|00>,|11>}
/// block) and r23 (the {|01>,|10>} block). Validated on construction,
/// immutable afterwards, so instances may be shared freely across threads.
class XState {
 public:
  /// Validates trace = 1, nonnegative diagonals, r11*r44 >= |r14|^2 and
  /// r22*r33 >= |r23|^2 (all with kValidationSlack). Throws TraceError or
  /// PositivityError.
  static XState make(double r11, double r22, double r33, double r44,
                     Complex r14, Complex r23);

  double r11() const { return r11_; }
  double r22() const { return r22_; }
  double r33() const { return r33_; }
  double r44() const { return r44_; }
  Complex r14() const { return r14_; }
  Complex r23() const { return r23_; }

  std::array<double, 4> diagonal() const { return {r11_, r22_, r33_, r44_}; }

 private:
  XState(double r11, double r22, double r33, double r44, Complex r14,
         Complex r23)
      : r11_(r11), r22_(r22), r33_(r33), r44_(r44), r14_(r14), r23_(r23) {}

  double r11_, r22_, r33_, r44_;
  Complex r14_, r23_;
};

/// Replaces both coherences by their moduli. Every quantifier in this
/// library is invariant under this map (a tested property, not an
/// assumption).
XState canonicalize(const XState& s);

/// Full 4x4 density matrix, for the oracle eigensolver.
Herm4 to_herm4(const XState& s);

/// Closed-form spectrum, sorted descending. The {|01>,|10>} block radicand
/// uses |r23|^2 for both of its eigenvalues.
std::array<double, 4> eigenvalues_closed_form(const XState& s);

/// Principal square root of the density matrix, assembled from the two
/// 2x2 block square roots.
Herm4 sqrt_xstate(const XState& s);

enum class Subsystem { A, B };

/// Diagonal of the reduced single-qubit state; the off-diagonals vanish
/// identically for X states.
std::array<double, 2> reduced_diagonal(const XState& s, Subsystem which);

/// p^2 + q^2 for a single-qubit diagonal (p, q) with p + q = 1.
double purity(const std::array<double, 2>& diag2);

/// Convex combination p*s1 + (1-p)*s2; the X form is closed under mixing.
XState mix(const XState& s1, const XState& s2, double p);

enum class FamilyKind { Mnms, Werner, Mems, RhoL };

struct FamilySpec {
  FamilyKind kind;
  double epsilon;  // in [0, 1]
};

/// MEMS diagonal parameter: epsilon/2 for epsilon >= 2/3, else 1/3.
double mems_g(double epsilon);

XState family(FamilyKind kind, double epsilon);
XState family(const FamilySpec& spec);

/// Deterministic counter-based sampler: the state is a pure function of
/// (seed, index), so ensemble generation parallelizes with reproducible,
/// order-independent results. Diagonals are uniform on the 3-simplex
/// (normalized unit exponentials); |r14| is then uniform on
/// [0, sqrt(r11*r44)] and |r23| on [0, sqrt(r22*r33)]. Phases are zero
/// unless `phases` is set, in which case they are uniform on [0, 2pi).
XState sample_random(std::uint64_t seed, std::uint64_t index,
                     bool phases = false);

}  // namespace xcoh
