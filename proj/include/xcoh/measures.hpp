#pragma once

#include "xcoh/xstate.hpp"

namespace xcoh {

/// Every quantifier computed for one state. For X states the trace-distance
/// and robustness measures coincide with the l1 norm, so c_tr and c_rob are
/// exact copies of c_l1.
struct MeasureSet {
  double c_rel = 0.0;   // relative entropy of coherence, bits
  double c_l1 = 0.0;    // l1 norm of coherence
  double c_skew = 0.0;  // skew-information coherence
  double c_tr = 0.0;    // == c_l1
  double c_rob = 0.0;   // == c_l1
  double concurrence = 0.0;
  double d2 = 0.0;      // first-order coherence D^2
  double d2max = 0.0;   // hidden coherence D^2_max
};

/// S(diagonal) - S(spectrum), in bits. Nonnegative up to roundoff.
double c_rel(const XState& s);

/// 2 (|r14| + |r23|).
double c_l1(const XState& s);

/// Skew-information coherence via the algebraic reduction
/// sum_i [rho_ii - (sqrt(rho)_ii)^2]; equality with the commutator form is
/// continuously re-proven against k_coherence_summand in the tests.
double c_skew(const XState& s);

/// -1/2 Tr{[sqrt(rho), |i><i|]^2}, evaluated by explicit matrix commutator.
/// Summing over i reproduces c_skew; this is the oracle for the reduction.
double k_coherence_summand(const XState& s, int i);

/// 2 max{0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)}.
double concurrence(const XState& s);

/// (D_A^2 + D_B^2)/2 with D_i^2 = 2 Tr[rho_i^2] - 1 from the reduced states.
double d2_first_order(const XState& s);

/// (l1 - l4)^2 + (l2 - l3)^2 over the descending spectrum.
double d2_max(const XState& s);

// Analytic curves traced by the MNMS family; the skew curve is a derived
// closed form, grid-validated against c_skew(family(Mnms, eps)) before any
// verification use.
double mnms_c_rel_curve(double epsilon);   // 1 - H2((1 + eps)/2)
double mnms_c_skew_curve(double epsilon);  // (1 - sqrt(1 - eps^2))/2

enum class BoundaryAxis { CRel, CSkew };

/// Height of the MNMS boundary above abscissa c: inverts the matching curve
/// by bisection and returns the family's c_l1 (= epsilon) there. The
/// attainable abscissa range is [0, 1] for CRel and [0, 0.5] for CSkew
/// (1e-9 slack); outside it a bracket error is thrown.
double mnms_ceiling_l1(double c, BoundaryAxis axis);

MeasureSet measure_all(const XState& s);

}  // namespace xcoh
