#pragma once

#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xcoh/ensemble.hpp"

namespace xcoh {

/// Outcome of one claim checker. `worst_margin` is the minimum signed slack
/// observed: for "lhs >= rhs" claims it is min(lhs - rhs), for equality
/// claims it is -max|deviation|. A check counts as a violation when its
/// margin falls below -tolerance (strict claims use tolerance 0 and count
/// margin <= 0). pass holds exactly when violations == 0.
struct ClaimResult {
  std::string id;
  std::string title;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  bool all_pass() const;
  const ClaimResult* find(std::string_view id) const;
};

/// Runs every claim checker: V1-V4 and V6 pointwise over the records,
/// V5 and V7-V11 over family grids and internally sampled oracle states.
/// Deterministic for a given record list.
VerificationReport verify(std::span<const EnsembleRecord> records);

std::string format_report(const VerificationReport& report);
void write_report_json(const std::filesystem::path& path,
                       const VerificationReport& report);

// ---------------------------------------------------------------------------
// Individual checkers and their default input builders. They are exposed so
// the fault-injection tests can feed doctored inputs to each one.

ClaimResult check_rana_conjecture(std::span<const EnsembleRecord> records);
ClaimResult check_rana_dimensional_bound(
    std::span<const EnsembleRecord> records);
ClaimResult check_l1_dominates_concurrence(
    std::span<const EnsembleRecord> records);
ClaimResult check_mnms_upper_boundary(std::span<const EnsembleRecord> records);

struct RhoLPoint {
  double epsilon;
  double c_l1;
  double c_rel;
};
std::vector<RhoLPoint> rho_l_grid(std::size_t points = 101);
ClaimResult check_rho_l_equality(std::span<const RhoLPoint> points);

// (epsilon, analytic curve value, measured value) for the derived skew forms.
struct SkewCurvePoint {
  double epsilon;
  double curve;
  double measured;
};
std::vector<SkewCurvePoint> mnms_skew_curve_grid(std::size_t points = 101);
std::vector<SkewCurvePoint> rho_l_skew_line_grid(std::size_t points = 101);
ClaimResult check_skew_boundaries(std::span<const EnsembleRecord> records,
                                  std::span<const SkewCurvePoint> mnms_curve,
                                  std::span<const SkewCurvePoint> rho_l_line);

struct FirstOrderSpots {
  std::vector<double> d2_mnms;    // over the epsilon grid; must be exactly 0
  std::vector<double> d2_werner;  // likewise
  double d2max_mnms_eps0 = 0.0;   // must be exactly 0.5
  double d2max_mems_eps0 = 0.0;   // must be 1/9 within 1e-12
};
FirstOrderSpots first_order_spots(std::size_t points = 101);
ClaimResult check_first_order_spots(const FirstOrderSpots& spots);

// Worst deviations between production quantities and their oracles for one
// sampled state.
struct OracleSample {
  double eig_dev;        // closed-form vs Jacobi spectrum, elementwise
  double sqrt_residual;  // |sqrt(rho)^2 - rho|, entrywise
  double skew_dev;       // c_skew reduction vs commutator sum
};
std::vector<OracleSample> oracle_samples(std::size_t n = 1000);
ClaimResult check_oracle_agreement(std::span<const OracleSample> samples);

// One equal-abscissa comparison; the claim is lhs < rhs strictly.
struct EqualAbscissaPair {
  double abscissa;
  double lhs;
  double rhs;
};
std::vector<EqualAbscissaPair> werner_vs_mnms_pairs();
std::vector<EqualAbscissaPair> mems_vs_werner_pairs();
std::vector<EqualAbscissaPair> mems_vs_mnms_pairs();
ClaimResult check_werner_below_mnms(std::span<const EqualAbscissaPair> pairs);
ClaimResult check_mems_below_werner_mnms(
    std::span<const EqualAbscissaPair> vs_werner,
    std::span<const EqualAbscissaPair> vs_mnms);

struct HiddenCoherencePoint {
  double concurrence_value;
  double d2max_mnms;
  double d2max_mems;
};
std::vector<HiddenCoherencePoint> hidden_coherence_grid(
    std::size_t points = 101);
ClaimResult check_hidden_coherence_order(
    std::span<const HiddenCoherencePoint> points);

}  // namespace xcoh
