#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "xcoh/measures.hpp"

namespace xcoh {

/// One CSV row: the eight real X-state parameters followed by the eight
/// quantifier values.
struct EnsembleRecord {
  double rho11 = 0.0, rho22 = 0.0, rho33 = 0.0, rho44 = 0.0;
  double re_rho14 = 0.0, im_rho14 = 0.0;
  double re_rho23 = 0.0, im_rho23 = 0.0;
  MeasureSet measures;
};

EnsembleRecord make_record(const XState& s);

/// Reconstructs (and re-validates) the state held in a record.
XState record_state(const EnsembleRecord& r);

inline constexpr std::array<std::string_view, 16> kColumnNames = {
    "rho11",    "rho22",    "rho33",    "rho44", "re_rho14", "im_rho14",
    "re_rho23", "im_rho23", "c_rel",    "c_l1",  "c_skew",   "c_tr",
    "c_rob",    "concurrence", "d2",    "d2max"};

enum class Column : int {
  Rho11 = 0, Rho22, Rho33, Rho44, ReRho14, ImRho14, ReRho23, ImRho23,
  CRel, CL1, CSkew, CTr, CRob, Concurrence, D2, D2Max,
};

double record_value(const EnsembleRecord& r, Column c);
void set_record_value(EnsembleRecord& r, Column c, double value);
std::optional<Column> parse_column(std::string_view name);

/// Generates records for sample_random(seed, 0..n-1) with measure_all
/// applied. Output is ordered by index no matter how many worker threads
/// are used (workers == 0 picks the hardware concurrency).
std::vector<EnsembleRecord> run_ensemble(std::uint64_t seed, std::size_t n,
                                         bool phases = false,
                                         unsigned workers = 0);

}  // namespace xcoh
