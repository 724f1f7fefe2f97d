#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "xcoh/ensemble.hpp"

namespace xcoh {

inline constexpr std::string_view kCsvHeader =
    "rho11,rho22,rho33,rho44,re_rho14,im_rho14,re_rho23,im_rho23,"
    "c_rel,c_l1,c_skew,c_tr,c_rob,concurrence,d2,d2max";

/// Malformed file: bad header, wrong field count, unparsable number.
/// line() is 1-based and counts the header.
class CsvParseError : public std::runtime_error {
 public:
  CsvParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A row parsed fine but failed state validation or the integrity
/// spot-check. row() is the 1-based data-row index.
class CsvValidationError : public std::runtime_error {
 public:
  CsvValidationError(std::size_t row, const std::string& what);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// Measure column recomputed for every 100th data row; pseudo-randomly
/// chosen but a fixed function of the row index.
Column spot_check_column(std::size_t row);

// Values are serialized with 17 significant digits, which round-trips
// doubles exactly.
void write_csv(std::ostream& os, std::span<const EnsembleRecord> records);
void write_csv(const std::filesystem::path& path,
               std::span<const EnsembleRecord> records);

// Reading validates every state and spot-checks one measure per 100 rows.
std::vector<EnsembleRecord> read_csv(std::istream& is);
std::vector<EnsembleRecord> read_csv(const std::filesystem::path& path);

}  // namespace xcoh
