#include "xcoh/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace xcoh {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void append_field(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += buf;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

double parse_field(std::string_view field, std::size_t line_no,
                   std::string_view column) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw CsvParseError(line_no, "column '" + std::string(column) +
                                     "': cannot parse '" + std::string(field) +
                                     "' as a number");
  return value;
}

}  // namespace

CsvParseError::CsvParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

CsvValidationError::CsvValidationError(std::size_t row, const std::string& what)
    : std::runtime_error("row " + std::to_string(row) + ": " + what),
      row_(row) {}

Column spot_check_column(std::size_t row) {
  const int measure_columns = 8;
  const int offset = static_cast<int>(mix64(row) % measure_columns);
  return static_cast<Column>(static_cast<int>(Column::CRel) + offset);
}

void write_csv(std::ostream& os, std::span<const EnsembleRecord> records) {
  os << kCsvHeader << '\n';
  std::string line;
  for (const EnsembleRecord& r : records) {
    line.clear();
    for (int c = 0; c < 16; ++c) {
      if (c != 0) line += ',';
      append_field(line, record_value(r, static_cast<Column>(c)));
    }
    line += '\n';
    os << line;
  }
}

void write_csv(const std::filesystem::path& path,
               std::span<const EnsembleRecord> records) {
  std::ofstream os(path);
  if (!os)
    throw std::runtime_error("write_csv: cannot open '" + path.string() +
                             "' for writing");
  write_csv(os, records);
  os.flush();
  if (!os)
    throw std::runtime_error("write_csv: write to '" + path.string() +
                             "' failed");
}

std::vector<EnsembleRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw CsvParseError(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    const auto got = split_fields(line);
    const auto want = split_fields(kCsvHeader);
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (i >= got.size() || got[i] != want[i])
        throw CsvParseError(
            1, "header mismatch at column " + std::to_string(i + 1) +
                   ": expected '" + std::string(want[i]) + "', got '" +
                   (i < got.size() ? std::string(got[i]) : std::string("<missing>")) +
                   "'");
    }
    throw CsvParseError(1, "header has trailing columns");
  }

  std::vector<EnsembleRecord> records;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != kColumnNames.size())
      throw CsvParseError(line_no, "expected 16 fields, got " +
                                       std::to_string(fields.size()));
    EnsembleRecord r;
    for (int c = 0; c < 16; ++c)
      set_record_value(r, static_cast<Column>(c),
                       parse_field(fields[c], line_no,
                                   kColumnNames[static_cast<std::size_t>(c)]));
    const std::size_t row = records.size() + 1;
    try {
      const XState s = record_state(r);
      if (row % 100 == 0) {
        const Column col = spot_check_column(row);
        const double recomputed = record_value(make_record(s), col);
        const double stored = record_value(r, col);
        if (std::abs(recomputed - stored) > 1e-12)
          throw CsvValidationError(
              row, "integrity spot-check failed for column '" +
                       std::string(kColumnNames[static_cast<std::size_t>(col)]) +
                       "': stored " + std::to_string(stored) +
                       ", recomputed " + std::to_string(recomputed));
      }
    } catch (const ValidationError& e) {
      throw CsvValidationError(row, e.what());
    }
    records.push_back(r);
  }
  return records;
}

std::vector<EnsembleRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is)
    throw std::runtime_error("read_csv: cannot open '" + path.string() + "'");
  return read_csv(is);
}

}  // namespace xcoh
