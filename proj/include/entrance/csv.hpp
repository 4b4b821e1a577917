#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "entrance/error.hpp"
#include "entrance/reading.hpp"

namespace entrance {

inline constexpr std::string_view kCsvHeader =
    "num_satellites,snr_db,rss_dbm,entrance,distance_m,note";

// Error raised while reading a CSV document; line numbers are 1-based and
// count the header.
class CsvError : public Error {
 public:
  CsvError(ErrorCode code, std::size_t line, std::string column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::string column_;
};

/// Parses the reading schema. The `note` column is optional; LF and CRLF
/// line endings are accepted and blank lines are skipped.
std::vector<SensorReading> parse_csv(std::string_view text);

/// Emits the full six-column header and LF line endings. Doubles use the
/// shortest representation that parses back to the same value.
std::string write_csv(const std::vector<SensorReading>& readings);

std::string format_double(double value);

}  // namespace entrance
