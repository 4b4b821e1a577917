#include "entrance/csv.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace entrance {

namespace {

constexpr std::string_view kHeaderNoNote = "num_satellites,snr_db,rss_dbm,entrance,distance_m";
constexpr std::array<std::string_view, 6> kColumns = {"num_satellites", "snr_db", "rss_dbm",
                                                      "entrance", "distance_m", "note"};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, std::string_view column) {
  field = trim(field);
  T value{};
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  // from_chars rejects a leading '+'; accept it for hand-written files.
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    throw CsvError(ErrorCode::kRowParseError, line, std::string(column),
                   "cannot parse '" + std::string(field) + "'");
  }
  return value;
}

bool parse_yes_no(std::string_view field, std::size_t line) {
  std::string lower(trim(field));
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "yes") return true;
  if (lower == "no") return false;
  throw CsvError(ErrorCode::kRowParseError, line, "entrance",
                 "expected Yes or No, got '" + std::string(field) + "'");
}

}  // namespace

CsvError::CsvError(ErrorCode code, std::size_t line, std::string column, const std::string& what)
    : Error(code, "line " + std::to_string(line) + ", column " + column + ": " + what),
      line_(line),
      column_(std::move(column)) {}

std::vector<SensorReading> parse_csv(std::string_view text) {
  std::vector<SensorReading> readings;
  std::size_t line_no = 0;
  bool has_note = false;
  bool header_seen = false;

  std::size_t pos = 0;
  while (pos < text.size() || !header_seen) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!header_seen) {
      if (line == kCsvHeader) {
        has_note = true;
      } else if (line != kHeaderNoNote) {
        throw CsvError(ErrorCode::kMalformedHeader, line_no, "header",
                       "expected '" + std::string(kCsvHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    if (trim(line).empty()) continue;

    const auto fields = split_fields(line);
    const std::size_t expected = has_note ? 6 : 5;
    if (fields.size() != expected) {
      throw CsvError(ErrorCode::kRowParseError, line_no,
                     std::string(kColumns[std::min(fields.size(), expected) - 1]),
                     "expected " + std::to_string(expected) + " fields, got " +
                         std::to_string(fields.size()));
    }

    SensorReading r;
    r.num_satellites = parse_number<int>(fields[0], line_no, kColumns[0]);
    r.snr_db = parse_number<double>(fields[1], line_no, kColumns[1]);
    r.rss_dbm = parse_number<double>(fields[2], line_no, kColumns[2]);
    r.entrance = parse_yes_no(fields[3], line_no);
    r.distance_m = parse_number<double>(fields[4], line_no, kColumns[4]);
    if (has_note && !trim(fields[5]).empty()) {
      r.note = parse_label(trim(fields[5]));
      if (!r.note) {
        throw CsvError(ErrorCode::kRowParseError, line_no, "note",
                       "unknown label '" + std::string(fields[5]) + "'");
      }
    }

    if (r.num_satellites < 0) {
      throw CsvError(ErrorCode::kRangeViolation, line_no, "num_satellites", "must be >= 0");
    }
    if (!(r.snr_db >= kMinSnrDb && r.snr_db <= kMaxSnrDb)) {
      throw CsvError(ErrorCode::kRangeViolation, line_no, "snr_db", "outside [0, 60]");
    }
    if (!(r.rss_dbm >= kMinRssDbm && r.rss_dbm <= kMaxRssDbm)) {
      throw CsvError(ErrorCode::kRangeViolation, line_no, "rss_dbm", "outside [-120, 0]");
    }
    if (!std::isfinite(r.distance_m)) {
      throw CsvError(ErrorCode::kRangeViolation, line_no, "distance_m", "must be finite");
    }
    if (r.note && (*r.note == Label::kEntrance) != r.entrance) {
      throw CsvError(ErrorCode::kRangeViolation, line_no, "note",
                     "disagrees with entrance flag");
    }
    readings.push_back(r);
  }
  return readings;
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string write_csv(const std::vector<SensorReading>& readings) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : readings) {
    out += std::to_string(r.num_satellites);
    out += ',';
    out += format_double(r.snr_db);
    out += ',';
    out += format_double(r.rss_dbm);
    out += ',';
    out += r.entrance ? "Yes" : "No";
    out += ',';
    out += format_double(r.distance_m);
    out += ',';
    if (r.note) out += to_string(*r.note);
    out += '\n';
  }
  return out;
}

}  // namespace entrance
