#include <ostream>

#include <fmt/format.h>

#include "venuescope/report.hpp"

namespace venuescope::report {

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (const char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_real(double value) { return fmt::format("{:.6f}", value); }

void write_count_table(std::ostream& out, const CountTable& table, std::string_view key_header,
                       std::string_view count_header) {
  out << key_header << ',' << count_header << '\n';
  for (const auto& [key, n] : table.entries()) out << csv_field(key) << ',' << n << '\n';
}

void write_year_matrix(std::ostream& out, const YearMatrix& m, std::string_view row_header,
                       std::string_view count_header) {
  out << row_header << ",year," << count_header << '\n';
  const auto cols = m.col_years.size();
  for (std::size_t r = 0; r < m.row_keys.size(); ++r) {
    const auto key = csv_field(m.row_keys[r]);
    for (std::size_t c = 0; c < cols; ++c)
      if (const auto n = m.at(r, c)) out << key << ',' << m.col_years[c] << ',' << n << '\n';
    if (m.unplaced[r]) out << key << ",n/a," << m.unplaced[r] << '\n';
  }
}

void write_year_grid(std::ostream& out, const YearMatrix& m, std::string_view row_header) {
  out << row_header;
  for (const auto y : m.col_years) out << ',' << y;
  out << '\n';
  for (std::size_t r = 0; r < m.row_keys.size(); ++r) {
    out << csv_field(m.row_keys[r]);
    for (std::size_t c = 0; c < m.col_years.size(); ++c) out << ',' << m.at(r, c);
    out << '\n';
  }
}

}  // namespace venuescope::report
