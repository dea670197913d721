#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "venuescope/report.hpp"

namespace venuescope::report {

namespace {

constexpr int kCell = 8;
constexpr int kLabelWidth = 180;
constexpr int kTop = 24;
constexpr int kAxis = 20;

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

void write_heatmap_svg(std::ostream& out, const YearMatrix& m, std::string_view title) {
  const auto rows = m.row_keys.size();
  const auto cols = m.col_years.size();
  const std::uint64_t max_count = m.cells.empty() ? 0 : *std::max_element(m.cells.begin(), m.cells.end());
  const int width = kLabelWidth + static_cast<int>(cols) * kCell + 10;
  const int height = kTop + static_cast<int>(rows) * kCell + kAxis;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" font-size=\"7\">\n",
                     width, height);
  out << fmt::format("<!-- scale: luminance = log(1 + count) / log(1 + max_count); max_count={} rows={} cols={} -->\n",
                     max_count, rows, cols);
  out << fmt::format("<text x=\"4\" y=\"14\" font-size=\"10\">{}</text>\n", xml_escape(title));
  out << fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#000000\"/>\n", kLabelWidth, kTop,
                     cols * kCell, rows * kCell);

  const double denom = max_count > 0 ? std::log1p(static_cast<double>(max_count)) : 1.0;
  for (std::size_t r = 0; r < rows; ++r) {
    const int y = kTop + static_cast<int>(r) * kCell;
    out << fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", kLabelWidth - 3, y + kCell - 1,
                       xml_escape(m.row_keys[r]));
    for (std::size_t c = 0; c < cols; ++c) {
      const auto n = m.at(r, c);
      if (n == 0) continue;
      const auto level = static_cast<int>(std::lround(255.0 * std::log1p(static_cast<double>(n)) / denom));
      out << fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#{:02x}{:02x}{:02x}\"><title>{} {}: {}</title></rect>\n",
                         kLabelWidth + static_cast<int>(c) * kCell, y, kCell, kCell, level, level, level,
                         xml_escape(m.row_keys[r]), m.col_years[c], n);
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (m.col_years[c] % 10 != 0) continue;
    out << fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", kLabelWidth + static_cast<int>(c) * kCell,
                       kTop + static_cast<int>(rows) * kCell + 12, m.col_years[c]);
  }
  out << "</svg>\n";
}

}  // namespace venuescope::report
