#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "venuescope/metrics.hpp"

namespace venuescope::report {

// RFC 4180 field quoting, applied only when needed.
std::string csv_field(std::string_view value);
// Fixed six-decimal rendering used for every real-valued column.
std::string format_real(double value);

void write_count_table(std::ostream& out, const CountTable& table, std::string_view key_header,
                       std::string_view count_header);
// Long form (row_key, year, count) for non-zero cells, plus one "n/a" year row
// per row with unplaced events.
void write_year_matrix(std::ostream& out, const YearMatrix& m, std::string_view row_header,
                       std::string_view count_header);
// Dense grid: header row of years, one line per row key, zeros explicit.
void write_year_grid(std::ostream& out, const YearMatrix& m, std::string_view row_header);
// Grey-scale heatmap; luminance is log(1 + count) / log(1 + max count).
void write_heatmap_svg(std::ostream& out, const YearMatrix& m, std::string_view title);

struct ReportOptions {
  std::size_t top_k = 30;
  std::uint64_t min_solo_papers = 5;
  int start_year = 2009;
  int end_year = 2018;
  std::vector<std::uint64_t> group_thresholds{60, 20, 10, 5};
};

inline constexpr std::array<std::string_view, 14> kReportFiles = {
    "institutions.csv",
    "venues_cited.csv",
    "venues_citing.csv",
    "venues_cited_by_year.csv",
    "venues_citing_by_year.csv",
    "reference_memory.csv",
    "countries.csv",
    "solo_countries.csv",
    "knowledge_debit.csv",
    "ranking_stability.csv",
    "first_author_institutions.csv",
    "topic_years.csv",
    "topic_trends.csv",
    "topic_countries.csv",
};

inline constexpr std::array<std::string_view, 3> kHeatmaps = {
    "venues_cited_by_year",
    "venues_citing_by_year",
    "reference_memory",
};

// Writes every report into `dir` (CSV files) and `dir/heatmaps` (SVG plus
// dense grid). Returns the written paths relative to `dir`. On failure throws
// ReportError listing what was completed.
std::vector<std::string> write_reports(const std::filesystem::path& dir, const VenueCorpus& corpus,
                                       const std::map<std::string, TopicAnnotation>& annotations,
                                       const TopicOntology& ontology, const ReportOptions& options);

}  // namespace venuescope::report
