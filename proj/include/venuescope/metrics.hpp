#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "venuescope/classifier.hpp"
#include "venuescope/corpus.hpp"
#include "venuescope/ontology.hpp"

namespace venuescope {

enum class Partition { accepted, citing, cited };
enum class Direction { cited, citing };

std::string_view partition_name(Partition p);
std::span<const std::uint32_t> partition_of(const VenueCorpus& corpus, Partition p);

// Additive key -> count tally. Merging is associative and commutative, so
// per-shard accumulators can be combined in any order.
class CountAccumulator {
 public:
  void add(std::string_view key, std::uint64_t n = 1);
  void merge(const CountAccumulator& other);
  const std::unordered_map<std::string, std::uint64_t>& counts() const noexcept { return counts_; }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
};

// Ranked counts: descending by count, ties by ascending key.
class CountTable {
 public:
  using Entry = std::pair<std::string, std::uint64_t>;

  CountTable() = default;
  explicit CountTable(const CountAccumulator& acc);
  static CountTable from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::uint64_t total() const;
  std::uint64_t count(std::string_view key) const;  // 0 when absent
  CountTable top(std::size_t k) const;

  bool operator==(const CountTable&) const = default;

 private:
  std::vector<Entry> entries_;
};

// Counts keyed by row and year. Columns span a contiguous year range;
// absent combinations are zero.
struct YearMatrix {
  std::vector<std::string> row_keys;
  std::vector<int> col_years;
  std::vector<std::uint64_t> cells;           // row-major
  std::vector<std::uint64_t> unplaced;        // per row: events whose column year is unknown
  std::uint64_t excluded = 0;                 // events not attributable to any row

  std::uint64_t at(std::size_t row, std::size_t col) const { return cells[row * col_years.size() + col]; }
  std::uint64_t row_sum(std::size_t row) const;
  std::uint64_t total() const;
  bool empty() const noexcept { return row_keys.empty(); }
};

struct StabilityPoint {
  int year = 0;
  int next_year = 0;
  std::optional<double> rho;  // nullopt where the correlation is undefined
};

struct StabilitySeries {
  std::vector<StabilityPoint> points;
};

struct DebitEntry {
  std::string country_code;
  std::uint64_t citing_contribs = 0;
  std::uint64_t cited_contribs = 0;
  std::optional<double> debit;  // nullopt means cited back never

  bool never_cited() const noexcept { return !debit.has_value(); }
};

struct FirstAuthorRow {
  std::optional<int> year;  // nullopt for the corpus-wide row
  std::size_t first_author_institutions = 0;
  std::size_t never_first_institutions = 0;
  std::size_t total_institutions = 0;
  double never_first_pct() const {
    return total_institutions == 0 ? 0.0 : 100.0 * static_cast<double>(never_first_institutions) / total_institutions;
  }
};

struct FirstAuthorTrends {
  std::vector<FirstAuthorRow> per_year;  // ascending year
  FirstAuthorRow corpus_wide;
};

struct TrendRow {
  TopicId topic_id;
  std::string label;
  std::uint64_t start_count = 0;
  std::uint64_t end_count = 0;
  bool infinite_growth() const noexcept { return start_count == 0; }
  double ratio() const;  // +inf when start_count is 0
};

struct TrendBand {
  std::uint64_t min_count = 0;                 // inclusive
  std::optional<std::uint64_t> max_count;      // exclusive; none for the top band
  std::vector<TrendRow> topics;
};

// topic -> year -> number of papers annotated with the topic.
using TopicYearCounts = std::map<TopicId, std::map<int, std::uint64_t>>;

CountTable institution_ranking(const VenueCorpus& corpus, Partition partition = Partition::accepted);
CountTable venue_citation_table(const VenueCorpus& corpus, Direction direction, std::size_t top_k = 30);
YearMatrix venue_year_matrix(const VenueCorpus& corpus, Direction direction, std::size_t top_k = 30);
YearMatrix reference_memory_matrix(const VenueCorpus& corpus);

CountTable country_distribution(const VenueCorpus& corpus, Partition partition);
CountTable country_distribution(const CorpusStore& store, std::span<const std::uint32_t> papers);
CountTable solo_country_papers(const VenueCorpus& corpus, std::uint64_t min_papers = 5);
std::vector<DebitEntry> knowledge_debit(const VenueCorpus& corpus);

// Spearman's rho with average ranks for ties. Throws std::invalid_argument on
// length mismatch or fewer than two observations; nullopt when either side
// has zero rank variance.
std::optional<double> spearman_rho(std::span<const double> xs, std::span<const double> ys);
std::vector<double> average_ranks(std::span<const double> values);

// Accepted-partition country tables per publication year.
std::map<int, CountTable> yearly_country_counts(const VenueCorpus& corpus);
StabilitySeries ranking_stability(const std::map<int, CountTable>& yearly_country_counts);

FirstAuthorTrends first_author_institution_trends(const VenueCorpus& corpus);

TopicYearCounts topic_year_counts(const VenueCorpus& corpus, const std::map<std::string, TopicAnnotation>& annotations);
std::vector<TrendBand> topic_trend_analysis(const TopicYearCounts& counts, int start_year, int end_year,
                                            std::span<const std::uint64_t> group_thresholds,
                                            const TopicOntology* ontology = nullptr);

CountTable topic_country_distribution(const VenueCorpus& corpus, const std::map<std::string, TopicAnnotation>& annotations,
                                      const TopicOntology& ontology, std::string_view topic_id);

}  // namespace venuescope
