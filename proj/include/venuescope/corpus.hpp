#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace venuescope {

inline constexpr std::string_view kUnknownCountry = "unknown";
inline constexpr std::string_view kUnknownInstitution = "unknown";
inline constexpr std::string_view kUnspecifiedVenue = "n/a";
inline constexpr int kMinYear = 1800;
inline constexpr int kMaxYear = 2100;

struct Authorship {
  std::string author_id;
  std::optional<std::string> institution_id;
  std::uint32_t position = 0;

  bool operator==(const Authorship&) const = default;
};

struct PaperRecord {
  std::string paper_id;
  std::optional<std::string> doi;
  std::string title;
  std::optional<std::string> abstract;
  std::optional<std::string> keywords;
  std::optional<int> year;
  std::string venue_id;  // empty when the source does not name a venue
  std::vector<Authorship> authorships;
  std::vector<std::string> references;

  bool operator==(const PaperRecord&) const = default;
};

struct Institution {
  std::string institution_id;
  std::string name;
  std::string country_code;  // ISO 3166-1 alpha-2 or "unknown"

  bool operator==(const Institution&) const = default;
};

enum class IngestMode { strict, lenient };

// Column layout of a paper dump. Text form is one `key=index` pair per line;
// paper_id, year and venue_id are required.
struct Schema {
  std::size_t paper_id = 0;
  std::size_t year = 1;
  std::size_t venue_id = 2;
  std::optional<std::size_t> doi;
  std::optional<std::size_t> title;
  std::optional<std::size_t> abstract;
  std::optional<std::size_t> keywords;
  std::optional<std::size_t> authorships;
  std::optional<std::size_t> references;
  bool header = false;  // skip the first line of the dump

  static Schema parse(std::istream& in);
  static Schema parse_file(const std::filesystem::path& path);
  // The layout written by write_store: every column, fixed order, no header.
  static Schema canonical();
  std::string to_text() const;
  std::size_t column_count() const;
};

struct IngestStats {
  std::size_t rows = 0;
  std::size_t skipped = 0;     // malformed rows dropped in lenient mode
  std::size_t duplicates = 0;  // repeated paper_id rows dropped in lenient mode
  std::size_t self_references = 0;
  std::size_t authorships = 0;
  std::size_t institutions_skipped = 0;

  bool operator==(const IngestStats&) const = default;
};

// Immutable set of papers plus institution and venue lookups. Safe to share
// between threads once built.
class CorpusStore {
 public:
  CorpusStore() = default;
  CorpusStore(std::vector<PaperRecord> papers, std::vector<Institution> institutions,
              IngestStats stats = {});
  CorpusStore(const CorpusStore&) = delete;
  CorpusStore& operator=(const CorpusStore&) = delete;
  CorpusStore(CorpusStore&&) noexcept = default;
  CorpusStore& operator=(CorpusStore&&) noexcept = default;

  std::span<const PaperRecord> papers() const noexcept { return papers_; }
  std::span<const Institution> institutions() const noexcept { return institutions_; }
  const IngestStats& stats() const noexcept { return stats_; }
  std::size_t size() const noexcept { return papers_.size(); }

  std::optional<std::uint32_t> index_of(std::string_view paper_id) const;
  const PaperRecord* find(std::string_view paper_id) const;
  const Institution* institution(std::string_view institution_id) const;

  // venue_id -> number of papers. Papers without a venue are listed under "".
  const std::map<std::string, std::size_t, std::less<>>& venues() const noexcept { return venues_; }
  bool has_venue(std::string_view venue_id) const;

 private:
  std::vector<PaperRecord> papers_;
  std::vector<Institution> institutions_;
  IngestStats stats_;
  std::unordered_map<std::string_view, std::uint32_t> paper_index_;
  std::unordered_map<std::string_view, std::uint32_t> institution_index_;
  std::map<std::string, std::size_t, std::less<>> venues_;
};

struct InstitutionTable {
  std::vector<Institution> rows;
  std::size_t skipped = 0;
};

InstitutionTable load_institutions(std::istream& in, IngestMode mode);
InstitutionTable load_institutions_file(const std::filesystem::path& path, IngestMode mode);

CorpusStore ingest(std::istream& source, const Schema& schema, IngestMode mode,
                   InstitutionTable institutions = {});
CorpusStore ingest_file(const std::filesystem::path& dump, const Schema& schema, IngestMode mode,
                        InstitutionTable institutions = {});

// Serializes papers in the canonical schema; re-ingesting reproduces the records.
void write_papers(std::ostream& out, const CorpusStore& store);
void write_institutions(std::ostream& out, std::span<const Institution> institutions);

// One publication venue and the papers linked to it by citation. Partitions are
// ascending indices into the backing store, which must outlive the corpus.
class VenueCorpus {
 public:
  VenueCorpus(const CorpusStore& store, std::vector<std::string> venue_ids,
              std::vector<std::uint32_t> accepted, std::vector<std::uint32_t> citing,
              std::vector<std::uint32_t> cited, std::size_t dangling_references);

  const CorpusStore& store() const noexcept { return *store_; }
  const std::vector<std::string>& venue_ids() const noexcept { return venue_ids_; }
  std::span<const std::uint32_t> accepted() const noexcept { return accepted_; }
  std::span<const std::uint32_t> citing() const noexcept { return citing_; }
  std::span<const std::uint32_t> cited() const noexcept { return cited_; }
  // References from accepted papers that name no record in the store.
  std::size_t dangling_references() const noexcept { return dangling_references_; }

  const PaperRecord& paper(std::uint32_t index) const { return store_->papers()[index]; }

 private:
  const CorpusStore* store_;
  std::vector<std::string> venue_ids_;
  std::vector<std::uint32_t> accepted_;
  std::vector<std::uint32_t> citing_;
  std::vector<std::uint32_t> cited_;
  std::size_t dangling_references_;
};

// Accepts a set of ids so that renamed venues can be analysed as one. Throws
// NotFoundError when none of the ids occurs in the store.
VenueCorpus extract_venue_dataset(const CorpusStore& store, std::span<const std::string> venue_ids);
VenueCorpus extract_venue_dataset(const CorpusStore& store, std::string_view venue_id);

void write_corpus_manifest(std::ostream& out, const VenueCorpus& corpus);

struct Contribution {
  std::string author_id;
  std::optional<std::string> institution_id;
  std::string country_code;
  std::uint32_t position = 0;

  bool operator==(const Contribution&) const = default;
};

// One contribution per authorship, in author order.
std::vector<Contribution> contributions(const PaperRecord& paper, const CorpusStore& store);

// Country of one authorship, "unknown" when the institution or its country is missing.
std::string_view resolve_country(const Authorship& authorship, const CorpusStore& store);

}  // namespace venuescope
