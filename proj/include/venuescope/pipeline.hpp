#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "venuescope/corpus.hpp"
#include "venuescope/report.hpp"

namespace venuescope {

// Flat key=value file. Relative input paths resolve against the directory of
// the config file.
struct PipelineConfig {
  std::string dump;
  std::string schema;  // empty: canonical layout
  std::string institutions;
  std::string ontology;
  std::string stopwords;  // empty: bundled English list
  std::map<std::string, std::vector<std::string>> venues;  // logical name -> venue ids
  std::optional<std::string> selected_venue;
  double threshold = 0.94;
  report::ReportOptions report;
  std::string out;
  IngestMode mode = IngestMode::lenient;
  unsigned threads = 0;  // does not influence any output
  std::filesystem::path base_dir = ".";

  static PipelineConfig parse(std::istream& in, const std::filesystem::path& base_dir = ".");
  static PipelineConfig load(const std::filesystem::path& path);

  // Throws ConfigError naming the offending field.
  void validate() const;
  // Every output-relevant setting in a fixed order; the output directory and
  // thread count are left out so that equal inputs give equal manifests.
  std::string canonical_text() const;

  std::filesystem::path resolve(const std::string& path) const;
  std::filesystem::path out_dir() const { return resolve(out); }
  std::vector<std::string> venue_names() const;
};

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

enum class Command { ingest, extract, classify, report, all };
std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct RunResult {
  std::vector<std::string> artifacts;  // paths relative to the output directory
};

// Runs one stage (or all of them) against the config. Downstream stages load
// what upstream stages wrote and raise DependencyError when it is missing.
RunResult run(Command command, const PipelineConfig& config, std::ostream* log = nullptr);

// 0 success, 1 usage/config, 2 dependency, 3 data error.
int exit_code_for(const std::exception& e);

struct SyntheticSpec {
  std::size_t papers = 200;
  std::uint64_t seed = 42;
  int first_year = 1980;
  int last_year = 2018;
  std::vector<std::uint64_t> group_thresholds{60, 20, 10, 5};
  bool inject_malformed_rows = true;
};

// Writes dump.tsv, schema.txt, institutions.tsv, ontology.tsv and config.txt
// into `dir`. Output depends only on `spec`.
void write_synthetic_dataset(const std::filesystem::path& dir, const SyntheticSpec& spec);

}  // namespace venuescope
