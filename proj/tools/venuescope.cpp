#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "venuescope/edit_distance.hpp"
#include "venuescope/error.hpp"
#include "venuescope/pipeline.hpp"

int main(int argc, char** argv) {
  using namespace venuescope;

  CLI::App app{"Venue-level scientometric, geopolitical and topic analysis of a paper dump"};
  std::string command, config_path, venue, out, stopwords, groups;
  std::optional<double> threshold;
  std::optional<int> start_year, end_year;
  std::optional<unsigned> threads;
  bool strict = false;

  app.add_option("command", command, "ingest | extract | classify | report | all")
      ->required()
      ->check(CLI::IsMember({"ingest", "extract", "classify", "report", "all"}));
  app.add_option("-c,--config", config_path, "Pipeline config file")->required();
  app.add_option("--venue", venue, "Restrict to one venue defined in the config");
  app.add_option("--threshold", threshold, "Label similarity threshold in (0, 1]");
  app.add_option("--start-year", start_year, "First year of the topic trend window");
  app.add_option("--end-year", end_year, "Last year of the topic trend window");
  app.add_option("--group-thresholds", groups, "Comma-separated descending band thresholds");
  app.add_option("--stopwords", stopwords, "Stop word list replacing the bundled English one");
  app.add_option("--out", out, "Output directory");
  app.add_option("--threads", threads, "Classifier worker threads (0: hardware concurrency)");
  app.add_flag("--strict", strict, "Fail on the first malformed input row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    auto config = PipelineConfig::load(config_path);
    if (!venue.empty()) config.selected_venue = venue;
    if (threshold) config.threshold = *threshold;
    if (start_year) config.report.start_year = *start_year;
    if (end_year) config.report.end_year = *end_year;
    if (threads) config.threads = *threads;
    if (strict) config.mode = IngestMode::strict;
    if (!stopwords.empty()) config.stopwords = std::filesystem::absolute(stopwords).string();
    if (!out.empty()) config.out = std::filesystem::absolute(out).string();
    if (!groups.empty()) {
      std::istringstream override_text("group_thresholds = " + groups);
      config.report.group_thresholds = PipelineConfig::parse(override_text).report.group_thresholds;
    }

    const auto cmd = *parse_command(command);
    std::cerr << fmt::format("venuescope: {} (kernel {})\n", command, simd::isa_name(simd::detect_isa()));
    const auto result = run(cmd, config, &std::cerr);
    std::cerr << fmt::format("venuescope: wrote {} files under {}\n", result.artifacts.size(),
                             config.out_dir().string());
    return 0;
  } catch (const ReportError& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (const auto& f : e.completed()) std::cerr << "  completed: " << f << '\n';
    return exit_code_for(e);
  } catch (const LoadError& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (const auto& o : e.offenders()) std::cerr << "  " << o << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
