#include <iostream>

#include <CLI11.hpp>

#include "venuescope/pipeline.hpp"

int main(int argc, char** argv) {
  venuescope::SyntheticSpec spec;
  std::string dir;
  CLI::App app{"Write a deterministic synthetic dataset and pipeline config"};
  app.add_option("dir", dir, "Output directory")->required();
  app.add_option("-n,--papers", spec.papers, "Number of paper records");
  app.add_option("-s,--seed", spec.seed, "Random seed");
  app.add_option("--first-year", spec.first_year);
  app.add_option("--last-year", spec.last_year);
  app.add_option("--group-thresholds", spec.group_thresholds, "Band thresholds written to the config")->delimiter(',');
  app.add_flag("!--clean", spec.inject_malformed_rows, "Do not inject malformed rows");
  CLI11_PARSE(app, argc, argv);
  try {
    venuescope::write_synthetic_dataset(dir, spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
