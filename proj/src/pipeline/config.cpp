#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include <fmt/format.h>

#include "internal/strings.hpp"
#include "venuescope/error.hpp"
#include "venuescope/pipeline.hpp"

namespace venuescope {

namespace {

bool valid_venue_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
  }) && name != "." && name != "..";
}

template <typename T>
T number(std::string_view key, std::string_view value) {
  const auto v = detail::parse_number<T>(value);
  if (!v) throw ConfigError(std::string(key), fmt::format("'{}' is not a valid number", value));
  return *v;
}

std::vector<std::string> list_of(std::string_view value) {
  std::vector<std::string> out;
  for (const auto part : detail::split(value, ','))
    if (const auto t = detail::trim(part); !t.empty()) out.emplace_back(t);
  return out;
}

}  // namespace

PipelineConfig PipelineConfig::parse(std::istream& in, const std::filesystem::path& base_dir) {
  PipelineConfig c;
  c.base_dir = base_dir;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment_or_blank(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("", fmt::format("config line {}: expected key = value", lineno));
    const std::string key(detail::trim(std::string_view(line).substr(0, eq)));
    const auto value = detail::trim(std::string_view(line).substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(key, "set more than once");

    if (key == "dump") c.dump = value;
    else if (key == "schema") c.schema = value;
    else if (key == "institutions") c.institutions = value;
    else if (key == "ontology") c.ontology = value;
    else if (key == "stopwords") c.stopwords = value;
    else if (key == "out") c.out = value;
    else if (key == "threshold") c.threshold = number<double>(key, value);
    else if (key == "start_year") c.report.start_year = number<int>(key, value);
    else if (key == "end_year") c.report.end_year = number<int>(key, value);
    else if (key == "top_k") c.report.top_k = number<std::size_t>(key, value);
    else if (key == "min_solo_papers") c.report.min_solo_papers = number<std::uint64_t>(key, value);
    else if (key == "threads") c.threads = number<unsigned>(key, value);
    else if (key == "group_thresholds") {
      c.report.group_thresholds.clear();
      for (const auto& t : list_of(value)) c.report.group_thresholds.push_back(number<std::uint64_t>(key, t));
    } else if (key == "mode") {
      if (value == "strict") c.mode = IngestMode::strict;
      else if (value == "lenient") c.mode = IngestMode::lenient;
      else throw ConfigError(key, fmt::format("expected strict or lenient, got '{}'", value));
    } else if (key.rfind("venue.", 0) == 0) {
      c.venues[key.substr(6)] = list_of(value);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  return c;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", fmt::format("cannot open {}", path.string()));
  auto dir = path.parent_path();
  return parse(in, dir.empty() ? std::filesystem::path(".") : dir);
}

void PipelineConfig::validate() const {
  if (dump.empty()) throw ConfigError("dump", "path is required");
  if (institutions.empty()) throw ConfigError("institutions", "path is required");
  if (ontology.empty()) throw ConfigError("ontology", "path is required");
  if (out.empty()) throw ConfigError("out", "output directory is required");
  if (!(threshold > 0.0 && threshold <= 1.0)) throw ConfigError("threshold", fmt::format("{} outside (0, 1]", threshold));
  if (report.start_year >= report.end_year)
    throw ConfigError("start_year", fmt::format("start_year {} must precede end_year {}", report.start_year, report.end_year));
  if (report.group_thresholds.empty()) throw ConfigError("group_thresholds", "at least one threshold is required");
  for (std::size_t i = 0; i < report.group_thresholds.size(); ++i) {
    if (report.group_thresholds[i] == 0) throw ConfigError("group_thresholds", "thresholds must be positive");
    if (i > 0 && report.group_thresholds[i] >= report.group_thresholds[i - 1])
      throw ConfigError("group_thresholds", "thresholds must be strictly descending");
  }
  if (venues.empty()) throw ConfigError("venue", "at least one venue.NAME = ids entry is required");
  for (const auto& [name, ids] : venues) {
    if (!valid_venue_name(name)) throw ConfigError("venue." + name, "names may only use letters, digits, '.', '_' and '-'");
    if (ids.empty()) throw ConfigError("venue." + name, "no venue ids listed");
  }
  if (selected_venue && !venues.count(*selected_venue))
    throw ConfigError("venue", fmt::format("'{}' is not defined in the config", *selected_venue));
}

std::string PipelineConfig::canonical_text() const {
  std::string s;
  s += fmt::format("dump={}\n", dump);
  s += fmt::format("schema={}\n", schema);
  s += fmt::format("institutions={}\n", institutions);
  s += fmt::format("ontology={}\n", ontology);
  s += fmt::format("stopwords={}\n", stopwords);
  s += fmt::format("mode={}\n", mode == IngestMode::strict ? "strict" : "lenient");
  s += fmt::format("threshold={}\n", threshold);
  s += fmt::format("start_year={}\n", report.start_year);
  s += fmt::format("end_year={}\n", report.end_year);
  s += fmt::format("group_thresholds={}\n", fmt::join(report.group_thresholds, ","));
  s += fmt::format("top_k={}\n", report.top_k);
  s += fmt::format("min_solo_papers={}\n", report.min_solo_papers);
  for (const auto& [name, ids] : venues) s += fmt::format("venue.{}={}\n", name, fmt::join(ids, ","));
  return s;
}

std::filesystem::path PipelineConfig::resolve(const std::string& path) const {
  const std::filesystem::path p(path);
  return p.is_absolute() ? p : base_dir / p;
}

std::vector<std::string> PipelineConfig::venue_names() const {
  if (selected_venue) return {*selected_venue};
  std::vector<std::string> names;
  for (const auto& [name, ids] : venues) names.push_back(name);
  return names;
}

}  // namespace venuescope
