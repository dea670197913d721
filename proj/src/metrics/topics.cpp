#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "venuescope/error.hpp"
#include "venuescope/metrics.hpp"

namespace venuescope {

double TrendRow::ratio() const {
  if (start_count == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(end_count) / static_cast<double>(start_count);
}

TopicYearCounts topic_year_counts(const VenueCorpus& corpus, const std::map<std::string, TopicAnnotation>& annotations) {
  TopicYearCounts counts;
  for (const auto i : corpus.accepted()) {
    const auto& p = corpus.paper(i);
    if (!p.year) continue;
    const auto it = annotations.find(p.paper_id);
    if (it == annotations.end()) continue;
    for (const auto& t : it->second.all_topics) ++counts[t][*p.year];
  }
  return counts;
}

std::vector<TrendBand> topic_trend_analysis(const TopicYearCounts& counts, int start_year, int end_year,
                                            std::span<const std::uint64_t> thresholds, const TopicOntology* ontology) {
  if (start_year >= end_year)
    throw std::invalid_argument(fmt::format("trend window {}..{} is empty", start_year, end_year));
  if (thresholds.empty()) throw std::invalid_argument("at least one group threshold is required");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] == 0) throw std::invalid_argument("group thresholds must be positive");
    if (i > 0 && thresholds[i] >= thresholds[i - 1])
      throw std::invalid_argument(fmt::format("group thresholds must be strictly descending: {}", fmt::join(thresholds, ",")));
  }

  std::vector<TrendBand> bands(thresholds.size());
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    bands[i].min_count = thresholds[i];
    if (i > 0) bands[i].max_count = thresholds[i - 1];
  }

  auto count_in = [](const std::map<int, std::uint64_t>& years, int y) -> std::uint64_t {
    const auto it = years.find(y);
    return it == years.end() ? 0 : it->second;
  };
  for (const auto& [topic, years] : counts) {
    TrendRow row;
    row.topic_id = topic;
    const Topic* t = ontology ? ontology->find(topic) : nullptr;
    row.label = t ? t->primary_label : topic;
    row.start_count = count_in(years, start_year);
    row.end_count = count_in(years, end_year);
    for (auto& band : bands) {
      if (row.end_count >= band.min_count && (!band.max_count || row.end_count < *band.max_count)) {
        band.topics.push_back(std::move(row));
        break;
      }
    }
  }

  for (auto& band : bands) {
    std::sort(band.topics.begin(), band.topics.end(), [](const TrendRow& a, const TrendRow& b) {
      if (a.infinite_growth() != b.infinite_growth()) return a.infinite_growth();
      if (!a.infinite_growth()) {
        // end/start ratios compared exactly by cross-multiplication
        const auto lhs = static_cast<unsigned __int128>(a.end_count) * b.start_count;
        const auto rhs = static_cast<unsigned __int128>(b.end_count) * a.start_count;
        if (lhs != rhs) return lhs > rhs;
      }
      if (a.end_count != b.end_count) return a.end_count > b.end_count;
      if (a.label != b.label) return a.label < b.label;
      return a.topic_id < b.topic_id;
    });
  }
  return bands;
}

CountTable topic_country_distribution(const VenueCorpus& corpus, const std::map<std::string, TopicAnnotation>& annotations,
                                      const TopicOntology& ontology, std::string_view topic_id) {
  if (!ontology.contains(topic_id)) throw NotFoundError(fmt::format("unknown topic '{}'", topic_id));
  const std::string key(topic_id);
  std::vector<std::uint32_t> papers;
  for (const auto i : corpus.accepted()) {
    const auto it = annotations.find(corpus.paper(i).paper_id);
    if (it != annotations.end() && it->second.all_topics.count(key)) papers.push_back(i);
  }
  return country_distribution(corpus.store(), papers);
}

}  // namespace venuescope
