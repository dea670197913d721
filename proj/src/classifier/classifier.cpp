#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "internal/strings.hpp"
#include "venuescope/classifier.hpp"
#include "venuescope/error.hpp"

namespace venuescope {

Classifier::Classifier(const TopicOntology& ontology, double threshold, const StopwordList& stopwords, simd::Isa isa)
    : ontology_(&ontology), threshold_(threshold), stopwords_(stopwords), isa_(isa) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument(fmt::format("classifier threshold {} outside (0, 1]", threshold));
  if (!simd::isa_available(isa)) throw std::invalid_argument("classifier: requested ISA not available");

  std::vector<std::pair<std::string, std::uint32_t>> short_labels;
  for (const auto& [label, topic] : ontology.label_index()) {
    exact_.emplace(label, topic);
    if (label.size() <= simd::PatternBank::kMaxPatternLength) short_labels.emplace_back(label, topic);
    else long_labels_.emplace_back(label, topic);
  }
  std::sort(short_labels.begin(), short_labels.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.size(), a.first) < std::pair(b.first.size(), b.first);
  });

  std::vector<std::string> patterns;
  patterns.reserve(short_labels.size());
  for (auto& [label, topic] : short_labels) {
    patterns.push_back(label);
    bank_topics_.push_back(topic);
  }
  first_of_length_.assign(simd::PatternBank::kMaxPatternLength + 2, patterns.size());
  for (std::size_t len = 0; len < first_of_length_.size(); ++len) {
    const auto it = std::lower_bound(patterns.begin(), patterns.end(), len,
                                     [](const std::string& p, std::size_t l) { return p.size() < l; });
    first_of_length_[len] = static_cast<std::size_t>(it - patterns.begin());
  }
  bank_ = simd::PatternBank(std::move(patterns));
}

std::vector<std::uint32_t> Classifier::match(std::string_view ngram) const {
  std::vector<std::uint32_t> out;
  const auto m = ngram.size();
  if (const auto it = exact_.find(std::string(ngram)); it != exact_.end()) out.push_back(it->second);

  // Smallest distance a label of length `len` can have without being equal
  // to the n-gram; labels whose best case misses the threshold are skipped.
  auto reachable = [&](std::size_t len) {
    const std::size_t best = len == m ? 1 : (len > m ? len - m : m - len);
    return simd::similarity_from_distance(best, m, len) >= threshold_;
  };

  std::size_t lo = 0, hi = 0;
  bool any = false;
  for (std::size_t len = 1; len <= simd::PatternBank::kMaxPatternLength; ++len) {
    if (!reachable(len)) continue;
    if (!any) lo = len;
    hi = len;
    any = true;
  }
  if (any) {
    const auto first = first_of_length_[lo];
    const auto last = first_of_length_[hi + 1];
    if (first < last) {
      const auto first_block = first / simd::PatternBank::kLanes;
      const auto last_block = (last + simd::PatternBank::kLanes - 1) / simd::PatternBank::kLanes;
      thread_local std::vector<std::uint32_t> dist;
      dist.resize((last_block - first_block) * simd::PatternBank::kLanes);
      simd::batch_edit_distance(bank_, first_block, last_block, ngram, dist, isa_);
      for (auto i = first; i < last; ++i) {
        const auto d = dist[i - first_block * simd::PatternBank::kLanes];
        if (d == 0) continue;  // equal strings were found by the exact lookup
        if (simd::similarity_from_distance(d, m, bank_.pattern(i).size()) >= threshold_) out.push_back(bank_topics_[i]);
      }
    }
  }

  for (const auto& [label, topic] : long_labels_) {
    if (label == ngram || !reachable(label.size())) continue;
    const auto d = simd::edit_distance_reference(ngram, label);
    if (simd::similarity_from_distance(d, m, label.size()) >= threshold_) out.push_back(topic);
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TopicAnnotation Classifier::classify_text(std::string paper_id, std::string_view text) const {
  const auto runs = tokenize(text, stopwords_);
  auto grams = ngrams(runs, 3);
  std::sort(grams.begin(), grams.end());
  grams.erase(std::unique(grams.begin(), grams.end()), grams.end());

  std::vector<std::uint32_t> direct;
  for (const auto& g : grams)
    for (const auto topic : match(g)) direct.push_back(ontology_->representative_index(topic));
  std::sort(direct.begin(), direct.end());
  direct.erase(std::unique(direct.begin(), direct.end()), direct.end());

  std::vector<std::uint32_t> enriched;
  for (const auto t : ontology_->closure_indices(direct)) enriched.push_back(ontology_->representative_index(t));
  std::sort(enriched.begin(), enriched.end());
  enriched.erase(std::unique(enriched.begin(), enriched.end()), enriched.end());

  TopicAnnotation a;
  a.paper_id = std::move(paper_id);
  for (const auto t : direct) a.direct_topics.insert(ontology_->topic(t).topic_id);
  for (const auto t : enriched)
    if (!std::binary_search(direct.begin(), direct.end(), t)) a.enriched_topics.insert(ontology_->topic(t).topic_id);
  a.all_topics = a.direct_topics;
  a.all_topics.insert(a.enriched_topics.begin(), a.enriched_topics.end());
  return a;
}

TopicAnnotation Classifier::classify(const PaperRecord& paper) const {
  return classify_text(paper.paper_id, classification_text(paper));
}

TopicAnnotation classify(const PaperRecord& paper, const TopicOntology& ontology, double threshold) {
  return Classifier(ontology, threshold).classify(paper);
}

std::map<std::string, TopicAnnotation> classify_corpus(const CorpusStore& store, std::span<const std::uint32_t> papers,
                                                       const Classifier& classifier, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, papers.size())));

  std::vector<std::vector<TopicAnnotation>> partial(threads);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < papers.size(); i += threads)
      partial[worker].push_back(classifier.classify(store.papers()[papers[i]]));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  std::map<std::string, TopicAnnotation> out;
  for (auto& part : partial)
    for (auto& a : part) {
      auto id = a.paper_id;
      out.emplace(std::move(id), std::move(a));
    }
  return out;
}

void write_annotations(std::ostream& out, const std::map<std::string, TopicAnnotation>& annotations,
                       const Classifier& classifier) {
  out << fmt::format("# threshold={} stopwords={}\n", classifier.threshold(), classifier.stopwords().version);
  for (const auto& [id, a] : annotations)
    out << fmt::format("{}\t{}\t{}\n", id, fmt::join(a.direct_topics, ";"), fmt::join(a.enriched_topics, ";"));
  if (!out) throw IoError("write failure while serializing annotations");
}

std::map<std::string, TopicAnnotation> read_annotations(std::istream& in) {
  std::map<std::string, TopicAnnotation> out;
  std::string line;
  std::size_t lineno = 0;
  auto topics = [](std::string_view field) {
    TopicSet s;
    if (field.empty()) return s;
    for (const auto t : detail::split(field, ';'))
      if (!t.empty()) s.emplace(t);
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = detail::chomp(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = detail::split(text, '\t');
    if (fields.size() != 3) throw ParseError(lineno, fmt::format("annotation row has {} columns, expected 3", fields.size()));
    TopicAnnotation a;
    a.paper_id = std::string(fields[0]);
    a.direct_topics = topics(fields[1]);
    a.enriched_topics = topics(fields[2]);
    a.all_topics = a.direct_topics;
    a.all_topics.insert(a.enriched_topics.begin(), a.enriched_topics.end());
    if (!out.emplace(a.paper_id, a).second) throw ParseError(lineno, "duplicate paper_id " + a.paper_id);
  }
  if (in.bad()) throw IoError("read failure in annotations");
  return out;
}

}  // namespace venuescope
