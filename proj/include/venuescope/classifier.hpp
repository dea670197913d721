#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "venuescope/corpus.hpp"
#include "venuescope/edit_distance.hpp"
#include "venuescope/ontology.hpp"

namespace venuescope {

inline constexpr double kDefaultThreshold = 0.94;

struct StopwordList {
  std::string version;
  std::unordered_set<std::string> words;

  bool contains(std::string_view token) const { return words.count(std::string(token)) != 0; }

  // The bundled English list (NLTK English stop words).
  static const StopwordList& english();
  // One word per line; a `#version NAME` line names the list, other `#` lines are comments.
  static StopwordList load(std::istream& in);
  static StopwordList load_file(const std::filesystem::path& path);
};

using TokenRun = std::vector<std::string>;

// Lowercases and splits text into runs of tokens. Whitespace and hyphens
// separate tokens inside a run; other punctuation and removed stop words end
// the run. Apostrophes are dropped.
std::vector<TokenRun> tokenize(std::string_view text, const StopwordList& stopwords = StopwordList::english());

// All 1..max_n-grams inside each run, never bridging runs: per run, unigrams
// first, then bigrams, then trigrams, each in text order.
std::vector<std::string> ngrams(std::span<const TokenRun> runs, std::size_t max_n = 3);

double levenshtein_similarity(std::string_view a, std::string_view b);

struct TopicAnnotation {
  std::string paper_id;
  TopicSet direct_topics;
  TopicSet enriched_topics;
  TopicSet all_topics;

  bool operator==(const TopicAnnotation&) const = default;
};

// Title, abstract and keywords joined with run-breaking separators.
std::string classification_text(const PaperRecord& paper);

// Matches n-grams of a paper's text against every ontology label. Holds a
// reference to the ontology, which must outlive it.
class Classifier {
 public:
  Classifier(const TopicOntology& ontology, double threshold = kDefaultThreshold,
             const StopwordList& stopwords = StopwordList::english(), simd::Isa isa = simd::detect_isa());

  TopicAnnotation classify(const PaperRecord& paper) const;
  TopicAnnotation classify_text(std::string paper_id, std::string_view text) const;
  // Topics whose label is within the similarity threshold of `ngram`, before canonicalization.
  std::vector<std::uint32_t> match(std::string_view ngram) const;

  double threshold() const noexcept { return threshold_; }
  const StopwordList& stopwords() const noexcept { return stopwords_; }
  simd::Isa isa() const noexcept { return isa_; }

 private:
  const TopicOntology* ontology_;
  double threshold_;
  StopwordList stopwords_;
  simd::Isa isa_;
  std::unordered_map<std::string, std::uint32_t> exact_;
  // Labels up to 64 bytes sorted by length, packed for the batched kernel.
  simd::PatternBank bank_;
  std::vector<std::uint32_t> bank_topics_;
  std::vector<std::size_t> first_of_length_;  // index into bank for each length 0..65
  std::vector<std::pair<std::string, std::uint32_t>> long_labels_;
};

TopicAnnotation classify(const PaperRecord& paper, const TopicOntology& ontology, double threshold = kDefaultThreshold);

// Classifies the given store indices. Work is split across `threads`
// workers (0 = hardware concurrency); the result does not depend on it.
std::map<std::string, TopicAnnotation> classify_corpus(const CorpusStore& store, std::span<const std::uint32_t> papers,
                                                       const Classifier& classifier, unsigned threads = 0);

// TSV: paper_id, ';'-joined direct topics, ';'-joined enriched topics. A
// leading `#` line records the threshold and stop-word list version.
void write_annotations(std::ostream& out, const std::map<std::string, TopicAnnotation>& annotations,
                       const Classifier& classifier);
std::map<std::string, TopicAnnotation> read_annotations(std::istream& in);

}  // namespace venuescope
