#include <fstream>
#include <istream>
#include <sstream>

#include <fmt/format.h>

#include "internal/strings.hpp"
#include "venuescope/classifier.hpp"
#include "venuescope/error.hpp"

namespace venuescope {

namespace {

// NLTK English stop words (179 entries).
constexpr std::string_view kEnglish[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "you're", "you've", "you'll",
    "you'd", "your", "yours", "yourself", "yourselves", "he", "him", "his", "himself", "she", "she's",
    "her", "hers", "herself", "it", "it's", "its", "itself", "they", "them", "their", "theirs",
    "themselves", "what", "which", "who", "whom", "this", "that", "that'll", "these", "those", "am",
    "is", "are", "was", "were", "be", "been", "being", "have", "has", "had", "having", "do", "does",
    "did", "doing", "a", "an", "the", "and", "but", "if", "or", "because", "as", "until", "while",
    "of", "at", "by", "for", "with", "about", "against", "between", "into", "through", "during",
    "before", "after", "above", "below", "to", "from", "up", "down", "in", "out", "on", "off", "over",
    "under", "again", "further", "then", "once", "here", "there", "when", "where", "why", "how", "all",
    "any", "both", "each", "few", "more", "most", "other", "some", "such", "no", "nor", "not", "only",
    "own", "same", "so", "than", "too", "very", "s", "t", "can", "will", "just", "don", "don't",
    "should", "should've", "now", "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "aren't",
    "couldn", "couldn't", "didn", "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn", "hasn't",
    "haven", "haven't", "isn", "isn't", "ma", "mightn", "mightn't", "mustn", "mustn't", "needn",
    "needn't", "shan", "shan't", "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won",
    "won't", "wouldn", "wouldn't"};

// Stop words go through the same normalization as text tokens.
std::string normalize_word(std::string_view w) {
  std::string out;
  for (const char c : detail::trim(w))
    if (c != '\'') out.push_back(detail::ascii_lower(c));
  return out;
}

}  // namespace

const StopwordList& StopwordList::english() {
  static const StopwordList list = [] {
    StopwordList l;
    l.version = "nltk-english-179";
    for (const auto w : kEnglish) l.words.insert(normalize_word(w));
    return l;
  }();
  return list;
}

StopwordList StopwordList::load(std::istream& in) {
  StopwordList list;
  list.version = "custom";
  std::string line;
  while (std::getline(in, line)) {
    const auto t = detail::trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      constexpr std::string_view tag = "#version";
      if (t.substr(0, tag.size()) == tag) {
        const auto v = detail::trim(t.substr(tag.size()));
        if (!v.empty()) list.version = std::string(v);
      }
      continue;
    }
    if (auto w = normalize_word(t); !w.empty()) list.words.insert(std::move(w));
  }
  if (in.bad()) throw IoError("read failure in stop-word list");
  return list;
}

StopwordList StopwordList::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open stop-word list {}", path.string()));
  return load(in);
}

}  // namespace venuescope
