#include "internal/strings.hpp"
#include "venuescope/classifier.hpp"

namespace venuescope {

namespace {

enum class CharClass { token, skip, token_break, run_break };

CharClass classify_char(unsigned char c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80) return CharClass::token;
  if (c == '\'') return CharClass::skip;
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' || c == '-') return CharClass::token_break;
  return CharClass::run_break;
}

}  // namespace

std::vector<TokenRun> tokenize(std::string_view text, const StopwordList& stopwords) {
  std::vector<TokenRun> runs;
  TokenRun run;
  std::string token;

  auto end_run = [&] {
    if (!run.empty()) runs.push_back(std::move(run));
    run.clear();
  };
  auto end_token = [&] {
    if (token.empty()) return;
    if (stopwords.contains(token)) end_run();
    else run.push_back(token);
    token.clear();
  };

  for (const char ch : text) {
    switch (classify_char(static_cast<unsigned char>(ch))) {
      case CharClass::token: token.push_back(detail::ascii_lower(ch)); break;
      case CharClass::skip: break;
      case CharClass::token_break: end_token(); break;
      case CharClass::run_break:
        end_token();
        end_run();
        break;
    }
  }
  end_token();
  end_run();
  return runs;
}

std::vector<std::string> ngrams(std::span<const TokenRun> runs, std::size_t max_n) {
  std::vector<std::string> out;
  for (const auto& run : runs) {
    for (std::size_t n = 1; n <= max_n && n <= run.size(); ++n) {
      for (std::size_t i = 0; i + n <= run.size(); ++i) {
        std::string gram = run[i];
        for (std::size_t k = 1; k < n; ++k) {
          gram.push_back(' ');
          gram += run[i + k];
        }
        out.push_back(std::move(gram));
      }
    }
  }
  return out;
}

double levenshtein_similarity(std::string_view a, std::string_view b) {
  return simd::similarity_from_distance(simd::edit_distance_reference(a, b), a.size(), b.size());
}

std::string classification_text(const PaperRecord& paper) {
  std::string text = paper.title;
  if (paper.abstract) {
    text += " . ";
    text += *paper.abstract;
  }
  if (paper.keywords) {
    text += " . ";
    text += *paper.keywords;
  }
  return text;
}

}  // namespace venuescope
