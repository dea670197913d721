#pragma once

#include <initializer_list>
#include <sstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "venuescope/corpus.hpp"
#include "venuescope/ontology.hpp"

namespace fixture {

// Hand-written corpora: institutions named by their country ("US" -> "inst-US")
// unless given explicitly.
class StoreBuilder {
 public:
  StoreBuilder& institution(std::string id, std::string country) {
    institutions_.push_back({std::move(id), "Institution", std::move(country)});
    return *this;
  }

  // Authors are (author_id, institution_id) pairs; an empty institution means no affiliation.
  StoreBuilder& paper(std::string id, std::optional<int> year, std::string venue,
                      std::initializer_list<std::pair<std::string, std::string>> authors,
                      std::initializer_list<std::string> refs = {}) {
    venuescope::PaperRecord p;
    p.paper_id = std::move(id);
    p.title = p.paper_id;
    p.year = year;
    p.venue_id = std::move(venue);
    std::uint32_t pos = 0;
    for (const auto& [author, inst] : authors) {
      venuescope::Authorship a{author, std::nullopt, pos++};
      if (!inst.empty()) a.institution_id = inst;
      p.authorships.push_back(std::move(a));
    }
    p.references.assign(refs.begin(), refs.end());
    papers_.push_back(std::move(p));
    return *this;
  }

  // Same as paper() with one author per listed institution.
  StoreBuilder& paper_at(std::string id, std::optional<int> year, std::string venue,
                         std::initializer_list<std::string> institutions, std::initializer_list<std::string> refs = {}) {
    venuescope::PaperRecord p;
    p.paper_id = std::move(id);
    p.title = p.paper_id;
    p.year = year;
    p.venue_id = std::move(venue);
    std::uint32_t pos = 0;
    for (const auto& inst : institutions) {
      venuescope::Authorship a{p.paper_id + "-a" + std::to_string(pos), std::nullopt, pos};
      ++pos;
      if (!inst.empty()) a.institution_id = inst;
      p.authorships.push_back(std::move(a));
    }
    p.references.assign(refs.begin(), refs.end());
    papers_.push_back(std::move(p));
    return *this;
  }

  venuescope::CorpusStore build() const { return venuescope::CorpusStore(papers_, institutions_); }

 private:
  std::vector<venuescope::PaperRecord> papers_;
  std::vector<venuescope::Institution> institutions_;
};

inline venuescope::TopicOntology ontology_from(const std::string& triples) {
  std::istringstream in(triples);
  return venuescope::load_ontology(in);
}

}  // namespace fixture
