#include <ostream>
#include <stdexcept>

#include "venuescope/corpus.hpp"
#include "venuescope/error.hpp"

namespace venuescope {

namespace {

void put_field(std::ostream& out, std::string_view value) {
  if (value.find_first_of("\t\n\r") != std::string_view::npos)
    throw std::invalid_argument("field contains a tab or newline and cannot be written as TSV");
  out << value;
}

}  // namespace

void write_papers(std::ostream& out, const CorpusStore& store) {
  for (const auto& p : store.papers()) {
    put_field(out, p.paper_id);
    out << '\t';
    if (p.year) out << *p.year;
    out << '\t';
    put_field(out, p.venue_id);
    out << '\t';
    put_field(out, p.doi.value_or(""));
    out << '\t';
    put_field(out, p.title);
    out << '\t';
    put_field(out, p.abstract.value_or(""));
    out << '\t';
    put_field(out, p.keywords.value_or(""));
    out << '\t';
    for (std::size_t i = 0; i < p.authorships.size(); ++i) {
      if (i) out << ';';
      put_field(out, p.authorships[i].author_id);
      if (p.authorships[i].institution_id) {
        out << ',';
        put_field(out, *p.authorships[i].institution_id);
      }
    }
    out << '\t';
    for (std::size_t i = 0; i < p.references.size(); ++i) {
      if (i) out << ';';
      put_field(out, p.references[i]);
    }
    out << '\n';
  }
  if (!out) throw IoError("write failure while serializing papers");
}

void write_institutions(std::ostream& out, std::span<const Institution> institutions) {
  for (const auto& inst : institutions) {
    put_field(out, inst.institution_id);
    out << '\t';
    put_field(out, inst.name);
    out << '\t';
    put_field(out, inst.country_code);
    out << '\n';
  }
  if (!out) throw IoError("write failure while serializing institutions");
}

}  // namespace venuescope
