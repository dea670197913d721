#include <algorithm>
#include <map>

#include "venuescope/metrics.hpp"

namespace venuescope {

namespace {

std::string_view venue_key(const PaperRecord& p) {
  return p.venue_id.empty() ? kUnspecifiedVenue : std::string_view(p.venue_id);
}

struct YearEvent {
  std::size_t row;
  std::optional<int> year;
};

YearMatrix assemble(std::vector<std::string> rows, const std::vector<YearEvent>& events) {
  YearMatrix m;
  m.row_keys = std::move(rows);
  m.unplaced.assign(m.row_keys.size(), 0);
  std::optional<int> lo, hi;
  for (const auto& e : events) {
    if (!e.year) continue;
    lo = lo ? std::min(*lo, *e.year) : *e.year;
    hi = hi ? std::max(*hi, *e.year) : *e.year;
  }
  if (lo)
    for (int y = *lo; y <= *hi; ++y) m.col_years.push_back(y);
  m.cells.assign(m.row_keys.size() * m.col_years.size(), 0);
  for (const auto& e : events) {
    if (e.year) ++m.cells[e.row * m.col_years.size() + static_cast<std::size_t>(*e.year - *lo)];
    else ++m.unplaced[e.row];
  }
  return m;
}

}  // namespace

CountTable institution_ranking(const VenueCorpus& corpus, Partition partition) {
  CountAccumulator acc;
  for (const auto i : partition_of(corpus, partition))
    for (const auto& a : corpus.paper(i).authorships)
      acc.add(a.institution_id ? std::string_view(*a.institution_id) : kUnknownInstitution);
  return CountTable(acc);
}

CountTable venue_citation_table(const VenueCorpus& corpus, Direction direction, std::size_t top_k) {
  CountAccumulator acc;
  const auto& store = corpus.store();
  if (direction == Direction::cited) {
    for (const auto i : corpus.accepted())
      for (const auto& ref : corpus.paper(i).references)
        if (const auto j = store.index_of(ref)) acc.add(venue_key(corpus.paper(*j)));
  } else {
    for (const auto i : corpus.citing()) acc.add(venue_key(corpus.paper(i)));
  }
  CountTable table(acc);
  return top_k == 0 ? table : table.top(top_k);
}

YearMatrix venue_year_matrix(const VenueCorpus& corpus, Direction direction, std::size_t top_k) {
  const auto table = venue_citation_table(corpus, direction, top_k);
  std::vector<std::string> rows;
  std::map<std::string, std::size_t, std::less<>> row_of;
  for (const auto& [venue, n] : table.entries()) {
    row_of.emplace(venue, rows.size());
    rows.push_back(venue);
  }

  std::vector<YearEvent> events;
  const auto& store = corpus.store();
  if (direction == Direction::cited) {
    for (const auto i : corpus.accepted()) {
      const auto& p = corpus.paper(i);
      for (const auto& ref : p.references) {
        const auto j = store.index_of(ref);
        if (!j) continue;
        if (const auto it = row_of.find(venue_key(corpus.paper(*j))); it != row_of.end())
          events.push_back({it->second, p.year});
      }
    }
  } else {
    for (const auto i : corpus.citing()) {
      const auto& p = corpus.paper(i);
      if (const auto it = row_of.find(venue_key(p)); it != row_of.end()) events.push_back({it->second, p.year});
    }
  }
  return assemble(std::move(rows), events);
}

YearMatrix reference_memory_matrix(const VenueCorpus& corpus) {
  YearMatrix m;
  std::optional<int> row_lo, row_hi, col_lo, col_hi;
  std::uint64_t total_refs = 0;
  std::vector<std::pair<int, int>> placed;
  const auto& store = corpus.store();
  for (const auto i : corpus.accepted()) {
    const auto& p = corpus.paper(i);
    total_refs += p.references.size();
    if (!p.year) continue;
    row_lo = row_lo ? std::min(*row_lo, *p.year) : *p.year;
    row_hi = row_hi ? std::max(*row_hi, *p.year) : *p.year;
    for (const auto& ref : p.references) {
      const auto j = store.index_of(ref);
      if (!j || !corpus.paper(*j).year) continue;
      const int cited_year = *corpus.paper(*j).year;
      col_lo = col_lo ? std::min(*col_lo, cited_year) : cited_year;
      col_hi = col_hi ? std::max(*col_hi, cited_year) : cited_year;
      placed.emplace_back(*p.year, cited_year);
    }
  }
  if (row_lo)
    for (int y = *row_lo; y <= *row_hi; ++y) m.row_keys.push_back(std::to_string(y));
  if (col_lo)
    for (int y = *col_lo; y <= *col_hi; ++y) m.col_years.push_back(y);
  m.unplaced.assign(m.row_keys.size(), 0);
  m.cells.assign(m.row_keys.size() * m.col_years.size(), 0);
  for (const auto& [row_year, col_year] : placed)
    ++m.cells[static_cast<std::size_t>(row_year - *row_lo) * m.col_years.size() + static_cast<std::size_t>(col_year - *col_lo)];
  m.excluded = total_refs - placed.size();
  return m;
}

}  // namespace venuescope
