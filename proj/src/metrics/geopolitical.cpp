#include <algorithm>
#include <set>
#include <stdexcept>

#include "venuescope/metrics.hpp"

namespace venuescope {

CountTable country_distribution(const CorpusStore& store, std::span<const std::uint32_t> papers) {
  CountAccumulator acc;
  for (const auto i : papers)
    for (const auto& a : store.papers()[i].authorships) acc.add(resolve_country(a, store));
  return CountTable(acc);
}

CountTable country_distribution(const VenueCorpus& corpus, Partition partition) {
  return country_distribution(corpus.store(), partition_of(corpus, partition));
}

CountTable solo_country_papers(const VenueCorpus& corpus, std::uint64_t min_papers) {
  CountAccumulator acc;
  for (const auto i : corpus.accepted()) {
    const auto& p = corpus.paper(i);
    if (p.authorships.empty()) continue;
    const auto country = resolve_country(p.authorships.front(), corpus.store());
    if (country == kUnknownCountry) continue;
    const bool solo = std::all_of(p.authorships.begin(), p.authorships.end(), [&](const Authorship& a) {
      return resolve_country(a, corpus.store()) == country;
    });
    if (solo) acc.add(country);
  }
  std::vector<CountTable::Entry> kept;
  for (const auto& [country, n] : acc.counts())
    if (n >= min_papers) kept.emplace_back(country, n);
  return CountTable::from_entries(std::move(kept));
}

std::vector<DebitEntry> knowledge_debit(const VenueCorpus& corpus) {
  const auto citing = country_distribution(corpus, Partition::citing);
  const auto cited = country_distribution(corpus, Partition::cited);
  std::set<std::string> countries;
  for (const auto& [c, n] : citing.entries()) countries.insert(c);
  for (const auto& [c, n] : cited.entries()) countries.insert(c);

  std::vector<DebitEntry> out;
  for (const auto& c : countries) {
    DebitEntry e{c, citing.count(c), cited.count(c), std::nullopt};
    if (e.citing_contribs == 0 && e.cited_contribs == 0) continue;
    if (e.cited_contribs > 0)
      e.debit = static_cast<double>(e.citing_contribs) / static_cast<double>(e.cited_contribs);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const DebitEntry& a, const DebitEntry& b) {
    if (a.never_cited() != b.never_cited()) return a.never_cited();
    if (a.never_cited()) {
      if (a.citing_contribs != b.citing_contribs) return a.citing_contribs > b.citing_contribs;
    } else if (*a.debit != *b.debit) {
      return *a.debit > *b.debit;
    }
    return a.country_code < b.country_code;
  });
  return out;
}

std::map<int, CountTable> yearly_country_counts(const VenueCorpus& corpus) {
  std::map<int, std::vector<std::uint32_t>> by_year;
  for (const auto i : corpus.accepted())
    if (const auto y = corpus.paper(i).year) by_year[*y].push_back(i);
  std::map<int, CountTable> out;
  for (const auto& [year, papers] : by_year) out.emplace(year, country_distribution(corpus.store(), papers));
  return out;
}

StabilitySeries ranking_stability(const std::map<int, CountTable>& yearly) {
  if (yearly.size() < 2) throw std::invalid_argument("ranking_stability: needs at least two years");
  auto ranked = [](const CountTable& t) {
    std::size_t n = 0;
    for (const auto& [c, count] : t.entries())
      if (c != kUnknownCountry && count > 0) ++n;
    return n;
  };

  StabilitySeries series;
  const int first = yearly.begin()->first;
  const int last = yearly.rbegin()->first;
  for (int y = first; y < last; ++y) {
    StabilityPoint point{y, y + 1, std::nullopt};
    const auto a = yearly.find(y);
    const auto b = yearly.find(y + 1);
    if (a != yearly.end() && b != yearly.end() && ranked(a->second) >= 2 && ranked(b->second) >= 2) {
      std::set<std::string> universe;
      for (const auto* t : {&a->second, &b->second})
        for (const auto& [c, n] : t->entries())
          if (c != kUnknownCountry) universe.insert(c);
      std::vector<double> xs, ys;
      for (const auto& c : universe) {
        xs.push_back(static_cast<double>(a->second.count(c)));
        ys.push_back(static_cast<double>(b->second.count(c)));
      }
      point.rho = spearman_rho(xs, ys);
    }
    series.points.push_back(point);
  }
  return series;
}

FirstAuthorTrends first_author_institution_trends(const VenueCorpus& corpus) {
  struct Sets {
    std::set<std::string_view> first, other;
  };
  auto row_of = [](const Sets& s, std::optional<int> year) {
    FirstAuthorRow r;
    r.year = year;
    r.first_author_institutions = s.first.size();
    std::set<std::string_view> all = s.first;
    for (const auto inst : s.other) {
      all.insert(inst);
      if (!s.first.count(inst)) ++r.never_first_institutions;
    }
    r.total_institutions = all.size();
    return r;
  };

  std::map<int, Sets> by_year;
  Sets overall;
  for (const auto i : corpus.accepted()) {
    const auto& p = corpus.paper(i);
    for (const auto& a : p.authorships) {
      if (!a.institution_id) continue;
      const std::string_view inst = *a.institution_id;
      auto& target = a.position == 0 ? overall.first : overall.other;
      target.insert(inst);
      if (p.year) (a.position == 0 ? by_year[*p.year].first : by_year[*p.year].other).insert(inst);
    }
    if (p.year) by_year.try_emplace(*p.year);
  }

  FirstAuthorTrends out;
  for (const auto& [year, sets] : by_year) out.per_year.push_back(row_of(sets, year));
  out.corpus_wide = row_of(overall, std::nullopt);
  return out;
}

}  // namespace venuescope
