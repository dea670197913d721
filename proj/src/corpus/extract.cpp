#include <algorithm>
#include <ostream>
#include <unordered_set>

#include <fmt/format.h>

#include "venuescope/corpus.hpp"
#include "venuescope/error.hpp"

namespace venuescope {

VenueCorpus::VenueCorpus(const CorpusStore& store, std::vector<std::string> venue_ids,
                         std::vector<std::uint32_t> accepted, std::vector<std::uint32_t> citing,
                         std::vector<std::uint32_t> cited, std::size_t dangling_references)
    : store_(&store),
      venue_ids_(std::move(venue_ids)),
      accepted_(std::move(accepted)),
      citing_(std::move(citing)),
      cited_(std::move(cited)),
      dangling_references_(dangling_references) {}

VenueCorpus extract_venue_dataset(const CorpusStore& store, std::span<const std::string> venue_ids) {
  std::vector<std::string> ids(venue_ids.begin(), venue_ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw std::invalid_argument("extract_venue_dataset: empty venue id set");
  if (std::none_of(ids.begin(), ids.end(), [&](const std::string& v) { return store.has_venue(v); }))
    throw NotFoundError(fmt::format("venue {} not present in store", fmt::join(ids, ",")));

  const auto papers = store.papers();
  const auto n = static_cast<std::uint32_t>(papers.size());
  std::vector<char> is_accepted(n, 0), is_cited(n, 0);
  std::vector<std::uint32_t> accepted, citing, cited;

  for (std::uint32_t i = 0; i < n; ++i) {
    if (std::binary_search(ids.begin(), ids.end(), papers[i].venue_id)) {
      is_accepted[i] = 1;
      accepted.push_back(i);
    }
  }

  std::size_t dangling = 0;
  for (const auto i : accepted) {
    for (const auto& ref : papers[i].references) {
      if (const auto j = store.index_of(ref)) is_cited[*j] = 1;
      else ++dangling;
    }
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    if (is_cited[i]) cited.push_back(i);
    for (const auto& ref : papers[i].references) {
      const auto j = store.index_of(ref);
      if (j && is_accepted[*j]) {
        citing.push_back(i);
        break;
      }
    }
  }

  return VenueCorpus(store, std::move(ids), std::move(accepted), std::move(citing), std::move(cited), dangling);
}

VenueCorpus extract_venue_dataset(const CorpusStore& store, std::string_view venue_id) {
  const std::string id(venue_id);
  return extract_venue_dataset(store, std::span<const std::string>(&id, 1));
}

void write_corpus_manifest(std::ostream& out, const VenueCorpus& corpus) {
  const auto& stats = corpus.store().stats();
  std::size_t missing_ids = 0;
  for (const auto& v : corpus.venue_ids())
    if (!corpus.store().has_venue(v)) ++missing_ids;
  out << fmt::format("venue_ids={}\n", fmt::join(corpus.venue_ids(), ","));
  out << fmt::format("venue_ids_absent={}\n", missing_ids);
  out << fmt::format("accepted={}\n", corpus.accepted().size());
  out << fmt::format("citing={}\n", corpus.citing().size());
  out << fmt::format("cited={}\n", corpus.cited().size());
  out << fmt::format("dangling_references={}\n", corpus.dangling_references());
  out << fmt::format("store_records={}\n", corpus.store().size());
  out << fmt::format("store_rows={}\n", stats.rows);
  out << fmt::format("skipped_rows={}\n", stats.skipped);
  out << fmt::format("duplicate_rows={}\n", stats.duplicates);
  out << fmt::format("self_references_dropped={}\n", stats.self_references);
  out << fmt::format("institutions_skipped={}\n", stats.institutions_skipped);
}

}  // namespace venuescope
