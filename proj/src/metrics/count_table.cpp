#include <algorithm>
#include <numeric>

#include "venuescope/metrics.hpp"

namespace venuescope {

std::string_view partition_name(Partition p) {
  switch (p) {
    case Partition::accepted: return "accepted";
    case Partition::citing: return "citing";
    case Partition::cited: return "cited";
  }
  return "?";
}

std::span<const std::uint32_t> partition_of(const VenueCorpus& corpus, Partition p) {
  switch (p) {
    case Partition::accepted: return corpus.accepted();
    case Partition::citing: return corpus.citing();
    case Partition::cited: return corpus.cited();
  }
  return {};
}

void CountAccumulator::add(std::string_view key, std::uint64_t n) {
  if (n == 0) return;
  auto it = counts_.find(std::string(key));
  if (it == counts_.end()) counts_.emplace(std::string(key), n);
  else it->second += n;
}

void CountAccumulator::merge(const CountAccumulator& other) {
  for (const auto& [k, n] : other.counts_) counts_[k] += n;
}

CountTable::CountTable(const CountAccumulator& acc)
    : CountTable(from_entries(std::vector<Entry>(acc.counts().begin(), acc.counts().end()))) {}

CountTable CountTable::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first) throw std::invalid_argument("CountTable: duplicate key " + entries[i].first);
  CountTable t;
  t.entries_ = std::move(entries);
  return t;
}

std::uint64_t CountTable::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0},
                         [](std::uint64_t s, const Entry& e) { return s + e.second; });
}

std::uint64_t CountTable::count(std::string_view key) const {
  for (const auto& [k, n] : entries_)
    if (k == key) return n;
  return 0;
}

CountTable CountTable::top(std::size_t k) const {
  CountTable t;
  t.entries_.assign(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(std::min(k, entries_.size())));
  return t;
}

std::uint64_t YearMatrix::row_sum(std::size_t row) const {
  const auto cols = col_years.size();
  return std::accumulate(cells.begin() + static_cast<std::ptrdiff_t>(row * cols),
                         cells.begin() + static_cast<std::ptrdiff_t>((row + 1) * cols), std::uint64_t{0});
}

std::uint64_t YearMatrix::total() const { return std::accumulate(cells.begin(), cells.end(), std::uint64_t{0}); }

}  // namespace venuescope
