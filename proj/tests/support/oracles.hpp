#pragma once

// Brute-force reimplementations used to check the library. They share no code
// with src/ beyond the public data types and favour obviousness over speed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "venuescope/corpus.hpp"
#include "venuescope/ontology.hpp"

namespace oracle {

// Full (|a|+1) x (|b|+1) Wagner-Fischer table.
inline std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return d[a.size()][b.size()];
}

inline double similarity(const std::string& a, const std::string& b) {
  const auto longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(edit_distance(a, b)) / static_cast<double>(longest);
}

// Average ranks: sort, then give every member of a run of equal values the
// mean of the 1-based positions the run occupies.
inline std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double mean = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = mean;
    i = j + 1;
  }
  return r;
}

inline std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

inline std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(ranks(x), ranks(y));
}

inline std::string country_of(const venuescope::Authorship& a, const venuescope::CorpusStore& store) {
  if (!a.institution_id) return "unknown";
  for (const auto& inst : store.institutions())
    if (inst.institution_id == *a.institution_id) return inst.country_code.empty() ? "unknown" : inst.country_code;
  return "unknown";
}

// Partitions recomputed by scanning every record against every other.
struct Partitions {
  std::set<std::string> accepted, citing, cited;
  std::size_t dangling = 0;
};

inline Partitions partitions(const venuescope::CorpusStore& store, const std::set<std::string>& venue_ids) {
  Partitions p;
  std::set<std::string> all;
  for (const auto& r : store.papers()) all.insert(r.paper_id);
  for (const auto& r : store.papers())
    if (venue_ids.count(r.venue_id)) p.accepted.insert(r.paper_id);
  for (const auto& r : store.papers()) {
    for (const auto& ref : r.references) {
      if (p.accepted.count(ref)) p.citing.insert(r.paper_id);
      if (p.accepted.count(r.paper_id)) {
        if (all.count(ref)) p.cited.insert(ref);
        else ++p.dangling;
      }
    }
  }
  return p;
}

inline std::map<std::string, std::uint64_t> country_counts(const venuescope::CorpusStore& store,
                                                           const std::set<std::string>& ids) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& r : store.papers())
    if (ids.count(r.paper_id))
      for (const auto& a : r.authorships) ++out[country_of(a, store)];
  return out;
}

// Transitive super-topics by repeated expansion until nothing changes.
inline venuescope::TopicSet closure(const venuescope::TopicOntology& o, const venuescope::TopicSet& start) {
  venuescope::TopicSet reached;
  bool grew = true;
  while (grew) {
    grew = false;
    venuescope::TopicSet frontier = start;
    frontier.insert(reached.begin(), reached.end());
    for (const auto& t : frontier)
      for (const auto& s : o.at(t).super_topics)
        if (reached.insert(s).second) grew = true;
  }
  for (const auto& t : start) reached.erase(t);
  return reached;
}

}  // namespace oracle
