#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>

#include <fmt/format.h>

#include "internal/strings.hpp"
#include "venuescope/error.hpp"
#include "venuescope/ontology.hpp"

namespace venuescope {

namespace {

constexpr std::string_view kSuperTopicOf = "superTopicOf";
constexpr std::string_view kRelatedEquivalent = "relatedEquivalent";
constexpr std::string_view kPrimaryLabel = "primaryLabel";

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t root(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::string normalize_label(std::string_view label) {
  std::string out;
  out.reserve(label.size());
  bool pending_space = false;
  for (char c : detail::trim(label)) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(detail::ascii_lower(c));
  }
  return out;
}

TopicId topic_id_for_label(std::string_view label) {
  auto id = normalize_label(label);
  std::replace(id.begin(), id.end(), ' ', '_');
  return id;
}

TopicOntology TopicOntology::build(std::vector<Topic> topics, const TopicSet& preferred) {
  TopicOntology onto;
  std::sort(topics.begin(), topics.end(), [](const Topic& a, const Topic& b) { return a.topic_id < b.topic_id; });

  std::vector<std::string> offenders;
  for (std::uint32_t i = 0; i < topics.size(); ++i) {
    auto& t = topics[i];
    if (t.topic_id.empty()) throw std::invalid_argument("topic with empty id");
    if (!onto.id_index_.emplace(t.topic_id, i).second)
      throw LoadError("duplicate topic id", {t.topic_id});
    t.primary_label = normalize_label(t.primary_label);
    if (t.primary_label.empty()) throw LoadError("topic with empty primary label", {t.topic_id});
    std::set<std::string> alts;
    for (const auto& l : t.alt_labels)
      if (auto n = normalize_label(l); !n.empty() && n != t.primary_label) alts.insert(std::move(n));
    t.alt_labels = std::move(alts);
  }
  for (const auto& t : topics) {
    for (const auto& s : t.super_topics)
      if (!onto.id_index_.count(s)) offenders.push_back(fmt::format("{} superTopic {}", t.topic_id, s));
    for (const auto& e : t.equivalents)
      if (!onto.id_index_.count(e)) offenders.push_back(fmt::format("{} equivalent {}", t.topic_id, e));
  }
  for (const auto& p : preferred)
    if (!onto.id_index_.count(p)) offenders.push_back(fmt::format("primary label {}", p));
  if (!offenders.empty())
    throw LoadError(fmt::format("ontology has {} dangling reference(s): {}", offenders.size(), fmt::join(offenders, "; ")),
                    offenders);

  const auto n = static_cast<std::uint32_t>(topics.size());
  DisjointSets classes(n);
  onto.super_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const auto& s : topics[i].super_topics) onto.super_[i].push_back(onto.id_index_.at(s));
    for (const auto& e : topics[i].equivalents) classes.unite(i, onto.id_index_.at(e));
  }

  std::map<std::uint32_t, std::vector<std::uint32_t>> members;
  for (std::uint32_t i = 0; i < n; ++i) members[classes.root(i)].push_back(i);

  onto.representative_.assign(n, 0);
  for (const auto& [root, group] : members) {
    std::optional<std::uint32_t> rep;
    for (const auto m : group)  // ascending id order, first preferred member wins
      if (preferred.count(topics[m].topic_id)) {
        rep = m;
        break;
      }
    if (!rep) {
      rep = *std::min_element(group.begin(), group.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::tie(topics[a].primary_label, topics[a].topic_id) < std::tie(topics[b].primary_label, topics[b].topic_id);
      });
    }
    for (const auto m : group) {
      onto.representative_[m] = *rep;
      topics[m].equivalents.clear();
      for (const auto other : group)
        if (other != m) topics[m].equivalents.insert(topics[other].topic_id);
    }
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    auto claim = [&](const std::string& label) {
      auto [it, inserted] = onto.label_index_.emplace(label, i);
      if (!inserted && it->second != i)
        onto.collisions_.push_back(
            fmt::format("label '{}' claimed by {} and {}; kept {}", label, topics[it->second].topic_id,
                        topics[i].topic_id, topics[it->second].topic_id));
    };
    claim(topics[i].primary_label);
    for (const auto& l : topics[i].alt_labels) claim(l);
  }

  onto.topics_ = std::move(topics);
  return onto;
}

std::optional<std::uint32_t> TopicOntology::index_of(std::string_view id) const {
  const auto it = id_index_.find(id);
  if (it == id_index_.end()) return std::nullopt;
  return it->second;
}

const Topic* TopicOntology::find(std::string_view id) const {
  const auto idx = index_of(id);
  return idx ? &topics_[*idx] : nullptr;
}

const Topic& TopicOntology::at(std::string_view id) const {
  const auto* t = find(id);
  if (!t) throw NotFoundError(fmt::format("unknown topic '{}'", id));
  return *t;
}

std::optional<TopicId> TopicOntology::lookup_label(std::string_view label) const {
  const auto it = label_index_.find(normalize_label(label));
  if (it == label_index_.end()) return std::nullopt;
  return topics_[it->second].topic_id;
}

const TopicId& TopicOntology::representative(std::string_view id) const {
  const auto idx = index_of(id);
  if (!idx) throw NotFoundError(fmt::format("unknown topic '{}'", id));
  return topics_[representative_[*idx]].topic_id;
}

std::vector<std::uint32_t> TopicOntology::closure_indices(const std::vector<std::uint32_t>& ids) const {
  std::vector<char> visited(topics_.size(), 0), input(topics_.size(), 0);
  std::vector<std::uint32_t> stack;
  for (const auto i : ids) {
    input[i] = 1;
    if (!visited[i]) {
      visited[i] = 1;
      stack.push_back(i);
    }
  }
  std::vector<std::uint32_t> out;
  while (!stack.empty()) {
    const auto cur = stack.back();
    stack.pop_back();
    for (const auto s : super_[cur]) {
      if (visited[s]) continue;
      visited[s] = 1;
      stack.push_back(s);
    }
  }
  for (std::uint32_t i = 0; i < visited.size(); ++i)
    if (visited[i] && !input[i]) out.push_back(i);
  return out;
}

TopicSet TopicOntology::super_topic_closure(const TopicSet& ids) const {
  std::vector<std::uint32_t> idx;
  idx.reserve(ids.size());
  for (const auto& id : ids) {
    const auto i = index_of(id);
    if (!i) throw NotFoundError(fmt::format("unknown topic '{}'", id));
    idx.push_back(*i);
  }
  TopicSet out;
  for (const auto i : closure_indices(idx)) out.insert(topics_[i].topic_id);
  return out;
}

TopicSet TopicOntology::canonicalize(const TopicSet& ids) const {
  TopicSet out;
  for (const auto& id : ids) out.insert(representative(id));
  return out;
}

TopicOntology load_ontology(std::istream& in) {
  struct Draft {
    std::set<std::string> labels;
    TopicSet super_topics;
    TopicSet equivalents;
  };
  std::map<TopicId, Draft> drafts;
  TopicSet preferred;

  auto topic_for = [&](std::string_view raw, std::size_t lineno) -> TopicId {
    auto label = normalize_label(raw);
    if (label.empty()) throw ParseError(lineno, "empty topic label");
    auto id = topic_id_for_label(label);
    drafts[id].labels.insert(std::move(label));
    return id;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = detail::chomp(line);
    if (detail::is_comment_or_blank(text)) continue;
    const auto fields = detail::split(text, '\t');
    if (fields.size() != 3) throw ParseError(lineno, fmt::format("expected 3 columns, found {}", fields.size()));
    const auto relation = detail::trim(fields[1]);
    if (relation != kSuperTopicOf && relation != kRelatedEquivalent && relation != kPrimaryLabel)
      throw ParseError(lineno, fmt::format("unknown relation '{}'", relation));
    const auto subject = topic_for(fields[0], lineno);
    const auto object = topic_for(fields[2], lineno);
    if (relation == kSuperTopicOf) {
      if (subject != object) drafts[object].super_topics.insert(subject);
    } else {
      if (subject != object) {
        drafts[subject].equivalents.insert(object);
        drafts[object].equivalents.insert(subject);
      }
      if (relation == kPrimaryLabel) preferred.insert(object);
    }
  }
  if (in.bad()) throw IoError("read failure in ontology source");

  std::vector<Topic> topics;
  topics.reserve(drafts.size());
  for (auto& [id, d] : drafts) {
    Topic t;
    t.topic_id = id;
    t.primary_label = *d.labels.begin();
    for (auto it = std::next(d.labels.begin()); it != d.labels.end(); ++it) t.alt_labels.insert(*it);
    // Hyphenated labels also match their space-separated surface form.
    for (const auto& l : d.labels) {
      if (l.find('-') == std::string::npos) continue;
      auto spaced = l;
      std::replace(spaced.begin(), spaced.end(), '-', ' ');
      t.alt_labels.insert(normalize_label(spaced));
    }
    t.super_topics = std::move(d.super_topics);
    t.equivalents = std::move(d.equivalents);
    topics.push_back(std::move(t));
  }
  return TopicOntology::build(std::move(topics), preferred);
}

TopicOntology load_ontology_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open ontology {}", path.string()));
  return load_ontology(in);
}

}  // namespace venuescope
