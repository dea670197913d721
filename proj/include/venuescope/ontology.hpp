#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace venuescope {

using TopicId = std::string;
using TopicSet = std::set<TopicId>;

struct Topic {
  TopicId topic_id;
  std::string primary_label;
  std::set<std::string> alt_labels;
  TopicSet super_topics;
  TopicSet equivalents;
};

// Lowercases (ASCII), trims and collapses runs of whitespace.
std::string normalize_label(std::string_view label);

// Identifier derived from a normalized label: spaces become underscores.
TopicId topic_id_for_label(std::string_view label);

// Research-area graph. Immutable after construction; all queries are const and
// may run concurrently.
class TopicOntology {
 public:
  TopicOntology() = default;

  // Validates references, closes the equivalence relation and picks one
  // representative per class. `preferred` lists topics named as the primary
  // label of their class. Throws LoadError listing every dangling reference.
  static TopicOntology build(std::vector<Topic> topics, const TopicSet& preferred = {});

  std::size_t size() const noexcept { return topics_.size(); }
  bool contains(std::string_view id) const { return index_of(id).has_value(); }
  const Topic& at(std::string_view id) const;  // NotFoundError when absent
  const Topic* find(std::string_view id) const;
  std::optional<TopicId> lookup_label(std::string_view label) const;
  const std::map<std::string, std::uint32_t, std::less<>>& label_index() const noexcept { return label_index_; }
  // Labels claimed by more than one topic, with the winner noted.
  const std::vector<std::string>& label_collisions() const noexcept { return collisions_; }

  const TopicId& representative(std::string_view id) const;

  // Every super-topic reachable from `ids`, excluding `ids` themselves.
  // Tolerates cycles. NotFoundError on an unknown id.
  TopicSet super_topic_closure(const TopicSet& ids) const;
  // Replaces each topic by its class representative.
  TopicSet canonicalize(const TopicSet& ids) const;

  // Dense-index view used by hot loops. Indices follow ascending topic_id order.
  std::optional<std::uint32_t> index_of(std::string_view id) const;
  const Topic& topic(std::uint32_t index) const { return topics_[index]; }
  std::uint32_t representative_index(std::uint32_t index) const { return representative_[index]; }
  std::vector<std::uint32_t> closure_indices(const std::vector<std::uint32_t>& ids) const;

 private:
  std::vector<Topic> topics_;
  std::map<TopicId, std::uint32_t, std::less<>> id_index_;
  std::vector<std::vector<std::uint32_t>> super_;
  std::vector<std::uint32_t> representative_;
  std::map<std::string, std::uint32_t, std::less<>> label_index_;
  std::vector<std::string> collisions_;
};

// Relation triples, one per line: subject_label<TAB>relation<TAB>object_label,
// relation one of superTopicOf, relatedEquivalent, primaryLabel.
TopicOntology load_ontology(std::istream& in);
TopicOntology load_ontology_file(const std::filesystem::path& path);

}  // namespace venuescope
