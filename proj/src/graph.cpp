#include "cgedit/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgedit {

std::optional<ConceptId> ConceptualGraph::find(const Concept& c) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), c);
  if (it == concepts_.end() || *it != c) return std::nullopt;
  return static_cast<ConceptId>(it - concepts_.begin());
}

std::optional<std::size_t> ConceptualGraph::find_relation(const TypeLabel& type, ConceptId source,
                                                          ConceptId target) const {
  const Relation key{type, source, target};
  auto it = std::lower_bound(relations_.begin(), relations_.end(), key);
  if (it == relations_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - relations_.begin());
}

GraphBuilder::Handle GraphBuilder::add_concept(const Concept& c) {
  auto [it, inserted] = index_.emplace(c, concepts_.size());
  if (inserted) concepts_.push_back(c);
  return it->second;
}

void GraphBuilder::add_relation(const TypeLabel& type, Handle source, Handle target) {
  if (source >= concepts_.size() || target >= concepts_.size())
    throw std::out_of_range("relation endpoint is not a concept of this graph");
  relations_.emplace(type, source, target);
}

void GraphBuilder::merge(const ConceptualGraph& g) {
  std::vector<Handle> handles;
  handles.reserve(g.concepts().size());
  for (const auto& c : g.concepts()) handles.push_back(add_concept(c));
  for (const auto& r : g.relations()) add_relation(r.type, handles[r.source], handles[r.target]);
}

ConceptualGraph GraphBuilder::build() const {
  ConceptualGraph g;
  // index_ iterates in concept order, which is the canonical id order.
  std::vector<ConceptId> id_of(concepts_.size());
  g.concepts_.reserve(concepts_.size());
  for (const auto& [concept_value, handle] : index_) {
    id_of[handle] = g.concepts_.size();
    g.concepts_.push_back(concept_value);
  }
  g.relations_.reserve(relations_.size());
  for (const auto& [type, source, target] : relations_)
    g.relations_.push_back(Relation{type, id_of[source], id_of[target]});
  std::sort(g.relations_.begin(), g.relations_.end());
  return g;
}

ConceptualGraph cg_union(const ConceptualGraph& a, const ConceptualGraph& b) {
  GraphBuilder builder;
  builder.merge(a);
  builder.merge(b);
  return builder.build();
}

}  // namespace cgedit
