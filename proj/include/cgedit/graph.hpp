#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "cgedit/label.hpp"

namespace cgedit {

/// A typed concept node, optionally naming an individual.
struct Concept {
  TypeLabel type;
  std::optional<TypeLabel> referent;

  auto operator<=>(const Concept&) const = default;
};

using ConceptId = std::size_t;

/// Dyadic relation between two concept nodes of one graph.
struct Relation {
  TypeLabel type;
  ConceptId source;
  ConceptId target;

  auto operator<=>(const Relation&) const = default;
};

/// An immutable conceptual graph in canonical form.
///
/// Concepts are identified by (type, referent): two nodes with the same text
/// are the same node. Concepts are kept sorted and relations sorted by
/// (type, source, target) without duplicates, so equality of two graphs is
/// exactly label-preserving isomorphism.
class ConceptualGraph {
 public:
  ConceptualGraph() = default;

  std::span<const Concept> concepts() const noexcept { return concepts_; }
  std::span<const Relation> relations() const noexcept { return relations_; }
  bool empty() const noexcept { return concepts_.empty(); }

  std::optional<ConceptId> find(const Concept& c) const;
  /// Index of the relation (type, source, target), if present.
  std::optional<std::size_t> find_relation(const TypeLabel& type, ConceptId source,
                                           ConceptId target) const;

  bool operator==(const ConceptualGraph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<Concept> concepts_;
  std::vector<Relation> relations_;
};

/// Accumulates concepts and relations, then produces a canonical graph.
class GraphBuilder {
 public:
  using Handle = std::size_t;

  /// Returns the existing handle when an identical concept was already added.
  Handle add_concept(const Concept& c);
  void add_relation(const TypeLabel& type, Handle source, Handle target);
  /// Adds every concept and relation of `g`, merging identical concepts.
  void merge(const ConceptualGraph& g);

  ConceptualGraph build() const;

 private:
  std::map<Concept, Handle> index_;
  std::vector<Concept> concepts_;
  std::set<std::tuple<TypeLabel, Handle, Handle>> relations_;
};

/// Union with identical concepts merged and duplicate relations collapsed.
ConceptualGraph cg_union(const ConceptualGraph& a, const ConceptualGraph& b);

inline bool isomorphic(const ConceptualGraph& a, const ConceptualGraph& b) { return a == b; }

}  // namespace cgedit
