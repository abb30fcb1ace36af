#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cgedit/graph.hpp"
#include "cgedit/ontology.hpp"

namespace cgedit {

/// Witness that a query graph projects into a target graph.
struct ProjectionMapping {
  /// concepts[q] is the target concept that query concept q maps to.
  std::vector<ConceptId> concepts;
  /// relations[r] is the index of the target relation that query relation r maps to.
  std::vector<std::size_t> relations;

  bool operator==(const ProjectionMapping&) const = default;
};

/// Finds a projection of `query` into `target`: every query concept maps to
/// a target concept of equal or more specific type (and the same referent
/// when the query names one), and every query relation maps to a target
/// relation of the same type between the images of its endpoints. The map
/// need not be injective.
///
/// When several projections exist, the one whose concept vector is
/// lexicographically least is returned.
std::optional<ProjectionMapping> project(const ConceptualGraph& query, const ConceptualGraph& target,
                                         const Ontology& ont);

/// Checks every invariant of a mapping independently of how it was found.
bool is_valid_projection(const ConceptualGraph& query, const ConceptualGraph& target,
                         const Ontology& ont, const ProjectionMapping& mapping);

/// Concept-level compatibility used by projection.
bool concept_matches(const Concept& query, const Concept& target, const Ontology& ont);

}  // namespace cgedit
