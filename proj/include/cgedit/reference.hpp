#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "cgedit/graph.hpp"
#include "cgedit/interval_store.hpp"
#include "cgedit/ontology.hpp"
#include "cgedit/projection.hpp"

// Brute-force counterparts of the store and projection, sharing no search or
// splitting code with them. Exponential or linear-per-frame by construction.
namespace cgedit::reference {

/// Tries every total function from query concepts to target concepts in
/// lexicographic order and returns the first valid one.
std::optional<ProjectionMapping> project_by_enumeration(const ConceptualGraph& query,
                                                        const ConceptualGraph& target, const Ontology& ont);

/// Number of functions project_by_enumeration would have to try.
std::uint64_t enumeration_size(const ConceptualGraph& query, const ConceptualGraph& target);

/// Union of every raw annotation of `media` covering frame t, scanning the
/// whole log; absent when nothing covers t.
std::optional<ConceptualGraph> flatten_at(std::span<const AnnotatedInterval> log, const MediaId& media,
                                          Frame t);

}  // namespace cgedit::reference
