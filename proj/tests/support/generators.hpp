#pragma once

// Random conceptual graphs, ontologies and interval sets for property tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cgedit/graph.hpp"
#include "cgedit/interval_store.hpp"
#include "cgedit/ontology.hpp"

namespace cgedit::testing {

using Rng = std::mt19937_64;

inline std::vector<TypeLabel> type_vocabulary(std::size_t n) {
  std::vector<TypeLabel> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back("t" + std::to_string(i));
  return out;
}

inline const std::vector<TypeLabel>& relation_vocabulary() {
  static const std::vector<TypeLabel> labels = {TypeLabel("agnt"), TypeLabel("obj"), TypeLabel("attr")};
  return labels;
}

/// Random forest-with-shortcuts over `types`: each type may get parents among
/// the types before it, which keeps the hierarchy acyclic.
inline Ontology random_ontology(Rng& rng, const std::vector<TypeLabel>& types) {
  Ontology ont;
  std::bernoulli_distribution edge(0.3);
  for (std::size_t i = 1; i < types.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (edge(rng)) ont.add_subtype(types[i], types[j]);
  return ont;
}

struct GraphShape {
  std::size_t max_concepts = 5;
  std::size_t max_relations = 5;
  double referent_probability = 0.15;
};

inline ConceptualGraph random_graph(Rng& rng, const std::vector<TypeLabel>& types, const GraphShape& shape = {}) {
  GraphBuilder b;
  std::uniform_int_distribution<std::size_t> n_concepts(1, shape.max_concepts);
  std::uniform_int_distribution<std::size_t> pick_type(0, types.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_referent(0, 2);
  std::bernoulli_distribution has_referent(shape.referent_probability);

  std::vector<GraphBuilder::Handle> handles;
  const std::size_t n = n_concepts(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Concept c{types[pick_type(rng)], std::nullopt};
    if (has_referent(rng)) c.referent = TypeLabel("r" + std::to_string(pick_referent(rng)));
    handles.push_back(b.add_concept(c));
  }
  std::sort(handles.begin(), handles.end());
  handles.erase(std::unique(handles.begin(), handles.end()), handles.end());

  std::uniform_int_distribution<std::size_t> n_relations(0, shape.max_relations);
  std::uniform_int_distribution<std::size_t> pick_node(0, handles.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_rel(0, relation_vocabulary().size() - 1);
  const std::size_t m = n_relations(rng);
  for (std::size_t i = 0; i < m; ++i)
    b.add_relation(relation_vocabulary()[pick_rel(rng)], handles[pick_node(rng)], handles[pick_node(rng)]);
  return b.build();
}

/// A query likely to project into `target`: a random sub-structure with
/// types replaced by random supertypes.
inline ConceptualGraph generalize(Rng& rng, const ConceptualGraph& target, const Ontology& ont) {
  GraphBuilder b;
  std::bernoulli_distribution keep(0.7), drop_referent(0.5);
  const auto concepts = target.concepts();
  std::vector<std::optional<GraphBuilder::Handle>> handle(concepts.size());
  auto vocabulary = ont.types();
  vocabulary.push_back(top_type());
  for (ConceptId c = 0; c < concepts.size(); ++c) {
    if (!keep(rng)) continue;
    std::vector<TypeLabel> supers;
    for (const auto& t : vocabulary)
      if (ont.is_subtype(concepts[c].type, t)) supers.push_back(t);
    supers.push_back(concepts[c].type);
    std::uniform_int_distribution<std::size_t> pick(0, supers.size() - 1);
    Concept q{supers[pick(rng)], concepts[c].referent};
    if (q.referent && drop_referent(rng)) q.referent.reset();
    handle[c] = b.add_concept(q);
  }
  for (const auto& r : target.relations())
    if (handle[r.source] && handle[r.target] && keep(rng)) b.add_relation(r.type, *handle[r.source], *handle[r.target]);
  auto g = b.build();
  if (g.empty()) {
    GraphBuilder single;
    single.add_concept(Concept{top_type(), std::nullopt});
    return single.build();
  }
  return g;
}

/// Small annotation drawn from a fixed pool so that unions recur.
inline ConceptualGraph random_annotation(Rng& rng) {
  static const std::vector<TypeLabel> types = type_vocabulary(6);
  return random_graph(rng, types, GraphShape{2, 1, 0.0});
}

inline AnnotatedInterval random_interval(Rng& rng, const std::vector<MediaId>& media, Frame frame_range,
                                         Frame max_length) {
  std::uniform_int_distribution<std::size_t> pick_media(0, media.size() - 1);
  std::uniform_int_distribution<Frame> start(0, frame_range - 1);
  std::uniform_int_distribution<Frame> length(1, max_length);
  const Frame s = start(rng);
  const Frame e = std::min<Frame>(frame_range, s + length(rng));
  return AnnotatedInterval{media[pick_media(rng)], s, std::max(e, s + 1), random_annotation(rng)};
}

}  // namespace cgedit::testing
