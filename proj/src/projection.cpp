#include "cgedit/projection.hpp"

#include <algorithm>

namespace cgedit {

bool concept_matches(const Concept& query, const Concept& target, const Ontology& ont) {
  if (query.referent && query.referent != target.referent) return false;
  return ont.is_subtype(target.type, query.type);
}

namespace {

class Search {
 public:
  Search(const ConceptualGraph& query, const ConceptualGraph& target, const Ontology& ont)
      : query_(query), target_(target), candidates_(query.concepts().size()),
        closing_(query.concepts().size()) {
    const auto qc = query.concepts();
    const auto tc = target.concepts();
    for (ConceptId q = 0; q < qc.size(); ++q)
      for (ConceptId t = 0; t < tc.size(); ++t)
        if (concept_matches(qc[q], tc[t], ont)) candidates_[q].push_back(t);

    // A relation is checked as soon as both of its endpoints are assigned,
    // i.e. when the later of the two is.
    const auto qr = query.relations();
    for (std::size_t r = 0; r < qr.size(); ++r)
      closing_[std::max(qr[r].source, qr[r].target)].push_back(r);

    assignment_.resize(qc.size());
  }

  std::optional<ProjectionMapping> run() {
    for (const auto& c : candidates_)
      if (c.empty()) return std::nullopt;
    if (!assign(0)) return std::nullopt;

    ProjectionMapping mapping;
    mapping.concepts = assignment_;
    for (const auto& rel : query_.relations())
      mapping.relations.push_back(
          *target_.find_relation(rel.type, assignment_[rel.source], assignment_[rel.target]));
    return mapping;
  }

 private:
  // Candidates are tried in ascending order, so the first complete
  // assignment is the lexicographically least one.
  bool assign(ConceptId q) {
    if (q == assignment_.size()) return true;
    for (ConceptId t : candidates_[q]) {
      assignment_[q] = t;
      if (consistent(q) && assign(q + 1)) return true;
    }
    return false;
  }

  bool consistent(ConceptId q) const {
    const auto qr = query_.relations();
    for (std::size_t r : closing_[q]) {
      const auto& rel = qr[r];
      if (!target_.find_relation(rel.type, assignment_[rel.source], assignment_[rel.target]))
        return false;
    }
    return true;
  }

  const ConceptualGraph& query_;
  const ConceptualGraph& target_;
  std::vector<std::vector<ConceptId>> candidates_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<ConceptId> assignment_;
};

}  // namespace

std::optional<ProjectionMapping> project(const ConceptualGraph& query, const ConceptualGraph& target,
                                         const Ontology& ont) {
  return Search(query, target, ont).run();
}

bool is_valid_projection(const ConceptualGraph& query, const ConceptualGraph& target,
                         const Ontology& ont, const ProjectionMapping& mapping) {
  const auto qc = query.concepts();
  const auto tc = target.concepts();
  const auto qr = query.relations();
  const auto tr = target.relations();
  if (mapping.concepts.size() != qc.size() || mapping.relations.size() != qr.size()) return false;
  for (ConceptId q = 0; q < qc.size(); ++q) {
    if (mapping.concepts[q] >= tc.size()) return false;
    if (!concept_matches(qc[q], tc[mapping.concepts[q]], ont)) return false;
  }
  for (std::size_t r = 0; r < qr.size(); ++r) {
    if (mapping.relations[r] >= tr.size()) return false;
    const auto& image = tr[mapping.relations[r]];
    if (image.type != qr[r].type || image.source != mapping.concepts[qr[r].source] ||
        image.target != mapping.concepts[qr[r].target])
      return false;
  }
  return true;
}

}  // namespace cgedit
