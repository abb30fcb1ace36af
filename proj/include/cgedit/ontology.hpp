#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgedit/label.hpp"

namespace cgedit {

class OntologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Concept type hierarchy. Relation types are flat and never consulted here.
///
/// The strict-ancestor closure is maintained on every insert, so lookups are
/// read-only and a built ontology may be shared between threads.
class Ontology {
 public:
  /// Declares `child < parent`. Throws OntologyError if the edge would make
  /// the hierarchy cyclic or would place the top type below another type.
  void add_subtype(const TypeLabel& child, const TypeLabel& parent);

  /// Reflexive, transitive; every label is a subtype of top_type().
  bool is_subtype(const TypeLabel& sub, const TypeLabel& super) const;

  const std::set<std::pair<TypeLabel, TypeLabel>>& edges() const noexcept { return edges_; }

  /// All labels mentioned by any edge, sorted.
  std::vector<TypeLabel> types() const;

  bool operator==(const Ontology& other) const { return edges_ == other.edges_; }

 private:
  std::set<std::pair<TypeLabel, TypeLabel>> edges_;
  std::map<TypeLabel, std::set<TypeLabel>> ancestors_;
};

inline bool is_subtype(const TypeLabel& sub, const TypeLabel& super, const Ontology& ont) {
  return ont.is_subtype(sub, super);
}

/// Ontology file: one `child < parent` per line, `#` comments, blank lines
/// ignored. Errors carry the 1-based line number.
Ontology parse_ontology(std::string_view text);
std::string format_ontology(const Ontology& ont);

}  // namespace cgedit
