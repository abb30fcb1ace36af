#include "cgedit/ontology.hpp"

#include <sstream>

namespace cgedit {

void Ontology::add_subtype(const TypeLabel& child, const TypeLabel& parent) {
  if (child == top_type())
    throw OntologyError("the top type '" + child.str() + "' cannot be a subtype");
  if (child == parent || is_subtype(parent, child))
    throw OntologyError("cycle: '" + child.str() + " < " + parent.str() + "'");
  if (!edges_.emplace(child, parent).second) return;

  std::set<TypeLabel> gained = {parent};
  if (auto it = ancestors_.find(parent); it != ancestors_.end())
    gained.insert(it->second.begin(), it->second.end());

  ancestors_[child].insert(gained.begin(), gained.end());
  for (auto& [label, ancestors] : ancestors_)
    if (ancestors.count(child)) ancestors.insert(gained.begin(), gained.end());
}

bool Ontology::is_subtype(const TypeLabel& sub, const TypeLabel& super) const {
  if (sub == super || super == top_type()) return true;
  auto it = ancestors_.find(sub);
  return it != ancestors_.end() && it->second.count(super) > 0;
}

std::vector<TypeLabel> Ontology::types() const {
  std::set<TypeLabel> all;
  for (const auto& [child, parent] : edges_) {
    all.insert(child);
    all.insert(parent);
  }
  return {all.begin(), all.end()};
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Ontology parse_ontology(std::string_view text) {
  Ontology ont;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto lt = line.find('<');
    if (lt == std::string_view::npos || line.find('<', lt + 1) != std::string_view::npos)
      throw OntologyError("line " + std::to_string(line_no) + ": expected 'child < parent'");
    try {
      ont.add_subtype(TypeLabel(trim(line.substr(0, lt))), TypeLabel(trim(line.substr(lt + 1))));
    } catch (const std::exception& e) {
      throw OntologyError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return ont;
}

std::string format_ontology(const Ontology& ont) {
  std::ostringstream out;
  for (const auto& [child, parent] : ont.edges()) out << child.str() << " < " << parent.str() << '\n';
  return out.str();
}

}  // namespace cgedit
