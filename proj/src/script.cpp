#include "cgedit/script.hpp"

#include <sstream>
#include <stdexcept>

#include "cgedit/notation.hpp"
#include "cgedit/projection.hpp"

namespace cgedit {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::PreActPost: return "pre-act-post";
    case Strategy::PreAct: return "pre-act";
    case Strategy::ActPost: return "act-post";
    case Strategy::PrePost: return "pre-post";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (auto s : kAllStrategies)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Precondition: return "precondition";
    case Role::Action: return "action";
    case Role::Postcondition: return "postcondition";
  }
  return "?";
}

void ScriptDb::add(Script script) {
  if (!is_token(script.id)) throw std::invalid_argument("invalid script id '" + script.id + "'");
  if (script.situations.empty()) throw std::invalid_argument("script '" + script.id + "' has no situations");
  for (const auto& s : script.situations)
    if (s.empty()) throw std::invalid_argument("script '" + script.id + "' has an empty situation");
  const std::string id = script.id;
  if (!scripts_.emplace(id, std::move(script)).second)
    throw std::invalid_argument("duplicate script id '" + id + "'");
}

const Script* ScriptDb::find(std::string_view id) const {
  auto it = scripts_.find(id);
  return it == scripts_.end() ? nullptr : &it->second;
}

std::optional<SituationMatch> find_situation(const ScriptDb& db, const ConceptualGraph& event,
                                             const Ontology& ont) {
  for (const auto& [id, script] : db.scripts())
    for (std::size_t i = 0; i < script.situations.size(); ++i)
      if (project(event, script.situations[i], ont)) return SituationMatch{&script, i};
  return std::nullopt;
}

std::vector<SituationRef> expand(const ScriptDb& db, const ConceptualGraph& event, Strategy strategy,
                                 const Ontology& ont) {
  const auto match = find_situation(db, event, ont);
  if (!match) return {SituationRef{std::nullopt, 0, Role::Action, event}};

  const Script& script = *match->script;
  const std::size_t i = match->index;
  const bool has_pre = i > 0;
  const bool has_post = i + 1 < script.situations.size();

  const bool want_pre = strategy != Strategy::ActPost;
  const bool want_post = strategy != Strategy::PreAct;
  bool want_action = strategy != Strategy::PrePost;
  if (!want_action && !has_pre && !has_post) want_action = true;

  std::vector<SituationRef> refs;
  if (want_pre && has_pre) refs.push_back({script.id, i - 1, Role::Precondition, script.situations[i - 1]});
  if (want_action) refs.push_back({script.id, i, Role::Action, event});
  if (want_post && has_post) refs.push_back({script.id, i + 1, Role::Postcondition, script.situations[i + 1]});
  return refs;
}

ScriptDb parse_scripts(std::string_view text) {
  ScriptDb db;
  std::optional<Script> current;
  std::size_t header_line = 0;
  std::size_t line_no = 0;

  auto finish = [&] {
    if (!current) return;
    try {
      db.add(std::move(*current));
    } catch (const std::exception& e) {
      throw FormatError(e.what(), header_line);
    }
    current.reset();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      finish();
      continue;
    }
    line = line.substr(first);
    if (line.front() == '#') continue;

    if (!current) {
      std::istringstream words{std::string(line)};
      std::string keyword, id, extra;
      words >> keyword >> id >> extra;
      if (keyword != "script" || id.empty() || !extra.empty())
        throw FormatError("expected 'script <id>'", line_no);
      current = Script{id, {}};
      header_line = line_no;
      continue;
    }
    try {
      current->situations.push_back(parse_graph(line));
    } catch (const std::exception& e) {
      throw FormatError(e.what(), line_no);
    }
  }
  finish();
  return db;
}

std::string format_scripts(const ScriptDb& db) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [id, script] : db.scripts()) {
    if (!first) out << '\n';
    first = false;
    out << "script " << id << '\n';
    for (const auto& s : script.situations) out << to_flat(s) << '\n';
  }
  return out.str();
}

}  // namespace cgedit
