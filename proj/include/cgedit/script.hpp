#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgedit/error.hpp"
#include "cgedit/graph.hpp"
#include "cgedit/ontology.hpp"

namespace cgedit {

/// The four production-rule expansions of an action:
///
///     action -> precondition action postcondition
///     action -> precondition action
///     action -> action postcondition
///     action -> precondition postcondition
enum class Strategy { PreActPost, PreAct, ActPost, PrePost };

inline constexpr Strategy kAllStrategies[] = {Strategy::PreActPost, Strategy::PreAct,
                                              Strategy::ActPost, Strategy::PrePost};

/// "pre-act-post", "pre-act", "act-post", "pre-post".
std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

enum class Role { Precondition, Action, Postcondition };

/// "precondition", "action", "postcondition".
std::string_view to_string(Role r);

/// Ordered situations; earlier ones are preconditions of later ones. No
/// timing is recorded.
struct Script {
  std::string id;
  std::vector<ConceptualGraph> situations;

  bool operator==(const Script&) const = default;
};

struct SituationRef {
  /// Absent for a bare event that matched no script.
  std::optional<std::string> script_id;
  std::size_t index = 0;
  Role role = Role::Action;
  ConceptualGraph cg;

  bool operator==(const SituationRef&) const = default;
};

class ScriptDb {
 public:
  /// Throws std::invalid_argument on a duplicate or malformed id, or an
  /// empty situation list.
  void add(Script script);

  const Script* find(std::string_view id) const;
  /// In id order.
  const std::map<std::string, Script, std::less<>>& scripts() const noexcept { return scripts_; }
  std::size_t size() const noexcept { return scripts_.size(); }

  bool operator==(const ScriptDb&) const = default;

 private:
  std::map<std::string, Script, std::less<>> scripts_;
};

struct SituationMatch {
  const Script* script;
  std::size_t index;
};

/// First situation, scanning scripts in id order and situations by index,
/// into which `event` projects.
std::optional<SituationMatch> find_situation(const ScriptDb& db, const ConceptualGraph& event,
                                             const Ontology& ont);

/// Brackets `event` with its script neighbours according to `strategy`.
/// Only the immediate predecessor and successor are used, and missing
/// neighbours degrade toward showing the action itself.
std::vector<SituationRef> expand(const ScriptDb& db, const ConceptualGraph& event, Strategy strategy,
                                 const Ontology& ont);

/// Script file: `script <id>` then one flat-form situation per line; a blank
/// line ends the script. `#` comment lines are ignored. Throws FormatError.
ScriptDb parse_scripts(std::string_view text);
std::string format_scripts(const ScriptDb& db);

}  // namespace cgedit
