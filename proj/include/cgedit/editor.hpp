#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgedit/graph.hpp"
#include "cgedit/interval_store.hpp"
#include "cgedit/ontology.hpp"
#include "cgedit/projection.hpp"
#include "cgedit/script.hpp"

namespace cgedit {

struct Query {
  /// Ordered; each must be non-empty.
  std::vector<ConceptualGraph> events;
  Strategy strategy = Strategy::PreAct;
  /// false retrieves each event alone, without context shots.
  bool rules_enabled = true;
};

struct PlanConfig {
  /// Longest cut in frames; unset keeps the whole candidate interval.
  std::optional<Frame> max_shot_frames;
};

/// Frame span on one media, half-open.
struct Span {
  MediaId media;
  Frame in;
  Frame out;

  bool operator==(const Span&) const = default;
};

struct Cut {
  MediaId media;
  Frame in;
  Frame out;
  Role role = Role::Action;
  std::size_t event_index = 0;
  std::optional<std::string> script_id;
  std::size_t situation_index = 0;
  /// The graph this cut realizes and its projection into the footage.
  ConceptualGraph situation;
  ProjectionMapping witness;

  Span span() const { return Span{media, in, out}; }
  bool operator==(const Cut&) const = default;
};

struct EditDecisionList {
  std::vector<Cut> cuts;
  std::string query_text;
  std::string strategy_name;
  /// Name -> hex digest of each loaded database file.
  std::map<std::string, std::string> digests;
  std::map<MediaId, double> fps;

  bool operator==(const EditDecisionList&) const = default;
};

enum class Outcome { Complete, Partial, NoResult };

struct PlanResult {
  EditDecisionList edl;
  Outcome outcome = Outcome::NoResult;
  /// Query elements that could not be realized.
  std::vector<std::string> diagnostics;
  /// Non-fatal notes, e.g. footage reused across events.
  std::vector<std::string> warnings;
};

/// Gap between two spans on the same media; 0 when they touch or overlap.
Frame span_distance(const Span& a, const Span& b);

/// Picks the candidate closest in sequence to `anchor`: same media as the
/// anchor first, then least span distance, then earliest start. Without an
/// anchor, or with no candidate on the anchor's media, the least
/// (media, start) wins. The result is clipped to max_shot_frames keeping the
/// end nearest the anchor. Provenance fields are left for the caller.
/// Throws std::invalid_argument when `candidates` is empty.
Cut select_cut(std::span<const CandidateInterval> candidates, const std::optional<Span>& anchor,
               const PlanConfig& config);

/// Builds the edit decision list for `query`, one event after another.
PlanResult plan(const Query& query, const Store& store, const ScriptDb& scripts, const Ontology& ont,
                const PlanConfig& config = {});

enum class OutputFormat { Edl, Manifest };

class UnknownFormat : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "edl" or "manifest"; throws UnknownFormat otherwise.
OutputFormat parse_format(std::string_view token);

/// Deterministic text rendering of the list.
///
/// Edl: `# edl v1`, `# query: ...`, `# strategy: ...` and `# digest ...`
/// header lines, then one tab-separated cut per line:
/// media, in, out, role, event index, `script-id:situation-index` (`-` for a
/// bare event).
///
/// Manifest: `<media> <in-seconds> <out-seconds>` per cut, using each
/// media's frame rate.
std::string emit(const EditDecisionList& edl, OutputFormat format);

}  // namespace cgedit
