#include "cgedit/editor.hpp"

#include <algorithm>
#include <tuple>

#include "cgedit/digest.hpp"
#include "cgedit/notation.hpp"
#include "cgedit/store_io.hpp"

namespace cgedit {

Frame span_distance(const Span& a, const Span& b) {
  return std::max<Frame>({0, b.in - a.out, a.in - b.out});
}

Cut select_cut(std::span<const CandidateInterval> candidates, const std::optional<Span>& anchor,
               const PlanConfig& config) {
  if (candidates.empty()) throw std::invalid_argument("select_cut: no candidates");

  const CandidateInterval* best = nullptr;
  if (anchor) {
    Frame best_distance = 0;
    for (const auto& c : candidates) {
      if (c.media != anchor->media) continue;
      const Frame d = span_distance(Span{c.media, c.start, c.end}, *anchor);
      if (!best || std::tie(d, c.start) < std::tie(best_distance, best->start)) {
        best = &c;
        best_distance = d;
      }
    }
  }
  const bool local = best != nullptr;
  if (!best) {
    for (const auto& c : candidates)
      if (!best || std::tie(c.media, c.start) < std::tie(best->media, best->start)) best = &c;
  }

  Cut cut{best->media, best->start, best->end, Role::Action, 0, std::nullopt, 0, {}, best->mapping};
  if (config.max_shot_frames && cut.out - cut.in > *config.max_shot_frames) {
    const Frame len = std::max<Frame>(1, *config.max_shot_frames);
    if (local && cut.out <= anchor->in)
      cut.in = cut.out - len;
    else
      cut.out = cut.in + len;
  }
  return cut;
}

namespace {

// Removes `action` from each candidate on the same media, so a context shot
// never repeats footage of the action it brackets.
std::vector<CandidateInterval> exclude_span(std::vector<CandidateInterval> candidates, const Span& action,
                                            const Store& store, const ConceptualGraph& query,
                                            const Ontology& ont) {
  std::vector<CandidateInterval> out;
  for (auto& c : candidates) {
    if (c.media != action.media || c.end <= action.in || action.out <= c.start) {
      out.push_back(std::move(c));
      continue;
    }
    auto keep = [&](Frame start, Frame end) {
      if (start >= end) return;
      auto mapping = start == c.start ? c.mapping : *project(query, *store.annotation_at(c.media, start), ont);
      out.push_back(CandidateInterval{c.media, start, end, std::move(mapping)});
    };
    keep(c.start, std::min(c.end, action.in));
    keep(std::max(c.start, action.out), c.end);
  }
  return out;
}

std::string describe(const SituationRef& ref) {
  std::string where = ref.script_id ? *ref.script_id + ":" + std::to_string(ref.index) : "-";
  return std::string(to_string(ref.role)) + " " + where + " " + to_flat(ref.cg);
}

bool overlaps(const Span& a, const Span& b) { return a.media == b.media && a.in < b.out && b.in < a.out; }

}  // namespace

PlanResult plan(const Query& query, const Store& store, const ScriptDb& scripts, const Ontology& ont,
                const PlanConfig& config) {
  PlanResult result;
  auto& edl = result.edl;

  for (std::size_t k = 0; k < query.events.size(); ++k) {
    if (query.events[k].empty()) throw std::invalid_argument("event " + std::to_string(k) + " is empty");
    if (k) edl.query_text += " | ";
    edl.query_text += to_flat(query.events[k]);
  }
  edl.strategy_name = query.rules_enabled ? std::string(to_string(query.strategy)) : "none";
  edl.digests = {{"annotations", digest_hex(save_annotations(store))},
                 {"ontology", digest_hex(format_ontology(ont))},
                 {"scripts", digest_hex(format_scripts(scripts))}};

  bool missing = false;
  std::optional<Span> previous;

  for (std::size_t k = 0; k < query.events.size(); ++k) {
    const auto& event = query.events[k];
    const auto refs = query.rules_enabled
                          ? expand(scripts, event, query.strategy, ont)
                          : std::vector<SituationRef>{SituationRef{std::nullopt, 0, Role::Action, event}};
    const bool shows_action =
        std::any_of(refs.begin(), refs.end(), [](const auto& r) { return r.role == Role::Action; });

    // The action cut anchors the context shots even when it is not shown.
    std::optional<Cut> action_cut;
    if (const auto candidates = find_candidates(store, event, ont); !candidates.empty())
      action_cut = select_cut(candidates, previous, config);
    if (!action_cut && shows_action) {
      result.diagnostics.push_back("event " + std::to_string(k) + ": no footage for " + to_flat(event));
      missing = true;
      continue;
    }
    const std::optional<Span> anchor = action_cut ? std::optional(action_cut->span()) : previous;

    std::vector<Cut> event_cuts;
    for (const auto& ref : refs) {
      std::optional<Cut> chosen;
      if (ref.role == Role::Action) {
        chosen = action_cut;
      } else {
        auto candidates = find_candidates(store, ref.cg, ont);
        if (action_cut) candidates = exclude_span(std::move(candidates), action_cut->span(), store, ref.cg, ont);
        if (candidates.empty()) {
          result.diagnostics.push_back("event " + std::to_string(k) + ": no footage for " + describe(ref));
          missing = true;
          continue;
        }
        chosen = select_cut(candidates, anchor, config);
      }
      Cut& cut = *chosen;
      cut.role = ref.role;
      cut.event_index = k;
      cut.script_id = ref.script_id;
      cut.situation_index = ref.index;
      cut.situation = ref.cg;
      event_cuts.push_back(std::move(*chosen));
    }
    if (event_cuts.empty()) {
      result.diagnostics.push_back("event " + std::to_string(k) + ": nothing to show");
      missing = true;
      continue;
    }

    for (const auto& cut : event_cuts)
      for (const auto& earlier : edl.cuts)
        if (earlier.event_index != k && overlaps(cut.span(), earlier.span()))
          result.warnings.push_back("event " + std::to_string(k) + " reuses footage " + cut.media.str() + " [" +
                                    std::to_string(cut.in) + ", " + std::to_string(cut.out) + ") of event " +
                                    std::to_string(earlier.event_index));

    previous = event_cuts.back().span();
    for (auto& cut : event_cuts) {
      if (auto fps = store.fps(cut.media)) edl.fps.emplace(cut.media, *fps);
      edl.cuts.push_back(std::move(cut));
    }
  }

  if (edl.cuts.empty())
    result.outcome = Outcome::NoResult;
  else
    result.outcome = missing ? Outcome::Partial : Outcome::Complete;
  return result;
}

}  // namespace cgedit
