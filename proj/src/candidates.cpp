#include <cstddef>
#include <optional>
#include <vector>

#include "cgedit/interval_store.hpp"

namespace cgedit {

namespace {

// Segments of every media laid out contiguously in (media, start) order so
// the projection loop is a flat data-parallel loop.
std::vector<Segment> all_segments(const Store& store) {
  std::vector<Segment> flat;
  flat.reserve(store.segment_count());
  for (const auto& media : store.media())
    for (auto& seg : store.segments(media)) flat.push_back(std::move(seg));
  return flat;
}

std::vector<CandidateInterval> coalesce(const std::vector<Segment>& segments,
                                        std::vector<std::optional<ProjectionMapping>>& matches) {
  std::vector<CandidateInterval> out;
  bool extends = false;  // previous segment matched
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!matches[i]) {
      extends = false;
      continue;
    }
    const auto& seg = segments[i];
    if (extends && out.back().media == seg.media && out.back().end == seg.start) {
      out.back().end = seg.end;
    } else {
      out.push_back(CandidateInterval{seg.media, seg.start, seg.end, std::move(*matches[i])});
    }
    extends = true;
  }
  return out;
}

}  // namespace

std::vector<CandidateInterval> find_candidates(const Store& store, const ConceptualGraph& query,
                                               const Ontology& ont) {
  const auto segments = all_segments(store);
  const auto n = static_cast<std::ptrdiff_t>(segments.size());
  std::vector<std::optional<ProjectionMapping>> matches(segments.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) matches[i] = project(query, segments[i].cg, ont);

  return coalesce(segments, matches);
}

std::vector<CandidateInterval> find_candidates_serial(const Store& store, const ConceptualGraph& query,
                                                      const Ontology& ont) {
  std::vector<CandidateInterval> out;
  for (const auto& media : store.media()) {
    bool run_open = false;
    for (const auto& seg : store.segments(media)) {
      auto mapping = project(query, seg.cg, ont);
      if (!mapping) {
        run_open = false;
        continue;
      }
      if (run_open && out.back().end == seg.start) {
        out.back().end = seg.end;
      } else {
        out.push_back(CandidateInterval{media, seg.start, seg.end, std::move(*mapping)});
      }
      run_open = true;
    }
  }
  return out;
}

}  // namespace cgedit
