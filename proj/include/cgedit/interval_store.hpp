#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgedit/graph.hpp"
#include "cgedit/ontology.hpp"
#include "cgedit/projection.hpp"

namespace cgedit {

using Frame = std::int64_t;

/// Names one source video asset (its filename stem).
class MediaId {
 public:
  /// Throws std::invalid_argument unless `id` is a non-empty token.
  explicit MediaId(std::string_view id);

  const std::string& str() const noexcept { return id_; }
  auto operator<=>(const MediaId&) const = default;

 private:
  std::string id_;
};

/// A raw annotation: `cg` holds over every frame of [start, end).
struct AnnotatedInterval {
  MediaId media;
  Frame start;
  Frame end;
  ConceptualGraph cg;

  bool operator==(const AnnotatedInterval&) const = default;
};

/// A maximal span of one media timeline carrying the union of every raw
/// annotation covering it.
struct Segment {
  MediaId media;
  Frame start;
  Frame end;
  ConceptualGraph cg;

  bool operator==(const Segment&) const = default;
};

struct CandidateInterval {
  MediaId media;
  Frame start;
  Frame end;
  /// Projection of the query into the first segment of the run.
  ProjectionMapping mapping;

  bool operator==(const CandidateInterval&) const = default;
};

class IntervalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-media timelines of disjoint, sorted segments built by splitting
/// overlapping annotations, plus the raw insertion log.
///
/// Build with insert() from one thread, then share read-only.
class Store {
 public:
  /// Splits any overlapped segments at iv.start / iv.end, unions iv.cg into
  /// the overlapped pieces and fills uncovered parts with iv.cg. Adjacent
  /// segments with identical graphs are merged afterwards.
  /// Throws IntervalError when iv.end <= iv.start or iv.start < 0.
  void insert(const AnnotatedInterval& iv);

  /// Graph of the segment covering frame t. O(log n).
  std::optional<ConceptualGraph> annotation_at(const MediaId& media, Frame t) const;

  /// Segments of `media` intersecting [start, end), in order. O(log n + k).
  std::vector<Segment> overlapping(const MediaId& media, Frame start, Frame end) const;

  std::vector<Segment> segments(const MediaId& media) const;
  std::size_t segment_count(const MediaId& media) const;
  std::size_t segment_count() const;

  /// Media with at least one segment or an fps declaration, sorted.
  std::vector<MediaId> media() const;

  std::span<const AnnotatedInterval> raw_log() const noexcept { return log_; }

  void set_fps(const MediaId& media, double fps);
  std::optional<double> fps(const MediaId& media) const;
  const std::map<MediaId, double>& fps_table() const noexcept { return fps_; }

  static constexpr double kDefaultFps = 25.0;

 private:
  struct Piece {
    Frame end;
    ConceptualGraph cg;
  };
  using Timeline = std::map<Frame, Piece>;

  static void normalize(Timeline& timeline, Frame from, Frame to);

  std::map<MediaId, Timeline> timelines_;
  std::vector<AnnotatedInterval> log_;
  std::map<MediaId, double> fps_;
};

/// For each media, coalesces every maximal run of adjacent segments that
/// the query projects into. Ordered by (media, start).
///
/// Projection against the segments runs as an OpenMP parallel loop.
std::vector<CandidateInterval> find_candidates(const Store& store, const ConceptualGraph& query,
                                               const Ontology& ont);

/// Serial reference for find_candidates, kept for tests and benchmarks.
std::vector<CandidateInterval> find_candidates_serial(const Store& store, const ConceptualGraph& query,
                                                      const Ontology& ont);

}  // namespace cgedit
