#include "cgedit/interval_store.hpp"

#include <cmath>
#include <iterator>

namespace cgedit {

MediaId::MediaId(std::string_view id) : id_(id) {
  if (!is_token(id)) throw std::invalid_argument("invalid media id '" + std::string(id) + "'");
}

void Store::insert(const AnnotatedInterval& iv) {
  if (iv.start < 0) throw IntervalError("interval start must be >= 0");
  if (iv.end <= iv.start)
    throw IntervalError("empty interval [" + std::to_string(iv.start) + ", " +
                        std::to_string(iv.end) + ")");

  auto& timeline = timelines_[iv.media];

  // First segment that ends after iv.start.
  auto it = timeline.upper_bound(iv.start);
  if (it != timeline.begin() && std::prev(it)->second.end > iv.start) --it;

  std::vector<std::pair<Frame, Piece>> pieces;
  Frame cursor = iv.start;
  while (it != timeline.end() && it->first < iv.end) {
    const Frame seg_start = it->first;
    Piece seg = std::move(it->second);
    it = timeline.erase(it);

    if (seg_start < iv.start) pieces.push_back({seg_start, Piece{iv.start, seg.cg}});
    if (cursor < seg_start) pieces.push_back({cursor, Piece{seg_start, iv.cg}});
    const Frame lo = std::max(seg_start, iv.start);
    const Frame hi = std::min(seg.end, iv.end);
    pieces.push_back({lo, Piece{hi, cg_union(seg.cg, iv.cg)}});
    if (seg.end > iv.end) pieces.push_back({iv.end, Piece{seg.end, std::move(seg.cg)}});
    cursor = hi;
  }
  if (cursor < iv.end) pieces.push_back({cursor, Piece{iv.end, iv.cg}});

  const Frame from = pieces.front().first;
  const Frame to = pieces.back().second.end;
  for (auto& [start, piece] : pieces) timeline.emplace(start, std::move(piece));
  normalize(timeline, from, to);

  log_.push_back(iv);
}

// Merges touching neighbours with identical graphs, looking one segment
// beyond [from, to) on either side.
void Store::normalize(Timeline& timeline, Frame from, Frame to) {
  auto it = timeline.lower_bound(from);
  if (it != timeline.begin()) --it;
  while (it != timeline.end()) {
    auto next = std::next(it);
    if (next == timeline.end() || it->first > to) break;
    if (it->second.end == next->first && it->second.cg == next->second.cg) {
      it->second.end = next->second.end;
      timeline.erase(next);
    } else {
      it = next;
    }
  }
}

std::optional<ConceptualGraph> Store::annotation_at(const MediaId& media, Frame t) const {
  auto tl = timelines_.find(media);
  if (tl == timelines_.end()) return std::nullopt;
  auto it = tl->second.upper_bound(t);
  if (it == tl->second.begin()) return std::nullopt;
  --it;
  if (t >= it->second.end) return std::nullopt;
  return it->second.cg;
}

std::vector<Segment> Store::overlapping(const MediaId& media, Frame start, Frame end) const {
  std::vector<Segment> out;
  auto tl = timelines_.find(media);
  if (tl == timelines_.end()) return out;
  auto it = tl->second.upper_bound(start);
  if (it != tl->second.begin() && std::prev(it)->second.end > start) --it;
  for (; it != tl->second.end() && it->first < end; ++it)
    out.push_back(Segment{media, it->first, it->second.end, it->second.cg});
  return out;
}

std::vector<Segment> Store::segments(const MediaId& media) const {
  std::vector<Segment> out;
  auto tl = timelines_.find(media);
  if (tl == timelines_.end()) return out;
  out.reserve(tl->second.size());
  for (const auto& [start, piece] : tl->second) out.push_back(Segment{media, start, piece.end, piece.cg});
  return out;
}

std::size_t Store::segment_count(const MediaId& media) const {
  auto tl = timelines_.find(media);
  return tl == timelines_.end() ? 0 : tl->second.size();
}

std::size_t Store::segment_count() const {
  std::size_t n = 0;
  for (const auto& [media, timeline] : timelines_) n += timeline.size();
  return n;
}

std::vector<MediaId> Store::media() const {
  std::vector<MediaId> out;
  auto tl = timelines_.begin();
  auto fp = fps_.begin();
  // Sorted merge of the two key sets.
  while (tl != timelines_.end() || fp != fps_.end()) {
    if (fp == fps_.end() || (tl != timelines_.end() && tl->first < fp->first)) {
      out.push_back(tl++->first);
    } else if (tl == timelines_.end() || fp->first < tl->first) {
      out.push_back(fp++->first);
    } else {
      out.push_back(tl->first);
      ++tl;
      ++fp;
    }
  }
  return out;
}

void Store::set_fps(const MediaId& media, double fps) {
  if (!(fps > 0) || !std::isfinite(fps)) throw std::invalid_argument("fps must be positive");
  fps_[media] = fps;
}

std::optional<double> Store::fps(const MediaId& media) const {
  auto it = fps_.find(media);
  if (it == fps_.end()) return std::nullopt;
  return it->second;
}

}  // namespace cgedit
