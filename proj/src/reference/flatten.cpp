#include "cgedit/reference.hpp"

namespace cgedit::reference {

std::optional<ConceptualGraph> flatten_at(std::span<const AnnotatedInterval> log, const MediaId& media,
                                          Frame t) {
  std::optional<ConceptualGraph> acc;
  for (const auto& iv : log) {
    if (iv.media != media || t < iv.start || t >= iv.end) continue;
    acc = acc ? cg_union(*acc, iv.cg) : iv.cg;
  }
  return acc;
}

}  // namespace cgedit::reference
