#include <limits>

#include "cgedit/reference.hpp"

namespace cgedit::reference {

std::uint64_t enumeration_size(const ConceptualGraph& query, const ConceptualGraph& target) {
  const std::uint64_t base = target.concepts().size();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < query.concepts().size(); ++i) {
    if (base != 0 && n > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    n *= base;
  }
  return n;
}

std::optional<ProjectionMapping> project_by_enumeration(const ConceptualGraph& query,
                                                        const ConceptualGraph& target, const Ontology& ont) {
  const auto qc = query.concepts();
  const auto tc = target.concepts();
  const auto qr = query.relations();
  const auto tr = target.relations();
  if (qc.empty()) return ProjectionMapping{};
  if (tc.empty()) return std::nullopt;

  std::vector<ConceptId> f(qc.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t q = 0; q < qc.size() && ok; ++q) {
      const auto& want = qc[q];
      const auto& have = tc[f[q]];
      if (want.referent && want.referent != have.referent) ok = false;
      if (!ont.is_subtype(have.type, want.type)) ok = false;
    }
    std::vector<std::size_t> rel_map;
    for (std::size_t r = 0; r < qr.size() && ok; ++r) {
      bool found = false;
      for (std::size_t s = 0; s < tr.size(); ++s) {
        if (tr[s].type == qr[r].type && tr[s].source == f[qr[r].source] && tr[s].target == f[qr[r].target]) {
          rel_map.push_back(s);
          found = true;
          break;
        }
      }
      ok = found;
    }
    if (ok) return ProjectionMapping{f, rel_map};

    // Odometer increment, last position fastest.
    std::size_t pos = qc.size();
    while (pos > 0) {
      --pos;
      if (++f[pos] < tc.size()) break;
      f[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
}

}  // namespace cgedit::reference
