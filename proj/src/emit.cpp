#include <cstdio>
#include <sstream>

#include "cgedit/editor.hpp"

namespace cgedit {

OutputFormat parse_format(std::string_view token) {
  if (token == "edl") return OutputFormat::Edl;
  if (token == "manifest") return OutputFormat::Manifest;
  throw UnknownFormat("unknown output format '" + std::string(token) + "'");
}

namespace {

std::string seconds(Frame frame, double fps) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(frame) / fps);
  return buf;
}

}  // namespace

std::string emit(const EditDecisionList& edl, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Edl) {
    out << "# edl v1\n";
    out << "# query: " << edl.query_text << '\n';
    out << "# strategy: " << edl.strategy_name << '\n';
    for (const auto& [name, hex] : edl.digests) out << "# digest " << name << ' ' << hex << '\n';
    for (const auto& cut : edl.cuts) {
      out << cut.media.str() << '\t' << cut.in << '\t' << cut.out << '\t' << to_string(cut.role) << '\t'
          << cut.event_index << '\t';
      if (cut.script_id)
        out << *cut.script_id << ':' << cut.situation_index;
      else
        out << '-';
      out << '\n';
    }
  } else {
    for (const auto& cut : edl.cuts) {
      auto it = edl.fps.find(cut.media);
      const double fps = it == edl.fps.end() ? Store::kDefaultFps : it->second;
      out << cut.media.str() << ' ' << seconds(cut.in, fps) << ' ' << seconds(cut.out, fps) << '\n';
    }
  }
  return out.str();
}

}  // namespace cgedit
