#include "cgedit/store_io.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "cgedit/notation.hpp"

namespace cgedit {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(begin, i - begin));
      begin = i + 1;
    }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  s = trim(s);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void load_annotations(std::string_view text, Store& store) {
  std::optional<double> file_fps;
  std::set<MediaId> seen;
  std::size_t line_no = 0;

  for (auto line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;

    try {
      if (content.substr(0, 4) == "!fps") {
        std::istringstream words{std::string(content.substr(4))};
        std::vector<std::string> parts;
        for (std::string w; words >> w;) parts.push_back(w);
        if (parts.empty() || parts.size() > 2) throw std::invalid_argument("expected '!fps [media-id] <number>'");
        const auto fps = parse_number<double>(parts.back());
        if (!fps) throw std::invalid_argument("invalid fps '" + parts.back() + "'");
        if (parts.size() == 2)
          store.set_fps(MediaId(parts[0]), *fps);
        else if (!(*fps > 0))
          throw std::invalid_argument("fps must be positive");
        else
          file_fps = *fps;
        continue;
      }

      const auto fields = split(line, '\t');
      if (fields.size() != 4) throw std::invalid_argument("expected 4 tab-separated fields");
      const auto start = parse_number<Frame>(fields[1]);
      const auto end = parse_number<Frame>(fields[2]);
      if (!start) throw std::invalid_argument("invalid start frame '" + std::string(fields[1]) + "'");
      if (!end) throw std::invalid_argument("invalid end frame '" + std::string(fields[2]) + "'");
      AnnotatedInterval iv{MediaId(trim(fields[0])), *start, *end, parse_graph(fields[3])};
      seen.insert(iv.media);
      store.insert(iv);
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw FormatError(e.what(), line_no);
    }
  }

  if (file_fps)
    for (const auto& media : seen)
      if (!store.fps(media)) store.set_fps(media, *file_fps);
}

Store load_annotations(std::string_view text) {
  Store store;
  load_annotations(text, store);
  return store;
}

std::string save_annotations(const Store& store) {
  std::ostringstream out;
  for (const auto& [media, fps] : store.fps_table()) out << "!fps " << media.str() << ' ' << format_number(fps) << '\n';
  for (const auto& iv : store.raw_log())
    out << iv.media.str() << '\t' << iv.start << '\t' << iv.end << '\t' << to_flat(iv.cg) << '\n';
  return out.str();
}

std::string format_segments(const Store& store) {
  std::ostringstream out;
  for (const auto& media : store.media())
    for (const auto& seg : store.segments(media))
      out << media.str() << '\t' << seg.start << '\t' << seg.end << '\t' << to_flat(seg.cg) << '\n';
  return out.str();
}

}  // namespace cgedit
