#include "cgedit/notation.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace cgedit {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

// One statement-level line: text between '\n' or ';' separators.
struct LogicalLine {
  std::string_view text;
  std::size_t line;
  std::size_t column;  // column of text[0]
};

std::vector<LogicalLine> split_logical_lines(std::string_view text, std::size_t first_line) {
  std::vector<LogicalLine> lines;
  std::size_t line = first_line, column = 1, begin = 0, begin_column = 1;
  bool comment = false;  // a '#' line runs to the newline, ';' included
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    if (!end && text[i] == '#' && blank(text.substr(begin, i - begin))) comment = true;
    if (end || text[i] == '\n' || (text[i] == ';' && !comment)) {
      comment = false;
      lines.push_back({text.substr(begin, i - begin), line, begin_column});
      if (!end && text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      begin = i + 1;
      begin_column = column;
    } else {
      ++column;
    }
  }
  return lines;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return out;
}

class LineParser {
 public:
  LineParser(const LogicalLine& line, GraphBuilder& builder) : line_(line), builder_(builder) {}

  void skip_ws() {
    while (pos_ < line_.text.size() &&
           (line_.text[pos_] == ' ' || line_.text[pos_] == '\t' || line_.text[pos_] == '\r'))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.text.size();
  }
  char peek() const { return pos_ < line_.text.size() ? line_.text[pos_] : '\0'; }
  char peek_at(std::size_t offset) const {
    return pos_ + offset < line_.text.size() ? line_.text[pos_ + offset] : '\0';
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_.line, line_.column + pos_);
  }

  void expect(std::string_view token, const char* what) {
    skip_ws();
    if (line_.text.substr(pos_, token.size()) != token) fail(std::string("expected ") + what);
    pos_ += token.size();
  }

  TypeLabel label(const char* what) {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < line_.text.size() && TypeLabel::is_label_char(line_.text[pos_])) ++pos_;
    if (pos_ == begin) fail(std::string("empty ") + what);
    return TypeLabel(line_.text.substr(begin, pos_ - begin));
  }

  GraphBuilder::Handle concept_node() {
    skip_ws();
    if (peek() != '[') fail(pos_ >= line_.text.size() ? "dangling arrow: expected '['" : "expected '['");
    ++pos_;
    Concept c{label("type label"), std::nullopt};
    skip_ws();
    if (peek() == ':') {
      ++pos_;
      c.referent = label("referent");
      skip_ws();
    }
    if (peek() != ']') fail("expected ']'");
    ++pos_;
    return builder_.add_concept(c);
  }

  // Consumes arrows until the end of the line, each attached to the concept
  // reached by the previous one.
  void chain(GraphBuilder::Handle from) {
    while (!at_end()) {
      bool incoming;
      if (peek() == '<' && peek_at(1) == '-') {
        incoming = true;
        pos_ += 2;
      } else if (peek() == '-' && peek_at(1) == '>') {
        incoming = false;
        pos_ += 2;
      } else {
        fail("expected '<-(' or '->('");
      }
      expect("(", "'('");
      const TypeLabel type = label("relation label");
      expect(")", "')'");
      expect(incoming ? "<-" : "->", incoming ? "'<-'" : "'->'");
      const auto to = concept_node();
      if (incoming)
        builder_.add_relation(type, to, from);
      else
        builder_.add_relation(type, from, to);
      from = to;
    }
  }

  // Parses a statement line. Returns the head handle when the line ends with
  // the continuation marker '-'.
  std::optional<GraphBuilder::Handle> statement() {
    const auto head = concept_node();
    skip_ws();
    if (peek() == '-' && peek_at(1) != '>') {
      ++pos_;
      if (!at_end()) fail("continuation marker '-' must end the line");
      return head;
    }
    chain(head);
    return std::nullopt;
  }

 private:
  const LogicalLine& line_;
  GraphBuilder& builder_;
  std::size_t pos_ = 0;
};

ConceptualGraph parse_from(std::string_view text, std::size_t first_line) {
  GraphBuilder builder;
  std::optional<GraphBuilder::Handle> cont_head;
  std::size_t cont_chains = 0;
  const LogicalLine* cont_line = nullptr;

  auto close_contlist = [&] {
    if (cont_head && cont_chains == 0)
      throw ParseError("empty continuation list", cont_line->line, cont_line->column);
    cont_head.reset();
  };

  const auto lines = split_logical_lines(text, first_line);
  for (const auto& line : lines) {
    if (blank(line.text)) {
      close_contlist();
      continue;
    }
    LineParser p(line, builder);
    p.skip_ws();
    const char c = p.peek();
    if (c == '#') continue;
    if (c == '[') {
      close_contlist();
      if (auto head = p.statement()) {
        cont_head = head;
        cont_chains = 0;
        cont_line = &line;
      }
    } else if (c == '<' || c == '-') {
      if (!cont_head) p.fail("dangling arrow: chain without a head concept");
      p.chain(*cont_head);
      ++cont_chains;
    } else {
      p.fail("expected '['");
    }
  }
  close_contlist();
  return builder.build();
}

}  // namespace

ConceptualGraph parse_graph(std::string_view text) { return parse_from(text, 1); }

std::string format_concept(const Concept& c) {
  std::string out = "[" + c.type.str();
  if (c.referent) out += ": " + c.referent->str();
  return out + "]";
}

namespace {

std::vector<std::string> canonical_lines(const ConceptualGraph& g, bool indent) {
  const auto concepts = g.concepts();
  const auto relations = g.relations();
  std::vector<bool> printed(relations.size(), false);
  std::vector<std::string> lines;

  auto render = [&](ConceptId head, std::size_t r) {
    const auto& rel = relations[r];
    const std::string type = upper(rel.type.str());
    if (rel.target == head) return "<-(" + type + ")<-" + format_concept(concepts[rel.source]);
    return "->(" + type + ")->" + format_concept(concepts[rel.target]);
  };

  for (std::size_t remaining = relations.size(); remaining > 0;) {
    std::vector<std::size_t> incident(concepts.size(), 0), incoming(concepts.size(), 0);
    for (std::size_t r = 0; r < relations.size(); ++r) {
      if (printed[r]) continue;
      ++incident[relations[r].target];
      ++incoming[relations[r].target];
      if (relations[r].source != relations[r].target) ++incident[relations[r].source];
    }
    ConceptId head = 0;
    for (ConceptId c = 1; c < concepts.size(); ++c)
      if (std::tie(incident[c], incoming[c]) > std::tie(incident[head], incoming[head])) head = c;

    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < relations.size(); ++r)
      if (!printed[r] && (relations[r].source == head || relations[r].target == head))
        chosen.push_back(r);
    // Incoming arcs first, then by relation type and the far concept.
    auto key = [&](std::size_t r) {
      const auto& rel = relations[r];
      const bool in = rel.target == head;
      return std::make_tuple(!in, rel.type, in ? rel.source : rel.target);
    };
    std::sort(chosen.begin(), chosen.end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

    if (chosen.size() == 1) {
      lines.push_back(format_concept(concepts[head]) + render(head, chosen.front()));
    } else {
      lines.push_back(format_concept(concepts[head]) + "-");
      for (auto r : chosen) lines.push_back((indent ? "    " : "") + render(head, r));
    }
    for (auto r : chosen) printed[r] = true;
    remaining -= chosen.size();
  }

  std::vector<bool> connected(concepts.size(), false);
  for (const auto& rel : relations) connected[rel.source] = connected[rel.target] = true;
  for (ConceptId c = 0; c < concepts.size(); ++c)
    if (!connected[c]) lines.push_back(format_concept(concepts[c]));
  return lines;
}

std::string join(const std::vector<std::string>& lines, char sep) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += sep;
    out += lines[i];
  }
  return out;
}

}  // namespace

std::string serialize_graph(const ConceptualGraph& g) { return join(canonical_lines(g, true), '\n'); }

std::string to_flat(const ConceptualGraph& g) { return join(canonical_lines(g, false), ';'); }

std::vector<ConceptualGraph> parse_events(std::string_view text) {
  std::vector<ConceptualGraph> events;
  std::size_t line = 1, block_line = 1;
  std::size_t block_begin = 0;
  bool in_block = false;

  auto flush = [&](std::size_t end) {
    if (in_block) events.push_back(parse_from(text.substr(block_begin, end - block_begin), block_line));
    in_block = false;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    const auto content = text.substr(pos, end - pos);
    const auto first = content.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      flush(pos);
    } else if (!in_block && content[first] != '#') {
      in_block = true;
      block_begin = pos;
      block_line = line;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
    ++line;
  }
  flush(text.size());
  return events;
}

}  // namespace cgedit
