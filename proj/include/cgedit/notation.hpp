#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgedit/graph.hpp"

namespace cgedit {

/// Syntax error in linear CG notation. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses linear CG notation:
///
///     graph    := concept (chain | contlist)?
///     concept  := '[' label (':' label)? ']'
///     chain    := ('<-(' label ')<-' | '->(' label ')->') concept chain?
///     contlist := '-' NEWLINE (INDENT chain NEWLINE)+
///
/// A text may hold several such statements, one per line; identical concept
/// texts anywhere in the text denote one node. ';' is accepted as a line
/// break so that continuation lists can be written on a single line.
ConceptualGraph parse_graph(std::string_view text);

/// Canonical multi-line rendering. Concepts are ordered by (type, referent);
/// each statement is headed by the concept with the most incident relations
/// still unprinted (ties: more incoming relations, then concept order).
/// Concepts without relations follow, one per line.
std::string serialize_graph(const ConceptualGraph& g);

/// serialize_graph with line breaks replaced by ';' and no indentation.
std::string to_flat(const ConceptualGraph& g);

std::string format_concept(const Concept& c);

/// Splits a query text on blank lines and parses each block as one event.
/// Line numbers in errors refer to the whole text.
std::vector<ConceptualGraph> parse_events(std::string_view text);

}  // namespace cgedit
