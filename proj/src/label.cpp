#include "cgedit/label.hpp"

#include <stdexcept>

namespace cgedit {

bool TypeLabel::is_label_char(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  // Bytes >= 0x80 are UTF-8 continuation or lead bytes; accepted verbatim.
  return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || (u >= '0' && u <= '9') ||
         u == '-' || u == '_' || u >= 0x80;
}

TypeLabel::TypeLabel(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty type label");
  name_.reserve(text.size());
  for (char c : text) {
    if (!is_label_char(c))
      throw std::invalid_argument("invalid character in type label '" + std::string(text) + "'");
    name_.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
}

const TypeLabel& top_type() {
  static const TypeLabel top{"entity"};
  return top;
}

bool is_token(std::string_view text) noexcept {
  if (text.empty()) return false;
  for (char c : text)
    if (!TypeLabel::is_label_char(c) && c != '.') return false;
  return true;
}

}  // namespace cgedit
