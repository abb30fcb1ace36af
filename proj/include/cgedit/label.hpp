#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace cgedit {

/// A concept or relation type name. Compared case-insensitively; stored in
/// canonical lower-case form.
class TypeLabel {
 public:
  /// Throws std::invalid_argument on an empty label or a character outside
  /// letters, digits, '-' and '_'.
  explicit TypeLabel(std::string_view text);

  const std::string& str() const noexcept { return name_; }

  auto operator<=>(const TypeLabel&) const = default;

  static bool is_label_char(char c) noexcept;

 private:
  std::string name_;
};

/// The implicit universal supertype of every label.
const TypeLabel& top_type();

/// Script ids and media ids share this token rule (case is preserved).
bool is_token(std::string_view text) noexcept;

}  // namespace cgedit
