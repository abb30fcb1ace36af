#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgedit {

/// Malformed line in one of the line-oriented file formats.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cgedit
