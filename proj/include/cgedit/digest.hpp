#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cgedit {

/// 64-bit FNV-1a, rendered as 16 lower-case hex digits.
std::string digest_hex(std::string_view bytes);

}  // namespace cgedit
