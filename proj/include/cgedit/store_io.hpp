#pragma once

#include <string>
#include <string_view>

#include "cgedit/error.hpp"
#include "cgedit/interval_store.hpp"

namespace cgedit {

/// Annotation file, one raw interval per line:
///
///     media-id TAB start-frame TAB end-frame TAB flat-cg
///
/// `#` starts a comment line. `!fps <media-id> <number>` declares a frame
/// rate; `!fps <number>` applies to every media of the file left undeclared.
/// Lines are inserted into `store` in file order. Throws FormatError.
void load_annotations(std::string_view text, Store& store);
Store load_annotations(std::string_view text);

/// Writes fps declarations then the raw log in insertion order, so loading
/// the result replays the exact same inserts.
std::string save_annotations(const Store& store);

/// Segment dump in the annotation line layout.
std::string format_segments(const Store& store);

std::string format_number(double value);

}  // namespace cgedit
