#pragma once

#include <string>
#include <string_view>

#include "unsharp/order.hpp"

namespace unsharp {

// Plain-text structure description:
//
//   # comment
//   elements: 0 a b c
//   covers:
//   0 < a
//   0 < b
//
// Element names may continue on further lines before `covers:`. Errors from
// the text carry Error::line() (1-based).

MeetSemilattice parse_structure(std::string_view text);

/// Hasse-diagram rendering that parse_structure reads back to an identical
/// structure. The label, if any, goes into a leading comment.
std::string render_structure(const MeetSemilattice& s);

} // namespace unsharp
