#pragma once

#include <string>
#include <string_view>

#include "dcg/colored_graph.hpp"

namespace dcg {

/// Parses the `dcg-v1` text format. Lines may appear in any order; blank
/// lines and lines starting with '#' are ignored.
ColoredGraph parse_dcg(std::string_view text);

/// Canonical `dcg-v1` text (LF line endings, trailing newline).
std::string print_dcg(const ColoredGraph& g);

}  // namespace dcg
