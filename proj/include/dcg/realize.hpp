#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dcg/colored_graph.hpp"

namespace dcg {

/// Bit strings for each vertex plus the color carried by each string
/// position. Two vertices are joined by the color of the first position where
/// their strings differ.
struct RealizationCertificate {
  std::map<Vertex, std::string> strings;  // '0' / '1', all of one length
  std::vector<Color> position_colors;     // strictly ascending

  friend bool operator==(const RealizationCertificate&, const RealizationCertificate&) = default;
};

/// Throws PreconditionError if the certificate is malformed (ragged or
/// duplicate strings, non-binary characters, non-ascending positions).
void check_certificate(const RealizationCertificate& cert);

/// First-difference coloring of the certificate's strings.
ColoredGraph derive_coloring(const RealizationCertificate& cert);

/// A certificate whose derived coloring is exactly g. Built by recursive
/// bipartition on the least color of each block.
RealizationCertificate realize(const ColoredGraph& g);

/// `cert-v1` text: a `positions:` line, then `string <vertex> <bits>` lines
/// sorted by vertex.
std::string print_certificate(const RealizationCertificate& cert);
RealizationCertificate parse_certificate(std::string_view text);

}  // namespace dcg
