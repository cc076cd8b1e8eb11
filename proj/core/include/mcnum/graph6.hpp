#pragma once

#include <string>
#include <string_view>

#include "mcnum/graph.hpp"

namespace mcnum {

/// Decodes one graph6 record (no trailing newline). An optional ">>graph6<<"
/// header is accepted. Throws FormatError with the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes without header or newline. Throws UnsupportedSizeError for n >= 63.
std::string emit_graph6(const Graph& g);

}  // namespace mcnum
