#pragma once

#include <string>
#include <string_view>

#include "wiener/graph.hpp"

namespace wiener {

/// Decodes one graph6 record (optional ">>graph6<<" header, trailing
/// newline tolerated). Only the single-byte order form (n <= 62) is accepted.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace wiener
