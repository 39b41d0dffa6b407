#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

// Edge-list text: "n m", then m lines "a b" with a < b; edge ids follow file
// order. Lines starting with '#' are comments.
Multigraph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Multigraph& g);

// graph6 (simple graphs only). An optional ">>graph6<<" prefix is accepted.
// Edges are ordered by (smaller end, larger end).
Multigraph parse_graph6(std::string_view text);
std::string emit_graph6(const Multigraph& g);

// Cover text: "cover k", then k lines of ascending edge ids.
std::string emit_cover(const std::vector<EdgeSet>& matchings);
std::vector<EdgeSet> parse_cover(std::string_view text);

}  // namespace berge
