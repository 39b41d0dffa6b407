#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

bool is_matching(const Multigraph& g, const EdgeSet& s);
bool is_perfect_matching(const Multigraph& g, const EdgeSet& s);
// True iff s is a perfect matching of the subgraph induced by `vertices`:
// every edge of s has both ends in the set and each vertex is covered once.
bool is_perfect_matching_of(const Multigraph& g, const EdgeSet& s,
                            std::span<const Vertex> vertices);

// Backtracking over the lowest-indexed uncovered vertex, trying its edges
// in increasing id order. The visitor returns false to stop early.
// Returns false iff the visitor stopped the enumeration.
bool for_each_perfect_matching(const Multigraph& g,
                               const std::function<bool(const EdgeSet&)>& visit);

// Same enumeration restricted to the subgraph with vertex set `vertices` and
// edge set `allowed`.
bool for_each_perfect_matching_of(const Multigraph& g, const EdgeSet& allowed,
                                  std::span<const Vertex> vertices,
                                  const std::function<bool(const EdgeSet&)>& visit);

// First perfect matching (in enumeration order) of the subgraph with vertex
// set `vertices` and edge set `allowed` that contains every edge of `forced`.
std::optional<EdgeSet> find_perfect_matching(const Multigraph& g, const EdgeSet& allowed,
                                             std::span<const Vertex> vertices,
                                             const EdgeSet& forced = {});

std::vector<EdgeSet> enumerate_pms(const Multigraph& g);
EdgeSet pm_through_edge(const Multigraph& g, EdgeId e);

// Three disjoint perfect matchings partitioning E(g), if any exist.
std::optional<std::array<EdgeSet, 3>> three_edge_coloring(const Multigraph& g);

// Splits an edge set whose components are even circuits into two matchings;
// per circuit the class holding its canonical first edge goes to the first.
std::pair<EdgeSet, EdgeSet> split_even_circuits(const Multigraph& g, const EdgeSet& s);

// Inclusionwise maximal a-b alternating paths in g - forbidden, canonically
// oriented and sorted by start vertex.
std::vector<Path> maximal_alternating_paths(const Multigraph& g, const EdgeSet& a,
                                            const EdgeSet& b, const EdgeSet& forbidden);

// The unique perfect matching of the path c - u (c odd).
EdgeSet pm_of_circuit_minus_vertex(const Circuit& c, Vertex u);
// The unique perfect matching of a path with an even number of vertices.
EdgeSet pm_of_path(const Path& p);

}  // namespace berge
