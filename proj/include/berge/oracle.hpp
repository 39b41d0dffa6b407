#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

struct CoverReport {
  std::vector<bool> perfect;  // per listed matching
  EdgeSet uncovered;
  std::size_t order = 0;  // number of distinct matchings
  bool valid = false;
};

// Brute-force check that every listed set is a perfect matching and that
// together they cover E(g). Does not rely on the matching module.
CoverReport verify_cover(const Multigraph& g, const std::vector<EdgeSet>& matchings);
std::string format_report(const CoverReport& report);

// Smallest number of perfect matchings covering E(g), or nullopt when it
// exceeds cap. Throws NoPerfectMatching if g has none.
std::optional<int> min_cover_order(const Multigraph& g, int cap = 6);

// Hamiltonian circuit of g, or of g - deleted when given.
std::optional<Circuit> hamiltonian_circuit(const Multigraph& g,
                                           std::optional<Vertex> deleted = std::nullopt);
bool is_hypohamiltonian(const Multigraph& g);

// 2-factor with exactly two circuits: the complement of the first perfect
// matching (in enumeration order) whose complement has two components.
std::optional<std::pair<Circuit, Circuit>> find_two_factor_two_circuits(const Multigraph& g);

}  // namespace berge
