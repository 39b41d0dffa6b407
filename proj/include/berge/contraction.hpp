#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

struct PathFamily {
  std::string name;
  std::vector<Path> paths;
};

// An auxiliary graph in which each path of the parent is replaced by a single
// surrogate edge with the same ends, plus a set of kept parent edges.
//
// Aux vertices are the path ends and kept-edge ends, numbered densely in
// increasing parent order. Aux edge ids are dense as well: kept edges first
// (in parent id order), then surrogates family by family in path order.
class Contraction {
 public:
  const Multigraph& parent() const { return parent_; }
  const Multigraph& aux() const { return aux_; }

  Vertex parent_vertex(Vertex aux_v) const { return to_parent_.at(aux_v); }
  std::optional<Vertex> aux_vertex(Vertex parent_v) const;

  bool is_surrogate(EdgeId aux_e) const;
  // Throws NotSurrogate for kept edges.
  const Path& provenance(EdgeId aux_e) const;
  EdgeId surrogate(std::string_view family, std::size_t index) const;
  EdgeSet family(std::string_view name) const;
  // (family name, index) of a surrogate.
  std::pair<std::string, std::size_t> surrogate_origin(EdgeId aux_e) const;

  EdgeId aux_of_kept(EdgeId parent_e) const;
  EdgeId parent_of_kept(EdgeId aux_e) const;
  EdgeSet kept_to_aux(const EdgeSet& parent_edges) const;

 private:
  friend Contraction contract(const Multigraph&, std::vector<PathFamily>, const EdgeSet&);

  Multigraph parent_;
  Multigraph aux_;
  std::vector<Vertex> to_parent_;
  std::map<Vertex, Vertex> to_aux_;
  std::vector<EdgeId> kept_parent_;  // aux id -> parent id, for ids < kept count
  std::map<EdgeId, EdgeId> kept_aux_;
  std::vector<PathFamily> families_;
  std::vector<std::pair<std::size_t, std::size_t>> origin_;  // surrogate slot -> (family, index)
};

// Throws NotCubicAux if the auxiliary graph is not cubic, and
// AssumptionViolated if paths within a family share a vertex.
Contraction contract(const Multigraph& parent, std::vector<PathFamily> families,
                     const EdgeSet& kept);

// Union of the provenance paths of the chosen surrogates, as parent edges.
EdgeSet lift_by_parity(const Contraction& c, const EdgeSet& chosen);
// Like lift_by_parity, but kept edges are translated instead of rejected.
EdgeSet lift_edges(const Contraction& c, const EdgeSet& aux_edges);
// Expands every surrogate on the circuit into its path.
Circuit lift_circuit(const Contraction& c, const Circuit& aux_circuit);
// Image in the auxiliary graph of a parent circuit made of kept edges only.
Circuit project_circuit(const Contraction& c, const Circuit& parent_circuit);

}  // namespace berge
