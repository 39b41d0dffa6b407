#include <set>

#include "berge/berge.hpp"
#include "berge/matching.hpp"
#include "berge/oracle.hpp"

namespace berge {

std::vector<EdgeSet> Cover::distinct() const {
  std::vector<EdgeSet> out;
  std::set<EdgeSet> seen;
  for (const EdgeSet& m : matchings) {
    if (seen.insert(m).second) out.push_back(m);
  }
  return out;
}

std::size_t Cover::order() const { return distinct().size(); }

Cover cover(const Multigraph& g) {
  try {
    assert_cubic(g);
  } catch (const DegreeError& err) {
    throw PreconditionViolated(std::string("graph is cubic: ") + err.what());
  }
  if (!is_connected(g)) throw PreconditionViolated("graph is connected");
  if (!bridges(g).empty()) throw PreconditionViolated("graph is bridgeless");

  if (auto coloring = three_edge_coloring(g)) {
    return {{(*coloring)[0], (*coloring)[1], (*coloring)[2]}, "three-edge-colorable"};
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (auto c = hamiltonian_circuit(g, v)) return cover_near_hamiltonian(g, v, c);
  }
  if (auto factor = find_two_factor_two_circuits(g)) {
    return cover_two_factor(g, factor->first, factor->second);
  }
  throw Unsupported(
      "no supported hypothesis applies: not 3-edge-colorable, no vertex-deleted hamiltonian "
      "circuit, no 2-factor with two circuits");
}

}  // namespace berge
