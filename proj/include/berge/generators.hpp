#pragma once

#include <string>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

Multigraph theta_graph();
Multigraph complete_k4();
// GP(3,1): triangles 0-1-2 and 3-4-5 joined by spokes i -- i+3.
Multigraph prism();
// Outer vertices 0..n-1, inner n..2n-1. Edge ids: outer circuit
// (i, i+1 mod n), then spokes (i, n+i), then inner edges (n+i, n+(i+k mod n)).
Multigraph generalized_petersen(int n, int k);
Multigraph petersen();
Multigraph moebius_kantor();
// Flower snark J_n, n odd >= 5: centres a_i = i, b_i = n+i, c_i = 2n+i,
// d_i = 3n+i. Edge ids: spokes (a_i,b_i), (a_i,c_i), (a_i,d_i) for each i,
// then the b-circuit, then the 2n-circuit c_0 .. c_(n-1) d_0 .. d_(n-1).
Multigraph flower_snark(int n);

// Named family lookup for the command line; throws BadParams.
Multigraph generate(const std::string& family, const std::vector<int>& params);

}  // namespace berge
