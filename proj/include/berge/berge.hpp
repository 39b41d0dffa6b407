#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

// Which containment the pair (m4, m5) satisfies:
//   ContainsM3: m4 & m5 ⊆ m3 ⊆ m4 | m5
//   ContainsM1: m4 & m5 ⊆ m1 ⊆ m4 | m5
enum class TwoPmSide { ContainsM3, ContainsM1 };

struct TwoPmResult {
  EdgeSet m4;
  EdgeSet m5;
  TwoPmSide side = TwoPmSide::ContainsM3;
  // The circuit of g[m4 | m5] through alpha; it is the only one meeting f.
  Circuit c;
  // Present whenever m1 ⊆ m4 | m5: a circuit through alpha sharing no m2
  // edge with c, such that m3 - E(c_prime) perfectly matches g - V(c_prime).
  std::optional<Circuit> c_prime;
};

// Two perfect matchings of a cubic graph g given pairwise disjoint perfect
// matchings m1, m2, m3 where m1|m2 and m1|m3 are hamiltonian circuits, a
// nonempty f ⊆ m2 and alpha ∈ m3. Recurses on an auxiliary graph built by
// contracting the m1-m3 alternating paths around one circuit of the
// complementary 2-factor.
//
// Throws PreconditionViolated when the inputs do not satisfy the hypotheses,
// and AssumptionViolated if any intermediate claim fails.
TwoPmResult lemma_two_pm(const Multigraph& g, const EdgeSet& m1, const EdgeSet& m2,
                         const EdgeSet& m3, const EdgeSet& f, EdgeId alpha);

// Description of the first clause of the two-matching statement that r
// violates, or nullopt when all hold.
std::optional<std::string> two_pm_violation(const Multigraph& g, const EdgeSet& m1,
                                            const EdgeSet& m2, const EdgeSet& m3,
                                            const EdgeSet& f, EdgeId alpha,
                                            const TwoPmResult& r);

struct ThreePmResult {
  std::array<EdgeSet, 3> matchings;
  std::string branch;
};

// Three perfect matchings covering (E(c1) | E(c2)) - m, for a bridgeless cubic
// g with 2-factor {c1, c2} of odd circuits, the connecting edge u1u2 (u1 on
// c1), m the perfect matching through u1u2 inside the 2-factor, and a circuit
// c through u1 satisfying the three hypotheses on how it meets c1 and c2.
ThreePmResult lemma_three_pm(const Multigraph& g, const Circuit& c1, const Circuit& c2,
                             EdgeId u1u2, const EdgeSet& m, const Circuit& c);

struct Cover {
  std::vector<EdgeSet> matchings;
  std::string provenance_note;

  // Number of distinct matchings.
  std::size_t order() const;
  std::vector<EdgeSet> distinct() const;
};

// Cover of order <= 5 for a cubic g in which g - v has a hamiltonian circuit.
// The circuit is searched for when not supplied.
Cover cover_near_hamiltonian(const Multigraph& g, Vertex v,
                             std::optional<Circuit> hamiltonian = std::nullopt);

// Cover of order <= 5 for a bridgeless cubic g with 2-factor {c1, c2}.
Cover cover_two_factor(const Multigraph& g, const Circuit& c1, const Circuit& c2);

// State of the two-circuit construction once every shortcut has been ruled
// out: c1, c2 odd, c3 != c4, E(c3) & E(c2) and E(c1) & E(c4) empty.
struct TwoFactorContext {
  Multigraph g;
  Circuit c1, c2;
  EdgeId u1u2 = -1;
  Vertex u1 = -1, u2 = -1;
  EdgeSet m1, m2, m3;
  // Circuits of g - m2 through u1 and u2.
  Circuit c3, c4;
  // Circuit of g - m2 meeting both c1 and c2.
  Circuit c5;
  // Maximal subpath of c1 through u1 avoiding E(c5), from u3 to u4.
  Path q;
};

// Throws PreconditionViolated if a shortcut branch applies instead.
TwoFactorContext two_factor_context(const Multigraph& g, const Circuit& c1, const Circuit& c2);

// A perfect matching containing (m1 & E(c1)) - (E(q) | E(c5)).
EdgeSet claim1_matching(const TwoFactorContext& ctx);

// Five perfect matchings covering g from circuits c, c_prime through u1
// meeting the five conditions of the final reduction. n2n3 are the two perfect
// matchings of g[V(c1)] - V(c) required by the fourth condition; they are
// searched for when absent.
Cover claim2_cover(const TwoFactorContext& ctx, const Circuit& c, const Circuit& c_prime,
                   std::optional<std::pair<EdgeSet, EdgeSet>> n2n3 = std::nullopt);

// Dispatcher: 3-edge-coloring, then a vertex whose deletion leaves a
// hamiltonian graph, then a 2-factor with two circuits.
Cover cover(const Multigraph& g);

}  // namespace berge
