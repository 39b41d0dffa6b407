#include <sstream>

#include "berge/berge.hpp"
#include "berge/contraction.hpp"
#include "berge/matching.hpp"
#include "support.hpp"

namespace berge {

using detail::assume;
using detail::require;

namespace {

bool is_hamiltonian_union(const Multigraph& g, const EdgeSet& a, const EdgeSet& b) {
  try {
    auto circuits = circuits_of(g, a | b);
    return circuits.size() == 1 && static_cast<int>(circuits[0].length()) == g.vertex_count();
  } catch (const NotTwoRegular&) {
    return false;
  }
}

void check_preconditions(const Multigraph& g, const EdgeSet& m1, const EdgeSet& m2,
                         const EdgeSet& m3, const EdgeSet& f, EdgeId alpha) {
  try {
    assert_cubic(g);
  } catch (const DegreeError& err) {
    throw PreconditionViolated(std::string("graph is cubic: ") + err.what());
  }
  require(is_perfect_matching(g, m1) && is_perfect_matching(g, m2) && is_perfect_matching(g, m3),
          "m1, m2, m3 are perfect matchings");
  require(!m1.intersects(m2) && !m1.intersects(m3) && !m2.intersects(m3),
          "m1, m2, m3 are pairwise disjoint");
  require(is_hamiltonian_union(g, m1, m2), "m1 | m2 is a hamiltonian circuit");
  require(is_hamiltonian_union(g, m1, m3), "m1 | m3 is a hamiltonian circuit");
  require(!f.empty() && f.is_subset_of(m2), "f is a nonempty subset of m2");
  require(m3.contains(alpha), "alpha is in m3");
}

TwoPmResult pair_result(const Multigraph& g, const EdgeSet& m2, const EdgeSet& m3, EdgeId alpha) {
  return {m2, m3, TwoPmSide::ContainsM3, circuit_through_edge(g, m2 | m3, alpha), std::nullopt};
}

TwoPmResult two_pm(const Multigraph& g, const EdgeSet& m1, const EdgeSet& m2, const EdgeSet& m3,
                   const EdgeSet& f, EdgeId alpha, int depth) {
  const int n = g.vertex_count();
  if (n == 2) return pair_result(g, m2, m3, alpha);

  const Circuit c1 = circuit_through_edge(g, m2 | m3, alpha);
  const EdgeSet c1_edges = c1.edge_set();
  if (f.is_subset_of(c1_edges)) return pair_result(g, m2, m3, alpha);

  // g - e1 is m1 plus the m3 edges of c1 plus the m2 edges off c1: a 2-factor
  // of even circuits, split as m1 and the rest.
  const EdgeSet e1 = (m3 - c1_edges) | (m2 & c1_edges);
  const EdgeSet rest = g.all_edges() - e1;
  const Circuit c2 = circuit_through_edge(g, rest, alpha);
  const EdgeSet c2_edges = c2.edge_set();
  if ((f - c1_edges).is_subset_of(c2_edges)) {
    return {m1, rest - m1, TwoPmSide::ContainsM1, c2, c1};
  }

  const EdgeSet f_left = f - (c1_edges | c2_edges);
  const Circuit c3 = circuit_through_edge(g, rest, f_left.front());
  const EdgeSet c3_edges = c3.edge_set();

  // Alternating m1-m3 paths off c3 and on c3; both families are cut at the
  // ends of the m2 edges of c3.
  std::vector<Path> outer = maximal_alternating_paths(g, m1, m3, c3_edges);
  std::vector<Path> inner = maximal_alternating_paths(g, m1, m3, g.all_edges() - c3_edges);
  assume(outer.size() == inner.size(),
         "both alternating path families have the same size (" + std::to_string(outer.size()) +
             " vs " + std::to_string(inner.size()) + ")",
         g);
  for (const Path& p : outer) {
    assume(detail::count_in(p, m3) == detail::count_in(p, m1) + 1,
           "path " + to_string(p) + " off c3 has one more m3 edge than m1 edges", g);
  }
  for (const Path& p : inner) {
    assume(detail::count_in(p, m1) == detail::count_in(p, m3) + 1,
           "path " + to_string(p) + " on c3 has one more m1 edge than m3 edges", g);
  }
  std::size_t s = outer.size();
  for (std::size_t j = 0; j < outer.size(); ++j) {
    if (outer[j].contains_edge(alpha)) s = j;
  }
  assume(s < outer.size(), "alpha lies on an alternating path off c3", g);

  const EdgeSet kept = m2 & c3_edges;
  const Contraction con = contract(g, {{"outer", outer}, {"inner", inner}}, kept);
  const Multigraph& aux = con.aux();
  assume(aux.vertex_count() < n, "the auxiliary graph is smaller", g);
  assume(depth < n, "recursion depth stays below n/2", g);

  const EdgeSet aux_m1 = con.family("inner");
  const EdgeSet aux_m2 = con.kept_to_aux(kept);
  const EdgeSet aux_m3 = con.family("outer");
  const EdgeSet aux_f = con.kept_to_aux(c3_edges & f_left);
  const EdgeId aux_alpha = con.surrogate("outer", s);

  TwoPmResult sub;
  try {
    sub = two_pm(aux, aux_m1, aux_m2, aux_m3, aux_f, aux_alpha, depth + 1);
  } catch (const PreconditionViolated& err) {
    assume(false, std::string("auxiliary instance satisfies the hypotheses: ") + err.what(), g);
  }

  // Lift: the circuits of the auxiliary symmetric difference expand to
  // circuits alternating with the chosen base matching. Kept m2 edges belong
  // to those circuits as well.
  const EdgeSet lifted = lift_edges(con, sub.m4 ^ sub.m5);
  const EdgeSet& base = sub.side == TwoPmSide::ContainsM3 ? m3 : m1;
  TwoPmResult r;
  r.m4 = base;
  r.m5 = lifted ^ base;
  r.side = sub.side;
  r.c = lift_circuit(con, sub.c);
  if (sub.side == TwoPmSide::ContainsM1) {
    assume(sub.c_prime.has_value(), "auxiliary result carries its second circuit", g);
    r.c_prime = lift_circuit(con, *sub.c_prime);
  }
  return r;
}

}  // namespace

std::optional<std::string> two_pm_violation(const Multigraph& g, const EdgeSet& m1,
                                            const EdgeSet& m2, const EdgeSet& m3,
                                            const EdgeSet& f, EdgeId alpha,
                                            const TwoPmResult& r) {
  if (!is_perfect_matching(g, r.m4) || !is_perfect_matching(g, r.m5))
    return "m4 and m5 are perfect matchings";
  const EdgeSet both = r.m4 & r.m5, either = r.m4 | r.m5;
  const EdgeSet& pivot = r.side == TwoPmSide::ContainsM3 ? m3 : m1;
  if (!both.is_subset_of(pivot) || !pivot.is_subset_of(either)) return "m4 & m5 within and m4 | m5 over the pivot matching";

  const auto circuits = circuits_of(g, r.m4 ^ r.m5);
  if (std::find(circuits.begin(), circuits.end(), r.c) == circuits.end())
    return "c is a circuit of g[m4 | m5]";
  if (!r.c.contains_edge(alpha)) return "c contains alpha";
  if (!f.intersects(r.c.edge_set())) return "c meets f";
  for (const Circuit& other : circuits) {
    if (!(other == r.c) && f.intersects(other.edge_set()))
      return "no other circuit meets f";
  }

  if (m1.is_subset_of(either)) {
    if (!r.c_prime) return "c_prime present";
    const Circuit& cp = *r.c_prime;
    if (!detail::is_circuit_of(g, cp)) return "c_prime is a circuit of g";
    if (!cp.contains_edge(alpha)) return "c_prime contains alpha";
    const EdgeSet cp_edges = cp.edge_set();
    if ((m2 & r.c.edge_set() & cp_edges).size() != 0) return "no shared m2 edge";
    if (!(m3 - either).is_subset_of(m3 - cp_edges)) return "m3 containment";
    std::vector<Vertex> off;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!cp.contains_vertex(v)) off.push_back(v);
    }
    if (!is_perfect_matching_of(g, m3 - cp_edges, off))
      return "m3 - E(c_prime) is a perfect matching of g - V(c_prime)";
  }
  return std::nullopt;
}

TwoPmResult lemma_two_pm(const Multigraph& g, const EdgeSet& m1, const EdgeSet& m2,
                         const EdgeSet& m3, const EdgeSet& f, EdgeId alpha) {
  check_preconditions(g, m1, m2, m3, f, alpha);
  TwoPmResult r = two_pm(g, m1, m2, m3, f, alpha, 0);
  if (auto broken = two_pm_violation(g, m1, m2, m3, f, alpha, r)) {
    std::ostringstream detail;
    detail << *broken << " fails; m1=" << to_string(m1) << " m2=" << to_string(m2)
           << " m3=" << to_string(m3) << " f=" << to_string(f) << " alpha=" << alpha;
    assume(false, detail.str(), g);
  }
  return r;
}

}  // namespace berge
