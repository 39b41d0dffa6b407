#include "berge/berge.hpp"
#include "berge/contraction.hpp"
#include "berge/matching.hpp"
#include "berge/oracle.hpp"
#include "support.hpp"

namespace berge {

using detail::assume;

namespace {

Cover coloring_cover(const Multigraph& g, const EdgeSet& pm, std::string note) {
  const auto [a, b] = split_even_circuits(g, g.all_edges() - pm);
  return {{pm, a, b}, std::move(note)};
}

void check_cover(const Multigraph& g, const Cover& c) {
  const CoverReport report = verify_cover(g, c.matchings);
  assume(report.valid, "cover " + c.provenance_note + " is valid:\n" + format_report(report), g);
}

}  // namespace

Cover cover_near_hamiltonian(const Multigraph& g, Vertex v, std::optional<Circuit> hamiltonian) {
  try {
    assert_cubic(g);
  } catch (const DegreeError& err) {
    throw PreconditionViolated(std::string("graph is cubic: ") + err.what());
  }
  if (v < 0 || v >= g.vertex_count()) throw PreconditionViolated("v is a vertex of g");
  if (!hamiltonian) hamiltonian = hamiltonian_circuit(g, v);
  if (!hamiltonian) throw NoHamiltonianCircuit(v);
  const Circuit& c = *hamiltonian;
  if (!detail::is_circuit_of(g, c) || c.contains_vertex(v) ||
      static_cast<int>(c.length()) != g.vertex_count() - 1)
    throw PreconditionViolated("supplied circuit is hamiltonian in g - v");

  Vertex u = g.vertex_count();
  EdgeId uv = -1;
  for (EdgeId e : g.incident(v)) {
    const Vertex w = g.other_end(e, v);
    if (w < u) u = w;
  }
  for (EdgeId e : g.incident(v)) {
    if (g.other_end(e, v) == u) {
      uv = e;
      break;
    }
  }

  const EdgeSet ce = c.edge_set();
  const EdgeSet n1 = pm_of_circuit_minus_vertex(c, u);
  const EdgeSet n2 = ce - n1;
  const EdgeSet m1 = n1 | EdgeSet{uv};
  const EdgeSet rest = g.all_edges() - m1;
  const Circuit c1 = circuit_through_vertex(g, rest, u);
  const Circuit c2 = circuit_through_vertex(g, rest, v);
  if (c1 == c2) {
    Cover out = coloring_cover(g, m1, "near-hamiltonian:even-complement");
    check_cover(g, out);
    return out;
  }

  const EdgeSet c1e = c1.edge_set(), c2e = c2.edge_set();
  const EdgeSet m2 = (c1e - ce) | (c2e & ce) | (g.all_edges() - (ce | c1e | c2e));
  assume(is_perfect_matching(g, m1) && is_perfect_matching(g, m2),
         "M1 and M2 are perfect matchings", g);

  std::vector<Path> paths;
  const EdgeSet cut = (c1e | c2e) & ce;
  if (!cut.empty()) paths = segments(c, cut);
  for (const Path& p : paths) {
    assume(detail::count_in(p, n1) + detail::count_in(p, n2) == p.length() &&
               detail::count_in(p, n1) == detail::count_in(p, n2) + 1,
           "path " + to_string(p) + " alternates with one more N1 edge", g);
  }

  const Contraction con = contract(g, {{"alpha", paths}}, EdgeSet{uv} | c1e | c2e);
  const Multigraph& aux = con.aux();
  const Circuit a1 = project_circuit(con, c1);
  const Circuit a2 = project_circuit(con, c2);
  const EdgeId auv = con.aux_of_kept(uv);
  const Vertex au = *con.aux_vertex(u), av = *con.aux_vertex(v);
  const EdgeSet am = EdgeSet{auv} | pm_of_circuit_minus_vertex(a1, au) |
                     pm_of_circuit_minus_vertex(a2, av);
  const EdgeSet arest = aux.all_edges() - am;
  const Circuit a3 = circuit_through_vertex(aux, arest, au);
  const Circuit a4 = circuit_through_vertex(aux, arest, av);
  if (a3 == a4) {
    Cover out = coloring_cover(g, m2, "near-hamiltonian:contracted-even");
    check_cover(g, out);
    return out;
  }

  ThreePmResult three;
  try {
    three = lemma_three_pm(aux, a1, a2, auv, am, a3);
  } catch (const PreconditionViolated& err) {
    assume(false, std::string("contracted graph meets the three-matching hypotheses: ") + err.what(),
           g);
  }

  Cover out;
  out.matchings = {m1, m2};
  for (const EdgeSet& am_i : three.matchings) {
    std::vector<EdgeId> ids;
    for (std::size_t j = 0; j < paths.size(); ++j) {
      const EdgeSet& side = am_i.contains(con.surrogate("alpha", j)) ? n1 : n2;
      for (EdgeId e : paths[j].edges) {
        if (side.contains(e)) ids.push_back(e);
      }
    }
    for (EdgeId e : am_i) {
      if (!con.is_surrogate(e)) ids.push_back(con.parent_of_kept(e));
    }
    out.matchings.push_back(EdgeSet(std::move(ids)));
  }
  out.provenance_note = "near-hamiltonian:three-matchings:" + three.branch;
  check_cover(g, out);
  return out;
}

}  // namespace berge
