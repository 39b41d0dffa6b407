#include "berge/berge.hpp"
#include "berge/contraction.hpp"
#include "berge/matching.hpp"
#include "support.hpp"

namespace berge {

using detail::assume;
using detail::require;

namespace {

std::vector<Vertex> without(const std::vector<Vertex>& base, const std::vector<bool>& drop) {
  std::vector<Vertex> out;
  for (Vertex v : base) {
    if (!drop[v]) out.push_back(v);
  }
  return out;
}

std::vector<bool> mask_of(const Multigraph& g, const std::vector<Vertex>& vs) {
  std::vector<bool> mask(g.vertex_count(), false);
  for (Vertex v : vs) mask[v] = true;
  return mask;
}

std::vector<Vertex> sorted_vertices(const Circuit& c) {
  std::vector<Vertex> vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  return vs;
}

struct Setup {
  Vertex u1 = -1, u2 = -1;
  EdgeSet c1e, c2e, m1, m2, m3;
  Circuit c3, c4;
};

Setup check_hypotheses(const Multigraph& g, const Circuit& c1, const Circuit& c2, EdgeId u1u2,
                       const EdgeSet& m, const Circuit& c) {
  try {
    assert_cubic(g);
  } catch (const DegreeError& err) {
    throw PreconditionViolated(std::string("graph is cubic: ") + err.what());
  }
  require(bridges(g).empty(), "graph is bridgeless");
  require(detail::is_circuit_of(g, c1) && detail::is_circuit_of(g, c2),
          "c1 and c2 are circuits of g");
  require(c1.is_odd() && c2.is_odd(), "c1 and c2 are odd");
  require(static_cast<int>(c1.length() + c2.length()) == g.vertex_count(),
          "c1 and c2 span g");
  for (Vertex v : c1.vertices) require(!c2.contains_vertex(v), "c1 and c2 are vertex-disjoint");

  Setup s;
  require(u1u2 >= 0 && u1u2 < g.edge_count(), "u1u2 is an edge of g");
  const Edge& e = g.edge(u1u2);
  if (c1.contains_vertex(e.a) && c2.contains_vertex(e.b)) {
    s.u1 = e.a;
    s.u2 = e.b;
  } else if (c1.contains_vertex(e.b) && c2.contains_vertex(e.a)) {
    s.u1 = e.b;
    s.u2 = e.a;
  }
  require(s.u1 >= 0, "u1u2 joins c1 and c2");
  s.c1e = c1.edge_set();
  s.c2e = c2.edge_set();
  require(m == (EdgeSet{u1u2} | pm_of_circuit_minus_vertex(c1, s.u1) |
                pm_of_circuit_minus_vertex(c2, s.u2)),
          "m is the perfect matching through u1u2 inside the 2-factor");
  s.m1 = (s.c1e | s.c2e) - m;
  s.m2 = m;
  s.m3 = g.all_edges() - (s.c1e | s.c2e);
  const EdgeSet rest = g.all_edges() - m;
  s.c3 = circuit_through_vertex(g, rest, s.u1);
  s.c4 = circuit_through_vertex(g, rest, s.u2);
  require(!(s.c3 == s.c4), "c3 differs from c4");

  require(detail::is_circuit_of(g, c) && c.contains_vertex(s.u1), "c is a circuit through u1");
  const EdgeSet ce = c.edge_set();
  const std::vector<bool> on_c = mask_of(g, c.vertices);
  require(is_perfect_matching_of(g, (s.c1e - m) - ce, without(sorted_vertices(c1), on_c)),
          "(c1 - m) - E(c) perfectly matches c1 - V(c)");
  const EdgeSet d = ce & s.c2e;
  require(!d.empty() && d.is_subset_of(s.c2e - m) && !d.intersects(s.c4.edge_set()),
          "E(c) & E(c2) is nonempty, avoids m and c4");
  const std::vector<bool> on_c2 = mask_of(g, c2.vertices);
  for (const Path& q : segments(c, d)) {
    if (q.contains_vertex(s.u1)) continue;
    std::vector<Vertex> vs = without(q.vertices, on_c2);
    std::sort(vs.begin(), vs.end());
    require(is_perfect_matching_of(g, q.edge_set() & (s.c1e - m), vs), "each segment of c off c2 is matched by c1 - m");
  }
  return s;
}

bool is_pm_containing(const Multigraph& g, const EdgeSet& pm, const EdgeSet& needed) {
  return is_perfect_matching(g, pm) && needed.is_subset_of(pm);
}

// Third matching once C6 is known: it must contain E2 & M1.
EdgeSet matching_through_c6(const Multigraph& g, const Setup& s, const Circuit& c1,
                            const Circuit& c6, const EdgeSet& needed) {
  const EdgeSet m1_c2 = s.m1 & s.c2e;
  const EdgeSet c6e = c6.edge_set();
  if (!c6e.intersects(s.c1e)) {
    EdgeSet pm = (s.m2 - s.c2e) | (m1_c2 ^ c6e);
    assume(is_pm_containing(g, pm, needed),
           "matching from c6 avoiding c1 is perfect and holds E2 & M1", g);
    return pm;
  }
  assume(c6.contains_vertex(s.u2), "c6 passes through u2", g);
  const auto at = static_cast<std::size_t>(
      std::find(c6.vertices.begin(), c6.vertices.end(), s.u2) - c6.vertices.begin());
  const std::size_t k = c6.length();
  std::array<EdgeId, 2> starts{c6.edges[at], c6.edges[(at + k - 1) % k]};
  if (starts[1] < starts[0]) std::swap(starts[0], starts[1]);
  for (EdgeId first : starts) {
    const Path t = detail::walk_until(c6, s.u2, first,
                                      [&](Vertex v) { return c1.contains_vertex(v); });
    EdgeSet pm = pm_of_circuit_minus_vertex(c1, t.back()) | (m1_c2 ^ t.edge_set());
    if (is_pm_containing(g, pm, needed)) return pm;
  }
  assume(false, "a path from u2 to c1 along c6 yields a perfect matching holding E2 & M1", g);
  return {};
}

}  // namespace

ThreePmResult lemma_three_pm(const Multigraph& g, const Circuit& c1, const Circuit& c2,
                             EdgeId u1u2, const EdgeSet& m, const Circuit& c) {
  const Setup s = check_hypotheses(g, c1, c2, u1u2, m, c);
  const EdgeSet ce = c.edge_set();
  const EdgeSet m1_c1 = s.m1 & s.c1e;

  const EdgeSet sym = ce ^ s.c2e;
  const Circuit c5 = circuit_through_vertex(g, sym, s.u1);
  const EdgeSet c5e = c5.edge_set();
  assume(is_perfect_matching_of(g, m1_c1 - c5e,
                                without(sorted_vertices(c1), mask_of(g, c5.vertices))),
         "(E(c1) & M1) - E(c5) perfectly matches c1 off c5", g);

  ThreePmResult out;
  if (c5.contains_vertex(s.u2)) {
    const auto [n1, n2] = split_even_circuits(g, sym);
    const EdgeSet base = m1_c1 - ce;
    out.matchings[0] = n1 | base;
    out.matchings[1] = n2 | base;
    const EdgeSet c4e = s.c4.edge_set();
    std::vector<Vertex> vs = c1.vertices;
    vs.insert(vs.end(), s.c4.vertices.begin(), s.c4.vertices.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const auto n3 = find_perfect_matching(g, EdgeSet{u1u2} | s.c1e | c4e, vs);
    assume(n3.has_value(), "g[u1u2, E(c1), E(c4)] has a perfect matching", g);
    out.matchings[2] = *n3 | ((s.c2e & s.m1) - c4e);
    assume(is_pm_containing(g, out.matchings[2], ce & s.c2e),
           "third matching is perfect and holds E(c) & E(c2)", g);
    out.branch = "u2-on-c5";
  } else {
    // Alternating pieces of c2 on c5, and the pieces of c5 and c2 between them.
    std::vector<Path> shared = segments(c2, s.c2e - c5e);
    for (const Path& p : shared) {
      assume(detail::count_in(p, s.m2) == detail::count_in(p, s.m1) + 1,
             "shared path " + to_string(p) + " has one more M2 edge than M1 edges", g);
    }
    const EdgeSet shared_e = detail::union_of(shared);
    std::vector<Path> on_c5 = segments(c5, shared_e);
    std::vector<Path> on_c2 = segments(c2, shared_e);
    detail::rotate_to_front(on_c5, s.u1, g);
    detail::rotate_to_front(on_c2, s.u2, g);

    const Contraction con =
        contract(g, {{"shared", shared}, {"c5", on_c5}, {"c2", on_c2}}, EdgeSet{});
    const EdgeSet a1 = con.family("shared"), a2 = con.family("c5"), a3 = con.family("c2");
    TwoPmResult r;
    try {
      r = lemma_two_pm(con.aux(), a1, a2, a3, EdgeSet{con.surrogate("c5", 0)},
                       con.surrogate("c2", 0));
    } catch (const PreconditionViolated& err) {
      assume(false, std::string("contracted instance satisfies the hypotheses: ") + err.what(), g);
    }
    const EdgeSet e1 = lift_by_parity(con, r.m4 ^ r.m5);
    const auto [n4, n5] = split_even_circuits(g, e1);

    if (r.side == TwoPmSide::ContainsM3) {
      const EdgeSet base = s.m1 - e1;
      std::vector<Vertex> all(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
      assume(is_perfect_matching_of(g, base, without(all, vertex_mask(g, e1))),
             "M1 - E1 perfectly matches g off E1", g);
      out.matchings = {base | n4, base | n5, s.m2};
      out.branch = "contracted-c2-side";
    } else {
      const EdgeSet e2 = lift_by_parity(con, (a1 & r.m4 & r.m5) | (a3 - (r.m4 | r.m5)));
      assume(e2.is_subset_of(s.m1 | s.m2), "E2 lies in M1 | M2", g);
      const EdgeSet base = (e2 & s.m2) | (m1_c1 - e1);
      out.matchings[0] = n4 | base;
      out.matchings[1] = n5 | base;
      assume(s.m1 - (out.matchings[0] | out.matchings[1]) == (e2 & s.m1),
             "the two matchings miss exactly E2 & M1", g);
      assume(r.c_prime.has_value(), "contracted result carries its second circuit", g);
      const Circuit c6 = lift_circuit(con, *r.c_prime);
      out.matchings[2] = matching_through_c6(g, s, c1, c6, e2 & s.m1);
      out.branch = "contracted-shared-side";
    }
  }

  for (const EdgeSet& pm : out.matchings) {
    assume(is_perfect_matching(g, pm), "returned set " + to_string(pm) + " is a perfect matching",
           g);
  }
  assume(s.m1.is_subset_of(out.matchings[0] | out.matchings[1] | out.matchings[2]),
         "the three matchings cover (E(c1) | E(c2)) - m", g);
  return out;
}

}  // namespace berge
