#include "berge/berge.hpp"
#include "berge/contraction.hpp"
#include "berge/matching.hpp"
#include "berge/oracle.hpp"
#include "support.hpp"

namespace berge {

using detail::assume;
using detail::require;

namespace {

std::vector<Vertex> sorted(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Vertices of `base` that are not on `removed`.
std::vector<Vertex> off(const std::vector<Vertex>& base, const std::vector<Vertex>& removed) {
  std::vector<Vertex> out;
  for (Vertex v : base) {
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) out.push_back(v);
  }
  return sorted(std::move(out));
}

void check_cover(const Multigraph& g, const Cover& c) {
  const CoverReport report = verify_cover(g, c.matchings);
  assume(report.valid, "cover " + c.provenance_note + " is valid:\n" + format_report(report), g);
}

// The part shared by every branch: the three matchings and the circuits of
// g - m2 through the ends of u1u2.
struct Frame {
  EdgeId u1u2 = -1;
  Vertex u1 = -1, u2 = -1;
  EdgeSet c1e, c2e, m1, m2, m3;
  Circuit c3, c4;
};

void check_two_factor(const Multigraph& g, const Circuit& c1, const Circuit& c2) {
  try {
    assert_cubic(g);
  } catch (const DegreeError& err) {
    throw PreconditionViolated(std::string("graph is cubic: ") + err.what());
  }
  require(is_connected(g), "graph is connected");
  require(bridges(g).empty(), "graph is bridgeless");
  require(detail::is_circuit_of(g, c1) && detail::is_circuit_of(g, c2),
          "c1 and c2 are circuits of g");
  require(static_cast<int>(c1.length() + c2.length()) == g.vertex_count(), "c1 and c2 span g");
  for (Vertex v : c1.vertices) require(!c2.contains_vertex(v), "c1 and c2 are vertex-disjoint");
}

Frame make_frame(const Multigraph& g, const Circuit& c1, const Circuit& c2) {
  Frame f;
  for (EdgeId e = 0; e < g.edge_count() && f.u1u2 < 0; ++e) {
    const Edge& ed = g.edge(e);
    if (c1.contains_vertex(ed.a) && c2.contains_vertex(ed.b)) {
      f = Frame{e, ed.a, ed.b, {}, {}, {}, {}, {}, {}, {}};
    } else if (c1.contains_vertex(ed.b) && c2.contains_vertex(ed.a)) {
      f = Frame{e, ed.b, ed.a, {}, {}, {}, {}, {}, {}, {}};
    }
  }
  assume(f.u1u2 >= 0, "an edge joins c1 and c2", g);
  f.c1e = c1.edge_set();
  f.c2e = c2.edge_set();
  f.m3 = g.all_edges() - (f.c1e | f.c2e);
  f.m2 = EdgeSet{f.u1u2} | pm_of_circuit_minus_vertex(c1, f.u1) |
         pm_of_circuit_minus_vertex(c2, f.u2);
  f.m1 = (f.c1e | f.c2e) - f.m2;
  const EdgeSet rest = g.all_edges() - f.m2;
  f.c3 = circuit_through_vertex(g, rest, f.u1);
  f.c4 = circuit_through_vertex(g, rest, f.u2);
  return f;
}

Cover from_three(const Frame& f, const ThreePmResult& r, std::string note) {
  return {{f.m2, f.m3, r.matchings[0], r.matchings[1], r.matchings[2]},
          std::move(note) + ":" + r.branch};
}

ThreePmResult three_or_assume(const Multigraph& g, const Circuit& c1, const Circuit& c2,
                              EdgeId u1u2, const EdgeSet& m, const Circuit& c) {
  try {
    return lemma_three_pm(g, c1, c2, u1u2, m, c);
  } catch (const PreconditionViolated& err) {
    assume(false, std::string("circuit ") + to_string(c) +
                      " meets the three-matching hypotheses: " + err.what(),
           g);
  }
  return {};
}

Cover claim2_or_assume(const TwoFactorContext& ctx, const Circuit& c, const Circuit& c_prime,
                       std::optional<std::pair<EdgeSet, EdgeSet>> n2n3) {
  try {
    return claim2_cover(ctx, c, c_prime, std::move(n2n3));
  } catch (const PreconditionViolated& err) {
    assume(false, std::string("circuits ") + to_string(c) + " and " + to_string(c_prime) +
                      " meet the five-matching conditions: " + err.what(),
           ctx.g);
  }
  return {};
}

}  // namespace

TwoFactorContext two_factor_context(const Multigraph& g, const Circuit& c1, const Circuit& c2) {
  check_two_factor(g, c1, c2);
  require(c1.is_odd() && c2.is_odd(), "c1 and c2 are odd");
  const Frame f = make_frame(g, c1, c2);
  require(!(f.c3 == f.c4), "c3 differs from c4");
  require(!f.c3.edge_set().intersects(f.c2e), "c3 has no edge of c2");
  require(!f.c4.edge_set().intersects(f.c1e), "c4 has no edge of c1");

  TwoFactorContext ctx;
  ctx.g = g;
  ctx.c1 = c1;
  ctx.c2 = c2;
  ctx.u1u2 = f.u1u2;
  ctx.u1 = f.u1;
  ctx.u2 = f.u2;
  ctx.m1 = f.m1;
  ctx.m2 = f.m2;
  ctx.m3 = f.m3;
  ctx.c3 = f.c3;
  ctx.c4 = f.c4;

  const EdgeSet rest = g.all_edges() - f.m2;
  bool found = false;
  for (EdgeId e : f.m3) {
    if (e == f.u1u2) continue;
    const Circuit c = circuit_through_edge(g, rest, e);
    const EdgeSet ce = c.edge_set();
    if (ce.intersects(f.c1e) && ce.intersects(f.c2e)) {
      ctx.c5 = c;
      found = true;
      break;
    }
  }
  assume(found, "some circuit of g - M2 meets both c1 and c2", g);
  assume(!ctx.c5.contains_vertex(f.u1) && !ctx.c5.contains_vertex(f.u2),
         "c5 avoids c3 and c4", g);

  for (const Path& p : segments(c1, f.c1e & ctx.c5.edge_set())) {
    if (p.contains_vertex(f.u1)) ctx.q = p;
  }
  assume(!ctx.q.vertices.empty(), "a subpath of c1 off c5 contains u1", g);
  return ctx;
}

EdgeSet claim1_matching(const TwoFactorContext& ctx) {
  const Multigraph& g = ctx.g;
  const EdgeSet c1e = ctx.c1.edge_set(), c5e = ctx.c5.edge_set();
  const EdgeSet m1_c1 = ctx.m1 & c1e;
  const EdgeSet e1 = m1_c1 - (ctx.q.edge_set() | c5e);
  if (e1.empty()) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    auto first = find_perfect_matching(g, g.all_edges(), all);
    assume(first.has_value(), "g has a perfect matching", g);
    return *first;
  }

  const Vertex u3 = ctx.q.front(), u4 = ctx.q.back();
  // The c1 edge of c5 at each end of q.
  auto c1_edge_on_c5 = [&](Vertex u) {
    for (EdgeId e : g.incident(u)) {
      if (c1e.contains(e) && c5e.contains(e)) return e;
    }
    assume(false, "end " + std::to_string(u) + " of q has a c1 edge on c5", g);
    return EdgeId{-1};
  };
  const EdgeId beta1 = c1_edge_on_c5(u3), beta2 = c1_edge_on_c5(u4);
  const Path t1 = detail::walk_until(ctx.c5, u3, beta1, [&](Vertex v) {
    return ctx.c2.contains_vertex(v) || v == u4;
  });
  const Path t2 = detail::walk_until(ctx.c5, u4, beta2, [&](Vertex v) {
    return ctx.c2.contains_vertex(v) || v == u3;
  });
  const Vertex u5 = t1.back(), u6 = t2.back();

  EdgeSet pm;
  if (ctx.c2.contains_vertex(u5)) {
    const Path t3 = detail::subpath(ctx.q, ctx.u1, u3);
    pm = (m1_c1 ^ (t1.edge_set() | t3.edge_set())) | pm_of_circuit_minus_vertex(ctx.c2, u5);
  } else if (ctx.c2.contains_vertex(u6)) {
    const Path t3 = detail::subpath(ctx.q, ctx.u1, u4);
    pm = (m1_c1 ^ (t2.edge_set() | t3.edge_set())) | pm_of_circuit_minus_vertex(ctx.c2, u6);
  } else if (u5 == u4 && t1.contains_edge(beta2)) {
    pm = (ctx.m2 - c1e) | (m1_c1 ^ (ctx.q.edge_set() | t1.edge_set()));
  } else {
    assume(false, "one of the walks along c5 reaches c2 or closes through q", g);
  }
  assume(is_perfect_matching(g, pm) && e1.is_subset_of(pm),
         "matching " + to_string(pm) + " is perfect and holds " + to_string(e1), g);
  return pm;
}

Cover claim2_cover(const TwoFactorContext& ctx, const Circuit& c, const Circuit& c_prime,
                   std::optional<std::pair<EdgeSet, EdgeSet>> n2n3) {
  const Multigraph& g = ctx.g;
  const EdgeSet c1e = ctx.c1.edge_set(), c2e = ctx.c2.edge_set(), c5e = ctx.c5.edge_set();
  const EdgeSet ce = c.edge_set(), cpe = c_prime.edge_set();
  const EdgeSet m1_c1 = ctx.m1 & c1e;

  require(detail::is_circuit_of(g, c) && detail::is_circuit_of(g, c_prime),
          "c and c_prime are circuits of g");
  require(c.contains_vertex(ctx.u1) && c_prime.contains_vertex(ctx.u1), "c and c_prime pass through u1");
  const EdgeSet d1 = ce & c2e;
  require(!d1.empty() && d1.is_subset_of(c5e & c2e) && (cpe & c2e).is_subset_of(c5e & c2e) &&
              !(d1 & cpe).size(),
          "c and c_prime meet c2 only on c5, in disjoint edges");

  std::vector<Path> qs = segments(c, d1);
  detail::rotate_to_front(qs, ctx.u1, g);
  require(ctx.q.edge_set().is_subset_of(qs[0].edge_set()), "q lies on the segment of c through u1");
  for (std::size_t i = 1; i < qs.size(); ++i) {
    require(is_perfect_matching_of(g, ctx.m2 & qs[i].edge_set(),
                                   off(qs[i].vertices, ctx.c2.vertices)),
            "segments of c off c2 are matched by m2");
  }

  const std::vector<Vertex> c1_off_c = off(ctx.c1.vertices, c.vertices);
  const EdgeSet target = m1_c1 - cpe;
  auto fits = [&](const EdgeSet& a, const EdgeSet& b) {
    return (c1e - (ce | a | b)).is_subset_of(target);
  };
  if (n2n3) {
    require(is_perfect_matching_of(g, n2n3->first, c1_off_c) &&
                is_perfect_matching_of(g, n2n3->second, c1_off_c) &&
                fits(n2n3->first, n2n3->second),
            "two matchings of c1 - V(c) leave only m1 edges off c_prime");
  } else {
    std::vector<EdgeSet> pms;
    for_each_perfect_matching_of(g, g.all_edges(), c1_off_c, [&](const EdgeSet& m) {
      pms.push_back(m);
      return true;
    });
    for (std::size_t i = 0; i < pms.size() && !n2n3; ++i) {
      for (std::size_t j = i; j < pms.size() && !n2n3; ++j) {
        if (fits(pms[i], pms[j])) n2n3 = std::pair{pms[i], pms[j]};
      }
    }
    require(n2n3.has_value(), "two matchings of c1 - V(c) leave only m1 edges off c_prime");
  }
  const auto& [n2, n3] = *n2n3;

  require(is_perfect_matching_of(g, target, off(ctx.c1.vertices, c_prime.vertices)),
          "m1 & E(c1) - E(c_prime) matches c1 - V(c_prime)");
  {
    std::vector<Vertex> rest = off(c_prime.vertices, {ctx.u1});
    require(is_perfect_matching_of(g, cpe - ctx.m1, rest), "E(c_prime) - m1 matches c_prime - u1");
  }

  // Contract c2 and c around the shared edges d1.
  std::vector<Path> p1 = segments(ctx.c2, d1);
  detail::rotate_to_front(p1, ctx.u2, g);
  const Contraction con = contract(g, {{"c2", p1}, {"c", qs}}, d1);
  const EdgeSet kept = con.kept_to_aux(d1);
  const EdgeSet fam_p = con.family("c2"), fam_q = con.family("c");
  TwoPmResult r;
  try {
    r = lemma_two_pm(con.aux(), kept, fam_p, fam_q, EdgeSet{con.surrogate("c2", 0)},
                     con.surrogate("c", 0));
  } catch (const PreconditionViolated& err) {
    assume(false, std::string("contracted instance satisfies the two-matching hypotheses: ") +
                      err.what(),
           g);
  }
  const EdgeSet e2 = lift_edges(con, r.m4 ^ r.m5);
  const auto [n4, n5] = split_even_circuits(g, e2);
  const EdgeSet either = r.m4 | r.m5, both = r.m4 & r.m5;

  std::vector<EdgeId> ids;
  auto take = [&](const Path& p, const EdgeSet& keep, bool inside) {
    for (EdgeId e : p.edges) {
      if (keep.contains(e) == inside) ids.push_back(e);
    }
  };
  for (std::size_t j = 0; j < p1.size(); ++j) {
    if (!either.contains(con.surrogate("c2", j))) take(p1[j], ctx.m1, true);
  }

  Cover out;
  if (r.side == TwoPmSide::ContainsM3) {
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (both.contains(con.surrogate("c", j))) take(qs[j], ctx.m2, false);
    }
    const EdgeSet n6(std::move(ids));
    const EdgeSet third = (ctx.m1 ^ (cpe | ctx.c4.edge_set())) | EdgeSet{ctx.u1u2};
    out.matchings = {ctx.m2, ctx.m3, n2 | n4 | n6, n3 | n5 | n6, third};
    out.provenance_note = "claim2:contracted-c-side";
  } else {
    for (EdgeId e : both) ids.push_back(con.parent_of_kept(e));
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (!either.contains(con.surrogate("c", j))) take(qs[j], ctx.m2, true);
    }
    const EdgeSet n7(std::move(ids));
    const EdgeSet m8 = (m1_c1 ^ ctx.c3.edge_set()) | (ctx.m2 - c1e);
    out.matchings = {ctx.m3, n2 | n4 | n7, n3 | n5 | n7, m8, claim1_matching(ctx)};
    out.provenance_note = "claim2:shared-edge-side";
  }
  check_cover(g, out);
  return out;
}

Cover cover_two_factor(const Multigraph& g, const Circuit& c1, const Circuit& c2) {
  check_two_factor(g, c1, c2);
  const EdgeSet factor = c1.edge_set() | c2.edge_set();
  Cover out;
  if (!c1.is_odd() && !c2.is_odd()) {
    const auto [a, b] = split_even_circuits(g, factor);
    out = {{g.all_edges() - factor, a, b}, "two-factor:even-circuits"};
    check_cover(g, out);
    return out;
  }
  assume(c1.is_odd() && c2.is_odd(), "both circuits have the same parity", g);

  const Frame f = make_frame(g, c1, c2);
  if (f.c3 == f.c4) {
    const auto [a, b] = split_even_circuits(g, g.all_edges() - f.m2);
    out = {{f.m2, a, b}, "two-factor:even-complement"};
  } else if (f.c3.edge_set().intersects(f.c2e)) {
    out = from_three(f, three_or_assume(g, c1, c2, f.u1u2, f.m2, f.c3), "two-factor:via-c3");
  } else if (f.c4.edge_set().intersects(f.c1e)) {
    out = from_three(f, three_or_assume(g, c2, c1, f.u1u2, f.m2, f.c4), "two-factor:via-c4");
  }
  if (!out.matchings.empty()) {
    check_cover(g, out);
    return out;
  }

  const TwoFactorContext ctx = two_factor_context(g, c1, c2);
  const EdgeSet c5e = ctx.c5.edge_set();
  const EdgeSet sym = f.c1e ^ c5e;
  const std::vector<Circuit> pieces = circuits_of(g, sym);
  const Circuit c6 = circuit_through_vertex(g, sym, f.u1);
  const Circuit* c7 = nullptr;
  for (const Circuit& p : pieces) {
    if (!(p == c6) && p.edge_set().intersects(f.c2e)) {
      c7 = &p;
      break;
    }
  }

  if (!c7) {
    std::pair<EdgeSet, EdgeSet> n2n3;
    try {
      n2n3 = split_even_circuits(g, sym - c6.edge_set());
    } catch (const OddComponent& err) {
      assume(false, std::string("circuits off c6 are even: ") + err.what(), g);
    }
    out = claim2_or_assume(ctx, c6, f.c3, n2n3);
    out.provenance_note = "two-factor:c6:" + out.provenance_note;
    return out;
  }

  std::vector<Path> b1 = segments(*c7, c7->edge_set() - f.c1e);
  for (const Path& p : b1) {
    assume(detail::count_in(p, f.m2) == detail::count_in(p, f.m1) + 1,
           "path " + to_string(p) + " has one more M2 edge than M1 edges", g);
  }
  const EdgeSet b1e = detail::union_of(b1);
  std::vector<Path> b2 = segments(*c7, b1e);
  std::vector<Path> b3 = segments(c1, b1e);
  detail::rotate_to_front(b3, f.u1, g);

  const Contraction con = contract(g, {{"c1-on-c7", b1}, {"c7", b2}, {"c1", b3}}, EdgeSet{});
  std::vector<EdgeId> marked;
  for (std::size_t j = 0; j < b2.size(); ++j) {
    if (b2[j].edge_set().intersects(f.c2e)) marked.push_back(con.surrogate("c7", j));
  }
  TwoPmResult r;
  try {
    r = lemma_two_pm(con.aux(), con.family("c1-on-c7"), con.family("c7"), con.family("c1"),
                     EdgeSet(std::move(marked)), con.surrogate("c1", 0));
  } catch (const PreconditionViolated& err) {
    assume(false, std::string("contracted instance satisfies the two-matching hypotheses: ") +
                      err.what(),
           g);
  }
  const Circuit c8 = lift_circuit(con, r.c);

  if (r.side == TwoPmSide::ContainsM3) {
    out = from_three(f, three_or_assume(g, c1, c2, f.u1u2, f.m2, c8), "two-factor:via-c8");
    check_cover(g, out);
    return out;
  }

  const EdgeSet e3 = lift_by_parity(con, r.m4 ^ r.m5);
  const EdgeSet base = (f.c1e - e3) & f.m2;
  std::pair<EdgeSet, EdgeSet> halves;
  try {
    halves = split_even_circuits(g, e3 - c8.edge_set());
  } catch (const OddComponent& err) {
    assume(false, std::string("circuits of E3 off c8 are even: ") + err.what(), g);
  }
  const EdgeSet n8 = halves.first | base, n9 = halves.second | base;
  assume(f.c1e - (c8.edge_set() | n8 | n9) == ((f.c1e - e3) & f.m1),
         "N8 and N9 leave exactly the M1 edges of c1 off E3", g);
  assume(r.c_prime.has_value(), "contracted result carries its second circuit", g);
  const Circuit c9 = lift_circuit(con, *r.c_prime);
  out = claim2_or_assume(ctx, c8, c9, std::pair{n8, n9});
  out.provenance_note = "two-factor:c8:" + out.provenance_note;
  return out;
}

}  // namespace berge
