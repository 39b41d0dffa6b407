#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "berge/contraction.hpp"
#include "berge/generators.hpp"
#include "berge/matching.hpp"
#include "testkit.hpp"

using namespace berge;

namespace {

Path edge_path(const Multigraph& g, EdgeId e) {
  return Path{{g.edge(e).a, g.edge(e).b}, {e}};
}

// K3,3 with parts {0,1,2} and {3,4,5}; edge id 3*i + j joins i and 3+j.
Multigraph k33() {
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) edges.push_back({i, 3 + j});
  }
  return Multigraph(6, edges);
}

// K4 with edge 0-1 replaced by 0-4, a double edge 4-5, and 5-1.
//   ids: 0:0-2 1:0-3 2:1-2 3:1-3 4:2-3 5:0-4 6:4-5 7:4-5 8:1-5
Multigraph stretched_k4() {
  return Multigraph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {4, 5}, {1, 5}});
}

}  // namespace

TEST_CASE("contracting only kept edges is the identity") {
  const Multigraph t = theta_graph();
  const Contraction c = contract(t, {}, t.all_edges());
  CHECK(c.aux() == t);
  for (EdgeId e = 0; e < 3; ++e) {
    CHECK_FALSE(c.is_surrogate(e));
    CHECK(c.aux_of_kept(e) == e);
    CHECK(c.parent_of_kept(e) == e);
  }
  CHECK_THROWS_AS(c.provenance(0), NotSurrogate);
  CHECK(lift_edges(c, EdgeSet{1}) == EdgeSet{1});

  const Multigraph k4 = complete_k4();
  const Contraction id = contract(k4, {}, k4.all_edges());
  const Circuit tri = circuits_of(k4, EdgeSet{0, 1, 3})[0];
  CHECK(project_circuit(id, tri) == tri);
  CHECK(lift_circuit(id, tri) == tri);
}

TEST_CASE("length-one paths become surrogates of themselves") {
  const Multigraph g = k33();
  const EdgeSet kept{0, 4, 8};
  // Paths of one family are vertex disjoint, so split the rest into two
  // perfect matchings.
  std::vector<Path> a, b;
  for (EdgeId e : {1, 5, 6}) a.push_back(edge_path(g, e));
  for (EdgeId e : {2, 3, 7}) b.push_back(edge_path(g, e));
  const Contraction c = contract(g, {{"a", a}, {"b", b}}, kept);

  REQUIRE(c.aux().vertex_count() == 6);
  REQUIRE(c.aux().edge_count() == 9);
  for (EdgeId e = 0; e < 3; ++e) CHECK_FALSE(c.is_surrogate(e));
  for (std::size_t i = 0; i < 3; ++i) {
    const EdgeId s = c.surrogate("b", i);
    CHECK(s == static_cast<EdgeId>(6 + i));
    CHECK(c.is_surrogate(s));
    CHECK(c.provenance(s) == b[i]);
    CHECK(c.surrogate_origin(s) == std::pair<std::string, std::size_t>{"b", i});
  }
  CHECK(c.family("a") == EdgeSet{3, 4, 5});
  CHECK(c.kept_to_aux(kept) == EdgeSet{0, 1, 2});
  CHECK_THROWS_AS(c.surrogate("none", 0), std::out_of_range);
  CHECK_THROWS_AS(c.surrogate("a", 3), std::out_of_range);
  CHECK_THROWS_AS(c.aux_of_kept(1), std::out_of_range);

  for (const EdgeSet& m : enumerate_pms(c.aux())) {
    CHECK(testkit::covers_once(g, lift_edges(c, m)));
  }
}

TEST_CASE("a long path collapses to one surrogate") {
  const Multigraph g = stretched_k4();
  const Path p{{0, 4, 5, 1}, {5, 6, 8}};
  const Contraction c = contract(g, {{"p", {p}}}, EdgeSet{0, 1, 2, 3, 4});
  REQUIRE(c.aux().vertex_count() == 4);
  CHECK_FALSE(c.aux_vertex(4).has_value());
  CHECK_FALSE(c.aux_vertex(5).has_value());
  const EdgeId s = c.surrogate("p", 0);
  CHECK(s == 5);
  CHECK(c.aux().edge(s).a == 0);
  CHECK(c.aux().edge(s).b == 1);
  for (Vertex v = 0; v < 4; ++v) CHECK(c.aux().degree(v) == 3);

  CHECK(lift_by_parity(c, EdgeSet{s}) == EdgeSet{5, 6, 8});
  CHECK_THROWS_AS(lift_by_parity(c, EdgeSet{0}), NotSurrogate);
  CHECK(lift_edges(c, EdgeSet{4, s}) == EdgeSet{4, 5, 6, 8});

  // Triangle 0-1-2 of the aux graph lifts to the 5-circuit 0-4-5-1-2.
  const Circuit tri = circuits_of(c.aux(), EdgeSet{0, 2, s})[0];
  const Circuit lifted = lift_circuit(c, tri);
  CHECK(lifted.length() == 5);
  CHECK(lifted.edge_set() == EdgeSet{0, 2, 5, 6, 8});
  CHECK(lifted == canonical(lifted));

  // The kept triangle 0-2-3 projects onto aux edges with the same ids.
  const Circuit kept_tri = circuits_of(g, EdgeSet{0, 1, 4})[0];
  CHECK(project_circuit(c, kept_tri).edge_set() == c.kept_to_aux(EdgeSet{0, 1, 4}));
  CHECK(lift_circuit(c, project_circuit(c, kept_tri)) == kept_tri);
  CHECK_THROWS(project_circuit(c, circuits_of(g, EdgeSet{6, 7})[0]));

  // Every even circuit of the aux graph lifts to an even circuit: the path
  // has odd length, like the edge it replaces.
  const auto pms = enumerate_pms(c.aux());
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (std::size_t j = i + 1; j < pms.size(); ++j) {
      for (const Circuit& ac : circuits_of(c.aux(), pms[i] ^ pms[j])) {
        CHECK(lift_circuit(c, ac).length() % 2 == 0);
      }
    }
  }
}

TEST_CASE("two surrogates with shared ends lift to one circuit") {
  // K4: paths 0-2-1 and 0-3-1 in separate families plus the kept edge 0-1
  // give a theta on {0, 1}.
  const Multigraph k4 = complete_k4();
  const Path a{{0, 2, 1}, {1, 3}};
  const Path b{{0, 3, 1}, {2, 4}};
  const Contraction c = contract(k4, {{"a", {a}}, {"b", {b}}}, EdgeSet{0});
  CHECK(c.aux() == theta_graph());
  const Circuit two = circuits_of(c.aux(), EdgeSet{1, 2})[0];
  const Circuit lifted = lift_circuit(c, two);
  CHECK(lifted.vertices == std::vector<Vertex>{0, 2, 1, 3});
  CHECK(lifted.edge_set() == EdgeSet{1, 2, 3, 4});
  CHECK(lift_by_parity(c, EdgeSet{}).empty());
}

TEST_CASE("contract rejects malformed input") {
  const Multigraph g = k33();
  // 0-3-1 and 1-4-2 share vertex 1.
  const Path a{{0, 3, 1}, {0, 3}};
  const Path b{{1, 4, 2}, {4, 7}};
  CHECK_THROWS_AS(contract(g, {{"f", {a, b}}}, EdgeSet{}), AssumptionViolated);
  // Edge 1 joins 0 and 4, not 0 and 3.
  CHECK_THROWS_AS(contract(g, {{"f", {Path{{0, 3}, {1}}}}}, EdgeSet{}), AssumptionViolated);

  // Contracting one outer segment of Petersen leaves its interior vertex on
  // a kept spoke with degree one.
  const Multigraph p = petersen();
  const Circuit outer = circuits_of(p, EdgeSet{0, 1, 2, 3, 4})[0];
  const auto parts = segments(outer, EdgeSet{0, 2});
  REQUIRE(parts.size() == 2);
  const Path& longer = parts[0].length() > parts[1].length() ? parts[0] : parts[1];
  CHECK_THROWS_AS(contract(p, {{"outer", {longer}}}, p.all_edges() - outer.edge_set()),
                  NotCubicAux);
}

TEST_CASE("single-edge families reproduce random cubic graphs") {
  std::mt19937 rng(41);
  for (int round = 0; round < 40; ++round) {
    const auto t = testkit::random_two_pm(8 + 2 * static_cast<int>(rng() % 4), rng);
    const Multigraph& g = t.g;
    std::vector<Path> p2, p3;
    std::map<EdgeId, EdgeId> surrogate_of;
    for (EdgeId e : t.m2) p2.push_back(edge_path(g, e));
    for (EdgeId e : t.m3) p3.push_back(edge_path(g, e));
    const Contraction c = contract(g, {{"m2", p2}, {"m3", p3}}, t.m1);
    for (std::size_t i = 0; i < p2.size(); ++i) surrogate_of[p2[i].edges[0]] = c.surrogate("m2", i);
    for (std::size_t i = 0; i < p3.size(); ++i) surrogate_of[p3[i].edges[0]] = c.surrogate("m3", i);
    CHECK(c.aux().edge_count() == g.edge_count());
    CHECK(lift_edges(c, c.aux().all_edges()) == g.all_edges());
    CHECK(lift_by_parity(c, c.family("m2")) == t.m2);
    for (const EdgeSet& m : enumerate_pms(c.aux())) {
      CHECK(is_perfect_matching(g, lift_edges(c, m)));
    }
    const Circuit h = circuits_of(g, t.m1 | t.m2)[0];
    std::vector<EdgeId> aux_h;
    for (EdgeId e : h.edges) {
      aux_h.push_back(t.m1.contains(e) ? c.aux_of_kept(e) : surrogate_of.at(e));
    }
    const Circuit ah = circuits_of(c.aux(), EdgeSet(aux_h))[0];
    CHECK(lift_circuit(c, ah) == h);
  }
}
