#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "berge/berge.hpp"
#include "berge/generators.hpp"
#include "berge/matching.hpp"
#include "berge/oracle.hpp"
#include "testkit.hpp"

using namespace berge;

namespace {

bool valid_cover(const Multigraph& g, const Cover& c) {
  std::vector<bool> hit(g.edge_count(), false);
  for (const EdgeSet& m : c.matchings) {
    if (!testkit::covers_once(g, m)) return false;
    for (EdgeId e : m) hit[e] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// Odd circuit lengths are drawn from 3, 5, ..., 2 * spread + 1.
std::vector<testkit::TwoCircuitGraph> odd_two_circuit_graphs(int count, unsigned seed,
                                                             int spread) {
  std::mt19937 rng(seed);
  std::vector<testkit::TwoCircuitGraph> out;
  while (static_cast<int>(out.size()) < count) {
    const int a = 3 + 2 * static_cast<int>(rng() % spread);
    const int b = 3 + 2 * static_cast<int>(rng() % spread);
    if (auto t = testkit::random_two_circuit(a, b, rng)) out.push_back(std::move(*t));
  }
  return out;
}

}  // namespace

TEST_CASE("two-matching lemma on theta and K4") {
  const Multigraph t = theta_graph();
  const TwoPmResult r = lemma_two_pm(t, EdgeSet{0}, EdgeSet{1}, EdgeSet{2}, EdgeSet{1}, 2);
  CHECK(r.m4 == EdgeSet{1});
  CHECK(r.m5 == EdgeSet{2});
  CHECK(r.side == TwoPmSide::ContainsM3);
  CHECK(r.c.edge_set() == EdgeSet{1, 2});
  CHECK_FALSE(two_pm_violation(t, EdgeSet{0}, EdgeSet{1}, EdgeSet{2}, EdgeSet{1}, 2, r));

  // K4 perfect matchings {0,5} {1,4} {2,3}; any two form a hamiltonian circuit.
  const Multigraph k4 = complete_k4();
  const EdgeSet m1{0, 5}, m2{1, 4}, m3{2, 3};
  const testkit::TwoPmInstance inst{k4, m1, m2, m3, EdgeSet{1, 4}, 2};
  const TwoPmResult rk = lemma_two_pm(k4, m1, m2, m3, inst.f, inst.alpha);
  CHECK_FALSE(testkit::two_pm_failure(inst, rk));
  // m2 | m3 is a hamiltonian circuit, so f always lies on it.
  for (const EdgeSet& f : {EdgeSet{1}, EdgeSet{4}, EdgeSet{1, 4}}) {
    for (EdgeId alpha : {2, 3}) {
      const TwoPmResult e = lemma_two_pm(k4, m1, m2, m3, f, alpha);
      CHECK(e.m4 == m2);
      CHECK(e.m5 == m3);
      CHECK(e.side == TwoPmSide::ContainsM3);
    }
  }

  CHECK_THROWS_AS(lemma_two_pm(k4, m1, m2, m3, EdgeSet{}, 2), PreconditionViolated);
  CHECK_THROWS_AS(lemma_two_pm(k4, m1, m2, m3, EdgeSet{1}, 0), PreconditionViolated);
  CHECK_THROWS_AS(lemma_two_pm(k4, m1, m2, m3, EdgeSet{2}, 3), PreconditionViolated);
  CHECK_THROWS_AS(lemma_two_pm(k4, m1, m1, m3, EdgeSet{0}, 2), PreconditionViolated);
}

TEST_CASE("two-matching lemma on random instances") {
  std::mt19937 rng(59);
  std::map<TwoPmSide, int> sides;
  for (int round = 0; round < 400; ++round) {
    const int n = 2 + 2 * static_cast<int>(rng() % 8);
    const auto t = testkit::random_two_pm(n, rng);
    const TwoPmResult r = lemma_two_pm(t.g, t.m1, t.m2, t.m3, t.f, t.alpha);
    const auto failure = testkit::two_pm_failure(t, r);
    CHECK_MESSAGE(!failure, *failure);
    CHECK_FALSE(two_pm_violation(t.g, t.m1, t.m2, t.m3, t.f, t.alpha, r));
    ++sides[r.side];
  }
  CHECK(sides[TwoPmSide::ContainsM3] > 0);
  CHECK(sides[TwoPmSide::ContainsM1] > 0);
}

TEST_CASE("two_pm_violation rejects doctored results") {
  std::mt19937 rng(61);
  for (int round = 0; round < 50; ++round) {
    const auto t = testkit::random_two_pm(10, rng);
    TwoPmResult r = lemma_two_pm(t.g, t.m1, t.m2, t.m3, t.f, t.alpha);
    TwoPmResult swapped = r;
    swapped.m4 = t.m2;
    swapped.m5 = t.m2;
    CHECK(two_pm_violation(t.g, t.m1, t.m2, t.m3, t.f, t.alpha, swapped).has_value());
    TwoPmResult flipped = r;
    flipped.side = r.side == TwoPmSide::ContainsM3 ? TwoPmSide::ContainsM1 : TwoPmSide::ContainsM3;
    if (!(r.m4 & r.m5).empty()) {
      CHECK(two_pm_violation(t.g, t.m1, t.m2, t.m3, t.f, t.alpha, flipped).has_value());
    }
  }
}

TEST_CASE("three-matching lemma") {
  int applied = 0;
  std::map<std::string, int> branches;
  for (const auto& t : odd_two_circuit_graphs(150, 67, 5)) {
    const testkit::Frame f = testkit::two_factor_frame(t.g, t.c1, t.c2);
    REQUIRE(testkit::covers_once(t.g, f.m));
    const EdgeSet target = (t.c1.edge_set() | t.c2.edge_set()) - f.m;

    // The circuit itself avoids c2 entirely.
    CHECK_THROWS_AS(lemma_three_pm(t.g, t.c1, t.c2, f.u1u2, f.m, t.c1), PreconditionViolated);

    for (const EdgeSet& pm : testkit::all_pms_by_subsets(t.g)) {
      const Circuit c = circuit_through_vertex(t.g, t.g.all_edges() - pm, f.u1);
      ThreePmResult r;
      try {
        r = lemma_three_pm(t.g, t.c1, t.c2, f.u1u2, f.m, c);
      } catch (const PreconditionViolated&) {
        continue;
      }
      ++applied;
      ++branches[r.branch];
      EdgeSet covered;
      for (const EdgeSet& m : r.matchings) {
        CHECK(testkit::covers_once(t.g, m));
        covered = covered | m;
      }
      CHECK(target.is_subset_of(covered));
    }
  }
  CHECK(applied >= 50);
  CHECK(branches.size() >= 2);
}

TEST_CASE("three-matching lemma on Petersen") {
  const Multigraph p = petersen();
  const auto factor = find_two_factor_two_circuits(p);
  REQUIRE(factor.has_value());
  const testkit::Frame f = testkit::two_factor_frame(p, factor->first, factor->second);
  int applied = 0;
  for (const EdgeSet& pm : enumerate_pms(p)) {
    const Circuit c = circuit_through_vertex(p, p.all_edges() - pm, f.u1);
    try {
      const ThreePmResult r = lemma_three_pm(p, factor->first, factor->second, f.u1u2, f.m, c);
      for (const EdgeSet& m : r.matchings) CHECK(testkit::covers_once(p, m));
      ++applied;
    } catch (const PreconditionViolated&) {
    }
  }
  CHECK(applied > 0);
}

TEST_CASE("three-matching lemma on Petersen outer and inner circuits") {
  const Multigraph p = petersen();
  const Circuit outer = circuits_of(p, EdgeSet{0, 1, 2, 3, 4})[0];
  const Circuit inner = circuits_of(p, EdgeSet{10, 11, 12, 13, 14})[0];
  const testkit::Frame f = testkit::two_factor_frame(p, outer, inner);
  CHECK(f.u1u2 == 5);
  const Circuit c3 = circuit_through_vertex(p, p.all_edges() - f.m, f.u1);
  const ThreePmResult r = lemma_three_pm(p, outer, inner, f.u1u2, f.m, c3);
  EdgeSet covered;
  const auto all = testkit::all_pms_by_subsets(p);
  for (const EdgeSet& m : r.matchings) {
    CHECK(std::find(all.begin(), all.end(), m) != all.end());
    covered = covered | m;
  }
  CHECK(((outer.edge_set() | inner.edge_set()) - f.m).is_subset_of(covered));
}

TEST_CASE("near-hamiltonian covers") {
  const Multigraph p = petersen();
  for (Vertex v = 0; v < 10; ++v) {
    const Cover c = cover_near_hamiltonian(p, v);
    CHECK(valid_cover(p, c));
    CHECK(c.order() <= 5);
    CHECK(c.order() >= 5);
  }
  const Cover k4 = cover_near_hamiltonian(complete_k4(), 0);
  CHECK(valid_cover(complete_k4(), k4));
  CHECK(k4.order() == 3);

  for (int n : {5, 7}) {
    const Multigraph j = flower_snark(n);
    int used = 0;
    for (Vertex v = 0; v < j.vertex_count(); ++v) {
      if (!hamiltonian_circuit(j, v)) continue;
      const Cover c = cover_near_hamiltonian(j, v);
      CHECK(valid_cover(j, c));
      CHECK(c.order() <= 5);
      ++used;
    }
    CHECK(used > 0);
  }

  CHECK_THROWS_AS(cover_near_hamiltonian(p, 10), PreconditionViolated);
  // The outer 5-circuit is not a hamiltonian circuit of Petersen - 0.
  CHECK_THROWS_AS(cover_near_hamiltonian(p, 0, circuits_of(p, EdgeSet{0, 1, 2, 3, 4})[0]),
                  PreconditionViolated);
}

TEST_CASE("near-hamiltonian covers of random graphs") {
  std::mt19937 rng(71);
  std::map<std::string, int> notes;
  for (int round = 0; round < 150; ++round) {
    const int n = 4 + 2 * static_cast<int>(rng() % 6);
    const Multigraph g = testkit::random_bridgeless_cubic(n, rng, true);
    const Vertex v = static_cast<Vertex>(rng() % n);
    if (!hamiltonian_circuit(g, v)) continue;
    const Cover c = cover_near_hamiltonian(g, v);
    CHECK(valid_cover(g, c));
    CHECK(c.order() <= 5);
    ++notes[c.provenance_note];
  }
  CHECK(notes.size() >= 2);
}

TEST_CASE("two-factor covers") {
  const Multigraph p = petersen();
  const auto pf = find_two_factor_two_circuits(p);
  REQUIRE(pf.has_value());
  const Cover cp = cover_two_factor(p, pf->first, pf->second);
  CHECK(valid_cover(p, cp));
  CHECK(cp.order() == 5);

  const Multigraph pr = prism();
  const auto prf = find_two_factor_two_circuits(pr);
  REQUIRE(prf.has_value());
  const Cover cpr = cover_two_factor(pr, prf->first, prf->second);
  CHECK(valid_cover(pr, cpr));
  CHECK(cpr.order() == 3);

  const Multigraph gp = generalized_petersen(9, 2);
  const auto gf = find_two_factor_two_circuits(gp);
  REQUIRE(gf.has_value());
  const Cover cg = cover_two_factor(gp, gf->first, gf->second);
  CHECK(valid_cover(gp, cg));
  CHECK(cg.order() <= 5);

  CHECK_THROWS_AS(cover_two_factor(p, pf->first, pf->first), PreconditionViolated);
}

TEST_CASE("two-factor covers of random two-circuit graphs") {
  std::map<std::string, int> notes;
  for (const auto& t : odd_two_circuit_graphs(3000, 73, 9)) {
    const Cover c = cover_two_factor(t.g, t.c1, t.c2);
    CHECK(valid_cover(t.g, c));
    CHECK(c.order() <= 5);
    ++notes[c.provenance_note];
  }
  auto seen = [&](const std::string& part) {
    return std::any_of(notes.begin(), notes.end(),
                       [&](const auto& kv) { return kv.first.find(part) != std::string::npos; });
  };
  for (const auto& [note, count] : notes) MESSAGE(note << ": " << count);
  CHECK(seen("claim2:contracted-c-side"));
  CHECK(seen("claim2:shared-edge-side"));
  CHECK(seen("via-c3"));
  CHECK(seen("via-c4"));
  CHECK(seen("via-c8"));
}

TEST_CASE("two-factor covers for every two-circuit 2-factor of GP(n,2)") {
  for (int n : {9, 11, 13}) {
    const Multigraph g = generalized_petersen(n, 2);
    int factors = 0;
    for (const EdgeSet& m : enumerate_pms(g)) {
      const auto cs = circuits_of(g, g.all_edges() - m);
      if (cs.size() != 2) continue;
      for (int swap = 0; swap < 2; ++swap) {
        const Cover c = cover_two_factor(g, cs[swap], cs[1 - swap]);
        CHECK(valid_cover(g, c));
        CHECK(c.order() <= 5);
        ++factors;
      }
    }
    CHECK(factors > 0);
  }
}

TEST_CASE("claim1 and claim2 preconditions") {
  const Multigraph pr = prism();
  const auto prf = find_two_factor_two_circuits(pr);
  REQUIRE(prf.has_value());
  CHECK_THROWS_AS(two_factor_context(pr, prf->first, prf->second), PreconditionViolated);

  int contexts = 0, empty_required = 0;
  for (const auto& t : odd_two_circuit_graphs(400, 79, 9)) {
    TwoFactorContext ctx;
    try {
      ctx = two_factor_context(t.g, t.c1, t.c2);
    } catch (const PreconditionViolated&) {
      continue;
    }
    ++contexts;
    CHECK(ctx.c3 != ctx.c4);
    CHECK_FALSE(ctx.c3.edge_set().intersects(t.c2.edge_set()));
    CHECK_FALSE(ctx.c4.edge_set().intersects(t.c1.edge_set()));
    CHECK(ctx.q.contains_vertex(ctx.u1));

    const EdgeSet n1 = claim1_matching(ctx);
    CHECK(testkit::covers_once(t.g, n1));
    const EdgeSet required =
        (ctx.m1 & t.c1.edge_set()) - (ctx.q.edge_set() | ctx.c5.edge_set());
    CHECK(required.is_subset_of(n1));
    if (required.empty()) {
      ++empty_required;
      CHECK(n1 == enumerate_pms(t.g).front());
    }

    // c1 itself shares no edge with c2, which the reduction needs.
    CHECK_THROWS_AS(claim2_cover(ctx, t.c1, ctx.c3), PreconditionViolated);
  }
  CHECK(contexts > 0);
  CHECK(empty_required > 0);
}

TEST_CASE("cover dispatcher") {
  const Cover k4 = cover(complete_k4());
  CHECK(k4.provenance_note == "three-edge-colorable");
  CHECK(k4.order() == 3);

  const Cover p = cover(petersen());
  CHECK(valid_cover(petersen(), p));
  CHECK(p.order() == 5);

  // Two copies of K4 with one edge subdivided, joined at the subdivision
  // vertices by a bridge.
  const Multigraph bridged(10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4},
                                {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {5, 9}, {6, 9},
                                {4, 9}});
  CHECK_THROWS_AS(cover(bridged), PreconditionViolated);
  const Multigraph two_k4(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                              {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  CHECK_THROWS_AS(cover(two_k4), PreconditionViolated);
  CHECK_THROWS_AS(cover(Multigraph(2, {{0, 1}})), PreconditionViolated);

  std::mt19937 rng(83);
  for (int round = 0; round < 100; ++round) {
    const int n = 4 + 2 * static_cast<int>(rng() % 5);
    const Multigraph g = testkit::random_bridgeless_cubic(n, rng, true);
    const Cover c = cover(g);
    CHECK(valid_cover(g, c));
    CHECK(c.order() <= 5);
  }
}
