#include "berge/matching.hpp"

#include <algorithm>

namespace berge {

bool is_matching(const Multigraph& g, const EdgeSet& s) {
  std::vector<int> cover(g.vertex_count(), 0);
  for (EdgeId e : s) {
    if (e < 0 || e >= g.edge_count()) return false;
    if (++cover[g.edge(e).a] > 1 || ++cover[g.edge(e).b] > 1) return false;
  }
  return true;
}

bool is_perfect_matching(const Multigraph& g, const EdgeSet& s) {
  return is_matching(g, s) && static_cast<int>(s.size()) * 2 == g.vertex_count();
}

bool is_perfect_matching_of(const Multigraph& g, const EdgeSet& s,
                            std::span<const Vertex> vertices) {
  std::vector<int> cover(g.vertex_count(), -1);
  for (Vertex v : vertices) cover[v] = 0;
  for (EdgeId e : s) {
    if (e < 0 || e >= g.edge_count()) return false;
    for (Vertex x : {g.edge(e).a, g.edge(e).b}) {
      if (cover[x] != 0) return false;
      cover[x] = 1;
    }
  }
  return std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return cover[v] == 1; });
}

namespace {

class Enumerator {
 public:
  Enumerator(const Multigraph& g, const EdgeSet* allowed, std::span<const Vertex> vertices)
      : g_(g), allowed_(allowed), state_(g.vertex_count(), kInactive) {
    for (Vertex v : vertices) state_[v] = kFree;
    order_.assign(vertices.begin(), vertices.end());
    std::sort(order_.begin(), order_.end());
  }

  bool force(EdgeId e) {
    const auto [a, b] = g_.edge(e);
    if (state_[a] != kFree || state_[b] != kFree) return false;
    state_[a] = state_[b] = kTaken;
    chosen_.push_back(e);
    return true;
  }

  // Returns false iff the visitor stopped the run.
  bool run(const std::function<bool(const EdgeSet&)>& visit) { return step(0, visit); }

 private:
  static constexpr char kInactive = 0, kFree = 1, kTaken = 2;

  bool step(std::size_t from, const std::function<bool(const EdgeSet&)>& visit) {
    while (from < order_.size() && state_[order_[from]] != kFree) ++from;
    if (from == order_.size()) return visit(EdgeSet(chosen_));
    const Vertex v = order_[from];
    for (EdgeId e : g_.incident(v)) {
      if (allowed_ && !allowed_->contains(e)) continue;
      const Vertex w = g_.other_end(e, v);
      if (state_[w] != kFree) continue;
      state_[v] = state_[w] = kTaken;
      chosen_.push_back(e);
      const bool go_on = step(from + 1, visit);
      chosen_.pop_back();
      state_[v] = state_[w] = kFree;
      if (!go_on) return false;
    }
    return true;
  }

  const Multigraph& g_;
  const EdgeSet* allowed_;
  std::vector<char> state_;
  std::vector<Vertex> order_;
  std::vector<EdgeId> chosen_;
};

std::vector<Vertex> all_vertices(const Multigraph& g) {
  std::vector<Vertex> v(g.vertex_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i) v[i] = i;
  return v;
}

}  // namespace

bool for_each_perfect_matching(const Multigraph& g,
                               const std::function<bool(const EdgeSet&)>& visit) {
  auto vertices = all_vertices(g);
  Enumerator en(g, nullptr, vertices);
  return en.run(visit);
}

bool for_each_perfect_matching_of(const Multigraph& g, const EdgeSet& allowed,
                                  std::span<const Vertex> vertices,
                                  const std::function<bool(const EdgeSet&)>& visit) {
  Enumerator en(g, &allowed, vertices);
  return en.run(visit);
}

std::optional<EdgeSet> find_perfect_matching(const Multigraph& g, const EdgeSet& allowed,
                                             std::span<const Vertex> vertices,
                                             const EdgeSet& forced) {
  Enumerator en(g, &allowed, vertices);
  for (EdgeId e : forced) {
    if (!allowed.contains(e) || !en.force(e)) return std::nullopt;
  }
  std::optional<EdgeSet> found;
  en.run([&](const EdgeSet& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<EdgeSet> enumerate_pms(const Multigraph& g) {
  std::vector<EdgeSet> all;
  for_each_perfect_matching(g, [&](const EdgeSet& m) {
    all.push_back(m);
    return true;
  });
  return all;
}

EdgeSet pm_through_edge(const Multigraph& g, EdgeId e) {
  auto vertices = all_vertices(g);
  auto found = find_perfect_matching(g, g.all_edges(), vertices, EdgeSet{e});
  if (!found) throw NoMatching("no perfect matching contains edge " + std::to_string(e));
  return *found;
}

std::optional<std::array<EdgeSet, 3>> three_edge_coloring(const Multigraph& g) {
  assert_cubic(g);
  // A cubic graph is 3-edge-colorable iff some perfect matching leaves a
  // 2-factor whose circuits are all even.
  const EdgeSet all = g.all_edges();
  std::optional<std::array<EdgeSet, 3>> result;
  for_each_perfect_matching(g, [&](const EdgeSet& m) {
    const EdgeSet rest = all - m;
    for (const Circuit& c : circuits_of(g, rest)) {
      if (c.is_odd()) return true;
    }
    auto [x, y] = split_even_circuits(g, rest);
    result = std::array<EdgeSet, 3>{m, std::move(x), std::move(y)};
    return false;
  });
  return result;
}

std::pair<EdgeSet, EdgeSet> split_even_circuits(const Multigraph& g, const EdgeSet& s) {
  std::vector<Circuit> circuits;
  try {
    circuits = circuits_of(g, s);
  } catch (const NotTwoRegular& err) {
    throw OddComponent("component at vertex " + std::to_string(err.vertex) + " is not a circuit");
  }
  std::vector<EdgeId> first, second;
  for (const Circuit& c : circuits) {
    if (c.is_odd())
      throw OddComponent("odd circuit " + to_string(c));
    for (std::size_t i = 0; i < c.length(); ++i) (i % 2 == 0 ? first : second).push_back(c.edges[i]);
  }
  return {EdgeSet(std::move(first)), EdgeSet(std::move(second))};
}

std::vector<Path> maximal_alternating_paths(const Multigraph& g, const EdgeSet& a,
                                            const EdgeSet& b, const EdgeSet& forbidden) {
  if (a.intersects(b)) throw PreconditionViolated("alternating path sets must be disjoint");
  if (!is_matching(g, a) || !is_matching(g, b))
    throw PreconditionViolated("alternating path sets must be matchings");
  const EdgeSet s = (a | b) - forbidden;
  std::vector<std::vector<EdgeId>> inc(g.vertex_count());
  for (EdgeId e : s) {
    inc[g.edge(e).a].push_back(e);
    inc[g.edge(e).b].push_back(e);
  }
  std::vector<bool> used_edge(g.edge_count(), false);
  std::vector<Path> paths;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (inc[v].size() != 1 || used_edge[inc[v][0]]) continue;
    Path p{{v}, {}};
    Vertex at = v;
    EdgeId e = inc[v][0];
    while (true) {
      used_edge[e] = true;
      at = g.other_end(e, at);
      p.edges.push_back(e);
      p.vertices.push_back(at);
      if (inc[at].size() == 1) break;
      e = inc[at][0] == e ? inc[at][1] : inc[at][0];
    }
    paths.push_back(canonical(std::move(p)));
  }
  for (EdgeId e : s) {
    if (!used_edge[e])
      throw PreconditionViolated("alternating component through edge " + std::to_string(e) +
                                 " is a circuit, not a path");
  }
  std::sort(paths.begin(), paths.end(), [](const Path& x, const Path& y) {
    return std::pair(x.front(), x.edges.front()) < std::pair(y.front(), y.edges.front());
  });
  return paths;
}

EdgeSet pm_of_circuit_minus_vertex(const Circuit& c, Vertex u) {
  if (!c.is_odd()) throw EvenCircuit();
  const std::size_t k = c.length();
  const auto it = std::find(c.vertices.begin(), c.vertices.end(), u);
  if (it == c.vertices.end()) throw VertexNotOnCircuit(u);
  const std::size_t i = static_cast<std::size_t>(it - c.vertices.begin());
  std::vector<EdgeId> m;
  for (std::size_t step = 1; step + 1 < k; step += 2) m.push_back(c.edges[(i + step) % k]);
  return EdgeSet(std::move(m));
}

EdgeSet pm_of_path(const Path& p) {
  if (p.length() % 2 == 0)
    throw OddComponent("path " + to_string(p) + " has an odd number of vertices");
  std::vector<EdgeId> m;
  for (std::size_t i = 0; i < p.length(); i += 2) m.push_back(p.edges[i]);
  return EdgeSet(std::move(m));
}

}  // namespace berge
