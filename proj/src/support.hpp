#pragma once

// Helpers shared by the construction sources. Not installed.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "berge/graph.hpp"
#include "berge/io.hpp"

namespace berge::detail {

inline void require(bool ok, const std::string& clause) {
  if (!ok) throw PreconditionViolated(clause);
}

// Failing intermediate claims carry the instance for replay.
inline void assume(bool ok, const std::string& claim, const Multigraph& g) {
  if (!ok) throw AssumptionViolated(claim + "\ninstance:\n" + emit_edgelist(g));
}

inline bool is_circuit_of(const Multigraph& g, const Circuit& c) {
  const std::size_t k = c.length();
  if (k < 2 || c.vertices.size() != k) return false;
  std::vector<Vertex> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::vector<EdgeId> edges = c.edges;
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeId e = c.edges[i];
    if (e < 0 || e >= g.edge_count()) return false;
    const Vertex x = c.vertices[i], y = c.vertices[(i + 1) % k];
    const Edge& ed = g.edge(e);
    if (!((ed.a == x && ed.b == y) || (ed.a == y && ed.b == x))) return false;
  }
  return true;
}

inline std::size_t count_in(const Path& p, const EdgeSet& s) {
  return static_cast<std::size_t>(
      std::count_if(p.edges.begin(), p.edges.end(), [&](EdgeId e) { return s.contains(e); }));
}

inline EdgeSet union_of(const std::vector<Path>& paths) {
  std::vector<EdgeId> ids;
  for (const Path& p : paths) ids.insert(ids.end(), p.edges.begin(), p.edges.end());
  return EdgeSet(std::move(ids));
}

// Moves the first path containing v to index 0, keeping the others in order.
inline void rotate_to_front(std::vector<Path>& paths, Vertex v, const Multigraph& g) {
  auto it = std::find_if(paths.begin(), paths.end(),
                         [&](const Path& p) { return p.contains_vertex(v); });
  assume(it != paths.end(), "no path contains vertex " + std::to_string(v), g);
  std::rotate(paths.begin(), it, it + 1);
}

inline std::vector<Vertex> vertices_off(const Circuit& base, const std::vector<Vertex>& removed) {
  std::vector<Vertex> out;
  for (Vertex v : base.vertices) {
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vertex> vertices_off(const Circuit& base, const Circuit& removed) {
  return vertices_off(base, removed.vertices);
}

// Walks c from `start` leaving by `first`, and stops at the first later
// vertex satisfying `stop`. The whole circuit is walked at most once.
inline Path walk_until(const Circuit& c, Vertex start, EdgeId first,
                       const std::function<bool(Vertex)>& stop) {
  const std::size_t k = c.length();
  const auto at = static_cast<std::size_t>(
      std::find(c.vertices.begin(), c.vertices.end(), start) - c.vertices.begin());
  if (at == k) throw std::invalid_argument("start vertex not on circuit");
  bool forward;
  if (c.edges[at] == first) {
    forward = true;
  } else if (c.edges[(at + k - 1) % k] == first) {
    forward = false;
  } else {
    throw std::invalid_argument("first edge is not incident to start on the circuit");
  }
  Path p{{start}, {}};
  std::size_t i = at;
  for (std::size_t step = 0; step < k; ++step) {
    EdgeId e;
    if (forward) {
      e = c.edges[i];
      i = (i + 1) % k;
    } else {
      i = (i + k - 1) % k;
      e = c.edges[i];
    }
    p.edges.push_back(e);
    p.vertices.push_back(c.vertices[i]);
    if (stop(c.vertices[i])) return p;
  }
  throw std::invalid_argument("walk returned to its start without stopping");
}

// Subpath of p between two of its vertices, oriented from `from` to `to`.
inline Path subpath(const Path& p, Vertex from, Vertex to) {
  auto i = static_cast<std::size_t>(std::find(p.vertices.begin(), p.vertices.end(), from) -
                                    p.vertices.begin());
  auto j = static_cast<std::size_t>(std::find(p.vertices.begin(), p.vertices.end(), to) -
                                    p.vertices.begin());
  if (i == p.vertices.size() || j == p.vertices.size())
    throw std::invalid_argument("subpath ends not on path");
  Path r;
  if (i <= j) {
    r.vertices.assign(p.vertices.begin() + i, p.vertices.begin() + j + 1);
    r.edges.assign(p.edges.begin() + i, p.edges.begin() + j);
  } else {
    r = subpath(p, to, from).reversed();
  }
  return r;
}

}  // namespace berge::detail
