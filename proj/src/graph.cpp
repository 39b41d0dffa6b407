#include "berge/graph.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace berge {

EdgeSet::EdgeSet(std::initializer_list<EdgeId> ids) : EdgeSet(std::vector<EdgeId>(ids)) {}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

void EdgeSet::insert(EdgeId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it == ids_.end() || *it != e) ids_.insert(it, e);
}

void EdgeSet::erase(EdgeId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it != ids_.end() && *it == e) ids_.erase(it);
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

EdgeSet operator|(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
  return r;
}

EdgeSet operator&(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
  return r;
}

EdgeSet operator-(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
  return r;
}

EdgeSet operator^(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(r.ids_));
  return r;
}

EdgeSet sym_diff(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

std::string to_string(const EdgeSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (EdgeId e : s) {
    if (!first) out << ' ';
    out << e;
    first = false;
  }
  out << '}';
  return out.str();
}

Multigraph::Multigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), incidence_(n < 0 ? 0 : n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (edges_[e].b < edges_[e].a) std::swap(edges_[e].a, edges_[e].b);
    const auto [a, b] = edges_[e];
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint out of range");
    if (a == b) throw std::invalid_argument("edge " + std::to_string(e) + " is a loop");
    incidence_[a].push_back(e);
    incidence_[b].push_back(e);
  }
}

Vertex Multigraph::other_end(EdgeId e, Vertex v) const {
  const Edge& ed = edges_.at(e);
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  throw std::invalid_argument("vertex " + std::to_string(v) + " is not an end of edge " +
                              std::to_string(e));
}

bool Multigraph::has_end(EdgeId e, Vertex v) const {
  const Edge& ed = edges_.at(e);
  return ed.a == v || ed.b == v;
}

EdgeSet Multigraph::all_edges() const {
  std::vector<EdgeId> ids(edges_.size());
  for (EdgeId e = 0; e < edge_count(); ++e) ids[e] = e;
  return EdgeSet(std::move(ids));
}

bool operator==(const Multigraph& x, const Multigraph& y) {
  if (x.n_ != y.n_ || x.edges_.size() != y.edges_.size()) return false;
  for (std::size_t i = 0; i < x.edges_.size(); ++i) {
    if (x.edges_[i].a != y.edges_[i].a || x.edges_[i].b != y.edges_[i].b) return false;
  }
  return true;
}

bool Circuit::contains_vertex(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Circuit::contains_edge(EdgeId e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

bool Path::contains_vertex(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Path::contains_edge(EdgeId e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

Path Path::reversed() const {
  Path r{{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
  return r;
}

Circuit canonical(Circuit c) {
  const std::size_t k = c.length();
  if (k == 0) return c;
  const auto start = static_cast<std::size_t>(
      std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());
  const EdgeId forward = c.edges[start];
  const EdgeId backward = c.edges[(start + k - 1) % k];
  Circuit r;
  r.vertices.reserve(k);
  r.edges.reserve(k);
  if (forward <= backward) {
    for (std::size_t i = 0; i < k; ++i) {
      r.vertices.push_back(c.vertices[(start + i) % k]);
      r.edges.push_back(c.edges[(start + i) % k]);
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      r.vertices.push_back(c.vertices[(start + k - i) % k]);
      r.edges.push_back(c.edges[(start + 2 * k - i - 1) % k]);
    }
  }
  return r;
}

Path canonical(Path p) {
  if (!p.vertices.empty() && p.back() < p.front()) return p.reversed();
  return p;
}

std::string to_string(const Circuit& c) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < c.length(); ++i) {
    out << c.vertices[i] << " -" << c.edges[i] << "- ";
  }
  if (!c.vertices.empty()) out << c.vertices.front();
  out << ')';
  return out.str();
}

std::string to_string(const Path& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < p.length(); ++i) out << p.vertices[i] << " -" << p.edges[i] << "- ";
  if (!p.vertices.empty()) out << p.vertices.back();
  out << ']';
  return out.str();
}

void assert_cubic(const Multigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw DegreeError(v, g.degree(v));
  }
}

namespace {

// Incident edges of v that belong to s.
std::vector<EdgeId> incident_in(const Multigraph& g, const EdgeSet& s, Vertex v) {
  std::vector<EdgeId> r;
  for (EdgeId e : g.incident(v)) {
    if (s.contains(e)) r.push_back(e);
  }
  return r;
}

Circuit walk_circuit(const Multigraph& g, const EdgeSet& s, Vertex start) {
  Circuit c;
  auto first = incident_in(g, s, start);
  if (first.size() != 2) throw NotTwoRegular(start);
  Vertex v = start;
  EdgeId e = std::min(first[0], first[1]);
  while (true) {
    c.vertices.push_back(v);
    c.edges.push_back(e);
    v = g.other_end(e, v);
    if (v == start) break;
    auto inc = incident_in(g, s, v);
    if (inc.size() != 2) throw NotTwoRegular(v);
    e = inc[0] == e ? inc[1] : inc[0];
  }
  return canonical(std::move(c));
}

}  // namespace

std::vector<Circuit> circuits_of(const Multigraph& g, const EdgeSet& s) {
  std::vector<int> degree(g.vertex_count(), 0);
  for (EdgeId e : s) {
    ++degree[g.edge(e).a];
    ++degree[g.edge(e).b];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (degree[v] != 0 && degree[v] != 2) throw NotTwoRegular(v);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Circuit> result;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (degree[v] == 0 || seen[v]) continue;
    Circuit c = walk_circuit(g, s, v);
    for (Vertex x : c.vertices) seen[x] = true;
    result.push_back(std::move(c));
  }
  return result;
}

Circuit circuit_through_vertex(const Multigraph& g, const EdgeSet& s, Vertex v) {
  for (EdgeId e : s) {
    if (!g.has_end(e, v)) continue;
    return walk_circuit(g, s, v);
  }
  throw NotTwoRegular(v);
}

Circuit circuit_through_edge(const Multigraph& g, const EdgeSet& s, EdgeId e) {
  if (!s.contains(e)) throw std::invalid_argument("edge " + std::to_string(e) + " not in set");
  return walk_circuit(g, s, g.edge(e).a);
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      Vertex w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

EdgeSet bridges(const Multigraph& g) {
  if (!is_connected(g)) throw Disconnected();
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> found;
  int timer = 0;
  // The tree edge is skipped by id, not by parent vertex, so a parallel edge
  // back to the parent counts as a back edge.
  std::function<void(Vertex, EdgeId)> dfs = [&](Vertex v, EdgeId via) {
    disc[v] = low[v] = timer++;
    for (EdgeId e : g.incident(v)) {
      if (e == via) continue;
      Vertex w = g.other_end(e, v);
      if (disc[w] == -1) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) found.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  if (n > 0) dfs(0, -1);
  return EdgeSet(std::move(found));
}

std::vector<Path> segments(const Circuit& c, const EdgeSet& cut) {
  const std::size_t k = c.length();
  std::size_t first_cut = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (cut.contains(c.edges[i])) {
      first_cut = i;
      break;
    }
  }
  if (first_cut == k) throw std::invalid_argument("circuit has no cut edge");
  std::vector<Path> result;
  Path current{{c.vertices[(first_cut + 1) % k]}, {}};
  for (std::size_t step = 1; step <= k; ++step) {
    const std::size_t i = (first_cut + step) % k;
    const EdgeId e = c.edges[i];
    if (cut.contains(e)) {
      if (current.length() > 0) result.push_back(current);
      current = Path{{c.vertices[(i + 1) % k]}, {}};
    } else {
      current.edges.push_back(e);
      current.vertices.push_back(c.vertices[(i + 1) % k]);
    }
  }
  return result;
}

std::vector<Vertex> vertices_of(const Multigraph& g, const EdgeSet& s) {
  std::vector<Vertex> r;
  auto mask = vertex_mask(g, s);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mask[v]) r.push_back(v);
  }
  return r;
}

std::vector<bool> vertex_mask(const Multigraph& g, const EdgeSet& s) {
  std::vector<bool> mask(g.vertex_count(), false);
  for (EdgeId e : s) {
    mask[g.edge(e).a] = true;
    mask[g.edge(e).b] = true;
  }
  return mask;
}

}  // namespace berge
