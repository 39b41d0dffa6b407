#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "berge/errors.hpp"

namespace berge {

struct Edge {
  Vertex a;
  Vertex b;
};

// Sorted set of edge identities. Every edge-set symbol of the constructions
// (matchings, circuit edge sets, 2-factors) is one of these; parallel edges
// are told apart only by id.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids);
  explicit EdgeSet(std::vector<EdgeId> ids);

  bool contains(EdgeId e) const;
  void insert(EdgeId e);
  void erase(EdgeId e);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<EdgeId>& ids() const { return ids_; }
  EdgeId front() const { return ids_.front(); }

  bool is_subset_of(const EdgeSet& other) const;
  bool intersects(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

  friend EdgeSet operator|(const EdgeSet& a, const EdgeSet& b);
  friend EdgeSet operator&(const EdgeSet& a, const EdgeSet& b);
  friend EdgeSet operator-(const EdgeSet& a, const EdgeSet& b);
  friend EdgeSet operator^(const EdgeSet& a, const EdgeSet& b);

 private:
  std::vector<EdgeId> ids_;
};

EdgeSet sym_diff(const EdgeSet& a, const EdgeSet& b);
std::string to_string(const EdgeSet& s);

// Loopless multigraph on vertices 0..n-1 with dense edge ids 0..m-1. Edge
// ends are stored with a < b.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  Vertex other_end(EdgeId e, Vertex v) const;
  bool has_end(EdgeId e, Vertex v) const;
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(incidence_.at(v).size()); }
  EdgeSet all_edges() const;

  friend bool operator==(const Multigraph& x, const Multigraph& y);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// Closed walk v0 e0 v1 e1 ... v(k-1) e(k-1) with e_i joining v_i and
// v_(i+1 mod k). Distinct vertices, k >= 2.
struct Circuit {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool is_odd() const { return length() % 2 == 1; }
  EdgeSet edge_set() const { return EdgeSet(edges); }
  bool contains_vertex(Vertex v) const;
  bool contains_edge(EdgeId e) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Open walk v0 e0 v1 ... e(k-1) vk with distinct vertices, k >= 1.
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  EdgeSet edge_set() const { return EdgeSet(edges); }
  bool contains_vertex(Vertex v) const;
  bool contains_edge(EdgeId e) const;
  Path reversed() const;

  friend bool operator==(const Path&, const Path&) = default;
};

// Rotates/reflects c so it starts at its minimum vertex and leaves it by the
// smaller-id of the two incident circuit edges.
Circuit canonical(Circuit c);
// Orients p so it starts at its smaller endpoint.
Path canonical(Path p);

std::string to_string(const Circuit& c);
std::string to_string(const Path& p);

void assert_cubic(const Multigraph& g);

// Decomposes a 2-regular edge set into canonical circuits sorted by minimum
// vertex.
std::vector<Circuit> circuits_of(const Multigraph& g, const EdgeSet& s);

// The circuit of circuits_of(g, s) through v. Throws NotTwoRegular if v is
// not touched by s.
Circuit circuit_through_vertex(const Multigraph& g, const EdgeSet& s, Vertex v);
Circuit circuit_through_edge(const Multigraph& g, const EdgeSet& s, EdgeId e);

bool is_connected(const Multigraph& g);
EdgeSet bridges(const Multigraph& g);

// Maximal subpaths of c of length >= 1 that avoid the cut edges, each
// oriented along c and listed in walk order starting after the first cut
// edge of c. Requires at least one cut edge on c.
std::vector<Path> segments(const Circuit& c, const EdgeSet& cut);

// Sorted list of vertices touched by s.
std::vector<Vertex> vertices_of(const Multigraph& g, const EdgeSet& s);
std::vector<bool> vertex_mask(const Multigraph& g, const EdgeSet& s);

}  // namespace berge
