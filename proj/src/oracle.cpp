#include "berge/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "berge/matching.hpp"

namespace berge {

CoverReport verify_cover(const Multigraph& g, const std::vector<EdgeSet>& matchings) {
  CoverReport report;
  std::vector<bool> covered(g.edge_count(), false);
  bool all_perfect = true;
  for (const EdgeSet& m : matchings) {
    std::vector<int> hits(g.vertex_count(), 0);
    bool ok = true;
    for (EdgeId e : m) {
      if (e < 0 || e >= g.edge_count()) {
        ok = false;
        continue;
      }
      covered[e] = true;
      ++hits[g.edge(e).a];
      ++hits[g.edge(e).b];
    }
    for (int h : hits) ok = ok && h == 1;
    report.perfect.push_back(ok);
    all_perfect = all_perfect && ok;
  }
  std::vector<EdgeId> missing;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!covered[e]) missing.push_back(e);
  }
  report.uncovered = EdgeSet(std::move(missing));
  report.order = std::set<EdgeSet>(matchings.begin(), matchings.end()).size();
  report.valid = all_perfect && report.uncovered.empty();
  return report;
}

std::string format_report(const CoverReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.perfect.size(); ++i) {
    out << "matching " << i << ' ' << (report.perfect[i] ? "perfect" : "not-perfect") << '\n';
  }
  out << "uncovered";
  if (report.uncovered.empty()) out << " none";
  for (EdgeId e : report.uncovered) out << ' ' << e;
  out << '\n';
  out << (report.valid ? "valid" : "invalid") << " order " << report.order << '\n';
  return out.str();
}

namespace {

using Mask = std::vector<std::uint64_t>;

Mask to_mask(const EdgeSet& s, int m) {
  Mask mask((m + 63) / 64, 0);
  for (EdgeId e : s) mask[e / 64] |= std::uint64_t{1} << (e % 64);
  return mask;
}

bool has(const Mask& mask, EdgeId e) { return mask[e / 64] >> (e % 64) & 1; }

// Depth-bounded set cover: branch on the uncovered edge with fewest
// covering matchings.
bool coverable(const std::vector<Mask>& pms, const std::vector<std::vector<int>>& by_edge,
               Mask& covered, int m, int depth) {
  int best = -1;
  std::size_t best_count = SIZE_MAX;
  for (EdgeId e = 0; e < m; ++e) {
    if (has(covered, e)) continue;
    if (by_edge[e].size() < best_count) {
      best = e;
      best_count = by_edge[e].size();
    }
  }
  if (best < 0) return true;
  if (depth == 0) return false;
  for (int idx : by_edge[best]) {
    Mask saved = covered;
    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= pms[idx][w];
    const bool ok = coverable(pms, by_edge, covered, m, depth - 1);
    covered = std::move(saved);
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::optional<int> min_cover_order(const Multigraph& g, int cap) {
  const int m = g.edge_count();
  std::vector<Mask> pms;
  for_each_perfect_matching(g, [&](const EdgeSet& pm) {
    pms.push_back(to_mask(pm, m));
    return true;
  });
  if (pms.empty()) throw NoPerfectMatching();
  std::vector<std::vector<int>> by_edge(m);
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (EdgeId e = 0; e < m; ++e) {
      if (has(pms[i], e)) by_edge[e].push_back(static_cast<int>(i));
    }
  }
  for (int depth = 0; depth <= cap; ++depth) {
    Mask covered((m + 63) / 64, 0);
    if (coverable(pms, by_edge, covered, m, depth)) return depth;
  }
  return std::nullopt;
}

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const Multigraph& g, std::optional<Vertex> deleted)
      : g_(g), active_(g.vertex_count(), true), on_path_(g.vertex_count(), false) {
    if (deleted) active_[*deleted] = false;
    target_ = g.vertex_count() - (deleted ? 1 : 0);
  }

  std::optional<Circuit> run() {
    if (target_ < 2) return std::nullopt;
    Vertex start = 0;
    while (!active_[start]) ++start;
    start_ = start;
    on_path_[start] = true;
    path_.vertices.push_back(start);
    if (!extend(start)) return std::nullopt;
    Circuit c{path_.vertices, path_.edges};
    return canonical(std::move(c));
  }

 private:
  int free_degree(Vertex w) const {
    int d = 0;
    for (EdgeId e : g_.incident(w)) {
      Vertex x = g_.other_end(e, w);
      if (active_[x] && (!on_path_[x] || x == start_)) ++d;
    }
    return d;
  }

  bool extend(Vertex v) {
    if (static_cast<int>(path_.vertices.size()) == target_) {
      for (EdgeId e : g_.incident(v)) {
        // A 2-circuit needs a second edge parallel to the first.
        if (g_.other_end(e, v) == start_ && (path_.edges.empty() || e != path_.edges.front())) {
          path_.edges.push_back(e);
          return true;
        }
      }
      return false;
    }
    for (EdgeId e : g_.incident(v)) {
      const Vertex w = g_.other_end(e, v);
      if (!active_[w] || on_path_[w]) continue;
      // w must be able to leave again, either onwards or back to the start.
      if (free_degree(w) < 1) continue;
      on_path_[w] = true;
      path_.vertices.push_back(w);
      path_.edges.push_back(e);
      if (extend(w)) return true;
      path_.vertices.pop_back();
      path_.edges.pop_back();
      on_path_[w] = false;
    }
    return false;
  }

  const Multigraph& g_;
  std::vector<bool> active_;
  std::vector<bool> on_path_;
  int target_ = 0;
  Vertex start_ = 0;
  Path path_;
};

}  // namespace

std::optional<Circuit> hamiltonian_circuit(const Multigraph& g, std::optional<Vertex> deleted) {
  return HamiltonSearch(g, deleted).run();
}

bool is_hypohamiltonian(const Multigraph& g) {
  if (hamiltonian_circuit(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!hamiltonian_circuit(g, v)) return false;
  }
  return true;
}

std::optional<std::pair<Circuit, Circuit>> find_two_factor_two_circuits(const Multigraph& g) {
  assert_cubic(g);
  const EdgeSet all = g.all_edges();
  std::optional<std::pair<Circuit, Circuit>> found;
  for_each_perfect_matching(g, [&](const EdgeSet& m) {
    auto circuits = circuits_of(g, all - m);
    if (circuits.size() != 2) return true;
    found = std::pair(std::move(circuits[0]), std::move(circuits[1]));
    return false;
  });
  return found;
}

}  // namespace berge
