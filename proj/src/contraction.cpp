#include "berge/contraction.hpp"

#include <algorithm>
#include <set>

#include "berge/io.hpp"

namespace berge {

std::optional<Vertex> Contraction::aux_vertex(Vertex parent_v) const {
  auto it = to_aux_.find(parent_v);
  if (it == to_aux_.end()) return std::nullopt;
  return it->second;
}

bool Contraction::is_surrogate(EdgeId aux_e) const {
  return aux_e >= static_cast<EdgeId>(kept_parent_.size()) && aux_e < aux_.edge_count();
}

std::pair<std::string, std::size_t> Contraction::surrogate_origin(EdgeId aux_e) const {
  if (!is_surrogate(aux_e)) throw NotSurrogate(aux_e);
  auto [f, i] = origin_[aux_e - kept_parent_.size()];
  return {families_[f].name, i};
}

const Path& Contraction::provenance(EdgeId aux_e) const {
  if (!is_surrogate(aux_e)) throw NotSurrogate(aux_e);
  auto [f, i] = origin_[aux_e - kept_parent_.size()];
  return families_[f].paths[i];
}

EdgeId Contraction::surrogate(std::string_view family, std::size_t index) const {
  EdgeId id = static_cast<EdgeId>(kept_parent_.size());
  for (const PathFamily& f : families_) {
    if (f.name == family) {
      if (index >= f.paths.size()) throw std::out_of_range("surrogate index out of range");
      return id + static_cast<EdgeId>(index);
    }
    id += static_cast<EdgeId>(f.paths.size());
  }
  throw std::out_of_range("no family named " + std::string(family));
}

EdgeSet Contraction::family(std::string_view name) const {
  EdgeId id = static_cast<EdgeId>(kept_parent_.size());
  for (const PathFamily& f : families_) {
    if (f.name == name) {
      std::vector<EdgeId> ids;
      for (std::size_t i = 0; i < f.paths.size(); ++i) ids.push_back(id + static_cast<EdgeId>(i));
      return EdgeSet(std::move(ids));
    }
    id += static_cast<EdgeId>(f.paths.size());
  }
  throw std::out_of_range("no family named " + std::string(name));
}

EdgeId Contraction::aux_of_kept(EdgeId parent_e) const {
  auto it = kept_aux_.find(parent_e);
  if (it == kept_aux_.end())
    throw std::out_of_range("parent edge " + std::to_string(parent_e) + " is not kept");
  return it->second;
}

EdgeId Contraction::parent_of_kept(EdgeId aux_e) const {
  if (aux_e < 0 || aux_e >= static_cast<EdgeId>(kept_parent_.size()))
    throw std::out_of_range("aux edge " + std::to_string(aux_e) + " is not a kept edge");
  return kept_parent_[aux_e];
}

EdgeSet Contraction::kept_to_aux(const EdgeSet& parent_edges) const {
  std::vector<EdgeId> ids;
  for (EdgeId e : parent_edges) ids.push_back(aux_of_kept(e));
  return EdgeSet(std::move(ids));
}

Contraction contract(const Multigraph& parent, std::vector<PathFamily> families,
                     const EdgeSet& kept) {
  Contraction c;
  c.parent_ = parent;

  std::set<Vertex> ends;
  for (const PathFamily& f : families) {
    std::set<Vertex> used;
    for (const Path& p : f.paths) {
      if (p.length() == 0) throw AssumptionViolated("empty path in family " + f.name);
      for (Vertex v : p.vertices) {
        if (!used.insert(v).second)
          throw AssumptionViolated("paths of family " + f.name + " share vertex " +
                                   std::to_string(v));
      }
      for (std::size_t i = 0; i < p.length(); ++i) {
        const Edge& e = parent.edge(p.edges[i]);
        const bool joins = (e.a == p.vertices[i] && e.b == p.vertices[i + 1]) ||
                           (e.b == p.vertices[i] && e.a == p.vertices[i + 1]);
        if (!joins) throw AssumptionViolated("path " + to_string(p) + " is not a walk of the parent");
      }
      ends.insert(p.front());
      ends.insert(p.back());
    }
  }
  for (EdgeId e : kept) {
    ends.insert(parent.edge(e).a);
    ends.insert(parent.edge(e).b);
  }
  for (Vertex v : ends) {
    c.to_aux_[v] = static_cast<Vertex>(c.to_parent_.size());
    c.to_parent_.push_back(v);
  }

  std::vector<Edge> aux_edges;
  for (EdgeId e : kept) {
    c.kept_aux_[e] = static_cast<EdgeId>(aux_edges.size());
    c.kept_parent_.push_back(e);
    aux_edges.push_back({c.to_aux_[parent.edge(e).a], c.to_aux_[parent.edge(e).b]});
  }
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (std::size_t i = 0; i < families[f].paths.size(); ++i) {
      const Path& p = families[f].paths[i];
      c.origin_.emplace_back(f, i);
      aux_edges.push_back({c.to_aux_[p.front()], c.to_aux_[p.back()]});
    }
  }
  c.families_ = std::move(families);
  try {
    c.aux_ = Multigraph(static_cast<int>(c.to_parent_.size()), std::move(aux_edges));
  } catch (const std::invalid_argument& err) {
    throw AssumptionViolated(std::string("auxiliary graph is malformed: ") + err.what());
  }
  for (Vertex v = 0; v < c.aux_.vertex_count(); ++v) {
    if (c.aux_.degree(v) != 3)
      throw NotCubicAux(v, "parent vertex " + std::to_string(c.to_parent_[v]) + "\n" +
                               emit_edgelist(parent));
  }
  return c;
}

EdgeSet lift_by_parity(const Contraction& c, const EdgeSet& chosen) {
  std::vector<EdgeId> ids;
  for (EdgeId s : chosen) {
    const Path& p = c.provenance(s);
    ids.insert(ids.end(), p.edges.begin(), p.edges.end());
  }
  return EdgeSet(std::move(ids));
}

EdgeSet lift_edges(const Contraction& c, const EdgeSet& aux_edges) {
  std::vector<EdgeId> ids;
  for (EdgeId e : aux_edges) {
    if (c.is_surrogate(e)) {
      const Path& p = c.provenance(e);
      ids.insert(ids.end(), p.edges.begin(), p.edges.end());
    } else {
      ids.push_back(c.parent_of_kept(e));
    }
  }
  return EdgeSet(std::move(ids));
}

Circuit lift_circuit(const Contraction& c, const Circuit& aux_circuit) {
  Circuit out;
  const std::size_t k = aux_circuit.length();
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex from = c.parent_vertex(aux_circuit.vertices[i]);
    const EdgeId e = aux_circuit.edges[i];
    if (!c.is_surrogate(e)) {
      out.vertices.push_back(from);
      out.edges.push_back(c.parent_of_kept(e));
      continue;
    }
    // Orientation follows the vertex the walk enters the surrogate from.
    Path p = c.provenance(e);
    if (p.front() != from) p = p.reversed();
    if (p.front() != from)
      throw AssumptionViolated("surrogate " + std::to_string(e) + " does not start at vertex " +
                               std::to_string(from));
    for (std::size_t j = 0; j < p.length(); ++j) {
      out.vertices.push_back(p.vertices[j]);
      out.edges.push_back(p.edges[j]);
    }
  }
  std::vector<Vertex> sorted = out.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw AssumptionViolated("lifted walk " + to_string(out) + " repeats a vertex");
  return canonical(std::move(out));
}

Circuit project_circuit(const Contraction& c, const Circuit& parent_circuit) {
  Circuit out;
  for (std::size_t i = 0; i < parent_circuit.length(); ++i) {
    auto v = c.aux_vertex(parent_circuit.vertices[i]);
    if (!v) throw std::out_of_range("circuit vertex is not an auxiliary vertex");
    out.vertices.push_back(*v);
    out.edges.push_back(c.aux_of_kept(parent_circuit.edges[i]));
  }
  return canonical(std::move(out));
}

}  // namespace berge
