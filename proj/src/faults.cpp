#include "thln/faults.hpp"

#include <algorithm>

namespace thln {

namespace {

bool sorted_contains(const std::vector<VertexId>& v, VertexId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

FaultSet FaultSet::make(const CubeGraph& g, std::vector<VertexId> vertices,
                        std::vector<Edge> edges) {
  FaultSet f;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (VertexId v : vertices)
    if (!g.contains_vertex(v))
      fail(Errc::bad_input, "faulty vertex " + std::to_string(v) + " not in graph");
  for (const Edge& e : edges)
    if (!g.has_edge(e.a, e.b))
      fail(Errc::bad_input, "faulty edge " + format_label(e.a, g.n()) + "-" +
                                format_label(e.b, g.n()) + " not in graph");
  f.vertices_ = std::move(vertices);
  f.edges_ = std::move(edges);
  return f;
}

bool FaultSet::vertex_faulty(VertexId v) const { return sorted_contains(vertices_, v); }

bool FaultSet::edge_faulty(VertexId a, VertexId b) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

int FaultSet::count_in_side(const CubeGraph& g, int side) const {
  int count = 0;
  for (VertexId v : vertices_)
    if (g.side_of(v) == side) count++;
  for (const Edge& e : edges_)
    if (g.side_of(e.a) == side && g.side_of(e.b) == side) count++;
  return count;
}

int FaultSet::fv_in_side(const CubeGraph& g, int side) const {
  int count = 0;
  for (VertexId v : vertices_)
    if (g.side_of(v) == side) count++;
  return count;
}

int FaultSet::cross_count(const CubeGraph& g) const {
  int count = 0;
  for (const Edge& e : edges_)
    if (g.side_of(e.a) != g.side_of(e.b)) count++;
  return count;
}

bool SurvivorView::vertex_ok(VertexId v) const {
  if (sorted_contains(refaulted_, v)) return false;
  if (f_->vertex_faulty(v)) return sorted_contains(unfaulted_, v);
  return true;
}

bool SurvivorView::edge_ok(VertexId a, VertexId b) const { return !f_->edge_faulty(a, b); }

int SurvivorView::survivor_degree(VertexId v) const {
  if (!g_->contains_vertex(v)) fail(Errc::bad_input, "vertex out of range");
  if (!vertex_ok(v)) fail(Errc::faulty_query_vertex, "queried vertex is faulty");
  int degree = 0;
  for (VertexId w : g_->neighbors(v))
    if (vertex_ok(w) && edge_ok(v, w)) degree++;
  return degree;
}

std::vector<VertexId> SurvivorView::survivor_neighbors(VertexId v) const {
  if (!g_->contains_vertex(v)) fail(Errc::bad_input, "vertex out of range");
  if (!vertex_ok(v)) fail(Errc::faulty_query_vertex, "queried vertex is faulty");
  std::vector<VertexId> out;
  for (VertexId w : g_->neighbors(v))
    if (vertex_ok(w) && edge_ok(v, w)) out.push_back(w);
  return out;
}

int SurvivorView::min_survivor_degree() const {
  int best = -1;
  for (VertexId v = 0; v < g_->vertex_count(); v++) {
    if (!vertex_ok(v)) continue;
    int d = survivor_degree(v);
    if (best < 0 || d < best) best = d;
  }
  if (best < 0) fail(Errc::empty_survivor, "all vertices are faulty");
  return best;
}

SurvivorView SurvivorView::with_overlay(std::span<const VertexId> mark_faultless,
                                        std::span<const VertexId> mark_faulty) const {
  for (VertexId v : mark_faultless)
    for (VertexId w : mark_faulty)
      if (v == w) fail(Errc::overlay_conflict, "vertex marked both ways");

  SurvivorView next = *this;
  for (VertexId v : mark_faultless) {
    if (!g_->contains_vertex(v)) fail(Errc::bad_input, "overlay vertex out of range");
    if (vertex_ok(v)) fail(Errc::overlay_conflict, "vertex is already faultless");
    if (f_->vertex_faulty(v)) {
      next.unfaulted_.push_back(v);
    } else {
      auto it = std::find(next.refaulted_.begin(), next.refaulted_.end(), v);
      next.refaulted_.erase(it);
    }
  }
  for (VertexId v : mark_faulty) {
    if (!g_->contains_vertex(v)) fail(Errc::bad_input, "overlay vertex out of range");
    if (!vertex_ok(v)) fail(Errc::overlay_conflict, "vertex is already faulty");
    if (f_->vertex_faulty(v)) {
      auto it = std::find(next.unfaulted_.begin(), next.unfaulted_.end(), v);
      next.unfaulted_.erase(it);
    } else {
      next.refaulted_.push_back(v);
    }
  }
  std::sort(next.unfaulted_.begin(), next.unfaulted_.end());
  std::sort(next.refaulted_.begin(), next.refaulted_.end());
  return next;
}

PairClass classify_pair(const SurvivorView& view, VertexId u, VertexId v) {
  if (u == v) fail(Errc::bad_input, "pair must be two distinct vertices");
  if (!view.vertex_ok(u) || !view.vertex_ok(v))
    fail(Errc::faulty_query_vertex, "pair vertex is faulty");
  const CubeGraph& g = view.graph();
  for (VertexId w = 0; w < g.vertex_count(); w++) {
    if (w == u || w == v || !view.vertex_ok(w)) continue;
    auto nbrs = view.survivor_neighbors(w);
    if (nbrs.size() == 2 && ((nbrs[0] == u && nbrs[1] == v) || (nbrs[0] == v && nbrs[1] == u)))
      return {PairKind::weak, w};
  }
  return {PairKind::normal, 0};
}

std::vector<std::pair<VertexId, std::pair<VertexId, VertexId>>> find_weak_vertices(
    const SurvivorView& view) {
  std::vector<std::pair<VertexId, std::pair<VertexId, VertexId>>> out;
  const CubeGraph& g = view.graph();
  for (VertexId w = 0; w < g.vertex_count(); w++) {
    if (!view.vertex_ok(w)) continue;
    auto nbrs = view.survivor_neighbors(w);
    if (nbrs.size() == 2) out.push_back({w, {nbrs[0], nbrs[1]}});
  }
  return out;
}

}  // namespace thln
