#pragma once

#include <span>
#include <utility>
#include <vector>

#include "thln/graphs.hpp"

namespace thln {

// An immutable set of failed vertices and edges of one host graph. Counters
// are raw set sizes: an edge fault may coexist with a fault of its endpoint
// and both count.
class FaultSet {
 public:
  FaultSet() = default;
  static FaultSet make(const CubeGraph& g, std::vector<VertexId> vertices,
                       std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int fv() const { return (int)vertices_.size(); }
  int fe() const { return (int)edges_.size(); }
  int size() const { return fv() + fe(); }
  bool vertex_faulty(VertexId v) const;
  bool edge_faulty(VertexId a, VertexId b) const;

  // Splits relative to the host graph's halves: elements strictly inside one
  // side, and cross edges.
  int count_in_side(const CubeGraph& g, int side) const;
  int fv_in_side(const CubeGraph& g, int side) const;
  int cross_count(const CubeGraph& g) const;

 private:
  std::vector<VertexId> vertices_;  // sorted
  std::vector<Edge> edges_;         // sorted
};

enum class PairKind { normal, weak };

struct PairClass {
  PairKind kind = PairKind::normal;
  VertexId witness = 0;  // the 2-degree vertex, when weak
};

// Read-only survivor-graph lens over (graph, faults) with optional vertex
// overlays: faulty vertices re-marked faultless and vice versa. Overlays
// never touch the underlying FaultSet; edge faults cannot be overlaid.
// Holds pointers: graph and faults must outlive the view.
class SurvivorView {
 public:
  SurvivorView(const CubeGraph& g, const FaultSet& f) : g_(&g), f_(&f) {}

  const CubeGraph& graph() const { return *g_; }
  const FaultSet& faults() const { return *f_; }

  bool vertex_ok(VertexId v) const;
  bool edge_ok(VertexId a, VertexId b) const;

  int survivor_degree(VertexId v) const;  // FaultyQueryVertex when v is faulty
  std::vector<VertexId> survivor_neighbors(VertexId v) const;
  int min_survivor_degree() const;  // EmptySurvivor when nothing survives

  SurvivorView with_overlay(std::span<const VertexId> mark_faultless,
                            std::span<const VertexId> mark_faulty) const;

 private:
  const CubeGraph* g_;
  const FaultSet* f_;
  std::vector<VertexId> unfaulted_;  // sorted; base-faulty vertices treated as alive
  std::vector<VertexId> refaulted_;  // sorted; base-alive vertices treated as faulty
};

PairClass classify_pair(const SurvivorView& view, VertexId u, VertexId v);

// Every faultless vertex whose survivor neighborhood has exactly two members,
// with that pair (smaller label first).
std::vector<std::pair<VertexId, std::pair<VertexId, VertexId>>> find_weak_vertices(
    const SurvivorView& view);

}  // namespace thln
