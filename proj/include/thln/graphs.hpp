#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "thln/bits.hpp"
#include "thln/errors.hpp"

namespace thln {

enum class Variant {
  generic_thln,
  crossed_cube,
  locally_twisted_cube,
  mobius_cube0,
  mobius_cube1,
  twisted_cube,
};

const char* variant_name(Variant v);
Variant variant_from_name(std::string_view name);

struct Edge {
  VertexId a = 0, b = 0;  // normalized: a < b
  Edge() = default;
  Edge(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An n-dimensional twisted hypercube-like network. Immutable after
// construction. For n >= 4 the graph remembers its two (n-1)-dimensional
// halves and the perfect matching between them. The split axis is the bit
// position whose value assigns a vertex to a half; it is the top bit for
// every variant except the twisted cube, whose natural decomposition runs
// along bit n-2.
class CubeGraph {
 public:
  int n() const { return n_; }
  Variant variant() const { return variant_; }
  VertexId vertex_count() const { return VertexId{1} << n_; }
  std::size_t edge_count() const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;
  std::vector<Edge> edge_list() const;  // sorted
  bool contains_vertex(VertexId v) const { return v < vertex_count(); }

  // Decomposition (n >= 4 only).
  int split_axis() const { return axis_; }
  int side_of(VertexId v) const { return bit_of(v, axis_); }
  VertexId cross_of(VertexId v) const { return cross_[v]; }  // unchecked
  const CubeGraph& half(int side) const { return *halves_[side]; }
  VertexId to_local(VertexId v) const { return remove_bit(v, axis_); }
  VertexId to_global(VertexId local, int side) const { return insert_bit(local, axis_, side); }
  std::vector<VertexId> phi_local() const;  // local L label -> local R label
  std::vector<Edge> cross_edges() const;    // sorted, size 2^{n-1}

  // Full recursive structural check; throws Error on violation.
  void validate() const;

 private:
  CubeGraph() = default;

  int n_ = 0;
  Variant variant_ = Variant::generic_thln;
  int axis_ = -1;  // -1 at n == 3
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> cross_;
  std::shared_ptr<const CubeGraph> halves_[2];

  friend CubeGraph make_leaf3(Variant variant, const std::vector<Edge>& edges);
  friend CubeGraph compose_at(CubeGraph left, CubeGraph right, const std::vector<VertexId>& phi,
                              int axis, Variant variant);
  friend CubeGraph graph_from_edges(int n, Variant variant, const std::vector<Edge>& edges);
};

// The canonical 3-D THLN, labeled like the 3-D crossed cube.
CubeGraph base_thln3();

// General recursive construction: disjoint halves joined by the matching phi
// (size 2^{n-1}, local left label -> local right label). Left labels gain a 0
// at the split axis, right labels a 1. compose() uses the top bit.
CubeGraph compose(CubeGraph left, CubeGraph right, const std::vector<VertexId>& phi);
CubeGraph compose_at(CubeGraph left, CubeGraph right, const std::vector<VertexId>& phi, int axis,
                     Variant variant = Variant::generic_thln);

CubeGraph crossed_cube(int n);
CubeGraph locally_twisted_cube(int n);
CubeGraph mobius_cube(int n, int kind);
CubeGraph twisted_cube(int n);  // odd n only
CubeGraph random_generic_thln(int n, std::uint64_t seed);

// Rebuild a graph from an explicit edge list (the JSON import path). The
// decomposition is inferred level by level; a graph with no valid THLN
// decomposition is rejected.
CubeGraph graph_from_edges(int n, Variant variant, const std::vector<Edge>& edges);

struct SubcubeView {
  const CubeGraph* parent = nullptr;
  int side = 0;

  const CubeGraph& graph() const { return parent->half(side); }
  int dimension() const { return parent->n() - 1; }
  VertexId to_local(VertexId parent_vertex) const;
  VertexId to_parent(VertexId local_vertex) const;
  VertexId cross_neighbor(VertexId parent_vertex) const;
};

std::pair<SubcubeView, SubcubeView> split(const CubeGraph& g);
VertexId cross_neighbor(const CubeGraph& g, VertexId v);

bool same_edge_set(const CubeGraph& a, const CubeGraph& b);

// Backtracking isomorphism test; intended for the 8-vertex leaves.
bool brute_isomorphic(const CubeGraph& a, const CubeGraph& b);

}  // namespace thln
