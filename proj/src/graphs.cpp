#include "thln/graphs.hpp"

#include <cassert>
#include <numeric>
#include <string>

namespace thln {

std::string format_label(VertexId v, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; i++)
    if (bit_of(v, n - 1 - i)) s[i] = '1';
  return s;
}

VertexId parse_label(std::string_view s, int n) {
  if ((int)s.size() != n)
    fail(Errc::bad_input, "label '" + std::string(s) + "' must have exactly " +
                              std::to_string(n) + " binary digits");
  VertexId v = 0;
  for (char c : s) {
    if (c != '0' && c != '1')
      fail(Errc::bad_input, "label '" + std::string(s) + "' contains non-binary digit");
    v = (v << 1) | VertexId(c == '1');
  }
  return v;
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::generic_thln: return "generic";
    case Variant::crossed_cube: return "cq";
    case Variant::locally_twisted_cube: return "ltq";
    case Variant::mobius_cube0: return "mq0";
    case Variant::mobius_cube1: return "mq1";
    case Variant::twisted_cube: return "tq";
  }
  return "?";
}

Variant variant_from_name(std::string_view name) {
  if (name == "generic") return Variant::generic_thln;
  if (name == "cq") return Variant::crossed_cube;
  if (name == "ltq") return Variant::locally_twisted_cube;
  if (name == "mq0") return Variant::mobius_cube0;
  if (name == "mq1") return Variant::mobius_cube1;
  if (name == "tq") return Variant::twisted_cube;
  fail(Errc::bad_input, "unknown variant '" + std::string(name) + "'");
}

std::size_t CubeGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& row : adj_) deg += row.size();
  return deg / 2;
}

const std::vector<VertexId>& CubeGraph::neighbors(VertexId v) const {
  if (!contains_vertex(v)) fail(Errc::bad_input, "vertex out of range");
  return adj_[v];
}

bool CubeGraph::has_edge(VertexId a, VertexId b) const {
  if (!contains_vertex(a) || !contains_vertex(b)) return false;
  const auto& row = adj_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<Edge> CubeGraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId v = 0; v < vertex_count(); v++)
    for (VertexId w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> CubeGraph::phi_local() const {
  if (n_ < 4) fail(Errc::dimension_too_small, "no matching at n == 3");
  std::vector<VertexId> phi(vertex_count() / 2);
  for (VertexId v = 0; v < vertex_count(); v++)
    if (side_of(v) == 0) phi[to_local(v)] = to_local(cross_[v]);
  return phi;
}

std::vector<Edge> CubeGraph::cross_edges() const {
  if (n_ < 4) fail(Errc::dimension_too_small, "no cross edges at n == 3");
  std::vector<Edge> out;
  out.reserve(vertex_count() / 2);
  for (VertexId v = 0; v < vertex_count(); v++)
    if (side_of(v) == 0) out.emplace_back(v, cross_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::vector<VertexId>> adjacency_from_edges(int n, const std::vector<Edge>& edges) {
  VertexId count = VertexId{1} << n;
  std::vector<std::vector<VertexId>> adj(count);
  for (const Edge& e : edges) {
    if (e.a >= count || e.b >= count) fail(Errc::bad_input, "edge endpoint out of range");
    if (e.a == e.b) fail(Errc::bad_input, "self-loop");
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      fail(Errc::bad_input, "duplicate edge");
  }
  return adj;
}

bool connected(const std::vector<std::vector<VertexId>>& adj) {
  if (adj.empty()) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        reached++;
        stack.push_back(w);
      }
  }
  return reached == adj.size();
}

// Figure edge sets for the 3-dimensional leaves. The crossed-cube labeling
// doubles as the canonical labeling of the generic 3-D THLN.
const std::vector<Edge>& cq3_edges() {
  static const std::vector<Edge> edges = {
      {0b000, 0b001}, {0b000, 0b010}, {0b000, 0b100}, {0b001, 0b011},
      {0b001, 0b111}, {0b010, 0b011}, {0b010, 0b110}, {0b011, 0b101},
      {0b100, 0b101}, {0b100, 0b110}, {0b101, 0b111}, {0b110, 0b111}};
  return edges;
}

const std::vector<Edge>& ltq3_edges() {
  static const std::vector<Edge> edges = {
      {0b000, 0b001}, {0b000, 0b010}, {0b000, 0b100}, {0b001, 0b011},
      {0b001, 0b111}, {0b010, 0b011}, {0b010, 0b110}, {0b011, 0b101},
      {0b100, 0b101}, {0b100, 0b110}, {0b101, 0b111}, {0b110, 0b111}};
  return edges;
}

const std::vector<Edge>& mq03_edges() {
  static const std::vector<Edge> edges = {
      {0b000, 0b001}, {0b000, 0b010}, {0b000, 0b100}, {0b001, 0b011},
      {0b001, 0b101}, {0b010, 0b011}, {0b010, 0b110}, {0b011, 0b111},
      {0b100, 0b101}, {0b100, 0b111}, {0b101, 0b110}, {0b110, 0b111}};
  return edges;
}

const std::vector<Edge>& mq13_edges() {
  static const std::vector<Edge> edges = {
      {0b000, 0b001}, {0b000, 0b010}, {0b000, 0b111}, {0b001, 0b011},
      {0b001, 0b110}, {0b010, 0b011}, {0b010, 0b101}, {0b011, 0b100},
      {0b100, 0b101}, {0b100, 0b111}, {0b101, 0b110}, {0b110, 0b111}};
  return edges;
}

const std::vector<Edge>& tq3_edges() {
  static const std::vector<Edge> edges = {
      {0b000, 0b001}, {0b000, 0b100}, {0b000, 0b110}, {0b001, 0b011},
      {0b001, 0b101}, {0b010, 0b011}, {0b010, 0b100}, {0b010, 0b110},
      {0b011, 0b111}, {0b100, 0b101}, {0b101, 0b111}, {0b110, 0b111}};
  return edges;
}

std::vector<VertexId> identity_phi(int m) {
  std::vector<VertexId> phi(VertexId{1} << m);
  std::iota(phi.begin(), phi.end(), 0);
  return phi;
}

void check_phi(const std::vector<VertexId>& phi, int m) {
  VertexId count = VertexId{1} << m;
  if (phi.size() != count) fail(Errc::not_a_bijection, "phi domain size mismatch");
  std::vector<char> hit(count, 0);
  for (VertexId image : phi) {
    if (image >= count) fail(Errc::not_a_bijection, "phi image out of range");
    if (hit[image]) fail(Errc::not_a_bijection, "phi is not injective");
    hit[image] = 1;
  }
}

// Crossed-cube matching: in each complete low-end 2-bit block, the high bit
// of the image is xored with the low bit; a leftover top bit is copied.
VertexId cq_phi_map(VertexId x, int m) {
  VertexId v = x;
  for (int i = 0; 2 * i + 1 < m; i++)
    if (bit_of(x, 2 * i)) v ^= VertexId{1} << (2 * i + 1);
  return v;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CubeGraph make_leaf3(Variant variant, const std::vector<Edge>& edges) {
  CubeGraph g;
  g.n_ = 3;
  g.variant_ = variant;
  g.axis_ = -1;
  g.adj_ = adjacency_from_edges(3, edges);
  return g;
}

CubeGraph compose_at(CubeGraph left, CubeGraph right, const std::vector<VertexId>& phi, int axis,
                     Variant variant) {
  if (left.n() != right.n())
    fail(Errc::dimension_mismatch, "halves have dimensions " + std::to_string(left.n()) +
                                       " and " + std::to_string(right.n()));
  int m = left.n();
  int n = m + 1;
  if (axis < 0 || axis > m) fail(Errc::bad_input, "split axis out of range");
  check_phi(phi, m);

  CubeGraph g;
  g.n_ = n;
  g.variant_ = variant;
  g.axis_ = axis;
  g.adj_.assign(VertexId{1} << n, {});
  g.cross_.assign(VertexId{1} << n, 0);

  auto add = [&](VertexId a, VertexId b) {
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  };
  for (int side = 0; side < 2; side++) {
    const CubeGraph& h = side ? right : left;
    for (VertexId v = 0; v < h.vertex_count(); v++)
      for (VertexId w : h.neighbors(v))
        if (v < w) add(insert_bit(v, axis, side), insert_bit(w, axis, side));
  }
  for (VertexId v = 0; v < (VertexId{1} << m); v++) {
    VertexId a = insert_bit(v, axis, 0);
    VertexId b = insert_bit(phi[v], axis, 1);
    add(a, b);
    g.cross_[a] = b;
    g.cross_[b] = a;
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());

  g.halves_[0] = std::make_shared<const CubeGraph>(std::move(left));
  g.halves_[1] = std::make_shared<const CubeGraph>(std::move(right));
  return g;
}

CubeGraph compose(CubeGraph left, CubeGraph right, const std::vector<VertexId>& phi) {
  int axis = left.n();  // top bit of the composed graph
  return compose_at(std::move(left), std::move(right), phi, axis);
}

CubeGraph base_thln3() { return make_leaf3(Variant::generic_thln, cq3_edges()); }

CubeGraph crossed_cube(int n) {
  if (n < 3) fail(Errc::dimension_too_small, "crossed cube requires n >= 3");
  if (n == 3) return make_leaf3(Variant::crossed_cube, cq3_edges());
  int m = n - 1;
  std::vector<VertexId> phi(VertexId{1} << m);
  for (VertexId x = 0; x < phi.size(); x++) phi[x] = cq_phi_map(x, m);
  return compose_at(crossed_cube(m), crossed_cube(m), phi, m, Variant::crossed_cube);
}

CubeGraph locally_twisted_cube(int n) {
  if (n < 3) fail(Errc::dimension_too_small, "locally twisted cube requires n >= 3");
  if (n == 3) return make_leaf3(Variant::locally_twisted_cube, ltq3_edges());
  int m = n - 1;
  std::vector<VertexId> phi(VertexId{1} << m);
  for (VertexId x = 0; x < phi.size(); x++)
    phi[x] = (x & 1) ? x ^ (VertexId{1} << (m - 1)) : x;
  return compose_at(locally_twisted_cube(m), locally_twisted_cube(m), phi, m,
                    Variant::locally_twisted_cube);
}

CubeGraph mobius_cube(int n, int kind) {
  if (kind != 0 && kind != 1) fail(Errc::bad_input, "mobius kind must be 0 or 1");
  if (n < 3) fail(Errc::dimension_too_small, "mobius cube requires n >= 3");
  Variant variant = kind ? Variant::mobius_cube1 : Variant::mobius_cube0;
  if (n == 3) return make_leaf3(variant, kind ? mq13_edges() : mq03_edges());
  int m = n - 1;
  std::vector<VertexId> phi(VertexId{1} << m);
  VertexId all = (VertexId{1} << m) - 1;
  for (VertexId x = 0; x < phi.size(); x++) phi[x] = kind ? (x ^ all) : x;
  // The two halves are always the 0- and 1-kind, only the matching differs.
  return compose_at(mobius_cube(m, 0), mobius_cube(m, 1), phi, m, variant);
}

CubeGraph twisted_cube(int n) {
  if (n % 2 == 0) fail(Errc::even_dimension, "twisted cube requires odd n");
  if (n < 3) fail(Errc::dimension_too_small, "twisted cube requires n >= 3");
  if (n == 3) return make_leaf3(Variant::twisted_cube, tq3_edges());
  // TQ_n splits along bit n-2 into two copies of TQ_{n-2} (+) TQ_{n-2}.
  // A vertex keeps its local label across the matching when its low n-2 bits
  // have odd parity, and additionally flips the original top bit otherwise.
  CubeGraph quarter = twisted_cube(n - 2);
  int qm = n - 2;
  CubeGraph half_graph = compose(std::move(quarter), twisted_cube(n - 2), identity_phi(qm));
  int m = n - 1;
  std::vector<VertexId> phi(VertexId{1} << m);
  for (VertexId x = 0; x < phi.size(); x++)
    phi[x] = parity_of_low_bits(x, n - 2) ? x : x ^ (VertexId{1} << (n - 2));
  CubeGraph other = half_graph;
  return compose_at(std::move(half_graph), std::move(other), phi, n - 2, Variant::twisted_cube);
}

namespace {

CubeGraph random_generic_rec(int n, std::uint64_t& state) {
  if (n == 3) return base_thln3();
  CubeGraph left = random_generic_rec(n - 1, state);
  CubeGraph right = random_generic_rec(n - 1, state);
  std::vector<VertexId> phi = identity_phi(n - 1);
  for (std::size_t i = phi.size(); i > 1; i--) {
    std::size_t j = splitmix64(state) % i;
    std::swap(phi[i - 1], phi[j]);
  }
  return compose(std::move(left), std::move(right), phi);
}

}  // namespace

CubeGraph random_generic_thln(int n, std::uint64_t seed) {
  if (n < 3) fail(Errc::dimension_too_small, "generic THLN requires n >= 3");
  std::uint64_t state = seed;
  return random_generic_rec(n, state);
}

CubeGraph graph_from_edges(int n, Variant variant, const std::vector<Edge>& edges) {
  if (n < 3) fail(Errc::dimension_too_small, "THLN requires n >= 3");
  auto adj = adjacency_from_edges(n, edges);
  if (n == 3) {
    CubeGraph g = make_leaf3(variant, edges);
    if (g.edge_count() != 12) fail(Errc::bad_input, "3-D THLN must have 12 edges");
    if (!brute_isomorphic(g, base_thln3()))
      fail(Errc::bad_input, "3-D graph is not a THLN");
    return g;
  }
  // Infer a decomposition: find a bit whose two sides are joined by a perfect
  // matching and themselves decompose. Prefer the top bit.
  for (int axis = n - 1; axis >= 0; axis--) {
    std::vector<VertexId> phi(VertexId{1} << (n - 1), 0);
    std::vector<Edge> side_edges[2];
    bool ok = true;
    for (VertexId v = 0; ok && v < adj.size(); v++) {
      int across = 0;
      for (VertexId w : adj[v]) {
        if (bit_of(v, axis) == bit_of(w, axis)) {
          if (v < w) side_edges[bit_of(v, axis)].emplace_back(remove_bit(v, axis), remove_bit(w, axis));
        } else {
          across++;
          if (bit_of(v, axis) == 0) phi[remove_bit(v, axis)] = remove_bit(w, axis);
        }
      }
      if (across != 1) ok = false;
    }
    if (!ok) continue;
    try {
      CubeGraph left = graph_from_edges(n - 1, Variant::generic_thln, side_edges[0]);
      CubeGraph right = graph_from_edges(n - 1, Variant::generic_thln, side_edges[1]);
      return compose_at(std::move(left), std::move(right), phi, axis, variant);
    } catch (const Error&) {
      continue;
    }
  }
  fail(Errc::bad_input, "graph admits no THLN decomposition");
}

void CubeGraph::validate() const {
  VertexId count = vertex_count();
  std::size_t degree_sum = 0;
  for (VertexId v = 0; v < count; v++) {
    const auto& row = adj_[v];
    if ((int)row.size() != n_)
      fail(Errc::bad_input, "vertex " + format_label(v, n_) + " has degree " +
                                std::to_string(row.size()));
    degree_sum += row.size();
    for (VertexId w : row) {
      if (w == v) fail(Errc::bad_input, "self-loop");
      if (!has_edge(w, v)) fail(Errc::bad_input, "asymmetric adjacency");
    }
  }
  if (degree_sum != std::size_t(n_) << n_) fail(Errc::bad_input, "edge count mismatch");
  if (!connected(adj_)) fail(Errc::bad_input, "graph is not connected");

  if (n_ == 3) {
    if (!brute_isomorphic(*this, base_thln3()))
      fail(Errc::bad_input, "leaf is not the 3-D THLN");
    return;
  }

  if (!halves_[0] || !halves_[1]) fail(Errc::bad_input, "missing halves");
  // Cross edges form an involution pairing opposite sides.
  for (VertexId v = 0; v < count; v++) {
    VertexId w = cross_[v];
    if (side_of(w) == side_of(v)) fail(Errc::bad_input, "cross edge inside one half");
    if (cross_[w] != v) fail(Errc::bad_input, "cross map is not an involution");
    if (!has_edge(v, w)) fail(Errc::bad_input, "cross pair not adjacent");
  }
  // Every edge is either inside a half (and present there) or the cross pair.
  for (VertexId v = 0; v < count; v++) {
    for (VertexId w : adj_[v]) {
      if (side_of(v) != side_of(w)) {
        if (cross_[v] != w) fail(Errc::bad_input, "extra edge between halves");
      } else if (!halves_[side_of(v)]->has_edge(to_local(v), to_local(w))) {
        fail(Errc::bad_input, "edge missing from half");
      }
    }
  }
  if (halves_[0]->edge_count() + halves_[1]->edge_count() + (std::size_t{1} << (n_ - 1)) !=
      edge_count())
    fail(Errc::bad_input, "edges do not split as E(L) + E(R) + matching");
  for (int side = 0; side < 2; side++) {
    if (halves_[side]->n() != n_ - 1) fail(Errc::bad_input, "half has wrong dimension");
    halves_[side]->validate();
  }
}

VertexId SubcubeView::to_local(VertexId parent_vertex) const {
  if (parent->side_of(parent_vertex) != side)
    fail(Errc::bad_input, "vertex lies on the other side");
  return parent->to_local(parent_vertex);
}

VertexId SubcubeView::to_parent(VertexId local_vertex) const {
  if (local_vertex >= graph().vertex_count()) fail(Errc::bad_input, "local vertex out of range");
  return parent->to_global(local_vertex, side);
}

VertexId SubcubeView::cross_neighbor(VertexId parent_vertex) const {
  if (parent->side_of(parent_vertex) != side)
    fail(Errc::bad_input, "vertex lies on the other side");
  return parent->cross_of(parent_vertex);
}

std::pair<SubcubeView, SubcubeView> split(const CubeGraph& g) {
  if (g.n() < 4) fail(Errc::dimension_too_small, "split requires n >= 4");
  return {SubcubeView{&g, 0}, SubcubeView{&g, 1}};
}

VertexId cross_neighbor(const CubeGraph& g, VertexId v) {
  if (g.n() < 4) fail(Errc::dimension_too_small, "cross neighbor requires n >= 4");
  if (!g.contains_vertex(v)) fail(Errc::bad_input, "vertex out of range");
  return g.cross_of(v);
}

bool same_edge_set(const CubeGraph& a, const CubeGraph& b) {
  return a.n() == b.n() && a.edge_list() == b.edge_list();
}

namespace {

bool extend_mapping(const CubeGraph& a, const CubeGraph& b, std::vector<int>& map,
                    std::vector<char>& used, VertexId v) {
  if (v == a.vertex_count()) return true;
  for (VertexId w = 0; w < b.vertex_count(); w++) {
    if (used[w]) continue;
    bool ok = true;
    for (VertexId prev = 0; prev < v && ok; prev++)
      if (a.has_edge(v, prev) != b.has_edge(w, VertexId(map[prev]))) ok = false;
    if (!ok) continue;
    map[v] = (int)w;
    used[w] = 1;
    if (extend_mapping(a, b, map, used, v + 1)) return true;
    used[w] = 0;
    map[v] = -1;
  }
  return false;
}

}  // namespace

bool brute_isomorphic(const CubeGraph& a, const CubeGraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(a.vertex_count(), -1);
  std::vector<char> used(b.vertex_count(), 0);
  return extend_mapping(a, b, map, used, 0);
}

}  // namespace thln
