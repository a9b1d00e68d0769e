#include "thln/embed.hpp"

#include <algorithm>
#include <cassert>

namespace thln {

namespace {

// ---------------------------------------------------------------- search

// Depth-first search with backtracking and branch-and-bound pruning, used
// for the base dimension and for Hamiltonian-length requests. Unbounded:
// the lengths we ask for are theorem-guaranteed, so exhaustion means a
// theorem violation and is reported by the caller.
struct GuidedSearch {
  int nv = 0;
  int words = 0;
  std::vector<std::uint64_t> adj;  // nv rows of `words` mask words
  std::vector<std::uint64_t> visited, frontier, reach, region;
  std::vector<VertexId> path;
  VertexId goal = 0;

  GuidedSearch(const CubeGraph& g, const FaultSet& f) {
    nv = (int)g.vertex_count();
    words = (nv + 63) / 64;
    adj.assign((std::size_t)nv * words, 0);
    for (VertexId a = 0; a < (VertexId)nv; a++) {
      if (f.vertex_faulty(a)) continue;
      for (VertexId b : g.neighbors(a))
        if (!f.vertex_faulty(b) && !f.edge_faulty(a, b))
          adj[(std::size_t)a * words + b / 64] |= std::uint64_t{1} << (b % 64);
    }
    visited.assign(words, 0);
    for (VertexId a = 0; a < (VertexId)nv; a++)
      if (f.vertex_faulty(a)) set_bit(visited, a);
    frontier.resize(words);
    reach.resize(words);
    region.resize(words);
  }

  static void set_bit(std::vector<std::uint64_t>& m, VertexId v) {
    m[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  static void clear_bit(std::vector<std::uint64_t>& m, VertexId v) {
    m[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
  static bool get_bit(const std::vector<std::uint64_t>& m, VertexId v) {
    return (m[v / 64] >> (v % 64)) & 1;
  }
  const std::uint64_t* row(VertexId v) const { return &adj[(std::size_t)v * words]; }

  int free_degree(VertexId v) const {
    int d = 0;
    for (int i = 0; i < words; i++) d += __builtin_popcountll(row(v)[i] & ~visited[i]);
    return d;
  }

  // Unvisited region reachable from cur must contain the goal, enough
  // vertices for the remaining steps, and, when every one of them is
  // needed, no vertex that cannot serve as an interior stop.
  bool can_complete(VertexId cur, int rem) {
    for (int i = 0; i < words; i++) {
      reach[i] = 0;
      frontier[i] = row(cur)[i] & ~visited[i];
    }
    for (;;) {
      bool grew = false;
      for (int i = 0; i < words; i++)
        if (frontier[i]) {
          reach[i] |= frontier[i];
          grew = true;
        }
      if (!grew) break;
      for (int i = 0; i < words; i++) region[i] = 0;
      for (int i = 0; i < words; i++) {
        std::uint64_t bits = frontier[i];
        while (bits) {
          VertexId w = (VertexId)(i * 64 + __builtin_ctzll(bits));
          bits &= bits - 1;
          for (int j = 0; j < words; j++) region[j] |= row(w)[j];
        }
      }
      for (int i = 0; i < words; i++) frontier[i] = region[i] & ~visited[i] & ~reach[i];
    }
    if (!get_bit(reach, goal)) return false;
    int count = 0;
    for (int i = 0; i < words; i++) count += __builtin_popcountll(reach[i]);
    if (count < rem) return false;
    if (count == rem) {
      for (int i = 0; i < words; i++) region[i] = reach[i];
      set_bit(region, cur);
      for (int i = 0; i < words; i++) {
        std::uint64_t bits = reach[i];
        while (bits) {
          VertexId w = (VertexId)(i * 64 + __builtin_ctzll(bits));
          bits &= bits - 1;
          if (w == goal) continue;
          int links = 0;
          for (int j = 0; j < words; j++) links += __builtin_popcountll(row(w)[j] & region[j]);
          if (links < 2) return false;
        }
      }
    }
    return true;
  }

  bool extend(VertexId cur, int rem) {
    if (rem == 0) return cur == goal;
    if (rem == 1) {
      if (get_bit(visited, goal) || !((row(cur)[goal / 64] >> (goal % 64)) & 1)) return false;
      path.push_back(goal);
      return true;
    }
    if (!can_complete(cur, rem)) return false;
    // fewest-onward-moves first keeps Hamiltonian searches fast; ties break
    // toward the smaller label so results stay deterministic
    VertexId order[64];
    int degs[64];
    int cnt = 0;
    for (int i = 0; i < words; i++) {
      std::uint64_t bits = row(cur)[i] & ~visited[i];
      if (i == (int)(goal / 64)) bits &= ~(std::uint64_t{1} << (goal % 64));
      while (bits) {
        VertexId w = (VertexId)(i * 64 + __builtin_ctzll(bits));
        bits &= bits - 1;
        order[cnt] = w;
        degs[cnt] = free_degree(w);
        cnt++;
      }
    }
    for (int i = 1; i < cnt; i++)
      for (int j = i; j > 0 && (degs[j] < degs[j - 1] ||
                                (degs[j] == degs[j - 1] && order[j] < order[j - 1]));
           j--) {
        std::swap(degs[j], degs[j - 1]);
        std::swap(order[j], order[j - 1]);
      }
    for (int i = 0; i < cnt; i++) {
      VertexId w = order[i];
      set_bit(visited, w);
      path.push_back(w);
      if (extend(w, rem - 1)) return true;
      path.pop_back();
      clear_bit(visited, w);
    }
    return false;
  }
};

std::string describe_instance(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v,
                              int l) {
  std::string s = std::string(variant_name(g.variant())) + " n=" + std::to_string(g.n()) +
                  " u=" + format_label(u, g.n()) + " v=" + format_label(v, g.n()) +
                  " l=" + std::to_string(l) + " Fv={";
  for (VertexId x : f.vertices()) s += format_label(x, g.n()) + ",";
  s += "} Fe={";
  for (const Edge& e : f.edges())
    s += format_label(e.a, g.n()) + "-" + format_label(e.b, g.n()) + ",";
  s += "}";
  return s;
}

std::vector<VertexId> search_exact(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v,
                                   int l) {
  GuidedSearch search(g, f);
  search.goal = v;
  search.path.push_back(u);
  GuidedSearch::set_bit(search.visited, u);
  if (!search.extend(u, l))
    fail(Errc::no_path_found, "search exhausted: " + describe_instance(g, f, u, v, l));
  return search.path;
}

// --------------------------------------------------- oriented decomposition

// The two halves with fault bookkeeping, after the |F^R| <= |F^L| reorder.
// Role 0 plays L, role 1 plays R; `l_side` records which concrete side that is.
struct Halves {
  const CubeGraph* g = nullptr;
  int l_side = 0;
  FaultSet part_faults[2];  // in local labels
  int counts[2] = {0, 0};   // |F^L|, |F^R| (vertices + inner edges)

  const CubeGraph& part(int role) const { return g->half(role == 0 ? l_side : 1 - l_side); }
  int role_of(VertexId v) const { return g->side_of(v) == l_side ? 0 : 1; }
  VertexId loc(VertexId v) const { return g->to_local(v); }
  VertexId glob(VertexId local, int role) const {
    return g->to_global(local, role == 0 ? l_side : 1 - l_side);
  }
  VertexId cross(VertexId v) const { return g->cross_of(v); }
};

Halves orient(const CubeGraph& g, const FaultSet& f) {
  Halves h;
  h.g = &g;
  int c0 = f.count_in_side(g, 0);
  int c1 = f.count_in_side(g, 1);
  h.l_side = c1 > c0 ? 1 : 0;
  for (int role = 0; role < 2; role++) {
    int side = role == 0 ? h.l_side : 1 - h.l_side;
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    for (VertexId x : f.vertices())
      if (g.side_of(x) == side) vertices.push_back(g.to_local(x));
    for (const Edge& e : f.edges())
      if (g.side_of(e.a) == side && g.side_of(e.b) == side)
        edges.emplace_back(g.to_local(e.a), g.to_local(e.b));
    h.counts[role] = (int)(vertices.size() + edges.size());
    h.part_faults[role] = FaultSet::make(h.part(role), std::move(vertices), std::move(edges));
  }
  return h;
}

std::vector<VertexId> to_global(const Halves& h, const std::vector<VertexId>& local, int role) {
  std::vector<VertexId> out;
  out.reserve(local.size());
  for (VertexId v : local) out.push_back(h.glob(v, role));
  return out;
}

// ------------------------------------------------------------ length policy

struct Range {
  int lo, hi;
};

// Largest inside length whose remainder lands in the other window.
int pick_inner_length(int target, int connectors, Range inner, Range rest) {
  int pick = std::min(inner.hi, target - connectors - rest.lo);
  int lower = std::max(inner.lo, target - connectors - rest.hi);
  if (pick < lower)
    fail(Errc::no_path_found, "no feasible split of length " + std::to_string(target));
  return pick;
}

std::vector<VertexId> embed_rec(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v,
                                int l, std::vector<std::string>& trace);

FaultSet drop_vertex(const CubeGraph& host, const FaultSet& f, VertexId x) {
  std::vector<VertexId> vertices;
  for (VertexId y : f.vertices())
    if (y != x) vertices.push_back(y);
  return FaultSet::make(host, std::move(vertices), f.edges());
}

FaultSet vertex_faults(const CubeGraph& host, std::vector<VertexId> vertices) {
  return FaultSet::make(host, std::move(vertices), {});
}

// Path edges ordered by global label pair; each entry is the index i of edge
// (path[i], path[i+1]).
std::vector<int> edge_scan_order(const std::vector<VertexId>& global_path) {
  std::vector<int> idx((int)global_path.size() - 1);
  for (int i = 0; i < (int)idx.size(); i++) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return Edge(global_path[a], global_path[a + 1]) < Edge(global_path[b], global_path[b + 1]);
  });
  return idx;
}

template <typename It>
void append(std::vector<VertexId>& out, It first, It last) {
  out.insert(out.end(), first, last);
}

// ------------------------------------------------------------------ case 1

std::vector<VertexId> embed_balanced_rec(const Halves& h, const FaultSet& f, VertexId u,
                                         VertexId v, int l, std::vector<std::string>& trace) {
  const CubeGraph& g = *h.g;
  const int n = g.n();
  const int quarter = (1 << (n - 2)) - 1;  // 2^{n-2}-1, floor of every half window

  if (h.role_of(u) == h.role_of(v)) {
    // Case 1.1: both endpoints in one half. Build the path there, then blow
    // one of its edges up into a detour through the other half.
    trace.push_back("1.1");
    int inner = h.role_of(u);
    int outer = 1 - inner;
    int fv_inner = h.part_faults[inner].fv();
    int fv_outer = h.part_faults[outer].fv();
    Range inner_range{quarter, (1 << (n - 1)) - fv_inner - 2};
    Range outer_range{quarter, (1 << (n - 1)) - fv_outer - 1};
    int l_in = pick_inner_length(l, 1, inner_range, outer_range);
    int l_out = l - 1 - l_in;
    assert((l_in + 1) / 2 - (n - 2) >= 4);  // a clean detour edge must exist

    std::vector<VertexId> inner_path = to_global(
        h, embed_rec(h.part(inner), h.part_faults[inner], h.loc(u), h.loc(v), l_in, trace),
        inner);

    // The outer half may hold up to n-3 faults, in which case its full-length
    // paths exist only for normal pairs; reject detour edges whose cross pair
    // is the weak one.
    bool need_normal = l_out == outer_range.hi && h.counts[outer] >= n - 3;
    int chosen = -1;
    for (int i : edge_scan_order(inner_path)) {
      VertexId a = inner_path[i], b = inner_path[i + 1];
      VertexId ar = h.cross(a), br = h.cross(b);
      if (f.vertex_faulty(ar) || f.vertex_faulty(br)) continue;
      if (f.edge_faulty(a, ar) || f.edge_faulty(b, br)) continue;
      if (need_normal) {
        SurvivorView outer_view(h.part(outer), h.part_faults[outer]);
        if (classify_pair(outer_view, h.loc(ar), h.loc(br)).kind == PairKind::weak) continue;
      }
      chosen = i;
      break;
    }
    if (chosen < 0)
      fail(Errc::no_path_found, "no detour edge: " + describe_instance(g, f, u, v, l));

    VertexId ar = h.cross(inner_path[chosen]);
    VertexId br = h.cross(inner_path[chosen + 1]);
    std::vector<VertexId> outer_path = to_global(
        h, embed_rec(h.part(outer), h.part_faults[outer], h.loc(ar), h.loc(br), l_out, trace),
        outer);

    std::vector<VertexId> result;
    append(result, inner_path.begin(), inner_path.begin() + chosen + 1);
    append(result, outer_path.begin(), outer_path.end());
    append(result, inner_path.begin() + chosen + 1, inner_path.end());
    return result;
  }

  // Case 1.2: endpoints on opposite halves. Join them through a clean cross
  // edge that avoids both endpoints.
  trace.push_back("1.2");
  assert((1 << (n - 1)) - (n - 2) >= 28);  // enough cross edges to choose from
  bool swapped = h.role_of(u) != 0;
  VertexId lu = swapped ? v : u;
  VertexId rv = swapped ? u : v;
  int fv_l = h.part_faults[0].fv();
  int fv_r = h.part_faults[1].fv();
  Range left_range{quarter, (1 << (n - 1)) - fv_l - 2};
  Range right_range{quarter, (1 << (n - 1)) - fv_r - 1};
  int l_left = pick_inner_length(l, 1, left_range, right_range);
  int l_right = l - 1 - l_left;

  VertexId pick_a = 0;
  bool have = false;
  for (VertexId a = 0; a < g.vertex_count() && !have; a++) {
    if (h.role_of(a) != 0) continue;
    VertexId b = h.cross(a);
    if (a == lu || b == rv) continue;
    if (f.vertex_faulty(a) || f.vertex_faulty(b) || f.edge_faulty(a, b)) continue;
    pick_a = a;
    have = true;
  }
  if (!have) fail(Errc::no_path_found, "no usable cross edge: " + describe_instance(g, f, u, v, l));
  VertexId pick_b = h.cross(pick_a);

  std::vector<VertexId> left_path = to_global(
      h, embed_rec(h.part(0), h.part_faults[0], h.loc(lu), h.loc(pick_a), l_left, trace), 0);
  std::vector<VertexId> right_path = to_global(
      h, embed_rec(h.part(1), h.part_faults[1], h.loc(pick_b), h.loc(rv), l_right, trace), 1);

  std::vector<VertexId> result = std::move(left_path);
  append(result, right_path.begin(), right_path.end());
  if (swapped) std::reverse(result.begin(), result.end());
  return result;
}

// ------------------------------------------------------------------ case 2

std::vector<VertexId> embed_heavy_rec(const Halves& h, const FaultSet& f, VertexId u, VertexId v,
                                      int l, std::vector<std::string>& trace) {
  const CubeGraph& g = *h.g;
  const int n = g.n();
  const int quarter = (1 << (n - 2)) - 1;
  const CubeGraph& left = h.part(0);
  const CubeGraph& right = h.part(1);
  const FaultSet& fl = h.part_faults[0];
  const FaultSet empty_faults;
  const int fv = f.fv();  // every faulty vertex sits in the left half here

  if (fl.fv() >= 1) {
    // Case 2.1: some faulty vertex x. Temporarily treat it as correct, build
    // the left path through the relaxed fault set, then route around it.
    VertexId x_loc = fl.vertices().front();
    FaultSet relaxed = drop_vertex(left, fl, x_loc);
    Range left_window{quarter, (1 << (n - 1)) - fv - 1};

    bool u_in_l = h.role_of(u) == 0;
    bool v_in_l = h.role_of(v) == 0;

    if (u_in_l && v_in_l) {
      trace.push_back("2.1.1");
      Range rest{quarter, (1 << (n - 1)) - 1};
      int l_in = pick_inner_length(l, 0, left_window, rest);
      int l_r = l - l_in;
      std::vector<VertexId> pl =
          embed_rec(left, relaxed, h.loc(u), h.loc(v), l_in, trace);
      // splice position: x itself when the path uses it, else the interior
      // vertex with the smallest label
      int pos = -1;
      for (int i = 1; i + 1 < (int)pl.size(); i++)
        if (pl[i] == x_loc) {
          pos = i;
          break;
        }
      if (pos < 0) {
        pos = 1;
        for (int i = 2; i + 1 < (int)pl.size(); i++)
          if (pl[i] < pl[pos]) pos = i;
      }
      VertexId ar = h.cross(h.glob(pl[pos - 1], 0));
      VertexId br = h.cross(h.glob(pl[pos + 1], 0));
      std::vector<VertexId> pr =
          embed_rec(right, empty_faults, h.loc(ar), h.loc(br), l_r, trace);

      std::vector<VertexId> result;
      for (int i = 0; i < pos; i++) result.push_back(h.glob(pl[i], 0));
      for (VertexId w : pr) result.push_back(h.glob(w, 1));
      for (int i = pos + 1; i < (int)pl.size(); i++) result.push_back(h.glob(pl[i], 0));
      return result;
    }

    if (u_in_l != v_in_l) {
      // Case 2.1.2: endpoints split. Aim the left path at x, then leave the
      // half one step early.
      bool swapped = !u_in_l;
      VertexId lu = swapped ? v : u;
      VertexId rv = swapped ? u : v;
      Range rest{quarter + 1, (1 << (n - 1)) - 1};  // keeps both exits feasible
      int l_ux = pick_inner_length(l, 0, left_window, rest);
      std::vector<VertexId> pl = embed_rec(left, relaxed, h.loc(lu), x_loc, l_ux, trace);
      VertexId x1_loc = pl[pl.size() - 2];
      VertexId x1 = h.glob(x1_loc, 0);

      std::vector<VertexId> result;
      if (h.cross(x1) == rv) {
        trace.push_back("2.1.2.1");
        int l_r = l - l_ux - 1;
        int chosen = -1;
        std::vector<VertexId> prefix(pl.begin(), pl.end() - 1);  // u .. x1, global below
        std::vector<VertexId> prefix_global = to_global(h, prefix, 0);
        for (int i : edge_scan_order(prefix_global)) {
          VertexId a = prefix[i], b = prefix[i + 1];
          if (a == h.loc(lu) || b == h.loc(lu) || a == x1_loc || b == x1_loc) continue;
          chosen = i;
          break;
        }
        if (chosen < 0)
          fail(Errc::no_path_found, "no edge for the detour: " + describe_instance(g, f, u, v, l));
        VertexId ar = h.cross(prefix_global[chosen]);
        VertexId br = h.cross(prefix_global[chosen + 1]);
        std::vector<VertexId> pr = embed_rec(right, vertex_faults(right, {h.loc(rv)}),
                                             h.loc(ar), h.loc(br), l_r, trace);
        for (int i = 0; i <= chosen; i++) result.push_back(prefix_global[i]);
        for (VertexId w : pr) result.push_back(h.glob(w, 1));
        for (int i = chosen + 1; i < (int)prefix_global.size(); i++)
          result.push_back(prefix_global[i]);
        result.push_back(rv);
      } else {
        trace.push_back("2.1.2.2");
        int l_r = l - l_ux;
        std::vector<VertexId> pr = embed_rec(right, empty_faults, h.loc(h.cross(x1)),
                                             h.loc(rv), l_r, trace);
        for (std::size_t i = 0; i + 1 < pl.size(); i++) result.push_back(h.glob(pl[i], 0));
        for (VertexId w : pr) result.push_back(h.glob(w, 1));
      }
      if (swapped) std::reverse(result.begin(), result.end());
      return result;
    }

    // Case 2.1.3: both endpoints in the fault-free half.
    if (l == (1 << (n - 1)) - 1) {
      trace.push_back("2.1.3");
      std::vector<VertexId> pr = embed_rec(right, empty_faults, h.loc(u), h.loc(v), l, trace);
      return to_global(h, pr, 1);
    }

    Range rest{quarter + 2, (1 << (n - 1)) - 1};  // both exits, one extra connector
    bool u_blocked = fl.vertex_faulty(h.loc(h.cross(u)));
    bool v_blocked = fl.vertex_faulty(h.loc(h.cross(v)));

    if (u_blocked || v_blocked) {
      // Case 2.1.3.1: a cross neighbor of the pair is the faulty vertex.
      bool swapped = !u_blocked;
      VertexId ru = swapped ? v : u;  // its cross neighbor is faulty
      VertexId rv = swapped ? u : v;
      VertexId ul = h.cross(ru);
      trace.push_back("2.1.3.1");
      FaultSet relaxed_u = drop_vertex(left, fl, h.loc(ul));
      int l_l = pick_inner_length(l, 0, left_window, rest);

      VertexId v1 = 0;
      bool have = false;
      for (VertexId w : g.neighbors(rv)) {
        if (h.role_of(w) != 1 || w == ru) continue;
        if (fl.vertex_faulty(h.loc(h.cross(w)))) continue;
        v1 = w;
        have = true;
        break;
      }
      if (!have)
        fail(Errc::no_path_found, "no anchor neighbor: " + describe_instance(g, f, u, v, l));

      std::vector<VertexId> pl =
          embed_rec(left, relaxed_u, h.loc(ul), h.loc(h.cross(v1)), l_l, trace);
      VertexId u1 = h.glob(pl[1], 0);

      std::vector<VertexId> result;
      if (h.cross(u1) != rv) {
        int l_r = l - l_l - 2;
        std::vector<VertexId> pr =
            embed_rec(right, vertex_faults(right, {h.loc(v1), h.loc(rv)}), h.loc(ru),
                      h.loc(h.cross(u1)), l_r, trace);
        for (VertexId w : pr) result.push_back(h.glob(w, 1));
        for (std::size_t i = 1; i < pl.size(); i++) result.push_back(h.glob(pl[i], 0));
        result.push_back(v1);
        result.push_back(rv);
      } else {
        int l_r = l - l_l - 1;
        std::vector<VertexId> pr = embed_rec(right, vertex_faults(right, {h.loc(rv)}),
                                             h.loc(ru), h.loc(v1), l_r, trace);
        for (VertexId w : pr) result.push_back(h.glob(w, 1));
        for (std::size_t i = pl.size(); i-- > 1;) result.push_back(h.glob(pl[i], 0));
        result.push_back(rv);
      }
      if (swapped) std::reverse(result.begin(), result.end());
      return result;
    }

    // Case 2.1.3.2: both cross neighbors are correct vertices.
    trace.push_back("2.1.3.2");
    VertexId vl = h.cross(v);
    int l_l = pick_inner_length(l, 0, left_window, rest);
    std::vector<VertexId> pl = embed_rec(left, relaxed, x_loc, h.loc(vl), l_l, trace);
    VertexId x1 = h.glob(pl[1], 0);

    std::vector<VertexId> result;
    if (h.cross(x1) == u) {
      int l_r = l - l_l - 2;
      std::vector<VertexId> body(pl.begin() + 1, pl.end());  // x1 .. v^L
      std::vector<VertexId> body_global = to_global(h, body, 0);
      int chosen = -1;
      for (int i : edge_scan_order(body_global)) {
        VertexId a = body[i], b = body[i + 1];
        if (a == pl[1] || b == pl[1]) continue;           // x1
        if (a == body.back() || b == body.back()) continue;  // v^L
        chosen = i;
        break;
      }
      if (chosen < 0)
        fail(Errc::no_path_found, "no edge for the detour: " + describe_instance(g, f, u, v, l));
      VertexId ar = h.cross(body_global[chosen]);
      VertexId br = h.cross(body_global[chosen + 1]);
      std::vector<VertexId> pr = embed_rec(right, vertex_faults(right, {h.loc(u), h.loc(v)}),
                                           h.loc(ar), h.loc(br), l_r, trace);
      result.push_back(u);
      for (int i = 0; i <= chosen; i++) result.push_back(body_global[i]);
      for (VertexId w : pr) result.push_back(h.glob(w, 1));
      for (int i = chosen + 1; i < (int)body_global.size(); i++) result.push_back(body_global[i]);
      result.push_back(v);
    } else {
      int l_r = l - l_l - 1;
      std::vector<VertexId> pr = embed_rec(right, vertex_faults(right, {h.loc(v)}), h.loc(u),
                                           h.loc(h.cross(x1)), l_r, trace);
      for (VertexId w : pr) result.push_back(h.glob(w, 1));
      for (std::size_t i = 1; i < pl.size(); i++) result.push_back(h.glob(pl[i], 0));
      result.push_back(v);
    }
    return result;
  }

  // Case 2.2: all n-2 faults are edges. Trade one faulty edge at a minimum-
  // degree vertex for a vertex fault; the swapped set has one faulty vertex
  // and falls to case 2.1, and any path avoiding the vertex avoids the edge.
  SurvivorView view(g, f);
  int delta = view.min_survivor_degree();
  VertexId x = g.vertex_count();
  VertexId fallback = g.vertex_count();
  for (VertexId w = 0; w < g.vertex_count(); w++) {
    if (view.survivor_degree(w) != delta) continue;
    if (w != u && w != v) {
      x = w;
      break;
    }
    if (fallback == g.vertex_count()) fallback = w;
  }

  if (x < g.vertex_count()) {
    trace.push_back("2.2.1");
    Edge swap_edge{};
    bool have = false;
    for (const Edge& e : f.edges())
      if (e.a == x || e.b == x) {
        swap_edge = e;
        have = true;
        break;
      }
    if (!have) fail(Errc::no_path_found, "minimum-degree vertex has no faulty edge");
    std::vector<Edge> edges;
    for (const Edge& e : f.edges())
      if (!(e == swap_edge)) edges.push_back(e);
    FaultSet swapped_faults = FaultSet::make(g, {x}, std::move(edges));
    return embed_rec(g, swapped_faults, u, v, l, trace);
  }

  // Minimum degree only at the endpoints: swap a faulty edge at that
  // endpoint whose far end is not the other endpoint.
  trace.push_back("2.2.2");
  bool swapped = fallback == v && view.survivor_degree(u) != delta;
  VertexId eu = swapped ? v : (fallback == u ? u : v);
  VertexId ev = eu == u ? v : u;
  Edge swap_edge{};
  VertexId y = 0;
  bool have = false;
  for (const Edge& e : f.edges()) {
    if (e.a != eu && e.b != eu) continue;
    VertexId other = e.a == eu ? e.b : e.a;
    if (other == ev) continue;
    swap_edge = e;
    y = other;
    have = true;
    break;
  }
  if (!have) fail(Errc::no_path_found, "no swappable faulty edge at the endpoint");
  std::vector<Edge> edges;
  for (const Edge& e : f.edges())
    if (!(e == swap_edge)) edges.push_back(e);
  FaultSet swapped_faults = FaultSet::make(g, {y}, std::move(edges));
  std::vector<VertexId> path = embed_rec(g, swapped_faults, eu, ev, l, trace);
  if (eu != u) std::reverse(path.begin(), path.end());
  return path;
}

// ------------------------------------------------------------------ driver

std::vector<VertexId> embed_rec(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v,
                                int l, std::vector<std::string>& trace) {
  const int n = g.n();
  if (n == 5) {
    trace.push_back("base");
    return search_exact(g, f, u, v, l);
  }
  if (l == (1 << n) - f.fv() - 1) {
    // The full-length path comes straight from the fault-tolerant
    // Hamiltonian-path theorem; only a normal pair may ask for it.
    SurvivorView view(g, f);
    if (classify_pair(view, u, v).kind == PairKind::weak)
      fail(Errc::no_path_found,
           "hamiltonian length requested for a weak pair: " + describe_instance(g, f, u, v, l));
    trace.push_back("thm1.1");
    return search_exact(g, f, u, v, l);
  }
  Halves h = orient(g, f);
  if (h.counts[0] <= n - 3) return embed_balanced_rec(h, f, u, v, l, trace);
  return embed_heavy_rec(h, f, u, v, l, trace);
}

void check_result(const CubeGraph& g, const FaultSet& f, const std::vector<VertexId>& p,
                  VertexId u, VertexId v, int l) {
  bool ok = !p.empty() && p.front() == u && p.back() == v && (int)p.size() - 1 == l;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; ok && i < p.size(); i++) {
    VertexId x = p[i];
    ok = g.contains_vertex(x) && !f.vertex_faulty(x) && !seen[x];
    if (ok && i > 0) ok = g.has_edge(p[i - 1], x) && !f.edge_faulty(p[i - 1], x);
    if (ok) seen[x] = 1;
  }
  if (!ok)
    fail(Errc::no_path_found,
         "constructed path failed validation: " + describe_instance(g, f, u, v, l));
}

void check_common(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v) {
  if (!g.contains_vertex(u) || !g.contains_vertex(v)) fail(Errc::bad_input, "endpoint out of range");
  if (u == v) fail(Errc::bad_input, "endpoints must differ");
  if (f.vertex_faulty(u) || f.vertex_faulty(v))
    fail(Errc::faulty_query_vertex, "endpoint is faulty");
  if (f.size() > g.n() - 2)
    fail(Errc::budget_exceeded, "|F| = " + std::to_string(f.size()) + " exceeds n-2");
}

}  // namespace

std::pair<int, int> length_range(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v) {
  const int n = g.n();
  if (n < 5) fail(Errc::dimension_too_small, "guarantees start at n = 5");
  check_common(g, f, u, v);
  SurvivorView view(g, f);
  int alpha = classify_pair(view, u, v).kind == PairKind::weak ? 1 : 0;
  return {(1 << (n - 1)) - 1, (1 << n) - f.fv() - 1 - alpha};
}

PathResult embed_path(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v, int l) {
  auto [lo, hi] = length_range(g, f, u, v);
  if (l < lo || l > hi)
    fail(Errc::invalid_length, "l = " + std::to_string(l) + " outside [" + std::to_string(lo) +
                                   ", " + std::to_string(hi) + "]");
  PathResult result;
  result.vertices = embed_rec(g, f, u, v, l, result.case_trace);
  check_result(g, f, result.vertices, u, v, l);
  return result;
}

PathResult embed_balanced(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v, int l) {
  if (g.n() < 6) fail(Errc::dimension_too_small, "the split construction needs n >= 6");
  auto [lo, hi] = length_range(g, f, u, v);
  if (l < lo || l > hi) fail(Errc::invalid_length, "l outside the guaranteed window");
  PathResult result;
  if (l == (1 << g.n()) - f.fv() - 1) {
    result.vertices = embed_rec(g, f, u, v, l, result.case_trace);
  } else {
    Halves h = orient(g, f);
    if (h.counts[0] > g.n() - 3)
      fail(Errc::bad_input, "fault distribution belongs to the heavy-half case");
    result.vertices = embed_balanced_rec(h, f, u, v, l, result.case_trace);
  }
  check_result(g, f, result.vertices, u, v, l);
  return result;
}

PathResult embed_heavy_left(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v, int l) {
  if (g.n() < 6) fail(Errc::dimension_too_small, "the split construction needs n >= 6");
  auto [lo, hi] = length_range(g, f, u, v);
  if (l < lo || l > hi) fail(Errc::invalid_length, "l outside the guaranteed window");
  PathResult result;
  if (l == (1 << g.n()) - f.fv() - 1) {
    result.vertices = embed_rec(g, f, u, v, l, result.case_trace);
  } else {
    Halves h = orient(g, f);
    if (h.counts[0] != g.n() - 2)
      fail(Errc::bad_input, "fault distribution belongs to the balanced case");
    result.vertices = embed_heavy_rec(h, f, u, v, l, result.case_trace);
  }
  check_result(g, f, result.vertices, u, v, l);
  return result;
}

PathResult hamiltonian_path(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v) {
  check_common(g, f, u, v);
  SurvivorView view(g, f);
  if (classify_pair(view, u, v).kind == PairKind::weak)
    fail(Errc::weak_pair_requested, "no hamiltonian path joins a weak pair");
  int l = (1 << g.n()) - f.fv() - 1;
  PathResult result;
  result.case_trace.push_back("thm1.1");
  result.vertices = search_exact(g, f, u, v, l);
  check_result(g, f, result.vertices, u, v, l);
  return result;
}

PathResult base_case_solve(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v, int l) {
  if (g.n() != 5) fail(Errc::bad_input, "the base solver handles n = 5 only");
  check_common(g, f, u, v);
  if (l < 1) fail(Errc::bad_input, "length must be positive");
  PathResult result;
  result.case_trace.push_back("base");
  result.vertices = search_exact(g, f, u, v, l);
  check_result(g, f, result.vertices, u, v, l);
  return result;
}

std::map<int, PathResult> spectrum(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v) {
  auto [lo, hi] = length_range(g, f, u, v);
  std::map<int, PathResult> out;
  for (int l = lo; l <= hi; l++) {
    try {
      out.emplace(l, embed_path(g, f, u, v, l));
    } catch (const Error& e) {
      fail(e.code(), "l = " + std::to_string(l) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace thln
