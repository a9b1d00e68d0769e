#include "thln/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace thln::oracle {

std::uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint32_t Rng::below(std::uint32_t bound) {
  std::uint64_t threshold = (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return (std::uint32_t)(r % bound);
  }
}

Validation validate_path(const CubeGraph& g, const FaultSet& f,
                         const std::vector<VertexId>& path, VertexId u, VertexId v, int l) {
  auto bad = [](std::string reason, int index) {
    return Validation{false, std::move(reason), index};
  };
  if (path.empty()) return bad("empty path", 0);
  if (path.front() != u) return bad("endpoint u mismatch", 0);
  if (path.back() != v) return bad("endpoint v mismatch", (int)path.size() - 1);
  if ((int)path.size() - 1 != l) return bad("length mismatch", (int)path.size() - 1);
  std::vector<char> seen(g.vertex_count(), 0);
  for (int i = 0; i < (int)path.size(); i++) {
    VertexId x = path[i];
    if (!g.contains_vertex(x)) return bad("vertex out of range at index " + std::to_string(i), i);
    if (f.vertex_faulty(x)) return bad("faulty vertex at index " + std::to_string(i), i);
    if (seen[x]) return bad("repeat at index " + std::to_string(i), i);
    seen[x] = 1;
    if (i > 0) {
      if (!g.has_edge(path[i - 1], x)) return bad("not adjacent at index " + std::to_string(i), i);
      if (f.edge_faulty(path[i - 1], x)) return bad("faulty edge at index " + std::to_string(i), i);
    }
  }
  return {};
}

namespace {

// Word-packed exhaustive searcher. The prunes are necessary conditions for a
// completion to exist, so a clean exhaustion is a definitive "no".
struct BruteSearch {
  int nv = 0;
  int words = 0;
  std::vector<std::uint64_t> rows;  // nv * words
  std::vector<std::uint64_t> visited;
  std::vector<VertexId> path;
  VertexId target = 0;
  std::uint64_t budget = 0;
  std::uint64_t expanded = 0;
  bool budget_hit = false;

  std::vector<std::uint64_t> frontier, reach, scratch;

  BruteSearch(const CubeGraph& g, const FaultSet& f) {
    nv = (int)g.vertex_count();
    words = (nv + 63) / 64;
    rows.assign((std::size_t)nv * words, 0);
    for (VertexId a = 0; a < (VertexId)nv; a++) {
      if (f.vertex_faulty(a)) continue;
      for (VertexId b : g.neighbors(a)) {
        if (f.vertex_faulty(b) || f.edge_faulty(a, b)) continue;
        rows[(std::size_t)a * words + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
    visited.assign(words, 0);
    for (VertexId a = 0; a < (VertexId)nv; a++)
      if (f.vertex_faulty(a)) mark(visited, a);
    frontier.resize(words);
    reach.resize(words);
    scratch.resize(words);
  }

  static void mark(std::vector<std::uint64_t>& m, VertexId v) {
    m[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  static void clear(std::vector<std::uint64_t>& m, VertexId v) {
    m[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
  static bool test(const std::vector<std::uint64_t>& m, VertexId v) {
    return (m[v / 64] >> (v % 64)) & 1;
  }
  const std::uint64_t* row(VertexId v) const { return &rows[(std::size_t)v * words]; }

  // Reachable-unvisited region from cur; false when no completion can exist.
  bool feasible(VertexId cur, int rem) {
    for (int i = 0; i < words; i++) {
      reach[i] = 0;
      frontier[i] = row(cur)[i] & ~visited[i];
    }
    bool more = true;
    while (more) {
      more = false;
      for (int i = 0; i < words; i++) reach[i] |= frontier[i];
      for (int i = 0; i < words; i++) scratch[i] = 0;
      for (int i = 0; i < words; i++) {
        std::uint64_t bits = frontier[i];
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          VertexId w = (VertexId)(i * 64 + b);
          for (int j = 0; j < words; j++) scratch[j] |= row(w)[j];
        }
      }
      for (int i = 0; i < words; i++) {
        frontier[i] = scratch[i] & ~visited[i] & ~reach[i];
        if (frontier[i]) more = true;
      }
    }
    if (!test(reach, target)) return false;
    int count = 0;
    for (int i = 0; i < words; i++) count += __builtin_popcountll(reach[i]);
    if (count < rem) return false;
    if (count == rem) {
      // Tight: every reachable vertex must appear on the path, so each one
      // except the endpoint needs two live links inside reach + cur.
      for (int i = 0; i < words; i++) scratch[i] = reach[i];
      mark(scratch, cur);
      for (int i = 0; i < words; i++) {
        std::uint64_t bits = reach[i];
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          VertexId w = (VertexId)(i * 64 + b);
          if (w == target) continue;
          int links = 0;
          for (int j = 0; j < words; j++) links += __builtin_popcountll(row(w)[j] & scratch[j]);
          if (links < 2) return false;
        }
      }
    }
    return true;
  }

  bool dfs(VertexId cur, int rem) {
    if (++expanded > budget) {
      budget_hit = true;
      return false;
    }
    if (rem == 0) return cur == target;
    if (rem == 1) {
      if (((row(cur)[target / 64] >> (target % 64)) & 1) && !test(visited, target)) {
        path.push_back(target);
        return true;
      }
      return false;
    }
    if (!feasible(cur, rem)) return false;
    for (int i = 0; i < words; i++) {
      std::uint64_t bits = row(cur)[i] & ~visited[i];
      if (i == (int)(target / 64)) bits &= ~(std::uint64_t{1} << (target % 64));
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        VertexId w = (VertexId)(i * 64 + b);
        mark(visited, w);
        path.push_back(w);
        if (dfs(w, rem - 1)) return true;
        path.pop_back();
        clear(visited, w);
        if (budget_hit) return false;
      }
    }
    return false;
  }
};

}  // namespace

SearchOutcome exists_path_of_length(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v,
                                    int l, std::uint64_t budget) {
  if (l < 1) fail(Errc::bad_input, "length must be at least 1");
  if (!g.contains_vertex(u) || !g.contains_vertex(v)) fail(Errc::bad_input, "endpoint out of range");
  SearchOutcome out;
  if (f.vertex_faulty(u) || f.vertex_faulty(v) || u == v) {
    out.status = SearchStatus::not_found;
    return out;
  }
  BruteSearch search(g, f);
  search.target = v;
  search.budget = budget;
  search.path.push_back(u);
  BruteSearch::mark(search.visited, u);
  bool found = search.dfs(u, l);
  out.expanded = search.expanded;
  if (found) {
    out.status = SearchStatus::found;
    out.path = search.path;
  } else {
    out.status = search.budget_hit ? SearchStatus::skipped : SearchStatus::not_found;
  }
  return out;
}

VerificationReport verify_spectrum(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v,
                                   std::uint64_t budget_per_length,
                                   const EngineSpectrumFn* engine) {
  int n = g.n();
  if (f.size() > n - 2) fail(Errc::budget_exceeded, "|F| exceeds n-2");
  SurvivorView view(g, f);
  if (!view.vertex_ok(u) || !view.vertex_ok(v) || u == v)
    fail(Errc::bad_input, "pair must be two distinct faultless vertices");

  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.n = n;
  report.u = u;
  report.v = v;
  report.alpha = classify_pair(view, u, v).kind == PairKind::weak ? 1 : 0;
  report.l_min = (1 << (n - 1)) - 1;
  report.l_max = (1 << n) - f.fv() - 1 - report.alpha;

  std::map<int, std::vector<VertexId>> engine_paths;
  if (engine) {
    report.cross_checked = true;
    engine_paths = (*engine)(g, f, u, v);
  }

  for (int l = report.l_min; l <= report.l_max; l++) {
    LengthOutcome entry;
    entry.l = l;
    SearchOutcome search = exists_path_of_length(g, f, u, v, l, budget_per_length);
    entry.oracle = search.status;
    switch (search.status) {
      case SearchStatus::found: report.found++; break;
      case SearchStatus::not_found: report.not_found++; break;
      case SearchStatus::skipped: report.skipped++; break;
    }
    if (engine) {
      auto it = engine_paths.find(l);
      entry.engine_found = it != engine_paths.end();
      entry.engine_valid =
          entry.engine_found && validate_path(g, f, it->second, u, v, l).ok;
      bool engine_ok = entry.engine_found && entry.engine_valid;
      if (search.status == SearchStatus::found)
        entry.agree = engine_ok;
      else if (search.status == SearchStatus::not_found)
        entry.agree = !engine_ok;
      else
        entry.agree = true;  // budget ran out; no verdict
      if (!entry.agree) report.disagreements++;
    }
    report.lengths.push_back(entry);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

// Direct reading of the weak-vertex definition, kept separate from the
// faults-module classifier so the two can check each other.
void collect_weak(const CubeGraph& g, const std::vector<VertexId>& fault_vertices,
                  const std::vector<Edge>& fault_edges, std::vector<WeakHit>& out) {
  auto vertex_faulty = [&](VertexId x) {
    return std::find(fault_vertices.begin(), fault_vertices.end(), x) != fault_vertices.end();
  };
  auto edge_faulty = [&](VertexId a, VertexId b) {
    return std::find(fault_edges.begin(), fault_edges.end(), Edge(a, b)) != fault_edges.end();
  };
  for (VertexId w = 0; w < g.vertex_count(); w++) {
    if (vertex_faulty(w)) continue;
    VertexId nbr[2] = {0, 0};
    int degree = 0;
    for (VertexId x : g.neighbors(w)) {
      if (vertex_faulty(x) || edge_faulty(w, x)) continue;
      if (degree < 2) nbr[degree] = x;
      degree++;
    }
    if (degree == 2) {
      WeakHit hit;
      hit.fault_vertices = fault_vertices;
      hit.fault_edges = fault_edges;
      hit.w = w;
      hit.pair = {std::min(nbr[0], nbr[1]), std::max(nbr[0], nbr[1])};
      out.push_back(std::move(hit));
    }
  }
}

void element_split(const CubeGraph& g, const std::vector<Edge>& all_edges,
                   const std::vector<int>& picks, std::vector<VertexId>& vertices,
                   std::vector<Edge>& edges) {
  vertices.clear();
  edges.clear();
  int nv = (int)g.vertex_count();
  for (int idx : picks) {
    if (idx < nv)
      vertices.push_back((VertexId)idx);
    else
      edges.push_back(all_edges[idx - nv]);
  }
}

double choose(int n, int k) {
  double r = 1;
  for (int i = 0; i < k; i++) r = r * (n - i) / (i + 1);
  return r;
}

constexpr double kMaxExhaustive = 200000.0;

}  // namespace

std::vector<WeakHit> exhaustive_weak_pairs(const CubeGraph& g, int k) {
  if (k < 0 || k > g.n() - 2) fail(Errc::bad_input, "k must lie in [0, n-2]");
  std::vector<Edge> all_edges = g.edge_list();
  int elems = (int)g.vertex_count() + (int)all_edges.size();
  if (choose(elems, k) > kMaxExhaustive)
    fail(Errc::enumeration_too_large,
         "C(" + std::to_string(elems) + "," + std::to_string(k) + ") fault sets; use sampling");

  std::vector<WeakHit> out;
  std::vector<int> picks(k);
  for (int i = 0; i < k; i++) picks[i] = i;
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  if (k == 0) return out;  // no faults leaves every degree at n >= 3
  for (;;) {
    element_split(g, all_edges, picks, vertices, edges);
    collect_weak(g, vertices, edges, out);
    int i = k - 1;
    while (i >= 0 && picks[i] == elems - k + i) i--;
    if (i < 0) break;
    picks[i]++;
    for (int j = i + 1; j < k; j++) picks[j] = picks[j - 1] + 1;
  }
  return out;
}

std::vector<WeakHit> sampled_weak_pairs(const CubeGraph& g, int k, int samples,
                                        std::uint64_t seed) {
  if (k < 0 || k > g.n() - 2) fail(Errc::bad_input, "k must lie in [0, n-2]");
  std::vector<Edge> all_edges = g.edge_list();
  int elems = (int)g.vertex_count() + (int)all_edges.size();
  Rng rng(seed);
  std::vector<WeakHit> out;
  std::vector<int> picks;
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (int s = 0; s < samples; s++) {
    picks.clear();
    while ((int)picks.size() < k) {
      int candidate = (int)rng.below((std::uint32_t)elems);
      if (std::find(picks.begin(), picks.end(), candidate) == picks.end())
        picks.push_back(candidate);
    }
    element_split(g, all_edges, picks, vertices, edges);
    collect_weak(g, vertices, edges, out);
  }
  return out;
}

FaultSet sample_fault_set(const CubeGraph& g, int size, Rng& rng) {
  std::vector<Edge> all_edges = g.edge_list();
  int elems = (int)g.vertex_count() + (int)all_edges.size();
  std::vector<int> picks;
  while ((int)picks.size() < size) {
    int candidate = (int)rng.below((std::uint32_t)elems);
    if (std::find(picks.begin(), picks.end(), candidate) == picks.end())
      picks.push_back(candidate);
  }
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  element_split(g, all_edges, picks, vertices, edges);
  return FaultSet::make(g, std::move(vertices), std::move(edges));
}

std::pair<VertexId, VertexId> sample_faultless_pair(const CubeGraph& g, const FaultSet& f,
                                                    Rng& rng) {
  auto draw = [&] {
    for (;;) {
      VertexId v = rng.below(g.vertex_count());
      if (!f.vertex_faulty(v)) return v;
    }
  };
  VertexId u = draw();
  for (;;) {
    VertexId v = draw();
    if (v != u) return {u, v};
  }
}

}  // namespace thln::oracle
