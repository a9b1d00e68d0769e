#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thln/faults.hpp"
#include "thln/graphs.hpp"

// Brute-force ground truth. Nothing in this module calls into the embedding
// engine; the one cross-check hook in verify_spectrum takes the engine as an
// opaque callback supplied by the caller.

namespace thln::oracle {

struct Validation {
  bool ok = true;
  std::string reason;  // first violated condition
  int index = -1;      // position in the path where it failed
};

Validation validate_path(const CubeGraph& g, const FaultSet& f,
                         const std::vector<VertexId>& path, VertexId u, VertexId v, int l);

enum class SearchStatus { found, not_found, skipped };

struct SearchOutcome {
  SearchStatus status = SearchStatus::skipped;
  std::vector<VertexId> path;   // present when found
  std::uint64_t expanded = 0;   // search nodes visited
};

// Exhaustive depth-first search with admissible pruning only; `not_found` is
// definitive. Budget counts expanded nodes; 0 means "give up immediately".
SearchOutcome exists_path_of_length(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v,
                                    int l, std::uint64_t budget);

struct LengthOutcome {
  int l = 0;
  SearchStatus oracle = SearchStatus::skipped;
  bool engine_found = false;
  bool engine_valid = false;
  bool agree = true;
};

struct VerificationReport {
  int n = 0;
  VertexId u = 0, v = 0;
  int l_min = 0, l_max = 0;
  int alpha = 0;
  std::vector<LengthOutcome> lengths;
  int found = 0, not_found = 0, skipped = 0, disagreements = 0;
  double elapsed_ms = 0;
  bool cross_checked = false;
};

// Engine hook: lengths mapped to vertex sequences. Kept structural so this
// header stays independent of the engine's types.
using EngineSpectrumFn =
    std::function<std::map<int, std::vector<VertexId>>(const CubeGraph&, const FaultSet&, VertexId, VertexId)>;

VerificationReport verify_spectrum(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v,
                                   std::uint64_t budget_per_length,
                                   const EngineSpectrumFn* engine = nullptr);

struct WeakHit {
  std::vector<VertexId> fault_vertices;
  std::vector<Edge> fault_edges;
  VertexId w = 0;
  std::pair<VertexId, VertexId> pair;
};

// Sweep every k-element fault set over V + E and record, by the direct
// degree-2 definition, each vertex left with exactly two survivor neighbors.
// Refuses infeasibly large enumerations.
std::vector<WeakHit> exhaustive_weak_pairs(const CubeGraph& g, int k);

std::vector<WeakHit> sampled_weak_pairs(const CubeGraph& g, int k, int samples,
                                        std::uint64_t seed);

// Deterministic splitmix-based generator for seeded sweeps.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint32_t below(std::uint32_t bound);  // uniform in [0, bound)
};

FaultSet sample_fault_set(const CubeGraph& g, int size, Rng& rng);
std::pair<VertexId, VertexId> sample_faultless_pair(const CubeGraph& g, const FaultSet& f,
                                                    Rng& rng);

}  // namespace thln::oracle
