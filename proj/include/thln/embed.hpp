#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thln/faults.hpp"
#include "thln/graphs.hpp"

namespace thln {

struct PathResult {
  std::vector<VertexId> vertices;
  std::vector<std::string> case_trace;  // dispatch chain, e.g. "1.2", "2.1.3.1", "base", "thm1.1"
  int length() const { return (int)vertices.size() - 1; }
};

// Guaranteed window [2^{n-1}-1, 2^n - f_v - 1 - alpha] for a faultless pair,
// alpha = 1 exactly when the pair is weak.
std::pair<int, int> length_range(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v);

// A fault-free u-v path of exactly length l for any l inside length_range.
// Dispatches on the inductive case analysis; n == 5 solves exhaustively.
PathResult embed_path(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v, int l);

// The two inductive branches, exposed separately (n >= 6). embed_balanced
// covers |F^L| <= n-3 after orientation; embed_heavy_left covers |F^L| = n-2.
PathResult embed_balanced(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v, int l);
PathResult embed_heavy_left(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v, int l);

// Fault-free path of length exactly 2^n - f_v - 1, i.e. through every
// faultless vertex. Refuses weak pairs; a failed search is a theorem
// violation and surfaces as NoPathFound.
PathResult hamiltonian_path(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v);

// Exhaustive depth-first solver at the base dimension n == 5. Searches the
// requested length as-is; NoPathFound here is a definitive counterexample.
PathResult base_case_solve(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v, int l);

// One path per length across the whole guaranteed window.
std::map<int, PathResult> spectrum(const CubeGraph& g, const FaultSet& f, VertexId u, VertexId v);

}  // namespace thln
