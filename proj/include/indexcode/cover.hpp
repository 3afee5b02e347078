#pragma once

// Clique-cover construction. The generic engine repeatedly asks a pluggable
// clique finder for a clique of the residual digraph and removes it; the
// concrete covers plug in the Ramsey extraction (digraphs, graphs) or the
// neighborhood bipartition (quasi-line graphs). Size guarantees are exact
// rationals of the form sum_{i=1..n} 1/f_Q(i).

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "indexcode/bignum.hpp"
#include "indexcode/digraph.hpp"
#include "indexcode/ramsey.hpp"

namespace indexcode {

struct CoverStep {
  std::optional<int> pivot;        // quasi-line pivot vertex, else unset
  std::vector<VertexSet> cliques;  // cliques appended in this iteration
  int remaining = 0;               // vertices left after the iteration
};

struct CoverResult {
  CliqueCover cover;
  std::optional<Rational> bound;  // sum_{i=1..n} 1/f_Q(i); unset for quasi-line
  std::vector<CoverStep> trace;
};

// Receives the residual digraph (vertices relabelled 0..k-1) and must return
// a non-empty clique of it.
using CliqueFinder = std::function<VertexSet(const Digraph&)>;

// Repeatedly extracts finder's clique from the shrinking residual digraph.
// Throws std::runtime_error if the finder returns an empty set or a
// non-clique on a non-empty digraph.
CliqueCover iterative_cover(const Digraph& g, const CliqueFinder& finder);
CoverResult iterative_cover_traced(const Digraph& g, const CliqueFinder& finder);

// Ramsey-based covers. |cover| <= cover_bound(kind, n) * (MAIS resp. alpha).
CoverResult cover_digraph(const Digraph& g);
CoverResult cover_graph(const Digraph& g);  // throws on non-symmetric input

// Exact rational sum_{i=1..n} 1/f_q(q, i); 0 for n = 0.
Rational cover_bound(const QFunction& q, std::int64_t n);

// Certificate that a vertex neighborhood does not split into two cliques.
struct NotQuasiLine {
  int center = -1;             // vertex whose neighborhood failed
  std::vector<int> odd_cycle;  // odd cycle in the neighborhood complement
  std::optional<std::pair<int, int>> non_adjacent;  // bad pair in a color class
  std::string describe() const;
};

using TwoCliques = std::pair<VertexSet, VertexSet>;

// Partitions N(u) into two cliques by 2-coloring the complement of g[N(u)]
// (per complement component, the smallest vertex takes color 0), or returns
// the NotQuasiLine witness. Throws on non-symmetric input.
std::variant<TwoCliques, NotQuasiLine> neighborhood_two_cliques(
    const Digraph& g, int u);

// Quasi-line 2-approximation: repeatedly covers the closed neighborhood of
// the smallest remaining vertex u with (K1 + u, K2); at most 2 cliques per
// pivot and the pivots form an independent set, so |cover| <= 2*alpha(g).
// The trace records one step per pivot.
std::variant<CoverResult, NotQuasiLine> cover_quasiline(const Digraph& g);

}  // namespace indexcode
