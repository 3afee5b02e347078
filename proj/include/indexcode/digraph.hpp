#pragma once

// Core digraph representation and structural predicates. Undirected graphs
// are symmetric digraphs (every edge paired with its reverse); a "clique"
// always means a set whose pairs are joined in both directions.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace indexcode {

// Sorted list of vertex ids, no duplicates.
using VertexSet = std::vector<int>;

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int size() const { return n_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void add_undirected_edge(int u, int v);
  bool is_symmetric() const;
  std::size_t edge_count() const;

  // Dense adjacency row for u: bit v set iff edge (u,v) exists.
  const boost::dynamic_bitset<>& row(int u) const;
  VertexSet out_neighbors(int u) const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<boost::dynamic_bitset<>> adj_;
};

VertexSet all_vertices(const Digraph& g);

// Throws std::invalid_argument unless s is sorted, duplicate-free and within
// range for g.
void check_vertex_set(const Digraph& g, const VertexSet& s);

inline bool vs_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Result vertex i corresponds to s[i]; the sorted set s is the id mapping
// back to g.
Digraph induced_subdigraph(const Digraph& g, const VertexSet& s);

// True iff every pair of distinct u,v in s is joined in both directions.
bool is_clique(const Digraph& g, const VertexSet& s);

// True iff g[s] has no directed cycle (a bidirectional edge is a 2-cycle).
bool is_acyclic(const Digraph& g, const VertexSet& s);

// Topological order of g[s] in original ids, or nullopt when g[s] has a
// cycle. Deterministic: repeatedly removes the smallest remaining vertex
// with no incoming edges from the rest of s.
std::optional<VertexSet> topological_order(const Digraph& g,
                                           const VertexSet& s);

struct CliqueCover {
  std::vector<VertexSet> cliques;

  std::size_t size() const { return cliques.size(); }
  bool operator==(const CliqueCover&) const = default;
};

// Partition check: cliques pairwise disjoint, union = all vertices, each a
// clique of g.
bool is_valid_clique_cover(const Digraph& g, const CliqueCover& cover);

}  // namespace indexcode
