#include "indexcode/digraph.hpp"

#include <stdexcept>
#include <string>

namespace indexcode {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  adj_.assign(n_, boost::dynamic_bitset<>(n_));
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex id " + std::to_string(v) +
                            " out of range [0," + std::to_string(n_) + ")");
}

bool Digraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].test(v);
}

void Digraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u].set(v);
}

void Digraph::add_undirected_edge(int u, int v) {
  add_edge(u, v);
  add_edge(v, u);
}

bool Digraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[u].test(v) != adj_[v].test(u)) return false;
  return true;
}

std::size_t Digraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.count();
  return total;
}

const boost::dynamic_bitset<>& Digraph::row(int u) const {
  check_vertex(u);
  return adj_[u];
}

VertexSet Digraph::out_neighbors(int u) const {
  check_vertex(u);
  VertexSet out;
  for (int v = 0; v < n_; ++v)
    if (adj_[u].test(v)) out.push_back(v);
  return out;
}

VertexSet all_vertices(const Digraph& g) {
  VertexSet s(g.size());
  for (int v = 0; v < g.size(); ++v) s[v] = v;
  return s;
}

void check_vertex_set(const Digraph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.size())
      throw std::out_of_range("vertex id " + std::to_string(s[i]) +
                              " out of range [0," + std::to_string(g.size()) +
                              ")");
    if (i > 0 && s[i - 1] >= s[i])
      throw std::invalid_argument("vertex set must be sorted and duplicate-free");
  }
}

Digraph induced_subdigraph(const Digraph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  const int k = static_cast<int>(s.size());
  Digraph sub(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && g.row(s[i]).test(s[j])) sub.add_edge(i, j);
  return sub;
}

bool is_clique(const Digraph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.row(s[i]).test(s[j]) || !g.row(s[j]).test(s[i])) return false;
  return true;
}

bool is_acyclic(const Digraph& g, const VertexSet& s) {
  return topological_order(g, s).has_value();
}

std::optional<VertexSet> topological_order(const Digraph& g,
                                           const VertexSet& s) {
  check_vertex_set(g, s);
  boost::dynamic_bitset<> remaining(g.size());
  for (int v : s) remaining.set(v);

  VertexSet order;
  order.reserve(s.size());
  while (remaining.any()) {
    // Smallest remaining vertex with no incoming edge from the rest.
    int pick = -1;
    for (auto v = remaining.find_first(); v != boost::dynamic_bitset<>::npos;
         v = remaining.find_next(v)) {
      bool has_incoming = false;
      for (auto u = remaining.find_first();
           u != boost::dynamic_bitset<>::npos; u = remaining.find_next(u)) {
        if (u != v && g.row(static_cast<int>(u)).test(v)) {
          has_incoming = true;
          break;
        }
      }
      if (!has_incoming) {
        pick = static_cast<int>(v);
        break;
      }
    }
    if (pick < 0) return std::nullopt;  // every remaining vertex lies on a cycle
    order.push_back(pick);
    remaining.reset(pick);
  }
  return order;
}

bool is_valid_clique_cover(const Digraph& g, const CliqueCover& cover) {
  boost::dynamic_bitset<> seen(g.size());
  for (const VertexSet& c : cover.cliques) {
    if (!is_clique(g, c)) return false;
    for (int v : c) {
      if (seen.test(v)) return false;  // overlap
      seen.set(v);
    }
  }
  return seen.count() == static_cast<std::size_t>(g.size());
}

}  // namespace indexcode
