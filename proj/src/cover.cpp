#include "indexcode/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace indexcode {
namespace {

std::vector<int> parent_path_cycle(int x, int y, const std::vector<int>& parent,
                                   const std::vector<int>& depth,
                                   const VertexSet& nbrs) {
  // x and y carry the same color, so their tree paths to the lowest common
  // ancestor plus the edge (y,x) close an odd cycle.
  std::vector<int> px, py;
  int a = x, b = y;
  while (depth[a] > depth[b]) {
    px.push_back(a);
    a = parent[a];
  }
  while (depth[b] > depth[a]) {
    py.push_back(b);
    b = parent[b];
  }
  while (a != b) {
    px.push_back(a);
    py.push_back(b);
    a = parent[a];
    b = parent[b];
  }
  px.push_back(a);  // common ancestor
  std::vector<int> cycle;
  cycle.reserve(px.size() + py.size());
  for (int v : px) cycle.push_back(nbrs[v]);
  for (auto it = py.rbegin(); it != py.rend(); ++it) cycle.push_back(nbrs[*it]);
  return cycle;
}

// Two-clique split of u's neighborhood restricted to the alive vertices.
std::variant<TwoCliques, NotQuasiLine> two_cliques_alive(
    const Digraph& g, const boost::dynamic_bitset<>& alive, int u) {
  VertexSet nbrs;
  for (auto v = alive.find_first(); v != boost::dynamic_bitset<>::npos;
       v = alive.find_next(v)) {
    const int w = static_cast<int>(v);
    if (w != u && g.row(u).test(w)) nbrs.push_back(w);
  }

  // Properly 2-color the complement of g[nbrs]; BFS per component, the
  // smallest vertex of each component takes color 0.
  const int k = static_cast<int>(nbrs.size());
  std::vector<int> color(k, -1), parent(k, -1), depth(k, 0);
  std::vector<int> queue;
  for (int start = 0; start < k; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    queue.assign(1, start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int x = queue[qi];
      for (int y = 0; y < k; ++y) {
        if (y == x || g.row(nbrs[x]).test(nbrs[y])) continue;  // complement edge only
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          return NotQuasiLine{u, parent_path_cycle(x, y, parent, depth, nbrs),
                              std::nullopt};
        }
      }
    }
  }

  TwoCliques out;
  for (int i = 0; i < k; ++i)
    (color[i] == 0 ? out.first : out.second).push_back(nbrs[i]);
  for (const VertexSet* side : {&out.first, &out.second})
    for (std::size_t i = 0; i < side->size(); ++i)
      for (std::size_t j = i + 1; j < side->size(); ++j)
        if (!g.row((*side)[i]).test((*side)[j]))
          return NotQuasiLine{u, {}, std::make_pair((*side)[i], (*side)[j])};
  return out;
}

}  // namespace

CoverResult iterative_cover_traced(const Digraph& g, const CliqueFinder& finder) {
  CoverResult res;
  VertexSet remaining = all_vertices(g);
  while (!remaining.empty()) {
    const Digraph sub = induced_subdigraph(g, remaining);
    const VertexSet local = finder(sub);
    if (local.empty())
      throw std::runtime_error(
          "clique finder returned an empty set on a non-empty digraph");
    check_vertex_set(sub, local);
    if (!is_clique(sub, local))
      throw std::runtime_error("clique finder returned a non-clique");

    VertexSet clique(local.size());
    for (std::size_t i = 0; i < local.size(); ++i)
      clique[i] = remaining[static_cast<std::size_t>(local[i])];

    VertexSet rest;
    rest.reserve(remaining.size() - clique.size());
    std::set_difference(remaining.begin(), remaining.end(), clique.begin(),
                        clique.end(), std::back_inserter(rest));
    remaining = std::move(rest);

    res.trace.push_back(
        {std::nullopt, {clique}, static_cast<int>(remaining.size())});
    res.cover.cliques.push_back(std::move(clique));
  }
  return res;
}

CliqueCover iterative_cover(const Digraph& g, const CliqueFinder& finder) {
  return iterative_cover_traced(g, finder).cover;
}

CoverResult cover_digraph(const Digraph& g) {
  CoverResult res = iterative_cover_traced(
      g, [](const Digraph& sub) { return dramsey(sub).clique; });
  res.bound = cover_bound(QFunction::directed(), g.size());
  return res;
}

CoverResult cover_graph(const Digraph& g) {
  if (!g.is_symmetric())
    throw std::invalid_argument("cover_graph requires a symmetric digraph");
  CoverResult res = iterative_cover_traced(
      g, [](const Digraph& sub) { return ramsey_undirected(sub).clique; });
  res.bound = cover_bound(QFunction::undirected(), g.size());
  return res;
}

Rational cover_bound(const QFunction& q, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("cover_bound requires n >= 0");
  Rational sum = 0;
  if (n == 0) return sum;
  const std::vector<std::int64_t> f = f_q_table(q, n);
  for (std::int64_t i = 1; i <= n; ++i)
    sum += Rational(1, f[static_cast<std::size_t>(i)]);
  return sum;
}

std::string NotQuasiLine::describe() const {
  std::string out = "vertex " + std::to_string(center) +
                    ": neighborhood does not split into two cliques";
  if (!odd_cycle.empty()) {
    out += "; odd cycle in the neighborhood complement:";
    for (int v : odd_cycle) out += " " + std::to_string(v);
  }
  if (non_adjacent)
    out += "; non-adjacent pair in a color class: " +
           std::to_string(non_adjacent->first) + "," +
           std::to_string(non_adjacent->second);
  return out;
}

std::variant<TwoCliques, NotQuasiLine> neighborhood_two_cliques(
    const Digraph& g, int u) {
  if (!g.is_symmetric())
    throw std::invalid_argument(
        "neighborhood_two_cliques requires a symmetric digraph");
  if (u < 0 || u >= g.size())
    throw std::out_of_range("vertex id out of range");
  boost::dynamic_bitset<> alive(g.size());
  alive.set();
  return two_cliques_alive(g, alive, u);
}

std::variant<CoverResult, NotQuasiLine> cover_quasiline(const Digraph& g) {
  if (!g.is_symmetric())
    throw std::invalid_argument("cover_quasiline requires a symmetric digraph");
  boost::dynamic_bitset<> alive(g.size());
  alive.set();

  CoverResult res;
  while (alive.any()) {
    const int u = static_cast<int>(alive.find_first());
    auto split = two_cliques_alive(g, alive, u);
    if (auto* witness = std::get_if<NotQuasiLine>(&split)) return *witness;
    auto& [k1, k2] = std::get<TwoCliques>(split);

    VertexSet k1u = k1;
    k1u.insert(std::lower_bound(k1u.begin(), k1u.end(), u), u);

    alive.reset(u);
    for (int v : k1) alive.reset(v);
    for (int v : k2) alive.reset(v);

    CoverStep step;
    step.pivot = u;
    step.cliques.push_back(k1u);
    res.cover.cliques.push_back(std::move(k1u));
    if (!k2.empty()) {
      step.cliques.push_back(k2);
      res.cover.cliques.push_back(std::move(k2));
    }
    step.remaining = static_cast<int>(alive.count());
    res.trace.push_back(std::move(step));
  }
  return res;
}

}  // namespace indexcode
