#include <doctest.h>

#include <stdexcept>

#include "indexcode/digraph.hpp"
#include "indexcode/instances.hpp"

using namespace indexcode;

namespace {

Digraph directed_cycle3() {
  Digraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  return g;
}

Digraph bidirectional_triangle() {
  Digraph g(3);
  g.add_undirected_edge(0, 1);
  g.add_undirected_edge(1, 2);
  g.add_undirected_edge(0, 2);
  return g;
}

}  // namespace

TEST_CASE("digraph construction and edges") {
  Digraph g(3);
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 2);
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(2, 0));
  CHECK(g.edge_count() == 1);

  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(g.has_edge(0, 5), std::out_of_range);
  CHECK_THROWS_AS(Digraph(-1), std::invalid_argument);
}

TEST_CASE("symmetry predicate") {
  Digraph g(3);
  g.add_undirected_edge(0, 1);
  CHECK(g.is_symmetric());
  g.add_edge(1, 2);
  CHECK_FALSE(g.is_symmetric());
  g.add_edge(2, 1);
  CHECK(g.is_symmetric());
  CHECK(Digraph(0).is_symmetric());
}

TEST_CASE("induced subdigraph") {
  const Digraph cycle = directed_cycle3();
  const Digraph sub = induced_subdigraph(cycle, {0, 2});
  CHECK(sub.size() == 2);
  CHECK(sub.has_edge(1, 0));  // old 2 -> old 0
  CHECK_FALSE(sub.has_edge(0, 1));
  CHECK(sub.edge_count() == 1);

  CHECK(induced_subdigraph(cycle, all_vertices(cycle)) == cycle);

  const Digraph tri = bidirectional_triangle();
  const Digraph pair = induced_subdigraph(tri, {1, 2});
  CHECK(pair.has_edge(0, 1));
  CHECK(pair.has_edge(1, 0));

  CHECK_THROWS_AS(induced_subdigraph(cycle, {0, 3}), std::out_of_range);
  CHECK_THROWS_AS(induced_subdigraph(cycle, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subdigraph(cycle, {0, 0}), std::invalid_argument);
}

TEST_CASE("clique predicate") {
  const Digraph tri = bidirectional_triangle();
  CHECK(is_clique(tri, {0, 1, 2}));

  const Digraph cycle = directed_cycle3();
  CHECK_FALSE(is_clique(cycle, {0, 1}));

  CHECK(is_clique(cycle, {1}));
  CHECK(is_clique(cycle, {}));
  CHECK_THROWS_AS(is_clique(cycle, {4}), std::out_of_range);
}

TEST_CASE("acyclicity and topological order") {
  const Digraph cycle = directed_cycle3();
  CHECK_FALSE(is_acyclic(cycle, {0, 1, 2}));
  CHECK_FALSE(topological_order(cycle, {0, 1, 2}).has_value());

  CHECK(is_acyclic(cycle, {0, 1}));
  CHECK(topological_order(cycle, {0, 1}) == VertexSet{0, 1});

  Digraph two(2);
  two.add_undirected_edge(0, 1);
  CHECK_FALSE(is_acyclic(two, {0, 1}));  // 2-cycle

  CHECK(is_acyclic(cycle, {}));
  CHECK(topological_order(cycle, {})->empty());
}

TEST_CASE("topological order is deterministic and respects edges") {
  // Two sources 0 and 2; smallest-first tie-break puts 0 before 2.
  Digraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  g.add_edge(1, 3);
  const auto order = topological_order(g, {0, 1, 2, 3});
  REQUIRE(order.has_value());
  CHECK(*order == VertexSet{0, 2, 1, 3});

  for (int trial = 0; trial < 50; ++trial) {
    const Digraph h = gen_gnp_digraph(8, 0.3, 900 + trial);
    const auto ord = topological_order(h, all_vertices(h));
    if (!ord) continue;
    std::vector<int> pos(8);
    for (int i = 0; i < 8; ++i) pos[(*ord)[i]] = i;
    for (int u = 0; u < 8; ++u)
      for (int v = 0; v < 8; ++v)
        if (u != v && h.has_edge(u, v)) CHECK(pos[u] < pos[v]);
  }
}

TEST_CASE("cliques of size >= 2 are never acyclic") {
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph g = gen_gnp_digraph(6, 0.6, 100 + trial);
    // try all pairs/triples that happen to be cliques
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        if (is_clique(g, {a, b})) CHECK_FALSE(is_acyclic(g, {a, b}));
        for (int c = b + 1; c < 6; ++c)
          if (is_clique(g, {a, b, c})) CHECK_FALSE(is_acyclic(g, {a, b, c}));
      }
  }
}

TEST_CASE("induced subdigraph preserves structural verdicts") {
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph g = gen_gnp_digraph(8, 0.5, 300 + trial);
    const VertexSet s = {1, 3, 4, 6};
    const Digraph sub = induced_subdigraph(g, s);
    CHECK(is_clique(g, s) == is_clique(sub, all_vertices(sub)));
    CHECK(is_acyclic(g, s) == is_acyclic(sub, all_vertices(sub)));
  }
}

TEST_CASE("for symmetric digraphs acyclic means independent") {
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph g = gen_gnp_graph(7, 0.4, 500 + trial);
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b) {
        const bool independent = !g.has_edge(a, b);
        CHECK(is_acyclic(g, {a, b}) == independent);
      }
  }
}

TEST_CASE("clique cover validity") {
  const Digraph tri = bidirectional_triangle();
  CHECK(is_valid_clique_cover(tri, CliqueCover{{{0, 1, 2}}}));
  CHECK(is_valid_clique_cover(tri, CliqueCover{{{0, 1}, {2}}}));
  // missing vertex
  CHECK_FALSE(is_valid_clique_cover(tri, CliqueCover{{{0, 1}}}));
  // overlap
  CHECK_FALSE(is_valid_clique_cover(tri, CliqueCover{{{0, 1}, {1, 2}}}));
  // non-clique part
  const Digraph cycle = directed_cycle3();
  CHECK_FALSE(is_valid_clique_cover(cycle, CliqueCover{{{0, 1}, {2}}}));
  CHECK(is_valid_clique_cover(cycle, CliqueCover{{{0}, {1}, {2}}}));
  CHECK(is_valid_clique_cover(Digraph(0), CliqueCover{}));
}
