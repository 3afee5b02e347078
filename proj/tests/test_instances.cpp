#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <variant>

#include "indexcode/cover.hpp"
#include "indexcode/digraph.hpp"
#include "indexcode/instances.hpp"
#include "indexcode/oracles.hpp"

using namespace indexcode;

TEST_CASE("splitmix64 reference vectors") {
  // Published outputs of the Steele/Lea/Flood mixer.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);

  SplitMix64 rng42(42);
  CHECK(rng42.next() == 0xbdd732262feb6e95ULL);
  CHECK(rng42.next() == 0x28efe333b266f103ULL);
  CHECK(rng42.next() == 0x47526757130f9f52ULL);

  SplitMix64 rng7(7);
  CHECK(rng7.next_unit() == doctest::Approx(0.3898297483912715).epsilon(1e-15));
  CHECK(rng7.next_unit() ==
        doctest::Approx(0.01678829452815611).epsilon(1e-15));
  CHECK(rng7.next_unit() == doctest::Approx(0.9007606806068834).epsilon(1e-15));
  CHECK(rng7.next_unit() == doctest::Approx(0.5829302930280781).epsilon(1e-15));
  // next_unit always lands in [0, 1).
  SplitMix64 probe(123);
  for (int i = 0; i < 1000; ++i) {
    const double u = probe.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("gnp digraph generator follows the documented draw order") {
  const int n = 6;
  const double p = 0.37;
  const Digraph g = gen_gnp_digraph(n, p, 99);
  SplitMix64 rng(99);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      CHECK(g.has_edge(u, v) == (rng.next_unit() < p));
    }
  // Determinism and seed sensitivity.
  CHECK(gen_gnp_digraph(n, p, 99) == g);
  CHECK(gen_gnp_digraph(n, p, 100) != g);
  // Extremes.
  CHECK(gen_gnp_digraph(5, 0.0, 1).edge_count() == 0);
  CHECK(gen_gnp_digraph(5, 1.0, 1).edge_count() == 20);
  CHECK_THROWS_AS(gen_gnp_digraph(5, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_gnp_digraph(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("gnp graph generator follows the documented draw order") {
  const int n = 7;
  const double p = 0.52;
  const Digraph g = gen_gnp_graph(n, p, 4242);
  CHECK(g.is_symmetric());
  SplitMix64 rng(4242);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      CHECK(g.has_edge(u, v) == (rng.next_unit() < p));
  CHECK(gen_gnp_graph(4, 1.0, 0) == complete_graph(4));
}

TEST_CASE("tournament generator") {
  const int n = 9;
  const Digraph g = gen_tournament(n, 17);
  SplitMix64 rng(17);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool reversed = (rng.next() & 1) != 0;
      CHECK(g.has_edge(u, v) == !reversed);
      CHECK(g.has_edge(v, u) == reversed);
    }
  // Exactly one arc per pair in some direction.
  CHECK(g.edge_count() == n * (n - 1) / 2);
}

TEST_CASE("generalized instance generator") {
  const GenInstance inst = gen_gnp_instance(4, 7, 0.5, 2026);
  CHECK_NOTHROW(inst.validate());
  CHECK(inst.n == 4);
  CHECK(inst.m == 7);
  // The first n receivers make the instance standard-prefixed.
  for (int j = 0; j < 4; ++j) CHECK(inst.req[j] == j);
  // Replay the documented draw order.
  SplitMix64 rng(2026);
  for (int j = 4; j < 7; ++j)
    CHECK(inst.req[j] == static_cast<int>(rng.next() % 4));
  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 4; ++i) {
      if (i == inst.req[j]) continue;
      CHECK(vs_contains(inst.side[j], i) == (rng.next_unit() < 0.5));
    }
  CHECK(gen_gnp_instance(4, 7, 0.5, 2026) == inst);
  CHECK_THROWS_AS(gen_gnp_instance(4, 3, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_gnp_instance(-1, 3, 0.5, 1), std::invalid_argument);

  // m == n gives a fully standard instance.
  CHECK(gen_gnp_instance(5, 5, 0.4, 9).is_standard());
}

TEST_CASE("complete graphs and line graphs") {
  const Digraph k4 = complete_graph(4);
  CHECK(k4.size() == 4);
  CHECK(k4.is_symmetric());
  CHECK(k4.edge_count() == 12);

  const LineGraph lg = line_graph(k4);
  CHECK(lg.graph.size() == 6);
  REQUIRE(lg.edge_labels.size() == 6);
  // Lexicographic edge order of K4.
  CHECK(lg.edge_labels[0] == std::pair<int, int>{0, 1});
  CHECK(lg.edge_labels[1] == std::pair<int, int>{0, 2});
  CHECK(lg.edge_labels[5] == std::pair<int, int>{2, 3});
  // {0,1} and {0,2} share endpoint 0; {0,1} and {2,3} are disjoint.
  CHECK(lg.graph.has_edge(0, 1));
  CHECK_FALSE(lg.graph.has_edge(0, 5));
  // Line graph of K4 is 4-regular on 6 vertices.
  for (int v = 0; v < 6; ++v)
    CHECK(lg.graph.out_neighbors(v).size() == 4);

  CHECK(line_graph(Digraph(3)).graph.size() == 0);
  Digraph asym(2);
  asym.add_edge(0, 1);
  CHECK_THROWS_AS(line_graph(asym), std::invalid_argument);
}

TEST_CASE("line graphs are quasi-line") {
  for (int n = 2; n <= 10; ++n) {
    const Digraph lg = line_graph(complete_graph(n)).graph;
    const auto r = cover_quasiline(lg);
    CHECK(std::holds_alternative<CoverResult>(r));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph base = gen_gnp_graph(7, 0.5, 860 + trial);
    const auto r = cover_quasiline(line_graph(base).graph);
    CHECK(std::holds_alternative<CoverResult>(r));
  }
}

TEST_CASE("kneser complement") {
  const Digraph g = kneser_complement(5);
  CHECK(g.size() == 10);  // C(5,2)
  CHECK(g == line_graph(complete_graph(5)).graph);
  CHECK(brute_alpha(kneser_complement(4)) == 2);
  CHECK(kneser_complement(2).size() == 1);
  CHECK_THROWS_AS(kneser_complement(1), std::invalid_argument);
}

TEST_CASE("digraph parsing") {
  const Digraph g = parse_digraph(
      "# a 3-cycle\n"
      "digraph 3\n"
      "e 0 1\n"
      "e 1 2\n"
      "e 2 0\n");
  CHECK(g.size() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));

  const Digraph u = parse_digraph("graph 2\ne 0 1\n");
  CHECK(u.has_edge(0, 1));
  CHECK(u.has_edge(1, 0));

  CHECK(parse_digraph("digraph 0\n").size() == 0);
  // Inline comments and blank lines are fine.
  CHECK(parse_digraph("digraph 2 # two\n\ne 0 1 # arc\n").edge_count() == 1);
}

TEST_CASE("digraph parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_digraph(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("") == 1);                            // missing header
  CHECK(line_of("grah 2\n") == 1);                    // bad keyword
  CHECK(line_of("digraph x\n") == 1);                 // bad count
  CHECK(line_of("digraph -2\n") == 1);                // negative count
  CHECK(line_of("digraph 2\ne 0 0\n") == 2);          // self-loop
  CHECK(line_of("digraph 2\ne 0 2\n") == 2);          // out of range
  CHECK(line_of("digraph 2\ne 0 1\ne 0 1\n") == 3);   // duplicate
  CHECK(line_of("graph 2\ne 0 1\ne 1 0\n") == 3);     // symmetric duplicate
  CHECK(line_of("digraph 2\ne 0\n") == 2);            // malformed edge
  CHECK(line_of("digraph 2\nf 0 1\n") == 2);          // unknown directive
  CHECK(line_of("# only\n# comments\n") == 3);        // header never arrives
}

TEST_CASE("gen instance parsing") {
  const GenInstance inst = parse_gen_instance(
      "genic 2 3\n"
      "rcv 0 0 : 1\n"
      "rcv 1 1 : 0\n"
      "rcv 2 0 :\n");
  CHECK(inst.n == 2);
  CHECK(inst.m == 3);
  CHECK(inst.req == std::vector<int>{0, 1, 0});
  CHECK(inst.side == std::vector<VertexSet>{{1}, {0}, {}});

  auto line_of = [](const std::string& text) {
    try {
      parse_gen_instance(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("genic 3 2\n") == 1);  // m < n
  CHECK(line_of("genic 1 1\nrcv 0 0 : 0\n") == 2);  // knows what it wants
  CHECK(line_of("genic 1 2\nrcv 1 0 :\n") == 2);    // numbering broken
  CHECK(line_of("genic 1 1\nrcv 0 0\n") == 2);      // ':' missing
  CHECK(line_of("genic 1 1\nrcv 0 1 :\n") == 2);    // required out of range
  CHECK(line_of("genic 1 1\n") == 2);               // receiver line missing
  CHECK(line_of("genic 2 2\nrcv 0 0 :\nrcv 1 0 :\n") == 1);  // 1 unrequired
  CHECK(line_of("genic 1 1\nrcv 0 0 :\nrcv 1 0 :\n") == 3);  // trailing
}

TEST_CASE("cover parsing") {
  int n = -1;
  const CliqueCover cover = parse_cover(
      "cover 5 3\n"
      "c 0 1\n"
      "c 2 3\n"
      "c 4\n",
      &n);
  CHECK(n == 5);
  CHECK(cover.cliques == std::vector<VertexSet>{{0, 1}, {2, 3}, {4}});

  auto line_of = [](const std::string& text) {
    try {
      parse_cover(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("cover 2 2\nc 0 1\nc 1\n") == 3);  // vertex in two cliques
  CHECK(line_of("cover 2 1\nc 0\n") == 1);         // vertex 1 uncovered
  CHECK(line_of("cover 2 1\nc 0 5\n") == 2);       // id out of range
  CHECK(line_of("cover 2 1\n") == 2);              // clique line missing
  CHECK(line_of("cover 1 1\nc 0\nc 0\n") == 3);    // trailing content
  CHECK(line_of("cover 1 -1\n") == 1);             // negative count
}

TEST_CASE("code parsing differs from covers by allowing overlap") {
  const IndexCode code = parse_code(
      "code 3 2\n"
      "x 0 1\n"
      "x 1 2\n");
  CHECK(code.n == 3);
  CHECK(code.xor_sets == std::vector<VertexSet>{{0, 1}, {1, 2}});

  try {
    parse_code("code 2 1\ny 0\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("serialization round trips") {
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph d = gen_gnp_digraph(8, 0.4, 7100 + trial);
    CHECK(parse_digraph(serialize_digraph(d)) == d);
    const Digraph g = gen_gnp_graph(8, 0.4, 7200 + trial);
    CHECK(parse_digraph(serialize_digraph(g)) == g);
    // Symmetric digraphs serialize under the 'graph' header.
    CHECK(serialize_digraph(g).rfind("graph ", 0) == 0);
    CHECK(serialize_digraph(gen_tournament(5, trial)).rfind("digraph ", 0) ==
          0);

    const GenInstance inst = gen_gnp_instance(5, 8, 0.5, 7300 + trial);
    CHECK(parse_gen_instance(serialize_gen_instance(inst)) == inst);

    const CoverResult res = cover_digraph(d);
    int n = -1;
    const CliqueCover back =
        parse_cover(serialize_cover(res.cover, 8), &n);
    CHECK(back == res.cover);
    CHECK(n == 8);

    const IndexCode code = code_from_cover(res.cover, 8);
    CHECK(parse_code(serialize_code(code)) == code);
  }
  CHECK(parse_digraph(serialize_digraph(Digraph(0))).size() == 0);
  CHECK(parse_code(serialize_code(IndexCode{})).length() == 0);
}

TEST_CASE("stream overloads match string overloads") {
  std::istringstream in("digraph 2\ne 0 1\n");
  const Digraph a = parse_digraph(in);
  const Digraph b = parse_digraph(std::string("digraph 2\ne 0 1\n"));
  CHECK(a == b);
}
