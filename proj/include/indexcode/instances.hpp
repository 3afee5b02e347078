#pragma once

// Seeded instance generators and the line-based text formats. All
// randomness comes from a locally implemented SplitMix64 (Steele, Lea &
// Flood's 64-bit mixer), so identical seeds give identical instances on
// every platform; the draw order per generator is part of the contract.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indexcode/digraph.hpp"
#include "indexcode/index_coding.hpp"

namespace indexcode {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 significant bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// One next_unit() draw per ordered pair (u,v), u != v, in lexicographic
// order; edge present iff the draw is < p.
Digraph gen_gnp_digraph(int n, double p, std::uint64_t seed);

// One draw per unordered pair {u,v}, u < v, lexicographic; both directions
// added together.
Digraph gen_gnp_graph(int n, double p, std::uint64_t seed);

// One next() draw per unordered pair, lexicographic; low bit 0 orients
// u -> v, low bit 1 orients v -> u.
Digraph gen_tournament(int n, std::uint64_t seed);

// Generalized instance: receivers 0..n-1 require their own symbol (so every
// symbol is required); each receiver j >= n requires next() % n. Side sets
// then take one next_unit() draw per candidate symbol in ascending order.
GenInstance gen_gnp_instance(int n, int m, double p, std::uint64_t seed);

struct LineGraph {
  Digraph graph;
  std::vector<std::pair<int, int>> edge_labels;  // vertex k = this edge of g
};

// Vertices are the edges {u,v} (u < v) of a symmetric g in lexicographic
// order, adjacent iff they share an endpoint.
LineGraph line_graph(const Digraph& g);

Digraph complete_graph(int n);

// Complement of the Kneser graph K(n,2) = line graph of K_n; needs n >= 2.
Digraph kneser_complement(int n);

struct ParseError : std::runtime_error {
  int line;

  ParseError(int line_no, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + reason),
        line(line_no) {}
};

// Formats ('#' starts a comment, blank lines ignored):
//   digraph <n> | graph <n>   then  e <u> <v>     (graph lines symmetrize)
//   genic <n> <m>             then  rcv <j> <r> : <i1> <i2> ...
//   cover <n> <k>             then  c <v1> <v2> ...
//   code <n> <k>              then  x <v1> <v2> ...
Digraph parse_digraph(std::istream& in);
GenInstance parse_gen_instance(std::istream& in);
CliqueCover parse_cover(std::istream& in, int* n_out = nullptr);
IndexCode parse_code(std::istream& in);

Digraph parse_digraph(const std::string& text);
GenInstance parse_gen_instance(const std::string& text);
CliqueCover parse_cover(const std::string& text, int* n_out = nullptr);
IndexCode parse_code(const std::string& text);

std::string serialize_digraph(const Digraph& g);
std::string serialize_gen_instance(const GenInstance& inst);
std::string serialize_cover(const CliqueCover& cover, int n);
std::string serialize_code(const IndexCode& code);

}  // namespace indexcode
