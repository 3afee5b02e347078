#pragma once

// Clique-cover index codes over generalized instances: n message symbols,
// m >= n receivers, receiver j wants symbol r(j) and already knows the
// symbols in N(j). A code is an ordered list of XOR sets; receiver j can
// decode from set C when r(j) is in C and the rest of C lies in N(j).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "indexcode/cover.hpp"
#include "indexcode/digraph.hpp"

namespace indexcode {

struct GenInstance {
  int n = 0;                    // symbols
  int m = 0;                    // receivers, m >= n
  std::vector<int> req;         // r(j), size m
  std::vector<VertexSet> side;  // N(j), sorted subsets of [0,n) minus r(j)

  // Throws std::invalid_argument on any violated invariant (m < n, bad
  // ranges, r(j) in N(j), or a symbol no receiver requires).
  void validate() const;
  bool is_standard() const;  // m == n and r(j) == j for all j
  bool operator==(const GenInstance&) const = default;
};

struct IndexCode {
  int n = 0;
  std::vector<VertexSet> xor_sets;  // non-empty subsets of [0,n)

  std::size_t length() const { return xor_sets.size(); }
  bool operator==(const IndexCode&) const = default;
};

using Bits = std::vector<std::uint8_t>;

// Standard instance of a digraph: receiver j wants symbol j and knows the
// out-neighbors of j.
GenInstance standard_instance(const Digraph& g);

// One XOR set per clique, in cover order. Throws on an empty clique. When
// n is negative it is inferred as 1 + the largest vertex id in the cover
// (0 for an empty cover).
IndexCode code_from_cover(const CliqueCover& cover, int n = -1);

// output[k] = XOR of x over xor_sets[k]; throws on length mismatch.
Bits encode(const IndexCode& code, const Bits& x);

// Index of the first xor_set C with r(j) in C and C \ {r(j)} contained in
// N(j), or nullopt when receiver j cannot decode.
std::optional<std::size_t> covering_set(const GenInstance& inst,
                                        const IndexCode& code, int receiver);

// Decodes receiver j's required bit from the transmitted bits plus its side
// information (x restricted to N(j), in sorted N(j) order); nullopt when
// the code has no covering set for j.
std::optional<std::uint8_t> decode_receiver(const GenInstance& inst,
                                            const IndexCode& code, int receiver,
                                            const Bits& transmitted,
                                            const Bits& side_bits);

struct ValidationReport {
  bool ok = false;
  std::vector<int> failing_receivers;
};

// Structural validity: every receiver has a covering xor_set.
ValidationReport validate_code(const GenInstance& inst, const IndexCode& code);

// seq is expanding iff each required symbol is new: r(seq[l]) lies outside
// every earlier {r(seq[t])} union N(seq[t]).
bool is_expanding_sequence(const GenInstance& inst, const std::vector<int>& seq);

// Orders the receivers of an acyclic set s of a standard instance into an
// expanding sequence (sinks first: repeatedly take the smallest remaining
// vertex without side-information edges into the rest). Throws when inst is
// not standard or s does not induce an acyclic sub-digraph.
std::vector<int> expanding_from_acyclic(const GenInstance& inst,
                                        const VertexSet& s);

struct GenicRound {
  std::vector<int> active_symbols;  // V of the round digraph, ascending
  std::vector<int> receivers;       // j_i picked for each active symbol
  std::size_t cliques_emitted = 0;
};

struct GenicResult {
  IndexCode code;
  std::vector<GenicRound> rounds;
  std::vector<int> tail_symbols;  // symbols sent in the clear at the end
};

// Round-based generalized cover: while at least ceil(sqrt(n)) symbols are
// active, serve one receiver per active symbol through a clique cover of
// the round digraph; remaining active symbols are sent as singletons.
GenicResult genic_cover(const GenInstance& inst);

}  // namespace indexcode
