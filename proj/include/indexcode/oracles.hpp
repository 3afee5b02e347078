#pragma once

// Brute-force ground truth, deliberately sharing no code with the
// algorithms it checks: exact MAIS / independence / clique numbers, exact
// clique-cover number, exact MES, exhaustive semantic code verification,
// and a naive re-computation of f_Q. Everything is exponential and budgeted.

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "indexcode/digraph.hpp"
#include "indexcode/index_coding.hpp"
#include "indexcode/ramsey.hpp"

namespace indexcode {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  int max_mais = 24;
  int max_alpha = 24;
  int max_omega = 24;
  int max_cc = 18;
  int max_mes = 12;
  int max_verify = 16;
  std::chrono::seconds time_limit{600};
};

// Maximum size of a vertex set inducing an acyclic sub-digraph.
int brute_mais(const Digraph& g, const OracleBudget& budget = {});

// Exact independence number (symmetric input only) / clique number (any
// digraph, clique in the bidirectional sense).
int brute_alpha(const Digraph& g, const OracleBudget& budget = {});
int brute_omega(const Digraph& g, const OracleBudget& budget = {});

// Exact minimum clique cover, via exact coloring of the conflict relation
// "u,v not joined in both directions".
int brute_cc(const Digraph& g, const OracleBudget& budget = {});

// Maximum length of an expanding receiver sequence.
int brute_mes(const GenInstance& inst, const OracleBudget& budget = {});

// Checks decode_receiver against every message and receiver.
bool exhaustive_verify(const GenInstance& inst, const IndexCode& code,
                       const OracleBudget& budget = {});

// Naive f_Q: plain double loop over s, then t ascending; the first t with
// Q(s+1,t+1) > n already gives the smallest product for that s.
std::int64_t f_q_oracle(const QFunction& q, std::int64_t n);

// Batch of f_q_oracle(q, 0..n_max) sharing one Q table across calls.
std::vector<std::int64_t> f_q_oracle_upto(const QFunction& q,
                                          std::int64_t n_max);

}  // namespace indexcode
