#pragma once

// Ramsey-type bound functions Q(s,t), the derived minimization f_Q, and the
// recursive clique / acyclic-set extraction for digraphs and graphs.
//
//   directed   Q(s,t) = C(s+t-2, s-1) * 2^(t-1)
//   undirected Q(s,t) = C(s+t-2, s-1)
//   polynomial Q(s,t) = ceil(c * (s*t)^a),  c > 0 rational, a >= 1 rational
//
// f_Q(n) = min { s*t : s,t >= 1, Q(s+1,t+1) > n } drives the size of the
// clique extracted per cover iteration.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "indexcode/bignum.hpp"
#include "indexcode/digraph.hpp"

namespace indexcode {

class QFunction {
 public:
  enum class Kind { directed, undirected, polynomial };

  static QFunction directed();
  static QFunction undirected();
  // Throws std::invalid_argument unless c > 0, a >= 1 and the bounded f_q
  // search is sound for these parameters, i.e. Q(n+1,2) > n for every n >= 1
  // (verified exactly at construction).
  static QFunction polynomial(const Rational& c, const Rational& a);

  Kind kind() const { return kind_; }
  const Rational& coeff() const { return c_; }
  const Rational& exponent() const { return a_; }

 private:
  QFunction(Kind kind, Rational c, Rational a)
      : kind_(kind), c_(std::move(c)), a_(std::move(a)) {}

  Kind kind_;
  Rational c_;  // polynomial kind only
  Rational a_;
};

// Exact Q value; throws std::invalid_argument when s or t < 1.
BigInt q_eval(const QFunction& q, std::int64_t s, std::int64_t t);

// min { s*t : Q(s+1,t+1) > n } over s,t >= 1. The minimum is always
// attained with s,t <= max(n,1) because Q(n+1,2) > n for every supported
// kind (checked when the QFunction is built).
std::int64_t f_q(const QFunction& q, std::int64_t n);

// Batch variant: entry i holds f_q(q, i) for 0 <= i <= n_max.
std::vector<std::int64_t> f_q_table(const QFunction& q, std::int64_t n_max);

struct RamseyPair {
  VertexSet clique;
  VertexSet acyclic;
};

// Recursive extraction on a digraph: returns (C, I) with C a clique of g,
// g[I] acyclic, and Q_directed(|C|+1, |I|+1) > n. Deterministic: the pivot
// is always the smallest remaining original id, and among equal-size
// candidates the first of (C1+u, C2, C3) resp. (I1, I2+u, I3+u) wins.
// recursive_calls, when given, receives the number of recursive invocations
// on non-empty vertex sets (always <= n).
RamseyPair dramsey(const Digraph& g, std::size_t* recursive_calls = nullptr);

// Undirected analogue on a symmetric digraph: returns (C, I) with I an
// independent set and Q_undirected(|C|+1, |I|+1) > n. Throws
// std::invalid_argument on non-symmetric input.
RamseyPair ramsey_undirected(const Digraph& g,
                             std::size_t* recursive_calls = nullptr);

}  // namespace indexcode
