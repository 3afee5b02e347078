#include "indexcode/ramsey.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace indexcode {
namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the partial product is C(n-k+i, i)
  }
  return result;
}

// ceil(c * m^a) for rational c = cn/cd > 0 and a = p/q >= 1: the smallest
// k >= 1 with (k*cd)^q >= cn^q * m^p.
BigInt poly_ceil(const BigInt& cn, const BigInt& cd, std::int64_t p,
                 std::int64_t q, const BigInt& m) {
  const BigInt rhs = pow(cn, static_cast<unsigned>(q)) *
                     pow(m, static_cast<unsigned>(p));
  auto ge_rhs = [&](const BigInt& k) {
    return pow(k * cd, static_cast<unsigned>(q)) >= rhs;
  };
  BigInt hi = 1;
  while (!ge_rhs(hi)) hi <<= 1;
  BigInt lo = hi >> 1;  // lo fails (or is 0), hi succeeds
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) >> 1;
    if (ge_rhs(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

struct PolyParams {
  BigInt cn, cd;     // c = cn/cd, both positive
  std::int64_t p, q;  // a = p/q in lowest terms, p >= q >= 1
};

PolyParams poly_params(const QFunction& qf) {
  PolyParams out;
  out.cn = numerator(qf.coeff());
  out.cd = denominator(qf.coeff());
  out.p = static_cast<std::int64_t>(numerator(qf.exponent()));
  out.q = static_cast<std::int64_t>(denominator(qf.exponent()));
  return out;
}

// Exact check of Q_poly(n+1, 2) > n, i.e. c * (2(n+1))^a > n.
bool poly_search_bound_holds_at(const PolyParams& pp, std::int64_t n) {
  const BigInt lhs = pow(pp.cn, static_cast<unsigned>(pp.q)) *
                     pow(BigInt(2 * (n + 1)), static_cast<unsigned>(pp.p));
  const BigInt rhs = pow(pp.cd * n, static_cast<unsigned>(pp.q));
  return lhs > rhs;
}

template <typename Pair>
Pair& first_max(std::array<Pair, 3>& cands, std::size_t count) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < count; ++i)
    if (cands[i].size() > cands[best].size()) best = i;
  return cands[best];
}

VertexSet prepend(int u, VertexSet s) {
  s.insert(s.begin(), u);  // u is smaller than every member
  return s;
}

RamseyPair dramsey_rec(const Digraph& g, const VertexSet& verts,
                       std::size_t& calls) {
  if (verts.empty()) return {};
  ++calls;
  const int u = verts.front();
  VertexSet v1, v2, v3;  // both directions / only v->u / the rest
  for (std::size_t i = 1; i < verts.size(); ++i) {
    const int v = verts[i];
    const bool uv = g.row(u).test(v);
    const bool vu = g.row(v).test(u);
    if (uv && vu)
      v1.push_back(v);
    else if (vu)
      v2.push_back(v);
    else
      v3.push_back(v);
  }
  RamseyPair r1 = dramsey_rec(g, v1, calls);
  RamseyPair r2 = dramsey_rec(g, v2, calls);
  RamseyPair r3 = dramsey_rec(g, v3, calls);

  // u extends the clique of the bidirectional part; it precedes the acyclic
  // sets of the other parts (no edge u->v there, so u is a valid source).
  std::array<VertexSet, 3> cliques = {prepend(u, std::move(r1.clique)),
                                      std::move(r2.clique),
                                      std::move(r3.clique)};
  std::array<VertexSet, 3> acyclics = {std::move(r1.acyclic),
                                       prepend(u, std::move(r2.acyclic)),
                                       prepend(u, std::move(r3.acyclic))};
  return {std::move(first_max(cliques, 3)), std::move(first_max(acyclics, 3))};
}

RamseyPair ramsey_undirected_rec(const Digraph& g, const VertexSet& verts,
                                 std::size_t& calls) {
  if (verts.empty()) return {};
  ++calls;
  const int u = verts.front();
  VertexSet v1, v2;  // neighbors / non-neighbors
  for (std::size_t i = 1; i < verts.size(); ++i) {
    const int v = verts[i];
    (g.row(u).test(v) ? v1 : v2).push_back(v);
  }
  RamseyPair r1 = ramsey_undirected_rec(g, v1, calls);
  RamseyPair r2 = ramsey_undirected_rec(g, v2, calls);

  std::array<VertexSet, 3> cliques = {prepend(u, std::move(r1.clique)),
                                      std::move(r2.clique)};
  std::array<VertexSet, 3> independents = {std::move(r1.acyclic),
                                           prepend(u, std::move(r2.acyclic))};
  return {std::move(first_max(cliques, 2)),
          std::move(first_max(independents, 2))};
}

}  // namespace

QFunction QFunction::directed() {
  // Q(n+1,2) = C(n,n) * 2 * (n+1) / ... = 2(n+1) > n for every n >= 1, so
  // the bounded f_q search is always sound for this kind.
  return QFunction(Kind::directed, Rational(0), Rational(0));
}

QFunction QFunction::undirected() {
  // Q(n+1,2) = C(n+1,n) = n+1 > n: bounded search sound.
  return QFunction(Kind::undirected, Rational(0), Rational(0));
}

QFunction QFunction::polynomial(const Rational& c, const Rational& a) {
  if (c <= 0) throw std::invalid_argument("polynomial Q needs c > 0");
  if (a < 1) throw std::invalid_argument("polynomial Q needs a >= 1");
  QFunction qf(Kind::polynomial, c, a);

  // The bounded search in f_q requires Q(n+1,2) > n for all n >= 1, i.e.
  // u(n) = c*(2(n+1))^a / n > 1 everywhere. u is unimodal with its real
  // minimum at x = 1/(a-1) (decreasing before, increasing after), so it
  // suffices to check the integers adjacent to x exactly. For a = 1, u
  // decreases towards 2c, so the condition holds iff 2c >= 1.
  PolyParams pp = poly_params(qf);
  std::vector<std::int64_t> candidates;
  if (pp.p == pp.q) {
    if (2 * c < 1)
      throw std::invalid_argument(
          "polynomial Q with a = 1 needs c >= 1/2 for a sound f_q search");
    candidates = {1};
  } else {
    const std::int64_t floor_x = pp.q / (pp.p - pp.q);  // x = q/(p-q)
    for (std::int64_t n : {std::int64_t(1), floor_x, floor_x + 1})
      if (n >= 1) candidates.push_back(n);
  }
  for (std::int64_t n : candidates)
    if (!poly_search_bound_holds_at(pp, n))
      throw std::invalid_argument(
          "polynomial Q parameters violate Q(n+1,2) > n at n = " +
          std::to_string(n) + "; f_q search bound would be unsound");
  return qf;
}

BigInt q_eval(const QFunction& q, std::int64_t s, std::int64_t t) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("q_eval requires s, t >= 1");
  switch (q.kind()) {
    case QFunction::Kind::directed:
      return binomial(s + t - 2, s - 1) << static_cast<unsigned>(t - 1);
    case QFunction::Kind::undirected:
      return binomial(s + t - 2, s - 1);
    case QFunction::Kind::polynomial: {
      PolyParams pp = poly_params(q);
      return poly_ceil(pp.cn, pp.cd, pp.p, pp.q, BigInt(s) * t);
    }
  }
  throw std::logic_error("unreachable");
}

std::int64_t f_q(const QFunction& q, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("f_q requires n >= 0");
  const std::int64_t limit = std::max<std::int64_t>(n, 1);

  // Walk the staircase t_min(s) = min { t : Q(s+1,t+1) > n }, which is
  // non-increasing in s because Q is monotone in each argument.
  std::int64_t t = 1;
  while (t <= limit && q_eval(q, 2, t + 1) <= n) ++t;
  if (t > limit)
    throw std::logic_error("f_q search bound violated");  // excluded at construction
  std::int64_t best = t;  // s = 1
  for (std::int64_t s = 2; s <= limit && s < best; ++s) {
    while (t > 1 && q_eval(q, s + 1, t) > n) --t;
    best = std::min(best, s * t);
  }
  return best;
}

std::vector<std::int64_t> f_q_table(const QFunction& q, std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("f_q_table requires n_max >= 0");
  // f_q(n) = min { p : M(p) > n } where M(p) = max over factorizations
  // p = s*t of Q(s+1,t+1); rolling over the prefix maximum of M makes the
  // minimum monotone, so a single two-pointer sweep fills the table.
  std::vector<BigInt> prefix_max;  // prefix_max[p-1] = max_{p' <= p} M(p')
  auto extend = [&](std::int64_t p) {
    BigInt m = prefix_max.empty() ? BigInt(0) : prefix_max.back();
    for (std::int64_t s = 1; s * s <= p; ++s) {
      if (p % s != 0) continue;
      const std::int64_t t = p / s;
      m = std::max(m, q_eval(q, s + 1, t + 1));
      m = std::max(m, q_eval(q, t + 1, s + 1));
    }
    prefix_max.push_back(std::move(m));
  };

  std::vector<std::int64_t> table(static_cast<std::size_t>(n_max) + 1);
  std::int64_t p = 1;
  extend(1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    while (prefix_max[static_cast<std::size_t>(p - 1)] <= n) {
      ++p;
      extend(p);
    }
    table[static_cast<std::size_t>(n)] = p;
  }
  return table;
}

RamseyPair dramsey(const Digraph& g, std::size_t* recursive_calls) {
  std::size_t calls = 0;
  RamseyPair out = dramsey_rec(g, all_vertices(g), calls);
  if (recursive_calls) *recursive_calls = calls;
  return out;
}

RamseyPair ramsey_undirected(const Digraph& g, std::size_t* recursive_calls) {
  if (!g.is_symmetric())
    throw std::invalid_argument("ramsey_undirected requires a symmetric digraph");
  std::size_t calls = 0;
  RamseyPair out = ramsey_undirected_rec(g, all_vertices(g), calls);
  if (recursive_calls) *recursive_calls = calls;
  return out;
}

}  // namespace indexcode
