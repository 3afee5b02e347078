#include "indexcode/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "indexcode/bignum.hpp"

namespace indexcode {
namespace {

struct Deadline {
  std::chrono::steady_clock::time_point end;
  std::uint64_t ticks = 0;

  explicit Deadline(std::chrono::seconds limit)
      : end(std::chrono::steady_clock::now() + limit) {}

  void tick() {
    if ((++ticks & 4095) == 0 && std::chrono::steady_clock::now() > end)
      throw BudgetExceeded("oracle time limit exceeded");
  }
};

void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw BudgetExceeded(std::string(what) + " budget exceeded: n = " +
                         std::to_string(n) + " > " + std::to_string(cap));
  if (n > 62) throw BudgetExceeded("oracle instances are capped at 62 vertices");
}

// Vertex ids reordered by descending total degree (ties: smaller id first),
// so that branching always follows the precomputed order.
std::vector<int> degree_order(const Digraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) order[static_cast<std::size_t>(v)] = v;
  std::vector<int> deg(order.size(), 0);
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v) {
      if (u == v) continue;
      if (g.row(u).test(v)) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
      }
    }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
  });
  return order;
}

bool acyclic_mask(const std::vector<std::uint64_t>& in_mask,
                  std::uint64_t mask) {
  std::uint64_t rem = mask;
  while (rem) {
    std::uint64_t removable = 0;
    for (std::uint64_t m = rem; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if ((in_mask[static_cast<std::size_t>(v)] & rem) == 0)
        removable |= std::uint64_t(1) << v;
    }
    if (!removable) return false;
    rem &= ~removable;
  }
  return true;
}

struct MaisSearch {
  int n;
  std::vector<std::uint64_t> in_mask;  // positions follow the branch order
  int best = 0;
  Deadline deadline;

  void dfs(int idx, std::uint64_t chosen, int count) {
    deadline.tick();
    best = std::max(best, count);
    if (idx == n || count + (n - idx) <= best) return;
    const std::uint64_t bit = std::uint64_t(1) << idx;
    if (acyclic_mask(in_mask, chosen | bit)) dfs(idx + 1, chosen | bit, count + 1);
    dfs(idx + 1, chosen, count);
  }
};

struct CliqueSearch {
  std::vector<std::uint64_t> nbr;
  int best = 0;
  Deadline deadline;

  void expand(std::uint64_t cand, int size) {
    deadline.tick();
    best = std::max(best, size);
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      expand(cand & nbr[static_cast<std::size_t>(v)], size + 1);
    }
  }
};

// Max clique of the relation given by nbr masks (irreflexive, symmetric).
int max_clique_masks(std::vector<std::uint64_t> nbr, int n,
                     std::chrono::seconds limit) {
  CliqueSearch search{std::move(nbr), 0, Deadline(limit)};
  std::uint64_t all = n == 64 ? ~std::uint64_t(0)
                              : ((std::uint64_t(1) << n) - 1);
  search.expand(all, 0);
  return search.best;
}

// Exact k-colorability of the conflict relation, most-saturated-first.
struct ColorSearch {
  int n;
  int k;
  const std::vector<std::uint64_t>& adj;
  std::vector<int> color;
  std::vector<std::uint32_t> nbr_colors;  // bitmask of colors seen around v
  Deadline deadline;

  ColorSearch(int n_, int k_, const std::vector<std::uint64_t>& adj_,
              std::chrono::seconds limit)
      : n(n_), k(k_), adj(adj_), color(static_cast<std::size_t>(n_), -1),
        nbr_colors(static_cast<std::size_t>(n_), 0), deadline(limit) {}

  bool solve(int colored, int used) {
    deadline.tick();
    if (colored == n) return true;
    int v = -1, best_sat = -1, best_deg = -1;
    for (int u = 0; u < n; ++u) {
      if (color[static_cast<std::size_t>(u)] != -1) continue;
      const int sat = std::popcount(nbr_colors[static_cast<std::size_t>(u)]);
      const int deg = std::popcount(adj[static_cast<std::size_t>(u)]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        v = u;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const int limit_color = std::min(used + 1, k);  // new colors in order
    for (int c = 0; c < limit_color; ++c) {
      if (nbr_colors[static_cast<std::size_t>(v)] & (std::uint32_t(1) << c))
        continue;
      color[static_cast<std::size_t>(v)] = c;
      std::vector<int> touched;
      for (std::uint64_t m = adj[static_cast<std::size_t>(v)]; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if (!(nbr_colors[static_cast<std::size_t>(u)] & (std::uint32_t(1) << c))) {
          nbr_colors[static_cast<std::size_t>(u)] |= std::uint32_t(1) << c;
          touched.push_back(u);
        }
      }
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      color[static_cast<std::size_t>(v)] = -1;
      for (int u : touched)
        nbr_colors[static_cast<std::size_t>(u)] &= ~(std::uint32_t(1) << c);
    }
    return false;
  }
};

std::vector<std::uint64_t> bidirectional_masks(const Digraph& g) {
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.size()), 0);
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (u != v && g.row(u).test(v) && g.row(v).test(u))
        nbr[static_cast<std::size_t>(u)] |= std::uint64_t(1) << v;
  return nbr;
}

constexpr std::uint64_t kSat = std::uint64_t(1) << 62;

std::uint64_t sat_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned __int128>(n - k + i) /
        static_cast<unsigned __int128>(i);
    if (c > kSat) return kSat;  // partial values only grow from here
  }
  return static_cast<std::uint64_t>(c);
}

// Saturating Q for the two general kinds (exceeds any n <= 10^6 long before
// saturation matters).
std::uint64_t sat_q(QFunction::Kind kind, std::int64_t s, std::int64_t t) {
  const std::uint64_t b = sat_binomial(s + t - 2, s - 1);
  if (kind == QFunction::Kind::undirected) return b;
  if (t - 1 >= 62 || b > (kSat >> (t - 1))) return kSat;
  return b << (t - 1);
}

// Exact comparison Q(s,t) > n for the polynomial kind without evaluating
// the ceiling: ceil(c*(st)^a) > n iff c*(st)^a > n.
bool poly_q_gt(const QFunction& q, std::int64_t s, std::int64_t t,
               std::int64_t n) {
  const BigInt cn = numerator(q.coeff());
  const BigInt cd = denominator(q.coeff());
  const auto p = static_cast<unsigned>(numerator(q.exponent()));
  const auto qd = static_cast<unsigned>(denominator(q.exponent()));
  return pow(cn, qd) * pow(BigInt(s) * t, p) > pow(cd * n, qd);
}

}  // namespace

int brute_mais(const Digraph& g, const OracleBudget& budget) {
  check_cap(g.size(), budget.max_mais, "MAIS");
  const std::vector<int> order = degree_order(g);
  MaisSearch search{g.size(), {}, 0, Deadline(budget.time_limit)};
  search.in_mask.assign(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      if (i != j && g.row(order[j]).test(order[i]))
        search.in_mask[i] |= std::uint64_t(1) << j;
  search.dfs(0, 0, 0);
  return search.best;
}

int brute_alpha(const Digraph& g, const OracleBudget& budget) {
  if (!g.is_symmetric())
    throw std::invalid_argument("brute_alpha requires a symmetric digraph");
  check_cap(g.size(), budget.max_alpha, "independence");
  // alpha = clique number of the complement relation
  const std::uint64_t all =
      g.size() == 0 ? 0 : (std::uint64_t(1) << g.size()) - 1;
  std::vector<std::uint64_t> nbr = bidirectional_masks(g);
  for (int v = 0; v < g.size(); ++v) {
    nbr[static_cast<std::size_t>(v)] =
        all & ~nbr[static_cast<std::size_t>(v)] & ~(std::uint64_t(1) << v);
  }
  return max_clique_masks(std::move(nbr), g.size(), budget.time_limit);
}

int brute_omega(const Digraph& g, const OracleBudget& budget) {
  check_cap(g.size(), budget.max_omega, "clique");
  return max_clique_masks(bidirectional_masks(g), g.size(), budget.time_limit);
}

int brute_cc(const Digraph& g, const OracleBudget& budget) {
  check_cap(g.size(), budget.max_cc, "clique cover");
  const int n = g.size();
  if (n == 0) return 0;

  // Conflict relation: u,v cannot share a clique. Exact minimum clique
  // cover = exact chromatic number of this relation.
  std::vector<std::uint64_t> conflict(static_cast<std::size_t>(n), 0);
  const std::vector<std::uint64_t> bidir = bidirectional_masks(g);
  const std::uint64_t all = (std::uint64_t(1) << n) - 1;
  for (int v = 0; v < n; ++v)
    conflict[static_cast<std::size_t>(v)] =
        all & ~bidir[static_cast<std::size_t>(v)] & ~(std::uint64_t(1) << v);

  // Mutually conflicting vertices need distinct cliques: lower bound.
  const int lb = std::max(1, max_clique_masks(conflict, n, budget.time_limit));
  for (int k = lb; k < n; ++k) {
    ColorSearch search(n, k, conflict, budget.time_limit);
    if (search.solve(0, 0)) return k;
  }
  return n;  // singletons always work
}

int brute_mes(const GenInstance& inst, const OracleBudget& budget) {
  inst.validate();
  if (inst.m > budget.max_mes)
    throw BudgetExceeded("MES budget exceeded: m = " + std::to_string(inst.m) +
                         " > " + std::to_string(budget.max_mes));

  // State = set of blocked symbols (required or known by any receiver used
  // so far); the achievable tail length depends on nothing else.
  std::vector<std::uint32_t> block(static_cast<std::size_t>(inst.m), 0);
  for (int j = 0; j < inst.m; ++j) {
    block[static_cast<std::size_t>(j)] = std::uint32_t(1) << inst.req[j];
    for (int v : inst.side[static_cast<std::size_t>(j)])
      block[static_cast<std::size_t>(j)] |= std::uint32_t(1) << v;
  }
  std::vector<std::int8_t> memo(std::size_t(1) << inst.n, -1);
  Deadline deadline(budget.time_limit);

  auto rec = [&](auto&& self, std::uint32_t blocked) -> int {
    deadline.tick();
    auto& entry = memo[blocked];
    if (entry >= 0) return entry;
    int best = 0;
    for (int j = 0; j < inst.m; ++j) {
      if (blocked & (std::uint32_t(1) << inst.req[j])) continue;
      best = std::max(
          best, 1 + self(self, blocked | block[static_cast<std::size_t>(j)]));
    }
    entry = static_cast<std::int8_t>(best);
    return best;
  };
  return rec(rec, 0);
}

bool exhaustive_verify(const GenInstance& inst, const IndexCode& code,
                       const OracleBudget& budget) {
  inst.validate();
  if (inst.n > budget.max_verify)
    throw BudgetExceeded("verify budget exceeded: n = " +
                         std::to_string(inst.n) + " > " +
                         std::to_string(budget.max_verify));
  if (code.n != inst.n)
    throw std::invalid_argument("code and instance disagree on symbol count");

  Deadline deadline(budget.time_limit);
  Bits x(static_cast<std::size_t>(inst.n));
  std::vector<Bits> side_bits(static_cast<std::size_t>(inst.m));
  for (int j = 0; j < inst.m; ++j)
    side_bits[static_cast<std::size_t>(j)].resize(
        inst.side[static_cast<std::size_t>(j)].size());

  const std::uint64_t total = std::uint64_t(1) << inst.n;
  for (std::uint64_t msg = 0; msg < total; ++msg) {
    deadline.tick();
    for (int i = 0; i < inst.n; ++i)
      x[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>((msg >> i) & 1);
    const Bits y = encode(code, x);
    for (int j = 0; j < inst.m; ++j) {
      const VertexSet& known = inst.side[static_cast<std::size_t>(j)];
      Bits& sb = side_bits[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < known.size(); ++i)
        sb[i] = x[static_cast<std::size_t>(known[i])];
      const auto decoded = decode_receiver(inst, code, j, y, sb);
      if (!decoded || *decoded != x[static_cast<std::size_t>(inst.req[j])])
        return false;
    }
  }
  return true;
}

std::int64_t f_q_oracle(const QFunction& q, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("f_q_oracle requires n >= 0");
  const std::int64_t limit = std::max<std::int64_t>(n, 1);
  const bool poly = q.kind() == QFunction::Kind::polynomial;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t s = 1; s <= limit; ++s) {
    for (std::int64_t t = 1; t <= limit; ++t) {
      const bool gt = poly
                          ? poly_q_gt(q, s + 1, t + 1, n)
                          : sat_q(q.kind(), s + 1, t + 1) >
                                static_cast<std::uint64_t>(n);
      if (gt) {
        best = std::min(best, s * t);
        break;  // Q grows with t, so larger t only raises the product
      }
    }
  }
  return best;
}

std::vector<std::int64_t> f_q_oracle_upto(const QFunction& q,
                                          std::int64_t n_max) {
  if (n_max < 0)
    throw std::invalid_argument("f_q_oracle_upto requires n_max >= 0");
  const bool poly = q.kind() == QFunction::Kind::polynomial;

  // Same double loop as f_q_oracle, with the Q values (never larger than
  // needed: t stops at the first success for the largest n) cached across
  // the n sweep.
  std::vector<std::vector<std::uint64_t>> cache;  // cache[s-1][t-1]
  auto q_at = [&](std::int64_t s, std::int64_t t) -> std::uint64_t {
    auto& row = cache[static_cast<std::size_t>(s - 1)];
    while (static_cast<std::int64_t>(row.size()) < t)
      row.push_back(sat_q(q.kind(), s + 1,
                          static_cast<std::int64_t>(row.size()) + 2));
    return row[static_cast<std::size_t>(t - 1)];
  };

  std::vector<std::int64_t> out(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const std::int64_t limit = std::max<std::int64_t>(n, 1);
    if (!poly && static_cast<std::int64_t>(cache.size()) < limit)
      cache.resize(static_cast<std::size_t>(limit));
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t s = 1; s <= limit; ++s) {
      for (std::int64_t t = 1; t <= limit; ++t) {
        const bool gt = poly ? poly_q_gt(q, s + 1, t + 1, n)
                             : q_at(s, t) > static_cast<std::uint64_t>(n);
        if (gt) {
          best = std::min(best, s * t);
          break;
        }
      }
    }
    out[static_cast<std::size_t>(n)] = best;
  }
  return out;
}

}  // namespace indexcode
