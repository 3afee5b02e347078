#include "indexcode/index_coding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace indexcode {
namespace {

void check_receiver(const GenInstance& inst, int j) {
  if (j < 0 || j >= inst.m)
    throw std::out_of_range("receiver id " + std::to_string(j) +
                            " out of range [0," + std::to_string(inst.m) + ")");
}

std::int64_t isqrt_ceil(int n) {
  // ceil(sqrt(n)) without floating-point edge cases
  std::int64_t r = 0;
  while (r * r < n) ++r;
  return r;
}

}  // namespace

void GenInstance::validate() const {
  if (n < 0) throw std::invalid_argument("symbol count must be non-negative");
  if (m < n)
    throw std::invalid_argument("instance needs m >= n receivers (m = " +
                                std::to_string(m) + ", n = " +
                                std::to_string(n) + ")");
  if (static_cast<int>(req.size()) != m ||
      static_cast<int>(side.size()) != m)
    throw std::invalid_argument("req and side must both have m entries");

  std::vector<bool> required(static_cast<std::size_t>(n), false);
  for (int j = 0; j < m; ++j) {
    if (req[j] < 0 || req[j] >= n)
      throw std::invalid_argument("receiver " + std::to_string(j) +
                                  " requires out-of-range symbol " +
                                  std::to_string(req[j]));
    required[static_cast<std::size_t>(req[j])] = true;
    const VertexSet& ns = side[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (ns[i] < 0 || ns[i] >= n)
        throw std::invalid_argument("receiver " + std::to_string(j) +
                                    " has out-of-range side symbol " +
                                    std::to_string(ns[i]));
      if (i > 0 && ns[i - 1] >= ns[i])
        throw std::invalid_argument("side sets must be sorted and duplicate-free");
      if (ns[i] == req[j])
        throw std::invalid_argument("receiver " + std::to_string(j) +
                                    " already knows its required symbol");
    }
  }
  for (int i = 0; i < n; ++i)
    if (!required[static_cast<std::size_t>(i)])
      throw std::invalid_argument("no receiver requires symbol " +
                                  std::to_string(i));
}

bool GenInstance::is_standard() const {
  if (m != n) return false;
  for (int j = 0; j < m; ++j)
    if (req[j] != j) return false;
  return true;
}

GenInstance standard_instance(const Digraph& g) {
  GenInstance inst;
  inst.n = inst.m = g.size();
  inst.req.resize(inst.m);
  inst.side.resize(inst.m);
  for (int j = 0; j < inst.m; ++j) {
    inst.req[j] = j;
    inst.side[j] = g.out_neighbors(j);
  }
  return inst;
}

IndexCode code_from_cover(const CliqueCover& cover, int n) {
  IndexCode code;
  int max_id = -1;
  for (const VertexSet& c : cover.cliques) {
    if (c.empty())
      throw std::invalid_argument("cover contains an empty clique");
    max_id = std::max(max_id, c.back());
    code.xor_sets.push_back(c);
  }
  code.n = n >= 0 ? n : max_id + 1;
  if (max_id >= code.n)
    throw std::invalid_argument("cover vertex id exceeds symbol count");
  return code;
}

Bits encode(const IndexCode& code, const Bits& x) {
  if (static_cast<int>(x.size()) != code.n)
    throw std::invalid_argument("message length " + std::to_string(x.size()) +
                                " does not match symbol count " +
                                std::to_string(code.n));
  Bits out(code.length());
  for (std::size_t k = 0; k < code.xor_sets.size(); ++k) {
    std::uint8_t bit = 0;
    for (int v : code.xor_sets[k]) bit ^= x[static_cast<std::size_t>(v)];
    out[k] = bit;
  }
  return out;
}

std::optional<std::size_t> covering_set(const GenInstance& inst,
                                        const IndexCode& code, int receiver) {
  check_receiver(inst, receiver);
  const int r = inst.req[receiver];
  const VertexSet& known = inst.side[static_cast<std::size_t>(receiver)];
  for (std::size_t k = 0; k < code.xor_sets.size(); ++k) {
    const VertexSet& c = code.xor_sets[k];
    if (!vs_contains(c, r)) continue;
    bool covered = true;
    for (int v : c) {
      if (v != r && !vs_contains(known, v)) {
        covered = false;
        break;
      }
    }
    if (covered) return k;
  }
  return std::nullopt;
}

std::optional<std::uint8_t> decode_receiver(const GenInstance& inst,
                                            const IndexCode& code, int receiver,
                                            const Bits& transmitted,
                                            const Bits& side_bits) {
  check_receiver(inst, receiver);
  if (transmitted.size() != code.length())
    throw std::invalid_argument("transmitted length does not match code length");
  const VertexSet& known = inst.side[static_cast<std::size_t>(receiver)];
  if (side_bits.size() != known.size())
    throw std::invalid_argument("side bits do not match the side set size");

  const auto k = covering_set(inst, code, receiver);
  if (!k) return std::nullopt;

  const int r = inst.req[receiver];
  std::uint8_t bit = transmitted[*k];
  for (int v : code.xor_sets[*k]) {
    if (v == r) continue;
    const auto pos = std::lower_bound(known.begin(), known.end(), v);
    bit ^= side_bits[static_cast<std::size_t>(pos - known.begin())];
  }
  return bit;
}

ValidationReport validate_code(const GenInstance& inst, const IndexCode& code) {
  ValidationReport report;
  for (int j = 0; j < inst.m; ++j)
    if (!covering_set(inst, code, j)) report.failing_receivers.push_back(j);
  report.ok = report.failing_receivers.empty();
  return report;
}

bool is_expanding_sequence(const GenInstance& inst,
                           const std::vector<int>& seq) {
  std::vector<bool> blocked(static_cast<std::size_t>(inst.n), false);
  for (int j : seq) {
    check_receiver(inst, j);
    if (blocked[static_cast<std::size_t>(inst.req[j])]) return false;
    blocked[static_cast<std::size_t>(inst.req[j])] = true;
    for (int v : inst.side[static_cast<std::size_t>(j)])
      blocked[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<int> expanding_from_acyclic(const GenInstance& inst,
                                        const VertexSet& s) {
  if (!inst.is_standard())
    throw std::invalid_argument(
        "expanding_from_acyclic needs a standard instance");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= inst.n)
      throw std::out_of_range("vertex id out of range");
    if (i > 0 && s[i - 1] >= s[i])
      throw std::invalid_argument("vertex set must be sorted and duplicate-free");
  }

  // Peel sinks: always the smallest remaining vertex with no side edge into
  // the rest. Later vertices are then never side information of earlier
  // ones, which is exactly the expanding condition for a standard instance.
  std::vector<bool> remaining(static_cast<std::size_t>(inst.n), false);
  for (int v : s) remaining[static_cast<std::size_t>(v)] = true;
  std::vector<int> seq;
  seq.reserve(s.size());
  while (seq.size() < s.size()) {
    int pick = -1;
    for (int v : s) {
      if (!remaining[static_cast<std::size_t>(v)]) continue;
      bool has_out = false;
      for (int w : inst.side[static_cast<std::size_t>(v)]) {
        if (remaining[static_cast<std::size_t>(w)]) {
          has_out = true;
          break;
        }
      }
      if (!has_out) {
        pick = v;
        break;
      }
    }
    if (pick < 0)
      throw std::invalid_argument("set does not induce an acyclic sub-digraph");
    seq.push_back(pick);
    remaining[static_cast<std::size_t>(pick)] = false;
  }
  return seq;
}

GenicResult genic_cover(const GenInstance& inst) {
  inst.validate();
  GenicResult res;
  res.code.n = inst.n;

  // active[i] = receivers still waiting for symbol i
  std::vector<std::vector<int>> active(static_cast<std::size_t>(inst.n));
  for (int j = 0; j < inst.m; ++j)
    active[static_cast<std::size_t>(inst.req[j])].push_back(j);

  const std::int64_t threshold = isqrt_ceil(inst.n);
  auto active_symbols = [&]() {
    std::vector<int> v;
    for (int i = 0; i < inst.n; ++i)
      if (!active[static_cast<std::size_t>(i)].empty()) v.push_back(i);
    return v;
  };

  std::vector<int> act = active_symbols();
  while (static_cast<std::int64_t>(act.size()) >= threshold && !act.empty()) {
    GenicRound round;
    round.active_symbols = act;

    // Serve receiver j_i = min A_i for every active symbol; the round
    // digraph has an edge i -> i' whenever j_i already knows i'.
    Digraph round_graph(static_cast<int>(act.size()));
    for (std::size_t i = 0; i < act.size(); ++i) {
      const int j = active[static_cast<std::size_t>(act[i])].front();
      round.receivers.push_back(j);
      for (int w : inst.side[static_cast<std::size_t>(j)]) {
        const auto pos = std::lower_bound(act.begin(), act.end(), w);
        if (pos != act.end() && *pos == w)
          round_graph.add_edge(static_cast<int>(i),
                               static_cast<int>(pos - act.begin()));
      }
    }

    const CoverResult cover = cover_digraph(round_graph);
    round.cliques_emitted = cover.cover.size();
    for (const VertexSet& c : cover.cover.cliques) {
      VertexSet symbols(c.size());
      for (std::size_t i = 0; i < c.size(); ++i)
        symbols[i] = act[static_cast<std::size_t>(c[i])];
      res.code.xor_sets.push_back(std::move(symbols));
    }

    for (std::size_t i = 0; i < act.size(); ++i) {
      auto& waiting = active[static_cast<std::size_t>(act[i])];
      waiting.erase(waiting.begin());  // j_i has been served
    }
    res.rounds.push_back(std::move(round));
    act = active_symbols();
  }

  // Anything still active is sent in the clear.
  res.tail_symbols = act;
  for (int i : act) res.code.xor_sets.push_back({i});
  return res;
}

}  // namespace indexcode
