#include "indexcode/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

namespace indexcode {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1]");
}

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next non-empty line as tokens, comments stripped; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      tokens.clear();
      std::istringstream split(line);
      std::string tok;
      while (split >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }
};

int parse_int(const std::string& tok, int line_no) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  return value;
}

void expect_tokens(const std::vector<std::string>& tokens, std::size_t count,
                   int line_no, const std::string& what) {
  if (tokens.size() != count)
    throw ParseError(line_no, "malformed " + what + " line");
}

VertexSet parse_id_list(const std::vector<std::string>& tokens,
                        std::size_t first, int n, int line_no,
                        const std::string& what) {
  VertexSet ids;
  for (std::size_t i = first; i < tokens.size(); ++i) {
    const int v = parse_int(tokens[i], line_no);
    if (v < 0 || v >= n)
      throw ParseError(line_no, what + " id " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) +
                                    ")");
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw ParseError(line_no, "duplicate " + what + " id");
  return ids;
}

}  // namespace

Digraph gen_gnp_digraph(int n, double p, std::uint64_t seed) {
  check_probability(p);
  Digraph g(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.next_unit() < p) g.add_edge(u, v);
    }
  return g;
}

Digraph gen_gnp_graph(int n, double p, std::uint64_t seed) {
  check_probability(p);
  Digraph g(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) g.add_undirected_edge(u, v);
  return g;
}

Digraph gen_tournament(int n, std::uint64_t seed) {
  Digraph g(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.next() & 1)
        g.add_edge(v, u);
      else
        g.add_edge(u, v);
    }
  return g;
}

GenInstance gen_gnp_instance(int n, int m, double p, std::uint64_t seed) {
  check_probability(p);
  if (n < 0 || m < n)
    throw std::invalid_argument("instance generation needs 0 <= n <= m");
  GenInstance inst;
  inst.n = n;
  inst.m = m;
  inst.req.resize(static_cast<std::size_t>(m));
  inst.side.resize(static_cast<std::size_t>(m));
  SplitMix64 rng(seed);
  // Required symbols first (receivers beyond the first n draw one value
  // each), then one draw per (receiver, candidate symbol) pair.
  for (int j = 0; j < m; ++j)
    inst.req[static_cast<std::size_t>(j)] =
        j < n ? j : static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == inst.req[static_cast<std::size_t>(j)]) continue;
      if (rng.next_unit() < p)
        inst.side[static_cast<std::size_t>(j)].push_back(i);
    }
  return inst;
}

LineGraph line_graph(const Digraph& g) {
  if (!g.is_symmetric())
    throw std::invalid_argument("line_graph requires a symmetric digraph");
  LineGraph out;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.row(u).test(v)) out.edge_labels.emplace_back(u, v);

  const int k = static_cast<int>(out.edge_labels.size());
  out.graph = Digraph(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const auto& [u1, v1] = out.edge_labels[static_cast<std::size_t>(a)];
      const auto& [u2, v2] = out.edge_labels[static_cast<std::size_t>(b)];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
        out.graph.add_undirected_edge(a, b);
    }
  return out;
}

Digraph complete_graph(int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_undirected_edge(u, v);
  return g;
}

Digraph kneser_complement(int n) {
  if (n < 2) throw std::invalid_argument("kneser_complement requires n >= 2");
  return line_graph(complete_graph(n)).graph;
}

Digraph parse_digraph(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tokens;
  if (!reader.next(tokens))
    throw ParseError(reader.line_no + 1, "missing 'digraph'/'graph' header");
  expect_tokens(tokens, 2, reader.line_no, "header");
  const bool symmetric = tokens[0] == "graph";
  if (!symmetric && tokens[0] != "digraph")
    throw ParseError(reader.line_no,
                     "expected 'digraph <n>' or 'graph <n>' header");
  const int n = parse_int(tokens[1], reader.line_no);
  if (n < 0) throw ParseError(reader.line_no, "vertex count must be >= 0");

  Digraph g(n);
  while (reader.next(tokens)) {
    if (tokens[0] != "e")
      throw ParseError(reader.line_no, "expected 'e <u> <v>'");
    expect_tokens(tokens, 3, reader.line_no, "edge");
    const int u = parse_int(tokens[1], reader.line_no);
    const int v = parse_int(tokens[2], reader.line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(reader.line_no, "edge endpoint out of range");
    if (u == v) throw ParseError(reader.line_no, "self-loop not allowed");
    if (g.has_edge(u, v) || (symmetric && g.has_edge(v, u)))
      throw ParseError(reader.line_no, "duplicate edge");
    if (symmetric)
      g.add_undirected_edge(u, v);
    else
      g.add_edge(u, v);
  }
  return g;
}

GenInstance parse_gen_instance(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tokens;
  if (!reader.next(tokens))
    throw ParseError(reader.line_no + 1, "missing 'genic' header");
  expect_tokens(tokens, 3, reader.line_no, "header");
  if (tokens[0] != "genic")
    throw ParseError(reader.line_no, "expected 'genic <n> <m>' header");
  const int header_line = reader.line_no;
  GenInstance inst;
  inst.n = parse_int(tokens[1], header_line);
  inst.m = parse_int(tokens[2], header_line);
  if (inst.n < 0) throw ParseError(header_line, "symbol count must be >= 0");
  if (inst.m < inst.n)
    throw ParseError(header_line, "instance needs m >= n receivers");

  for (int j = 0; j < inst.m; ++j) {
    if (!reader.next(tokens))
      throw ParseError(reader.line_no + 1,
                       "expected " + std::to_string(inst.m) +
                           " receiver lines, got " + std::to_string(j));
    if (tokens.size() < 4 || tokens[0] != "rcv" || tokens[3] != ":")
      throw ParseError(reader.line_no, "expected 'rcv <j> <r> : <side...>'");
    if (parse_int(tokens[1], reader.line_no) != j)
      throw ParseError(reader.line_no,
                       "receiver lines must be numbered 0.." +
                           std::to_string(inst.m - 1) + " in order");
    const int r = parse_int(tokens[2], reader.line_no);
    if (r < 0 || r >= inst.n)
      throw ParseError(reader.line_no, "required symbol out of range");
    VertexSet side = parse_id_list(tokens, 4, inst.n, reader.line_no, "side");
    if (vs_contains(side, r))
      throw ParseError(reader.line_no,
                       "receiver already knows its required symbol");
    inst.req.push_back(r);
    inst.side.push_back(std::move(side));
  }
  if (reader.next(tokens))
    throw ParseError(reader.line_no, "unexpected content after receivers");

  std::vector<bool> required(static_cast<std::size_t>(inst.n), false);
  for (int r : inst.req) required[static_cast<std::size_t>(r)] = true;
  for (int i = 0; i < inst.n; ++i)
    if (!required[static_cast<std::size_t>(i)])
      throw ParseError(header_line,
                       "no receiver requires symbol " + std::to_string(i));
  return inst;
}

CliqueCover parse_cover(std::istream& in, int* n_out) {
  LineReader reader{in};
  std::vector<std::string> tokens;
  if (!reader.next(tokens))
    throw ParseError(reader.line_no + 1, "missing 'cover' header");
  expect_tokens(tokens, 3, reader.line_no, "header");
  if (tokens[0] != "cover")
    throw ParseError(reader.line_no, "expected 'cover <n> <k>' header");
  const int header_line = reader.line_no;
  const int n = parse_int(tokens[1], header_line);
  const int k = parse_int(tokens[2], header_line);
  if (n < 0 || k < 0)
    throw ParseError(header_line, "counts must be >= 0");

  CliqueCover cover;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int c = 0; c < k; ++c) {
    if (!reader.next(tokens))
      throw ParseError(reader.line_no + 1,
                       "expected " + std::to_string(k) + " clique lines, got " +
                           std::to_string(c));
    if (tokens[0] != "c" || tokens.size() < 2)
      throw ParseError(reader.line_no, "expected 'c <v1> <v2> ...'");
    VertexSet clique = parse_id_list(tokens, 1, n, reader.line_no, "vertex");
    for (int v : clique) {
      if (seen[static_cast<std::size_t>(v)])
        throw ParseError(reader.line_no, "vertex " + std::to_string(v) +
                                             " appears in two cliques");
      seen[static_cast<std::size_t>(v)] = true;
    }
    cover.cliques.push_back(std::move(clique));
  }
  if (reader.next(tokens))
    throw ParseError(reader.line_no, "unexpected content after cliques");
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw ParseError(header_line,
                       "vertex " + std::to_string(v) + " is uncovered");
  if (n_out) *n_out = n;
  return cover;
}

IndexCode parse_code(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tokens;
  if (!reader.next(tokens))
    throw ParseError(reader.line_no + 1, "missing 'code' header");
  expect_tokens(tokens, 3, reader.line_no, "header");
  if (tokens[0] != "code")
    throw ParseError(reader.line_no, "expected 'code <n> <k>' header");
  IndexCode code;
  code.n = parse_int(tokens[1], reader.line_no);
  const int k = parse_int(tokens[2], reader.line_no);
  if (code.n < 0 || k < 0)
    throw ParseError(reader.line_no, "counts must be >= 0");

  for (int c = 0; c < k; ++c) {
    if (!reader.next(tokens))
      throw ParseError(reader.line_no + 1,
                       "expected " + std::to_string(k) + " xor-set lines, got " +
                           std::to_string(c));
    if (tokens[0] != "x" || tokens.size() < 2)
      throw ParseError(reader.line_no, "expected 'x <v1> <v2> ...'");
    code.xor_sets.push_back(
        parse_id_list(tokens, 1, code.n, reader.line_no, "symbol"));
  }
  if (reader.next(tokens))
    throw ParseError(reader.line_no, "unexpected content after xor sets");
  return code;
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

GenInstance parse_gen_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_gen_instance(in);
}

CliqueCover parse_cover(const std::string& text, int* n_out) {
  std::istringstream in(text);
  return parse_cover(in, n_out);
}

IndexCode parse_code(const std::string& text) {
  std::istringstream in(text);
  return parse_code(in);
}

std::string serialize_digraph(const Digraph& g) {
  std::ostringstream out;
  if (g.is_symmetric()) {
    out << "graph " << g.size() << "\n";
    for (int u = 0; u < g.size(); ++u)
      for (int v = u + 1; v < g.size(); ++v)
        if (g.row(u).test(v)) out << "e " << u << " " << v << "\n";
  } else {
    out << "digraph " << g.size() << "\n";
    for (int u = 0; u < g.size(); ++u)
      for (int v = 0; v < g.size(); ++v)
        if (u != v && g.row(u).test(v)) out << "e " << u << " " << v << "\n";
  }
  return out.str();
}

std::string serialize_gen_instance(const GenInstance& inst) {
  std::ostringstream out;
  out << "genic " << inst.n << " " << inst.m << "\n";
  for (int j = 0; j < inst.m; ++j) {
    out << "rcv " << j << " " << inst.req[static_cast<std::size_t>(j)] << " :";
    for (int v : inst.side[static_cast<std::size_t>(j)]) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string serialize_cover(const CliqueCover& cover, int n) {
  std::ostringstream out;
  out << "cover " << n << " " << cover.size() << "\n";
  for (const VertexSet& c : cover.cliques) {
    out << "c";
    for (int v : c) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string serialize_code(const IndexCode& code) {
  std::ostringstream out;
  out << "code " << code.n << " " << code.length() << "\n";
  for (const VertexSet& c : code.xor_sets) {
    out << "x";
    for (int v : c) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace indexcode
