// Command-line front end: generate instances, build covers and codes,
// verify them, query the brute-force oracles, and run small benchmark
// sweeps. All formats are the line-based text formats of the library;
// "-" means stdin/stdout so subcommands compose in pipelines.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indexcode/cover.hpp"
#include "indexcode/digraph.hpp"
#include "indexcode/index_coding.hpp"
#include "indexcode/instances.hpp"
#include "indexcode/oracles.hpp"
#include "indexcode/ramsey.hpp"

namespace {

using namespace indexcode;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;  // input parsed but failed validation
constexpr int kExitUsage = 2;    // usage or parse problem

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
}

std::string first_token(const std::string& text) {
  std::istringstream in(text);
  std::string line, tok;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream split(line);
    if (split >> tok) return tok;
  }
  return "";
}

// Accepts a digraph/graph file or a genic file, converting digraphs to
// their standard instance.
GenInstance load_instance(const std::string& path) {
  const std::string text = read_input(path);
  const std::string head = first_token(text);
  if (head == "genic") return parse_gen_instance(text);
  if (head == "digraph" || head == "graph")
    return standard_instance(parse_digraph(text));
  throw ParseError(1, "expected a 'genic', 'digraph' or 'graph' header");
}

// Accepts a code file or a cover file (converted via code_from_cover).
IndexCode load_code(const std::string& path) {
  const std::string text = read_input(path);
  const std::string head = first_token(text);
  if (head == "code") return parse_code(text);
  if (head == "cover") {
    int n = 0;
    const CliqueCover cover = parse_cover(text, &n);
    return code_from_cover(cover, n);
  }
  throw ParseError(1, "expected a 'code' or 'cover' header");
}

std::string decimal(const Rational& r, int places = 6) {
  // Fixed-point rendering of an exact rational, rounded half up.
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt num = numerator(r) * scale * 2 + denominator(r);
  BigInt scaled = num / (denominator(r) * 2);
  std::ostringstream out;
  out << scaled / scale << "." << std::setw(places) << std::setfill('0')
      << scaled % scale;
  return out.str();
}

std::string render_ratio(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

struct CoverArgs {
  std::string mode;
  std::string in_path;
  std::string out_path;
  bool emit_bound = false;
  bool trace = false;
};

int run_cover(const CoverArgs& args) {
  const Digraph g = parse_digraph(read_input(args.in_path));

  CoverResult result;
  if (args.mode == "digraph") {
    result = cover_digraph(g);
  } else if (args.mode == "graph") {
    result = cover_graph(g);
  } else {
    auto outcome = cover_quasiline(g);
    if (auto* witness = std::get_if<NotQuasiLine>(&outcome)) {
      std::cerr << "not quasi-line: " << witness->describe() << "\n";
      return kExitInvalid;
    }
    result = std::move(std::get<CoverResult>(outcome));
  }

  std::ostringstream out;
  out << "# cover size " << result.cover.size() << " (mode " << args.mode
      << ", n " << g.size() << ")\n";
  if (args.emit_bound && result.bound)
    out << "# bound " << render_ratio(*result.bound) << " = "
        << decimal(*result.bound) << "\n";
  if (args.trace) {
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
      const CoverStep& step = result.trace[i];
      out << "# step " << i + 1;
      if (step.pivot) out << " pivot " << *step.pivot;
      out << " cliques";
      for (const VertexSet& c : step.cliques) {
        out << " {";
        for (std::size_t k = 0; k < c.size(); ++k)
          out << (k ? " " : "") << c[k];
        out << "}";
      }
      out << " remaining " << step.remaining << "\n";
    }
  }
  out << serialize_cover(result.cover, g.size());
  write_output(args.out_path, out.str());
  return kExitOk;
}

int run_encode(const std::string& code_path, const std::string& message) {
  const IndexCode code = load_code(code_path);
  Bits x;
  for (char c : message) {
    if (c != '0' && c != '1')
      throw std::runtime_error("message must be a 0/1 string");
    x.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  const Bits y = encode(code, x);
  std::string out;
  for (std::uint8_t b : y) out += static_cast<char>('0' + b);
  std::cout << out << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string instance_path;
  std::string code_path;
  bool structural = false;
  bool exhaustive = false;
  std::optional<std::int64_t> samples;
  std::uint64_t seed = 0;
  std::optional<int> max_n;
};

int run_verify(const VerifyArgs& args) {
  const GenInstance inst = load_instance(args.instance_path);
  inst.validate();
  const IndexCode code = load_code(args.code_path);

  if (args.structural) {
    const ValidationReport report = validate_code(inst, code);
    if (report.ok) {
      std::cout << "structural check passed: every receiver has a covering"
                   " xor set\n";
      return kExitOk;
    }
    std::cout << "structural check failed; receivers without a covering set:";
    for (int j : report.failing_receivers) std::cout << " " << j;
    std::cout << "\n";
    return kExitInvalid;
  }

  if (args.exhaustive) {
    OracleBudget budget;
    if (args.max_n) budget.max_verify = *args.max_n;
    const bool ok = exhaustive_verify(inst, code, budget);
    std::cout << (ok ? "exhaustive check passed over all " : "FAILED within ")
              << (std::uint64_t(1) << inst.n) << " messages\n";
    return ok ? kExitOk : kExitInvalid;
  }

  // Sampled check: random messages, every receiver must decode each one.
  SplitMix64 rng(args.seed);
  Bits x(static_cast<std::size_t>(inst.n));
  for (std::int64_t trial = 0; trial < *args.samples; ++trial) {
    for (int i = 0; i < inst.n; ++i)
      x[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(rng.next() & 1);
    const Bits y = encode(code, x);
    for (int j = 0; j < inst.m; ++j) {
      const VertexSet& known = inst.side[static_cast<std::size_t>(j)];
      Bits side(known.size());
      for (std::size_t i = 0; i < known.size(); ++i)
        side[i] = x[static_cast<std::size_t>(known[i])];
      const auto decoded = decode_receiver(inst, code, j, y, side);
      if (!decoded || *decoded != x[static_cast<std::size_t>(inst.req[j])]) {
        std::cout << "FAILED: receiver " << j << " cannot decode sample "
                  << trial << "\n";
        return kExitInvalid;
      }
    }
  }
  std::cout << "sampled check passed: " << *args.samples << " messages\n";
  return kExitOk;
}

int run_genic_cover(const std::string& in_path, const std::string& out_path,
                    bool trace) {
  const GenInstance inst = load_instance(in_path);
  const GenicResult result = genic_cover(inst);

  std::ostringstream out;
  out << "# genic cover length " << result.code.length() << " (n " << inst.n
      << ", m " << inst.m << ", rounds " << result.rounds.size() << ", tail "
      << result.tail_symbols.size() << ")\n";
  if (trace) {
    for (std::size_t r = 0; r < result.rounds.size(); ++r) {
      const GenicRound& round = result.rounds[r];
      out << "# round " << r + 1 << " active " << round.active_symbols.size()
          << " cliques " << round.cliques_emitted << " receivers";
      for (int j : round.receivers) out << " " << j;
      out << "\n";
    }
    out << "# tail";
    for (int i : result.tail_symbols) out << " " << i;
    out << "\n";
  }
  out << serialize_code(result.code);
  write_output(out_path, out.str());
  return kExitOk;
}

int run_oracle(const std::string& stat, const std::string& in_path,
               std::optional<int> max_n) {
  OracleBudget budget;
  if (max_n) {
    budget.max_mais = budget.max_alpha = budget.max_omega = *max_n;
    budget.max_cc = budget.max_mes = *max_n;
  }

  int value = 0;
  if (stat == "mes") {
    value = brute_mes(load_instance(in_path), budget);
  } else {
    const Digraph g = parse_digraph(read_input(in_path));
    if (stat == "mais")
      value = brute_mais(g, budget);
    else if (stat == "alpha")
      value = brute_alpha(g, budget);
    else if (stat == "omega")
      value = brute_omega(g, budget);
    else
      value = brute_cc(g, budget);
  }
  std::cout << stat << " = " << value << "\n";
  return kExitOk;
}

struct GenArgs {
  std::string kind;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_gen(const GenArgs& args) {
  Digraph g;
  if (args.kind == "gnp-digraph")
    g = gen_gnp_digraph(args.n, args.p, args.seed);
  else if (args.kind == "gnp-graph")
    g = gen_gnp_graph(args.n, args.p, args.seed);
  else if (args.kind == "tournament")
    g = gen_tournament(args.n, args.seed);
  else  // linegraph-complete and kneser-complement coincide
    g = kneser_complement(args.n);
  write_output(args.out_path, serialize_digraph(g));
  return kExitOk;
}

struct BenchArgs {
  std::string suite;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool tsv = false;
};

void bench_row(bool tsv, const std::vector<std::string>& cells) {
  if (tsv) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      std::cout << (i ? "\t" : "") << cells[i];
    std::cout << "\n";
    return;
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    std::cout << (i ? "  " : "") << std::setw(i == 0 ? 8 : 12) << cells[i];
  std::cout << "\n";
}

int run_bench(const BenchArgs& args) {
  bench_row(args.tsv, {"trial", "cover", "lower", "guarantee", "ratio"});
  OracleBudget budget;
  budget.max_alpha = 32;  // line graphs of small base graphs get wide

  for (int trial = 0; trial < args.trials; ++trial) {
    const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(trial);
    const double p = 0.1 * (1 + trial % 9);
    std::size_t cover_size = 0;
    int lower = 0;
    Rational guarantee;

    if (args.suite == "digraph-ratio") {
      const Digraph g = gen_gnp_digraph(args.n, p, seed);
      cover_size = cover_digraph(g).cover.size();
      lower = brute_mais(g, budget);
      guarantee = cover_bound(QFunction::directed(), g.size()) * lower;
    } else if (args.suite == "graph-ratio") {
      const Digraph g = gen_gnp_graph(args.n, p, seed);
      cover_size = cover_graph(g).cover.size();
      lower = brute_alpha(g, budget);
      guarantee = cover_bound(QFunction::undirected(), g.size()) * lower;
    } else if (args.suite == "quasiline-ratio") {
      // Line graphs of G(n,p) base graphs are quasi-line by construction.
      const Digraph g = line_graph(gen_gnp_graph(args.n, p, seed)).graph;
      auto outcome = cover_quasiline(g);
      cover_size = std::get<CoverResult>(outcome).cover.size();
      lower = brute_alpha(g, budget);
      guarantee = Rational(2) * lower;
    } else {  // genic
      const int m = args.n + (args.n + 1) / 2;
      const GenInstance inst = gen_gnp_instance(args.n, m, p, seed);
      const GenicResult result = genic_cover(inst);
      cover_size = result.code.length();
      lower = brute_mes(inst, budget);
      guarantee = 0;
      for (const GenicRound& round : result.rounds)
        guarantee += cover_bound(QFunction::directed(),
                                 static_cast<std::int64_t>(
                                     round.active_symbols.size())) *
                     lower;
      std::int64_t root = 0;
      while (root * root < inst.n) ++root;
      guarantee += root;
    }

    const double ratio =
        lower > 0 ? static_cast<double>(cover_size) / lower : 0.0;
    std::ostringstream ratio_text;
    ratio_text << std::fixed << std::setprecision(3) << ratio;
    bench_row(args.tsv,
              {std::to_string(trial), std::to_string(cover_size),
               std::to_string(lower), decimal(guarantee, 3),
               ratio_text.str()});
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique-cover index codes: covers, bounds, and oracles"};
  app.require_subcommand(1);

  CoverArgs cover_args;
  auto* cover_cmd =
      app.add_subcommand("cover", "cover a digraph/graph and emit the cover");
  cover_cmd->add_option("--mode", cover_args.mode, "cover flavor")
      ->required()
      ->check(CLI::IsMember({"digraph", "graph", "quasiline"}));
  cover_cmd->add_option("--in", cover_args.in_path, "input file or -")
      ->required();
  cover_cmd->add_option("--out", cover_args.out_path, "output file or -");
  cover_cmd->add_flag("--emit-bound", cover_args.emit_bound,
                      "print the guaranteed bound sum 1/f_Q(i)");
  cover_cmd->add_flag("--trace", cover_args.trace, "print per-step trace");

  std::string encode_code, encode_message;
  auto* encode_cmd = app.add_subcommand("encode", "encode a message");
  encode_cmd->add_option("--code", encode_code, "code (or cover) file or -")
      ->required();
  encode_cmd->add_option("--message", encode_message, "0/1 string, symbol 0 first")
      ->required();

  VerifyArgs verify_args;
  std::int64_t samples_opt = -1;
  int verify_max_n = -1;
  auto* verify_cmd = app.add_subcommand("verify", "check a code against an instance");
  verify_cmd->add_option("--instance", verify_args.instance_path,
                         "genic or digraph file or -")
      ->required();
  verify_cmd->add_option("--code", verify_args.code_path,
                         "code (or cover) file or -")
      ->required();
  auto* structural = verify_cmd->add_flag("--structural",
                                          verify_args.structural,
                                          "covering-set condition only");
  auto* exhaustive = verify_cmd->add_flag("--exhaustive",
                                          verify_args.exhaustive,
                                          "all 2^n messages");
  auto* samples = verify_cmd->add_option("--samples", samples_opt,
                                         "number of random messages");
  verify_cmd->add_option("--seed", verify_args.seed, "sample seed");
  verify_cmd->add_option("--max-n", verify_max_n,
                         "raise the exhaustive-verification budget");
  structural->excludes(exhaustive)->excludes(samples);
  exhaustive->excludes(samples);

  std::string genic_in, genic_out;
  bool genic_trace = false;
  auto* genic_cmd =
      app.add_subcommand("genic-cover", "round-based generalized cover");
  genic_cmd->add_option("--in", genic_in, "genic or digraph file or -")
      ->required();
  genic_cmd->add_option("--out", genic_out, "output file or -");
  genic_cmd->add_flag("--trace", genic_trace, "per-round report");

  std::string oracle_stat, oracle_in;
  int oracle_max_n = -1;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force statistics");
  oracle_cmd->add_option("--stat", oracle_stat, "statistic")
      ->required()
      ->check(CLI::IsMember({"mais", "alpha", "omega", "cc", "mes"}));
  oracle_cmd->add_option("--in", oracle_in, "input file or -")->required();
  oracle_cmd->add_option("--max-n", oracle_max_n, "raise the size budget");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--kind", gen_args.kind, "instance family")
      ->required()
      ->check(CLI::IsMember({"gnp-digraph", "gnp-graph", "tournament",
                             "linegraph-complete", "kneser-complement"}));
  gen_cmd->add_option("--n", gen_args.n, "size parameter")->required();
  gen_cmd->add_option("--p", gen_args.p, "edge probability");
  gen_cmd->add_option("--seed", gen_args.seed, "PRNG seed");
  gen_cmd->add_option("--out", gen_args.out_path, "output file or -");

  BenchArgs bench_args;
  std::string bench_format = "table";
  auto* bench_cmd = app.add_subcommand("bench", "cover-vs-oracle ratio sweep");
  bench_cmd->add_option("--suite", bench_args.suite, "benchmark suite")
      ->required()
      ->check(CLI::IsMember(
          {"digraph-ratio", "graph-ratio", "quasiline-ratio", "genic"}));
  bench_cmd->add_option("--n", bench_args.n, "instance size")->required();
  bench_cmd->add_option("--trials", bench_args.trials, "number of trials")
      ->required();
  bench_cmd->add_option("--seed", bench_args.seed, "base seed (trial i uses seed+i)");
  bench_cmd->add_option("--format", bench_format, "table or tsv")
      ->check(CLI::IsMember({"table", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(cover_cmd)) return run_cover(cover_args);
    if (app.got_subcommand(encode_cmd))
      return run_encode(encode_code, encode_message);
    if (app.got_subcommand(verify_cmd)) {
      if (samples_opt >= 0) verify_args.samples = samples_opt;
      if (verify_max_n >= 0) verify_args.max_n = verify_max_n;
      if (!verify_args.structural && !verify_args.exhaustive &&
          !verify_args.samples)
        throw std::runtime_error(
            "pick one of --structural, --exhaustive, --samples N");
      return run_verify(verify_args);
    }
    if (app.got_subcommand(genic_cmd))
      return run_genic_cover(genic_in, genic_out, genic_trace);
    if (app.got_subcommand(oracle_cmd)) {
      std::optional<int> max_n;
      if (oracle_max_n >= 0) max_n = oracle_max_n;
      return run_oracle(oracle_stat, oracle_in, max_n);
    }
    if (app.got_subcommand(gen_cmd)) return run_gen(gen_args);
    if (app.got_subcommand(bench_cmd)) {
      bench_args.tsv = bench_format == "tsv";
      return run_bench(bench_args);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
