// Command-line front end over the inducedpath C interface.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "inducedpath.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct CliFailure {
  int code;
  std::string message;
};

void check(lip_status status) {
  if (status == LIP_OK) return;
  throw CliFailure{status == LIP_ERR_PARSE ? kExitInput : kExitDomain,
                   std::string(lip_status_name(status)) + ": " + lip_last_error()};
}

struct GraphDeleter {
  void operator()(lip_graph* g) const { lip_graph_free(g); }
};
struct PairDeleter {
  void operator()(lip_pair* p) const { lip_pair_free(p); }
};
struct RunDeleter {
  void operator()(lip_run* r) const { lip_run_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { lip_string_free(s); }
};
using GraphHandle = std::unique_ptr<lip_graph, GraphDeleter>;
using PairHandle = std::unique_ptr<lip_pair, PairDeleter>;
using RunHandle = std::unique_ptr<lip_run, RunDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return OwnedString(s).get(); }

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitInput, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CliFailure{kExitDomain, "cannot write " + path};
}

GraphHandle load_graph(const std::string& path) {
  lip_graph* g = nullptr;
  check(lip_graph_parse(read_input(path).c_str(), &g));
  return GraphHandle(g);
}

PairHandle load_pair(const std::string& path, const std::string& format) {
  lip_pair* pair = nullptr;
  if (format == "edgelist") {
    const GraphHandle g = load_graph(path);
    check(lip_pair_create(g.get(), nullptr, &pair));
  } else {
    check(lip_pair_parse(read_input(path).c_str(), 1, &pair));
  }
  return PairHandle(pair);
}

GraphHandle generate(const std::string& model, std::size_t n, std::size_t d, double p,
                     std::uint64_t seed) {
  lip_graph* g = nullptr;
  check(lip_graph_generate(model.c_str(), n, d, p, seed, &g));
  return GraphHandle(g);
}

/// "a..b" (inclusive) or a single value.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    const auto a = std::stoull(text.substr(0, dots));
    const auto b = std::stoull(text.substr(dots + 2));
    if (b < a) throw std::invalid_argument("empty range");
    return {a, b};
  } catch (const std::logic_error&) {
    throw CliFailure{kExitInput, "bad range \"" + text + "\" (expected a..b)"};
  }
}

std::vector<std::uint32_t> parse_path(const std::string& text) {
  std::vector<std::uint32_t> path;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(token, &used);
      if (used != token.size() || v > UINT32_MAX) throw std::invalid_argument(token);
      path.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw CliFailure{kExitInput, "bad vertex id \"" + token + "\""};
    }
  }
  return path;
}

/// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <typename F>
void parallel_for(std::size_t count, std::size_t jobs, F&& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += jobs) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct GenArgs {
  std::string model;
  std::size_t n = 0;
  std::size_t d = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string with_cliques;
  std::string cliques_out;
  std::string output = "-";
};

int cmd_gen(const GenArgs& a) {
  GraphHandle g = generate(a.model, a.n, a.d, a.p, a.seed);
  std::string sidecar;
  if (!a.with_cliques.empty()) {
    const auto comma = a.with_cliques.find(',');
    if (comma == std::string::npos) throw CliFailure{kExitInput, "--with-cliques expects count,size"};
    const auto [count, count_hi] = parse_range(a.with_cliques.substr(0, comma));
    const auto [size, size_hi] = parse_range(a.with_cliques.substr(comma + 1));
    if (count != count_hi || size != size_hi) throw CliFailure{kExitInput, "--with-cliques expects count,size"};
    std::string out_path = a.cliques_out;
    if (out_path.empty()) {
      if (a.output == "-") throw CliFailure{kExitInput, "--with-cliques needs --cliques-out or -o"};
      out_path = a.output + ".cliques.json";
    }
    lip_graph* superimposed = nullptr;
    char* json = nullptr;
    check(lip_graph_superimpose_cliques(g.get(), count, size, a.seed ^ 0xC11Cu, &superimposed, &json));
    g.reset(superimposed);
    write_output(out_path, take(json) + "\n");
  }
  char* text = nullptr;
  check(lip_graph_format(g.get(), &text));
  write_output(a.output, take(text));
  return 0;
}

struct FindArgs {
  std::string input = "-";
  std::string format = "pair";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> target;
  bool checked = false;
  bool trace = false;
  bool witness = false;
  bool verify_echo = false;
};

int cmd_find(const FindArgs& a) {
  const PairHandle pair = load_pair(a.input, a.format);
  lip_find_options options;
  lip_find_options_init(&options);
  if (a.seed) {
    options.use_sigma_seed = 1;
    options.sigma_seed = *a.seed;
  }
  if (a.target) {
    options.has_target = 1;
    options.target_len = *a.target;
  }
  options.checked = a.checked ? 1 : 0;
  options.record_trace = a.trace ? 1 : 0;

  lip_run* raw = nullptr;
  check(lip_find(pair.get(), &options, &raw));
  const RunHandle run(raw);
  std::size_t length = 0;
  const std::uint32_t* path = lip_run_path(run.get(), &length);
  if (a.verify_echo) {
    int valid = 0;
    check(lip_verify_path(pair.get(), path, length, &valid));
    if (!valid) throw CliFailure{kExitDomain, "internal error: returned path failed verification"};
  }
  char* json = nullptr;
  check(lip_run_json(run.get(), &json));
  std::cout << take(json) << "\n";
  if (a.witness) {
    for (std::size_t i = 0; i < length; ++i) std::cout << (i ? " " : "") << path[i];
    std::cout << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string input = "-";
  std::string format = "pair";
  std::string path;
  std::string path_file;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.path.empty() == a.path_file.empty()) {
    throw CliFailure{kExitInput, "give exactly one of --path and --path-file"};
  }
  if (a.input == "-" && a.path_file == "-") throw CliFailure{kExitInput, "only one input can be standard input"};
  const auto path = parse_path(a.path.empty() ? read_input(a.path_file) : a.path);
  const PairHandle pair = load_pair(a.input, a.format);
  int valid = 0;
  check(lip_verify_path(pair.get(), path.data(), path.size(), &valid));
  std::cout << "{\"valid\":" << (valid ? "true" : "false")
            << ",\"vertices\":" << path.size() << "}\n";
  return valid ? 0 : kExitDomain;
}

int cmd_spectral(const std::string& input, std::uint64_t seed) {
  const GraphHandle g = load_graph(input);
  char* json = nullptr;
  check(lip_spectral(g.get(), seed, &json));
  std::cout << take(json) << "\n";
  return 0;
}

struct CertifyArgs {
  std::size_t n = 0;
  std::size_t d = 0;
  double lambda = 0.0;
  std::string input = "-";
  double c = 0.0;
  std::size_t samples = 64;
  std::uint64_t seed = 0;
};

int cmd_certify_expander(const CertifyArgs& a) {
  char* json = nullptr;
  check(lip_certify_expander(a.n, a.d, a.lambda, &json, nullptr));
  std::cout << take(json) << "\n";
  return 0;
}

int cmd_certify_uniform(const CertifyArgs& a) {
  const GraphHandle g = load_graph(a.input);
  char* json = nullptr;
  check(lip_certify_upper_uniform(g.get(), a.d, a.c, a.samples, a.seed, &json, nullptr));
  std::cout << take(json) << "\n";
  return 0;
}

struct OracleArgs {
  std::string input = "-";
  std::string format = "pair";
  std::size_t max_n = 24;
  std::size_t l = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  bool exact = false;
  double guard = 1e8;
  std::size_t samples = 256;
  std::uint64_t seed = 0;
};

int cmd_oracle_longest(const OracleArgs& a) {
  const GraphHandle g = load_graph(a.input);
  char* json = nullptr;
  check(lip_oracle_longest(g.get(), a.max_n, &json));
  std::cout << take(json) << "\n";
  return 0;
}

int cmd_oracle_conditions(const OracleArgs& a) {
  const PairHandle pair = load_pair(a.input, a.format);
  char* json = nullptr;
  check(lip_oracle_conditions(pair.get(), a.l, a.s1, a.s2, a.exact ? 1 : 0, a.guard, a.samples,
                              a.seed, &json));
  std::cout << take(json) << "\n";
  return 0;
}

struct RamseyArgs {
  std::size_t n = 0;
  std::size_t k = 2;
  double c = 8.0;
  std::string strategy = "uniform";
  double p = 0.0;
  std::string seeds = "0";
  std::size_t jobs = 1;
};

int cmd_ramsey(const RamseyArgs& a) {
  const auto [first, last] = parse_range(a.seeds);
  const std::size_t count = last - first + 1;
  std::vector<std::string> lines(count);
  parallel_for(count, a.jobs, [&](std::size_t i) {
    char* json = nullptr;
    check(lip_ramsey(a.n, a.k, a.c, a.strategy.c_str(), a.p, first + i, &json));
    lines[i] = take(json);
  });
  for (const auto& line : lines) std::cout << line << "\n";
  return 0;
}

struct BenchArgs {
  std::string model = "random-regular";
  std::size_t d = 10;
  double avg_degree = 0.0;
  std::vector<std::size_t> sizes;
  std::string log2_sizes;
  std::size_t repeats = 3;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

int cmd_bench(const BenchArgs& a) {
  std::vector<std::size_t> sizes = a.sizes;
  if (!a.log2_sizes.empty()) {
    const auto [lo, hi] = parse_range(a.log2_sizes);
    if (hi >= 40) throw CliFailure{kExitInput, "--log2-sizes exponent too large"};
    for (auto e = lo; e <= hi; ++e) sizes.push_back(std::size_t{1} << e);
  }
  if (sizes.empty()) throw CliFailure{kExitInput, "no sizes given"};
  if (a.repeats == 0) throw CliFailure{kExitInput, "--repeats must be positive"};

  struct Row {
    std::size_t n = 0, m = 0;
    std::int64_t median_nanos = 0;
    std::uint64_t work = 0;
  };
  std::vector<Row> rows(sizes.size());
  parallel_for(sizes.size(), a.jobs, [&](std::size_t i) {
    const std::size_t n = sizes[i];
    const double p = a.avg_degree > 0.0 ? a.avg_degree / static_cast<double>(n) : 0.0;
    const GraphHandle g = generate(a.model, n, a.d, p, a.seed);
    lip_pair* raw_pair = nullptr;
    check(lip_pair_create(g.get(), nullptr, &raw_pair));
    const PairHandle pair(raw_pair);

    std::vector<std::int64_t> times;
    for (std::size_t r = 0; r < a.repeats; ++r) {
      lip_run* raw_run = nullptr;
      const auto start = std::chrono::steady_clock::now();
      check(lip_find(pair.get(), nullptr, &raw_run));
      const auto stop = std::chrono::steady_clock::now();
      const RunHandle run(raw_run);
      times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      rows[i].work = lip_run_work(run.get());
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    rows[i].n = n;
    rows[i].m = lip_graph_m(g.get());
    rows[i].median_nanos = times[times.size() / 2];
  });
  std::cout << "n,m,medianNanos,workCounter\n";
  for (const auto& r : rows) std::cout << r.n << "," << r.m << "," << r.median_nanos << "," << r.work << "\n";
  return 0;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"edgelist", "pair"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long induced paths in graph pairs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen_cmd->add_option("--model", gen.model, "random-regular, gnp, cycle, complete, path, petersen")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--d", gen.d, "Degree (random-regular)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--with-cliques", gen.with_cliques, "Superimpose count,size disjoint cliques");
  gen_cmd->add_option("--cliques-out", gen.cliques_out, "Clique partition JSON path");
  gen_cmd->add_option("-o,--output", gen.output, "Output path")->capture_default_str();

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "Search for a long induced path");
  find_cmd->add_option("input", find.input, "Pair or graph file ('-' for stdin)")->capture_default_str();
  add_format(find_cmd, find.format);
  find_cmd->add_option("--seed", find.seed, "Shuffle the vertex order with this seed");
  find_cmd->add_option("--target", find.target, "Stop at a path with this many edges");
  find_cmd->add_flag("--checked", find.checked, "Re-check invariants every round");
  find_cmd->add_flag("--trace", find.trace, "Include the round trace");
  find_cmd->add_flag("--witness", find.witness, "Also print the path as a vertex line");
  find_cmd->add_flag("--verify-echo", find.verify_echo, "Verify the path before printing");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a path is induced");
  verify_cmd->add_option("input", verify.input, "Pair or graph file")->capture_default_str();
  add_format(verify_cmd, verify.format);
  verify_cmd->add_option("--path", verify.path, "Whitespace-separated vertex ids");
  verify_cmd->add_option("--path-file", verify.path_file, "File holding the vertex ids");
  std::uint64_t unused_seed = 0;
  verify_cmd->add_option("--seed", unused_seed, "Ignored");

  std::string spectral_input = "-";
  std::uint64_t spectral_seed = 0x5EED;
  auto* spectral_cmd = app.add_subcommand("spectral", "Second eigenvalue of a regular graph");
  spectral_cmd->add_option("input", spectral_input, "Graph file")->capture_default_str();
  spectral_cmd->add_option("--seed", spectral_seed, "Start vector seed (iterative solver)");

  CertifyArgs cert;
  auto* certify_cmd = app.add_subcommand("certify", "Parameter certificates");
  certify_cmd->require_subcommand(1);
  auto* expander_cmd = certify_cmd->add_subcommand("expander", "(n, d, lambda)-graph certificate");
  expander_cmd->add_option("--n", cert.n)->required();
  expander_cmd->add_option("--d", cert.d)->required();
  expander_cmd->add_option("--lambda", cert.lambda)->required();
  expander_cmd->add_option("--seed", unused_seed, "Ignored");
  auto* uniform_cmd = certify_cmd->add_subcommand("upper-uniform", "Sampled upper-uniformity certificate");
  uniform_cmd->add_option("input", cert.input, "Graph file")->capture_default_str();
  uniform_cmd->add_option("--d", cert.d, "Minimum degree parameter")->required();
  uniform_cmd->add_option("--C", cert.c, "Uniformity constant")->required();
  uniform_cmd->add_option("--samples", cert.samples)->capture_default_str();
  uniform_cmd->add_option("--seed", cert.seed);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exponential-time ground truth");
  oracle_cmd->require_subcommand(1);
  auto* longest_cmd = oracle_cmd->add_subcommand("longest", "Exact longest induced path");
  longest_cmd->add_option("input", oracle.input, "Graph file")->capture_default_str();
  longest_cmd->add_option("--max-n", oracle.max_n, "Size guard")->capture_default_str();
  longest_cmd->add_option("--seed", unused_seed, "Ignored");
  auto* conditions_cmd = oracle_cmd->add_subcommand("conditions", "Sparsity conditions for (l, s1, s2)");
  conditions_cmd->add_option("input", oracle.input, "Pair or graph file")->capture_default_str();
  add_format(conditions_cmd, oracle.format);
  conditions_cmd->add_option("--l", oracle.l)->required();
  conditions_cmd->add_option("--s1", oracle.s1)->required();
  conditions_cmd->add_option("--s2", oracle.s2)->required();
  conditions_cmd->add_flag("--exact", oracle.exact, "Enumerate every set");
  conditions_cmd->add_option("--guard", oracle.guard, "Enumeration guard")->capture_default_str();
  conditions_cmd->add_option("--samples", oracle.samples, "Sampled sets per condition")
      ->capture_default_str();
  conditions_cmd->add_option("--seed", oracle.seed);

  RamseyArgs ramsey;
  auto* ramsey_cmd = app.add_subcommand("ramsey", "Multicolour random-graph pipeline");
  ramsey_cmd->add_option("--n", ramsey.n)->required();
  ramsey_cmd->add_option("--k", ramsey.k)->capture_default_str();
  ramsey_cmd->add_option("--c", ramsey.c)->capture_default_str();
  ramsey_cmd->add_option("--strategy", ramsey.strategy)
      ->check(CLI::IsMember({"uniform", "balanced"}))
      ->capture_default_str();
  ramsey_cmd->add_option("--p", ramsey.p, "Edge probability override");
  ramsey_cmd->add_option("--seeds,--seed", ramsey.seeds, "Seed or range a..b")->capture_default_str();
  ramsey_cmd->add_option("--jobs", ramsey.jobs)->check(CLI::PositiveNumber)->capture_default_str();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Runtime scaling (CSV)");
  bench_cmd->add_option("--model", bench.model)
      ->check(CLI::IsMember({"random-regular", "gnp"}))
      ->capture_default_str();
  bench_cmd->add_option("--d", bench.d, "Degree (random-regular)")->capture_default_str();
  bench_cmd->add_option("--avg-degree", bench.avg_degree, "p = avg-degree / n (gnp)");
  bench_cmd->add_option("--sizes", bench.sizes, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--log2-sizes", bench.log2_sizes, "Exponent range a..b");
  bench_cmd->add_option("--repeats", bench.repeats)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--jobs", bench.jobs)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*find_cmd) return cmd_find(find);
    if (*verify_cmd) return cmd_verify(verify);
    if (*spectral_cmd) return cmd_spectral(spectral_input, spectral_seed);
    if (*expander_cmd) return cmd_certify_expander(cert);
    if (*uniform_cmd) return cmd_certify_uniform(cert);
    if (*longest_cmd) return cmd_oracle_longest(oracle);
    if (*conditions_cmd) return cmd_oracle_conditions(oracle);
    if (*ramsey_cmd) return cmd_ramsey(ramsey);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const CliFailure& f) {
    std::cerr << "lip: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "lip: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitInput;
}
