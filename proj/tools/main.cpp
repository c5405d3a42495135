#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "streamcert/analysis.hpp"
#include "streamcert/cert_a1.hpp"
#include "streamcert/cert_a2.hpp"
#include "streamcert/edge_stream.hpp"
#include "streamcert/oracle.hpp"
#include "streamcert/run_stats.hpp"
#include "streamcert/sparse_graph.hpp"

namespace {

using nlohmann::json;
using namespace streamcert;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

json stats_json(const RunStats& s) {
  json j;
  j["algorithm"] = s.algorithm;
  j["k"] = s.k;
  j["n"] = s.n;
  j["m_stream"] = s.m_stream;
  j["passes"] = s.passes;
  j["cert_edges"] = s.cert_edges;
  if (s.algorithm == "a2") {
    j["per_forest_edges"] = s.per_forest_edges;
    j["membership_skips"] = s.membership_skips;
    j["hand_overs"] = s.hand_overs;
  }
  j["self_loops_skipped"] = s.self_loops_skipped;
  j["duplicates_seen"] = s.duplicates_seen;
  j["peak_words"] = s.peak_words;
  j["wall_time_ms"] = s.wall_time_ms;
  return j;
}

void write_stats_file(const std::string& path, const RunStats& stats) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write stats file: " + path);
  }
  out << stats_json(stats).dump(2) << "\n";
}

SparseGraph build_certificate(const std::string& algorithm,
                              EdgeStream& stream, int k, RunStats& stats) {
  if (algorithm == "a1") return a1_run(stream, k, &stats);
  return a2_run(stream, k, &stats);
}

int run_certify(const std::string& algorithm, int k, const std::string& input,
                const std::string& output, const std::string& stats_path) {
  EdgeStream stream(input);
  RunStats stats;
  SparseGraph cert = build_certificate(algorithm, stream, k, stats);
  write_edge_file(output, cert.vertex_count(), cert.edges());
  write_stats_file(stats_path, stats);
  std::cout << stats_json(stats).dump(2) << std::endl;
  return kExitTrue;
}

int run_decide(const std::string& algorithm, int k, const std::string& input,
               const std::string& stats_path) {
  EdgeStream stream(input);
  RunStats stats;
  SparseGraph cert = build_certificate(algorithm, stream, k, stats);
  bool connected = is_k_connected(cert, k);
  write_stats_file(stats_path, stats);
  json j;
  j["n"] = stats.n;
  j["m_stream"] = stats.m_stream;
  j["k"] = k;
  j["algorithm"] = algorithm;
  j["passes"] = stats.passes;
  j["cert_edges"] = stats.cert_edges;
  j["k_connected"] = connected;
  std::cout << j.dump(2) << std::endl;
  return connected ? kExitTrue : kExitFalse;
}

int run_separators(const std::string& algorithm, int k,
                   const std::string& input) {
  if (algorithm != "a2") {
    // Only the multi-pass certificate preserves separators.
    std::cerr << "separators requires --algorithm a2" << std::endl;
    return kExitError;
  }
  EdgeStream stream(input);
  RunStats stats;
  SparseGraph cert = a2_run(stream, k, &stats);
  for (const SeparatorSet& s : all_separators(cert, k)) {
    for (int i = 0; i < s.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << s.vertices[i];
    }
    std::cout << '\n';
  }
  return kExitTrue;
}

int run_cut_vertices(const std::string& input) {
  EdgeStream stream(input);
  SparseGraph cert = a2_run(stream, 2);
  for (int v : cut_vertices(cert)) {
    std::cout << v << '\n';
  }
  return kExitTrue;
}

int run_gen(const GenParams& params, const std::string& output) {
  SparseGraph g = generate(params, output);
  json j;
  j["model"] = params_label(params);
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["output"] = output;
  std::cout << j.dump(2) << std::endl;
  return kExitTrue;
}

int run_oracle_kconn(int k, const std::string& input) {
  EdgeStream stream(input);
  SparseGraph g = load_graph(stream);
  bool connected = oracle_k_connected(g, k);
  json j;
  j["n"] = g.vertex_count();
  j["k"] = k;
  j["k_connected"] = connected;
  std::cout << j.dump(2) << std::endl;
  return connected ? kExitTrue : kExitFalse;
}

int run_oracle_kappa(int u, int v, const std::string& input) {
  EdgeStream stream(input);
  SparseGraph g = load_graph(stream);
  int kappa = oracle_local_connectivity(g, u, v);
  json j;
  j["u"] = u;
  j["v"] = v;
  j["kappa"] = kappa;
  std::cout << j.dump(2) << std::endl;
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sparse k-vertex-connectivity certificates over multi-pass edge "
      "streams"};
  app.require_subcommand(1);

  std::string algorithm = "a2";
  std::string input;
  std::string output;
  std::string stats_path;
  int k = 1;
  int u = 0;
  int v = 1;

  auto* certify = app.add_subcommand(
      "certify", "Build a certificate and write it as a stream file");
  certify->add_option("--algorithm", algorithm, "a1 (one pass) or a2 (k+1 passes)")
      ->required()
      ->check(CLI::IsMember({"a1", "a2"}));
  certify->add_option("-k", k, "connectivity parameter")->required()
      ->check(CLI::PositiveNumber);
  certify->add_option("--input", input, "input stream file")->required();
  certify->add_option("--output", output, "certificate output file")
      ->required();
  certify->add_option("--stats", stats_path, "write run stats JSON here");

  auto* decide =
      app.add_subcommand("decide", "Decide k-connectivity of the input");
  decide->add_option("-k", k, "connectivity parameter")->required()
      ->check(CLI::PositiveNumber);
  decide->add_option("--input", input, "input stream file")->required();
  decide->add_option("--algorithm", algorithm, "a1 or a2 (default a2)")
      ->check(CLI::IsMember({"a1", "a2"}));
  decide->add_option("--stats", stats_path, "write run stats JSON here");

  auto* separators = app.add_subcommand(
      "separators", "List all separators of size below k, one per line");
  separators->add_option("-k", k, "connectivity parameter")->required()
      ->check(CLI::PositiveNumber);
  separators->add_option("--input", input, "input stream file")->required();
  separators->add_option("--algorithm", algorithm, "must be a2")
      ->check(CLI::IsMember({"a1", "a2"}));

  auto* cutv = app.add_subcommand("cut-vertices",
                                  "List all cut vertices, one per line");
  cutv->add_option("--input", input, "input stream file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a seeded graph stream file");
  std::string model;
  GenParams params;
  std::uint32_t seed = 0;
  std::vector<int> offsets;
  int block_a = 0;
  int block_b = 0;
  int separator_size = 0;
  double prob = 0.0;
  int n = 0;
  gen->add_option("--model", model, "gnp|cycle|complete|circulant|two_blocks")
      ->required()
      ->check(CLI::IsMember({"gnp", "cycle", "complete", "circulant",
                             "two_blocks"}));
  gen->add_option("-n", n, "vertex count (gnp/cycle/complete/circulant)");
  gen->add_option("--p", prob, "edge probability (gnp)");
  gen->add_option("--offsets", offsets, "circulant offsets, e.g. 1,2,4")
      ->delimiter(',');
  gen->add_option("--block-a", block_a, "first clique size (two_blocks)");
  gen->add_option("--block-b", block_b, "second clique size (two_blocks)");
  gen->add_option("--sep", separator_size,
                  "planted separator size (two_blocks)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--output", output, "stream file to write")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force references (read the whole input)");
  oracle->require_subcommand(1);
  auto* kconn = oracle->add_subcommand("kconn", "exhaustive k-connectivity");
  kconn->add_option("-k", k, "connectivity parameter")->required()
      ->check(CLI::PositiveNumber);
  kconn->add_option("--input", input, "input stream file")->required();
  auto* kappa = oracle->add_subcommand("kappa", "exact local connectivity");
  kappa->add_option("-u", u, "first vertex")->required();
  kappa->add_option("-v", v, "second vertex")->required();
  kappa->add_option("--input", input, "input stream file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (certify->parsed()) {
      return run_certify(algorithm, k, input, output, stats_path);
    }
    if (decide->parsed()) {
      return run_decide(algorithm, k, input, stats_path);
    }
    if (separators->parsed()) {
      return run_separators(algorithm, k, input);
    }
    if (cutv->parsed()) {
      return run_cut_vertices(input);
    }
    if (gen->parsed()) {
      if (model == "gnp") params.model = GraphModel::gnp;
      if (model == "cycle") params.model = GraphModel::cycle;
      if (model == "complete") params.model = GraphModel::complete;
      if (model == "circulant") params.model = GraphModel::circulant;
      if (model == "two_blocks") params.model = GraphModel::two_blocks;
      params.n = n;
      params.p = prob;
      params.offsets = offsets;
      params.block_a = block_a;
      params.block_b = block_b;
      params.separator = separator_size;
      params.seed = seed;
      return run_gen(params, output);
    }
    if (kconn->parsed()) {
      return run_oracle_kconn(k, input);
    }
    if (kappa->parsed()) {
      return run_oracle_kappa(u, v, input);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitError;
  }
  return kExitError;
}
