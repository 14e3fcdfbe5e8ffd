// Command-line front end: solve, check, oracle, gen.
//
// Exit codes: 0 success/accept, 1 input error, 2 internal certification
// failure, 3 checker reject, 4 oracle capacity guard.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "blossom/blossom.hpp"
#include "blossom/generate.hpp"
#include "blossom/io.hpp"
#include "blossom/oracle.hpp"

namespace {

using namespace blossom;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCertification = 2;
constexpr int kExitReject = 3;
constexpr int kExitCapacity = 4;

io::GraphFormat parse_format(const std::string& name) {
  if (name == "dimacs") return io::GraphFormat::Dimacs;
  if (name == "edges") return io::GraphFormat::EdgeList;
  return io::GraphFormat::Auto;
}

int run_solve(const std::string& graph_path, const std::string& format,
              const std::string& out_path, bool trace) {
  const Graph g = io::read_graph(graph_path, parse_format(format));
  MatcherOptions options;
  std::size_t phase = 0;
  if (trace) {
    options.search.trace = [&phase](std::size_t level, const SearchEvent& e) {
      std::cerr << io::trace_record(phase, level, e) << '\n';
    };
    options.on_augment = [&phase](const Matching&) { ++phase; };
  }

  CertifiedMatching result;
  try {
    result = find_max_matching(g, options);
  } catch (const InternalError& e) {
    std::cerr << "certification failed: " << e.what() << '\n';
    return kExitCertification;
  }
  const Verdict verdict = check_max_card_matching(g, result.matching, result.witness);
  const std::string doc = io::result_document(g, result.matching, result.witness, verdict).dump(2);
  if (out_path.empty()) {
    std::cout << doc << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << doc << '\n';
  }
  if (!verdict) {
    std::cerr << "self-check rejected the certificate: " << verdict.reason << '\n';
    return kExitCertification;
  }
  return kExitOk;
}

int run_check(const std::string& graph_path, const std::string& cert_path,
              const std::string& format) {
  const Graph g = io::read_graph(graph_path, parse_format(format));
  const io::Certificate cert = io::read_certificate(cert_path);
  const Verdict verdict = io::check_certificate(g, cert);
  std::cout << io::verdict_json(verdict).dump() << '\n';
  if (!verdict) {
    std::cerr << "CHECK_MAX_CARD_MATCHING: " << verdict.reason << '\n';
    return kExitReject;
  }
  return kExitOk;
}

int run_oracle(const std::string& graph_path, const std::string& format) {
  const Graph g = io::read_graph(graph_path, parse_format(format));
  std::cout << oracle::brute_max_matching(g).size() << '\n';
  return kExitOk;
}

int run_gen(std::size_t n, double p, std::uint64_t seed) {
  io::write_dimacs(std::cout, random_graph(n, p, seed));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifying maximum-cardinality matching for general graphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string cert_path;
  std::string out_path;
  std::string format = "auto";
  bool trace = false;

  auto* solve = app.add_subcommand("solve", "Compute a maximum matching with an odd-set cover");
  solve->add_option("graph", graph_path, "Graph file (DIMACS or edge list)")->required();
  solve->add_option("-o,--output", out_path, "Write the result document here instead of stdout");
  solve->add_flag("--trace", trace, "Stream search events to stderr as JSON lines");

  auto* check = app.add_subcommand("check", "Check a certificate against a graph");
  check->add_option("graph", graph_path, "Graph file")->required();
  check->add_option("certificate", cert_path, "Certificate (result document)")->required();

  auto* orc = app.add_subcommand("oracle", "Brute-force maximum matching size (small graphs)");
  orc->add_option("graph", graph_path, "Graph file")->required();

  for (auto* sub : {solve, check, orc}) {
    sub->add_option("-f,--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "dimacs", "edges"}));
  }

  std::size_t gen_n = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Emit a G(n, p) random graph in DIMACS format");
  gen->add_option("-n,--n", gen_n, "Vertex count")->required();
  gen->add_option("-p,--p", gen_p, "Edge probability")->required();
  gen->add_option("-s,--seed", gen_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return run_solve(graph_path, format, out_path, trace);
    if (*check) return run_check(graph_path, cert_path, format);
    if (*orc) return run_oracle(graph_path, format);
    if (*gen) return run_gen(gen_n, gen_p, gen_seed);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ContractError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
