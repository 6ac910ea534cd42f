#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thetapcn/formulas.hpp"
#include "thetapcn/graph.hpp"
#include "thetapcn/json_io.hpp"
#include "thetapcn/oriented.hpp"
#include "thetapcn/patterns.hpp"
#include "thetapcn/solver.hpp"
#include "thetapcn/sweep.hpp"
#include "thetapcn/verifier.hpp"

namespace {

using namespace thetapcn;

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kInputError = 2;
constexpr int kResourceLimit = 3;

std::vector<bool> parse_arcs(const std::string& bits, int edge_count) {
  if (static_cast<int>(bits.size()) != edge_count)
    throw IoError("--arcs needs exactly one bit per edge (" +
                  std::to_string(edge_count) + " expected, got " +
                  std::to_string(bits.size()) + ")");
  std::vector<bool> forward(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw IoError("--arcs must be a string of 0s and 1s");
    forward[i] = bits[i] == '1';
  }
  return forward;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty())
    std::cout << text;
  else
    write_text_file(output_path, text);
}

ConditionLabel label_from_name(const std::string& name) {
  static const ConditionLabel all[] = {
      ConditionLabel::kA,           ConditionLabel::kB,
      ConditionLabel::kC,           ConditionLabel::kD,
      ConditionLabel::kE,           ConditionLabel::kF,
      ConditionLabel::kG,           ConditionLabel::kH,
      ConditionLabel::kI,           ConditionLabel::kJ,
      ConditionLabel::kK,           ConditionLabel::kL,
      ConditionLabel::kM,           ConditionLabel::kN,
      ConditionLabel::kPcn3I,       ConditionLabel::kPcn3II,
      ConditionLabel::kN3Dominated, ConditionLabel::kCycleCase,
      ConditionLabel::kUpperBound,
  };
  for (ConditionLabel label : all)
    if (to_string(label) == name) return label;
  throw IoError("unknown condition label: " + name);
}

int run_pcn(const std::vector<int>& lengths,
            const std::string& certificate_path) {
  const ThetaSpec spec(lengths);
  const PcnFormulaResult result = pcn_theta(spec);
  std::cout << "pcn=" << result.k << " trace=" << to_string(result.trace)
            << "\n";
  if (!certificate_path.empty()) {
    const PackingColoring coloring =
        certificate_theta(spec, result.k, result.trace);
    write_text_file(certificate_path,
                    coloring_to_json(build_theta(spec), coloring));
    std::cout << "certificate written to " << certificate_path << " ("
              << coloring.color_count() << " colors)\n";
  }
  return kOk;
}

int run_certificate(const std::vector<int>& lengths,
                    const std::string& condition, bool provenance,
                    const std::string& output_path) {
  if (provenance) std::cout << CaseTable::instance().report();
  if (lengths.empty()) {
    if (!provenance)
      throw IoError("certificate needs --lengths (or --provenance)");
    return kOk;
  }
  const ThetaSpec spec(lengths);
  PackingColoring coloring;
  if (condition.empty()) {
    const PcnFormulaResult result = pcn_theta(spec);
    coloring = certificate_theta(spec, result.k, result.trace);
    std::cout << "pcn=" << result.k << " trace=" << to_string(result.trace)
              << " colors=" << coloring.color_count() << " verified\n";
  } else {
    coloring = certificate_for_condition(spec, label_from_name(condition));
    std::cout << "condition=" << condition
              << " colors=" << coloring.color_count() << " verified\n";
  }
  emit(coloring_to_json(build_theta(spec), coloring), output_path);
  return kOk;
}

int run_solve(const std::string& graph_path, int colors, uint64_t node_limit,
              const std::string& output_path) {
  const GraphDocument doc = parse_graph(read_text_file(graph_path));
  const DistanceMatrix dm = doc.directed
                                ? weak_distance_matrix(doc.oriented())
                                : distance_matrix(doc.graph);
  SolverConfig cfg;
  cfg.node_limit = node_limit;
  if (colors > 0) {
    const SolveResult result = exists_k_coloring(dm, colors, cfg);
    if (result.status == SolveStatus::kNodeLimit) {
      std::cout << "node limit reached after " << result.nodes << " nodes\n";
      return kResourceLimit;
    }
    if (result.status == SolveStatus::kNone) {
      std::cout << "no packing " << colors << "-coloring exists ("
                << result.nodes << " nodes)\n";
      return kOk;
    }
    std::cout << "packing " << colors << "-coloring found (" << result.nodes
              << " nodes)\n";
    emit(coloring_to_json(doc.graph, *result.coloring), output_path);
    return kOk;
  }
  const PcnResult result = pcn_exact(dm, cfg);
  std::cout << "pcn=" << result.k << " (" << result.nodes << " nodes)\n";
  emit(coloring_to_json(doc.graph, result.coloring), output_path);
  return kOk;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path,
               bool weak) {
  const GraphDocument doc = parse_graph(read_text_file(graph_path));
  const PackingColoring coloring =
      parse_coloring(read_text_file(coloring_path), doc.graph);
  const DistanceMatrix dm = (doc.directed || weak)
                                ? weak_distance_matrix(doc.oriented())
                                : distance_matrix(doc.graph);
  const VerificationReport report = verify(dm, coloring);
  if (report.valid) {
    std::cout << "valid packing coloring (" << coloring.color_count()
              << " colors)\n";
    return kOk;
  }
  for (const Violation& v : report.violations)
    std::cout << "violation: " << doc.graph.label(v.a) << " and "
              << doc.graph.label(v.b) << " share color " << v.color
              << " at distance " << v.distance << "\n";
  return kSemanticFailure;
}

int run_sweep_u(const UndirectedSweepConfig& config) {
  const SweepReport report = run_sweep_undirected(config);
  std::cout << report.to_text();
  return report.passed() ? kOk : kSemanticFailure;
}

int run_sweep_o(const OrientedSweepConfig& config) {
  const SweepReport report = run_sweep_oriented(config);
  std::cout << report.to_text();
  return report.passed() ? kOk : kSemanticFailure;
}

int run_oriented_pcn(const std::vector<int>& lengths,
                     const std::string& arcs) {
  const LabeledGraph g = build_theta(ThetaSpec(lengths));
  const OrientedGraph og(g, parse_arcs(arcs, g.edge_count()));
  const PcnResult result = pcn_exact(weak_distance_matrix(og));
  std::cout << "pcn=" << result.k << "\n";
  return kOk;
}

int run_oriented_color(const std::vector<int>& lengths,
                       const std::string& arcs,
                       const std::string& output_path) {
  const LabeledGraph g = build_theta(ThetaSpec(lengths));
  const OrientedGraph og(g, parse_arcs(arcs, g.edge_count()));
  const PackingColoring coloring = color_oriented_theta(og);
  std::cout << "colors=" << coloring.color_count() << " verified\n";
  emit(coloring_to_json(g, coloring), output_path);
  return kOk;
}

int run_conjecture(const ScanConfig& config) {
  std::cout << conjecture_scan(config).to_text();
  return kOk;
}

int run_graph(const std::vector<int>& lengths, int path_n, int cycle_n,
              const std::string& output_path) {
  const int chosen =
      (!lengths.empty() ? 1 : 0) + (path_n > 0 ? 1 : 0) + (cycle_n > 0 ? 1 : 0);
  if (chosen != 1)
    throw IoError("choose exactly one of --lengths, --path, --cycle");
  LabeledGraph g = !lengths.empty() ? build_theta(ThetaSpec(lengths))
                   : path_n > 0     ? build_path(path_n)
                                    : build_cycle(cycle_n);
  emit(graph_to_json(g), output_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packing chromatic numbers of generalized theta graphs"};
  app.require_subcommand(1);

  std::vector<int> lengths;
  std::string arcs;
  std::string graph_path;
  std::string coloring_path;
  std::string output_path;
  std::string certificate_path;
  std::string condition;
  bool provenance = false;
  bool weak = false;
  int colors = 0;
  uint64_t node_limit = 0;
  int path_n = 0;
  int cycle_n = 0;
  UndirectedSweepConfig sweep_u;
  OrientedSweepConfig sweep_o;
  bool skip_certificates = false;
  bool skip_lower_bound = false;
  bool skip_theta0 = false;
  ScanConfig scan;

  CLI::App* pcn = app.add_subcommand(
      "pcn", "closed-form packing chromatic number of a theta graph");
  pcn->add_option("--lengths", lengths, "path lengths, e.g. 3,3,3")
      ->required()
      ->delimiter(',');
  pcn->add_option("--certificate", certificate_path,
                  "also write a verified optimal coloring to this file");

  CLI::App* certificate = app.add_subcommand(
      "certificate", "build and verify an explicit optimal coloring");
  certificate->add_option("--lengths", lengths, "path lengths")
      ->delimiter(',');
  certificate->add_option(
      "--condition", condition,
      "build for this specific rule instead of the computed one");
  certificate->add_flag("--provenance", provenance,
                        "print the color-word table with repair records");
  certificate->add_option("--output,-o", output_path,
                          "write the coloring JSON here instead of stdout");

  CLI::App* solve = app.add_subcommand(
      "solve", "exact packing coloring search on a graph file");
  solve->add_option("--graph", graph_path, "graph JSON file")->required();
  solve->add_option("--colors", colors,
                    "test this many colors instead of minimizing");
  solve->add_option("--node-limit", node_limit,
                    "abort the search after this many nodes");
  solve->add_option("--output,-o", output_path,
                    "write the witness coloring here");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a coloring file against a graph");
  verify_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  verify_cmd->add_option("--coloring", coloring_path, "coloring JSON file")
      ->required();
  verify_cmd->add_flag(
      "--weak", weak,
      "use weak directed distance (implied by a directed graph)");

  CLI::App* sweep =
      app.add_subcommand("sweep", "cross-validate formulas against the solver");
  sweep->require_subcommand(1);
  CLI::App* sweep_und = sweep->add_subcommand(
      "undirected", "formula vs solver vs certificates on all small specs");
  sweep_und->add_option("--max-p", sweep_u.max_p, "most paths per spec");
  sweep_und->add_option("--max-len", sweep_u.max_len, "longest path");
  sweep_und->add_option("--max-vertices", sweep_u.max_vertices,
                        "largest vertex count");
  sweep_und->add_flag("--skip-certificates", skip_certificates,
                      "skip certificate construction");
  sweep_und->add_flag("--skip-lower-bound", skip_lower_bound,
                      "skip the (k-1)-color refutations");
  CLI::App* sweep_ori = sweep->add_subcommand(
      "oriented", "solver checks over every orientation of small specs");
  sweep_ori->add_option("--max-edges", sweep_o.max_edges,
                        "largest edge count");
  sweep_ori->add_flag("--skip-theta0", skip_theta0,
                      "skip the 20-arc five-color example");

  CLI::App* oriented =
      app.add_subcommand("oriented", "oriented theta graph operations");
  oriented->require_subcommand(1);
  CLI::App* oriented_pcn = oriented->add_subcommand(
      "pcn", "exact value for one orientation (weak distance)");
  oriented_pcn->add_option("--lengths", lengths, "path lengths")
      ->required()
      ->delimiter(',');
  oriented_pcn
      ->add_option("--arcs", arcs,
                   "direction bit per edge in canonical order; 1 points "
                   "from u toward v")
      ->required();
  CLI::App* oriented_color = oriented->add_subcommand(
      "color", "five-color construction for one orientation");
  oriented_color->add_option("--lengths", lengths, "path lengths")
      ->required()
      ->delimiter(',');
  oriented_color->add_option("--arcs", arcs, "direction bit per edge")
      ->required();
  oriented_color->add_option("--output,-o", output_path,
                             "write the coloring JSON here");

  CLI::App* conjecture = app.add_subcommand(
      "conjecture",
      "scan orientations of long-path thetas for five-color instances");
  conjecture->add_option("--min-len", scan.min_len, "shortest path (>= 4)");
  conjecture->add_option("--max-len", scan.max_len, "longest path")
      ->required();
  conjecture->add_option("--max-p", scan.max_p, "most paths per spec")
      ->required();
  conjecture->add_option("--cap", scan.orientation_cap,
                         "largest edge count the scan may enumerate");

  CLI::App* graph_cmd =
      app.add_subcommand("graph", "emit a canonical graph as JSON");
  graph_cmd->add_option("--lengths", lengths, "theta path lengths")
      ->delimiter(',');
  graph_cmd->add_option("--path", path_n, "path on n vertices");
  graph_cmd->add_option("--cycle", cycle_n, "cycle on n vertices");
  graph_cmd->add_option("--output,-o", output_path, "write the JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (pcn->parsed()) return run_pcn(lengths, certificate_path);
    if (certificate->parsed())
      return run_certificate(lengths, condition, provenance, output_path);
    if (solve->parsed())
      return run_solve(graph_path, colors, node_limit, output_path);
    if (verify_cmd->parsed()) return run_verify(graph_path, coloring_path, weak);
    if (sweep_und->parsed()) {
      sweep_u.check_certificates = !skip_certificates;
      sweep_u.check_lower_bound = !skip_lower_bound;
      return run_sweep_u(sweep_u);
    }
    if (sweep_ori->parsed()) {
      sweep_o.include_theta0 = !skip_theta0;
      return run_sweep_o(sweep_o);
    }
    if (oriented_pcn->parsed()) return run_oriented_pcn(lengths, arcs);
    if (oriented_color->parsed())
      return run_oriented_color(lengths, arcs, output_path);
    if (conjecture->parsed()) return run_conjecture(scan);
    if (graph_cmd->parsed())
      return run_graph(lengths, path_n, cycle_n, output_path);
  } catch (const NodeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CertificateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticFailure;
  }
  return kInputError;
}
