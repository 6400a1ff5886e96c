#include <cctype>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmsa/driver.hpp"
#include "qmsa/errors.hpp"
#include "qmsa/fasta.hpp"
#include "qmsa/oracle.hpp"
#include "qmsa/run_config.hpp"
#include "qmsa/serialize.hpp"

namespace {

using namespace qmsa;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

struct CliOptions {
  std::string config_path;
  std::string seqs_csv;
  std::string fasta_path;
  std::string score_matrix;
  std::string out_dir;
  std::string format;
  std::string method;
  double p1 = 0, p2 = 0, p3 = 0;
  int p = 0;
  std::vector<int> p_list;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  int starts = 0;
  int max_evals = 0;
  double tolerance = 0;
  int top_k = 0;
  bool emit_models = false;
  int count_L = 0;
  std::vector<int> count_lengths;
};

void add_common_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--config", o.config_path,
                  "JSON config file (flags override its fields); accepts a "
                  "previous result.json");
  cmd->add_option("--seqs", o.seqs_csv, "inline sequences, e.g. \"AG,G\"");
  cmd->add_option("--fasta", o.fasta_path, "FASTA input file");
  cmd->add_option("--score-matrix", o.score_matrix,
                  "JSON pair-score file overriding the native scheme");
  cmd->add_option("--p1", o.p1, "exactly-one-column penalty (default 10)");
  cmd->add_option("--p2", o.p2, "column-occupancy penalty (default 1)");
  cmd->add_option("--p3", o.p3, "order penalty (default 1)");
  cmd->add_option("--seed", o.seed, "master seed (default 1)");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--format", o.format, "stdout format: json|text|both");
}

void add_solver_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--shots", o.shots, "measurement shots (default 5000)");
  cmd->add_option("--starts", o.starts, "random optimizer starts (default 10)");
  cmd->add_option("--max-evals", o.max_evals,
                  "objective evaluations per start (default 500)");
  cmd->add_option("--method", o.method,
                  "optimizer: cobyla (linear trust region) | nelder-mead");
  cmd->add_option("--tolerance", o.tolerance, "optimizer tolerance");
  cmd->add_option("--top-k", o.top_k, "decoded outcomes to report (default 10)");
}

bool flag_set(const CLI::App* cmd, const char* name) {
  const auto* opt = cmd->get_option_no_throw(name);
  return opt && opt->count() > 0;
}

/// Config file first (when given), then explicit flags on top.
RunConfig assemble_config(const CLI::App* cmd, const CliOptions& o) {
  RunConfig cfg;
  if (flag_set(cmd, "--config")) {
    cfg = run_config_from_file(o.config_path);
    if (cfg.sequences.empty() && !cfg.fasta_path.empty())
      cfg.sequences = read_fasta_file(cfg.fasta_path).strings();
  }
  const auto set = [&](const char* flag) { return flag_set(cmd, flag); };

  if (set("--seqs")) {
    cfg.sequences.clear();
    std::string current;
    for (char c : o.seqs_csv) {
      if (c == ',') {
        cfg.sequences.push_back(current);
        current.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        current.push_back(c);
      }
    }
    cfg.sequences.push_back(current);
    cfg.fasta_path.clear();
  }
  if (set("--fasta")) {
    cfg.fasta_path = o.fasta_path;
    cfg.sequences = read_fasta_file(o.fasta_path).strings();
  }
  if (set("--score-matrix")) cfg.score_matrix_path = o.score_matrix;
  if (set("--p1")) cfg.penalties.p1 = o.p1;
  if (set("--p2")) cfg.penalties.p2 = o.p2;
  if (set("--p3")) cfg.penalties.p3 = o.p3;
  if (set("--seed")) cfg.seed = o.seed;
  if (set("--format")) cfg.format = o.format;
  if (set("--shots")) cfg.shots = o.shots;
  if (set("--starts")) cfg.optimizer.starts = o.starts;
  if (set("--max-evals")) cfg.optimizer.max_evaluations = o.max_evals;
  if (set("--method")) cfg.optimizer.method = o.method;
  if (set("--tolerance")) cfg.optimizer.tolerance = o.tolerance;
  if (set("--top-k")) cfg.top_k = o.top_k;
  if (set("--p")) cfg.layers = o.p;
  if (set("--p-list")) cfg.p_list = o.p_list;
  if (set("--emit-models")) cfg.emit_models = o.emit_models;
  if (set("--L")) cfg.count_max_length = o.count_L;
  if (set("--lengths")) cfg.count_lengths = o.count_lengths;
  cfg.optimizer.seed = cfg.seed;
  return cfg;
}

ScoreFn resolve_score(const RunConfig& cfg) {
  if (cfg.score_matrix_path.empty()) return native_score();
  return score_from_json_file(cfg.score_matrix_path);
}

SequenceSet alignment_input(const RunConfig& cfg) {
  auto seqs = cfg.make_sequences();
  if (seqs.count() < 2)
    throw InputError("alignment needs at least two sequences");
  return seqs;
}

void warn_on_disabled_penalties(const RunConfig& cfg) {
  if (cfg.penalties.any_disabled())
    std::cerr << "warning: a penalty weight is 0; the matching hard "
                 "constraint is disabled\n";
}

int cmd_encode(const CLI::App* cmd, const CliOptions& o) {
  const auto cfg = assemble_config(cmd, o);
  cfg.validate();
  const auto seqs = cfg.make_sequences();
  if (cfg.format != "json") std::cout << encoding_table_text(seqs);
  if (cfg.format != "text") std::cout << encoding_to_json(seqs).dump(2) << "\n";
  if (flag_set(cmd, "--out")) {
    std::filesystem::create_directories(o.out_dir);
    std::ofstream out(std::filesystem::path(o.out_dir) / "encode.json",
                      std::ios::binary);
    out << encoding_to_json(seqs).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_solve(const CLI::App* cmd, const CliOptions& o) {
  auto cfg = assemble_config(cmd, o);
  cfg.validate();
  warn_on_disabled_penalties(cfg);
  const auto seqs = alignment_input(cfg);
  const auto result = run_qaoa(seqs, cfg.layers, cfg.penalties, cfg.shots,
                               cfg.optimizer, {}, cfg.top_k, resolve_score(cfg));
  const auto dir = flag_set(cmd, "--out") ? o.out_dir : std::string(".");
  const auto files = write_solve_outputs(dir, cfg, seqs, result);
  std::cout << "n_qubits: " << result.n_qubits << ", p: " << result.layers
            << ", best <H>: " << format_double(result.best_expectation)
            << "\nglobal minimum " << result.global_min_bitstring
            << " (energy " << format_double(result.global_min_energy)
            << ") sampled with probability "
            << format_double(result.global_min_probability) << "\n\n"
            << top_table(result) << "\nwrote:\n";
  for (const auto& f : files) std::cout << "  " << f.string() << "\n";
  return kExitOk;
}

int cmd_sweep(const CLI::App* cmd, const CliOptions& o) {
  auto cfg = assemble_config(cmd, o);
  cfg.validate();
  if (cfg.p_list.empty())
    throw InputError("sweep needs a nonempty --p-list");
  warn_on_disabled_penalties(cfg);
  const auto seqs = alignment_input(cfg);
  const auto results = p_sweep(seqs, cfg.p_list, cfg.penalties, cfg.shots,
                               cfg.optimizer, resolve_score(cfg));
  const auto dir = flag_set(cmd, "--out") ? o.out_dir : std::string(".");
  const auto files = write_sweep_outputs(dir, cfg, seqs, results);
  std::cout << series_csv(results) << "\nwrote:\n";
  for (const auto& f : files) std::cout << "  " << f.string() << "\n";
  return kExitOk;
}

int cmd_count(const CLI::App* cmd, const CliOptions& o) {
  const auto cfg = assemble_config(cmd, o);
  cfg.validate();
  CountReport report;
  if (!cfg.sequences.empty()) {
    report = count_report(cfg.make_sequences());
  } else if (cfg.count_max_length > 0 || !cfg.count_lengths.empty()) {
    report = count_report(cfg.count_max_length, cfg.count_lengths);
  } else {
    throw InputError("count needs sequences or a synthetic shape "
                     "(--L and --lengths)");
  }
  if (cfg.format != "json") std::cout << count_report_text(report);
  if (cfg.format != "text")
    std::cout << count_report_to_json(report).dump(2) << "\n";
  if (flag_set(cmd, "--out")) {
    std::filesystem::create_directories(o.out_dir);
    std::ofstream out(std::filesystem::path(o.out_dir) / "count.json",
                      std::ios::binary);
    out << count_report_to_json(report).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const CLI::App* cmd, const CliOptions& o) {
  const auto cfg = assemble_config(cmd, o);
  cfg.validate();
  warn_on_disabled_penalties(cfg);
  const auto seqs = alignment_input(cfg);
  const auto score = resolve_score(cfg);
  const auto report = oracle_report(seqs, cfg.penalties, cfg.top_k, score);
  const auto cv = cross_validate(seqs, cfg.penalties, score);
  const auto j = oracle_outputs_to_json(cfg, report, cv);
  std::cout << j.dump(2) << "\n";
  if (flag_set(cmd, "--out")) {
    std::filesystem::create_directories(o.out_dir);
    std::ofstream out(std::filesystem::path(o.out_dir) / "oracle.json",
                      std::ios::binary);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmsa - multiple sequence alignment compiled to QUBO/Ising "
               "models and solved with a simulated QAOA loop"};
  app.require_subcommand(1);
  CliOptions o;

  auto* encode = app.add_subcommand(
      "encode", "show the qubit index map and reference placement");
  add_common_options(encode, o);

  auto* solve = app.add_subcommand(
      "solve", "optimize the QAOA ansatz and sample the optimal state");
  add_common_options(solve, o);
  add_solver_options(solve, o);
  solve->add_option("--p", o.p, "QAOA layer count (default 1)");
  solve->add_flag("--emit-models", o.emit_models,
                  "also write qubo.json and ising.json");

  auto* sweep = app.add_subcommand(
      "sweep", "run solve per p in a list and emit the series");
  add_common_options(sweep, o);
  add_solver_options(sweep, o);
  sweep->add_option("--p-list", o.p_list, "layer counts, e.g. 1,2,3,4,5")
      ->delimiter(',');

  auto* count = app.add_subcommand(
      "count", "feasible-alignment counting and the decay bound");
  add_common_options(count, o);
  count->add_option("--L", o.count_L, "synthetic maximal length");
  count->add_option("--lengths", o.count_lengths,
                    "synthetic string lengths, e.g. 50,43,43")
      ->delimiter(',');

  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive ground truth and penalty cross-validation");
  add_common_options(oracle, o);
  oracle->add_option("--top-k", o.top_k, "energies to list (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (encode->parsed()) return cmd_encode(encode, o);
    if (solve->parsed()) return cmd_solve(solve, o);
    if (sweep->parsed()) return cmd_sweep(sweep, o);
    if (count->parsed()) return cmd_count(count, o);
    if (oracle->parsed()) return cmd_oracle(oracle, o);
    std::cerr << "error: no subcommand\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
