#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmsa/combinatorics.hpp"
#include "qmsa/driver.hpp"
#include "qmsa/hamiltonian.hpp"
#include "qmsa/oracle.hpp"
#include "qmsa/run_config.hpp"

namespace qmsa {

using Json = nlohmann::json;

/// Shortest round-trip decimal form of a double (deterministic).
std::string format_double(double v);

// Quadratic-model export: {n, quadratic: [[i, j, value]...], linear: [...],
// constant}. Stable and round-trippable.
Json qubo_to_json(const QuboModel& m);
QuboModel qubo_from_json(const Json& j);
Json ising_to_json(const IsingModel& m);
IsingModel ising_from_json(const Json& j);

Json run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const Json& j);

/// Accepts either a bare config object or a result file embedding one under
/// "config".
RunConfig run_config_from_file(const std::string& path);

Json violations_to_json(const std::vector<Violation>& vs);
Json qaoa_result_to_json(const RunConfig& cfg, const QaoaResult& r);
Json count_report_to_json(const CountReport& r);
std::string count_report_text(const CountReport& r);
Json oracle_outputs_to_json(const RunConfig& cfg, const OracleReport& rep,
                            const CrossValidation& cv);

/// CSV projection of the sampled histogram:
/// bitstring,count,probability,feasible,energy (probability is the exact
/// |amplitude|^2). Rows sorted by count desc, then bitstring asc.
std::string histogram_csv(const SequenceSet& seqs, const QaoaResult& r);

/// CSV series for sweeps: p,best_expectation,probability_global_min.
std::string series_csv(const std::vector<QaoaResult>& results);

/// Plain-text top-10 table in the layout of the probability histograms:
/// rank, bitstring, probability, count, feasibility, energy, alignment.
std::string top_table(const QaoaResult& r);

/// Human-readable index-map table for the encode command.
std::string encoding_table_text(const SequenceSet& seqs);
Json encoding_to_json(const SequenceSet& seqs);

// Output writers. Each returns the list of files written.
std::vector<std::filesystem::path> write_solve_outputs(
    const std::filesystem::path& dir, const RunConfig& cfg,
    const SequenceSet& seqs, const QaoaResult& result);
std::vector<std::filesystem::path> write_sweep_outputs(
    const std::filesystem::path& dir, const RunConfig& cfg,
    const SequenceSet& seqs, const std::vector<QaoaResult>& results);

} // namespace qmsa
