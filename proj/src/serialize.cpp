#include "qmsa/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qmsa/errors.hpp"

namespace qmsa {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  out << bytes;
}

Json quadratic_terms_to_json(const std::vector<QuadraticTerm>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) arr.push_back(Json::array({t.i, t.j, t.value}));
  return arr;
}

std::vector<QuadraticTerm> quadratic_terms_from_json(const Json& arr) {
  std::vector<QuadraticTerm> terms;
  for (const auto& t : arr)
    terms.push_back(QuadraticTerm{t.at(0).get<int>(), t.at(1).get<int>(),
                                  t.at(2).get<double>()});
  return terms;
}

} // namespace

Json qubo_to_json(const QuboModel& m) {
  return Json{{"n", m.size()},
              {"quadratic", quadratic_terms_to_json(m.quadratic())},
              {"linear", m.linear()},
              {"constant", m.constant()}};
}

QuboModel qubo_from_json(const Json& j) {
  return QuboModel(j.at("n").get<int>(),
                   quadratic_terms_from_json(j.at("quadratic")),
                   j.at("linear").get<std::vector<double>>(),
                   j.at("constant").get<double>());
}

Json ising_to_json(const IsingModel& m) {
  return Json{{"n", m.size()},
              {"quadratic", quadratic_terms_to_json(m.couplings())},
              {"linear", m.fields()},
              {"constant", m.constant()}};
}

IsingModel ising_from_json(const Json& j) {
  return IsingModel(j.at("n").get<int>(),
                    quadratic_terms_from_json(j.at("quadratic")),
                    j.at("linear").get<std::vector<double>>(),
                    j.at("constant").get<double>());
}

Json run_config_to_json(const RunConfig& cfg) {
  return Json{
      {"sequences", cfg.sequences},
      {"fasta", cfg.fasta_path},
      {"penalties",
       {{"p1", cfg.penalties.p1}, {"p2", cfg.penalties.p2}, {"p3", cfg.penalties.p3}}},
      {"p", cfg.layers},
      {"p_list", cfg.p_list},
      {"shots", cfg.shots},
      {"seed", cfg.seed},
      {"optimizer",
       {{"method", cfg.optimizer.method},
        {"starts", cfg.optimizer.starts},
        {"max_evaluations", cfg.optimizer.max_evaluations},
        {"tolerance", cfg.optimizer.tolerance},
        {"beta_init_max", cfg.optimizer.beta_init_max},
        {"gamma_init_max", cfg.optimizer.gamma_init_max},
        {"shot_objective", cfg.optimizer.shot_objective},
        {"objective_shots", cfg.optimizer.objective_shots}}},
      {"score_matrix", cfg.score_matrix_path},
      {"format", cfg.format},
      {"top_k", cfg.top_k},
      {"emit_models", cfg.emit_models},
      {"count", {{"max_length", cfg.count_max_length}, {"lengths", cfg.count_lengths}}}};
}

RunConfig run_config_from_json(const Json& j) {
  RunConfig cfg;
  try {
    cfg.sequences = j.value("sequences", cfg.sequences);
    cfg.fasta_path = j.value("fasta", cfg.fasta_path);
    if (j.contains("penalties")) {
      const auto& p = j.at("penalties");
      cfg.penalties.p1 = p.value("p1", cfg.penalties.p1);
      cfg.penalties.p2 = p.value("p2", cfg.penalties.p2);
      cfg.penalties.p3 = p.value("p3", cfg.penalties.p3);
    }
    cfg.layers = j.value("p", cfg.layers);
    cfg.p_list = j.value("p_list", cfg.p_list);
    cfg.shots = j.value("shots", cfg.shots);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("optimizer")) {
      const auto& o = j.at("optimizer");
      cfg.optimizer.method = o.value("method", cfg.optimizer.method);
      cfg.optimizer.starts = o.value("starts", cfg.optimizer.starts);
      cfg.optimizer.max_evaluations =
          o.value("max_evaluations", cfg.optimizer.max_evaluations);
      cfg.optimizer.tolerance = o.value("tolerance", cfg.optimizer.tolerance);
      cfg.optimizer.beta_init_max =
          o.value("beta_init_max", cfg.optimizer.beta_init_max);
      cfg.optimizer.gamma_init_max =
          o.value("gamma_init_max", cfg.optimizer.gamma_init_max);
      cfg.optimizer.shot_objective =
          o.value("shot_objective", cfg.optimizer.shot_objective);
      cfg.optimizer.objective_shots =
          o.value("objective_shots", cfg.optimizer.objective_shots);
    }
    cfg.score_matrix_path = j.value("score_matrix", cfg.score_matrix_path);
    cfg.format = j.value("format", cfg.format);
    cfg.top_k = j.value("top_k", cfg.top_k);
    cfg.emit_models = j.value("emit_models", cfg.emit_models);
    if (j.contains("count")) {
      const auto& c = j.at("count");
      cfg.count_max_length = c.value("max_length", cfg.count_max_length);
      cfg.count_lengths = c.value("lengths", cfg.count_lengths);
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid config JSON: ") + e.what());
  }
  cfg.optimizer.seed = cfg.seed;
  return cfg;
}

RunConfig run_config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  if (j.is_object() && j.contains("config") && j.at("config").is_object())
    return run_config_from_json(j.at("config"));
  return run_config_from_json(j);
}

Json violations_to_json(const std::vector<Violation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs)
    arr.push_back(Json{{"constraint", v.constraint},
                       {"s", v.s},
                       {"n", v.n},
                       {"n2", v.n2},
                       {"i", v.i},
                       {"i2", v.i2}});
  return arr;
}

namespace {

Json decoded_outcome_to_json(const DecodedOutcome& d) {
  Json j{{"bitstring", d.bitstring}, {"probability", d.probability},
         {"count", d.count},         {"feasible", d.feasible},
         {"energy", d.energy}};
  if (d.alignment)
    j["alignment"] = d.alignment->grid();
  else
    j["alignment"] = nullptr;
  j["violations"] = violations_to_json(d.violations);
  return j;
}

} // namespace

Json qaoa_result_to_json(const RunConfig& cfg, const QaoaResult& r) {
  Json per_start = Json::array();
  for (const auto& t : r.per_start)
    per_start.push_back(Json::array({t.start_index, t.final_expectation}));
  Json top = Json::array();
  for (const auto& d : r.top) top.push_back(decoded_outcome_to_json(d));
  Json counts = Json::object();
  for (const auto& [bits, c] : r.histogram.counts) counts[bits] = c;
  return Json{
      {"schema", "qmsa.result.v1"},
      {"config", run_config_to_json(cfg)},
      {"n_qubits", r.n_qubits},
      {"layers", r.layers},
      {"best_params",
       {{"betas", r.best_params_wrapped.betas},
        {"gammas", r.best_params_wrapped.gammas}}},
      {"best_expectation", r.best_expectation},
      {"per_start", per_start},
      {"global_min",
       {{"bitstring", r.global_min_bitstring},
        {"energy", r.global_min_energy},
        {"probability", r.global_min_probability}}},
      {"histogram",
       {{"shots", r.histogram.shots}, {"seed", r.histogram.seed}, {"counts", counts}}},
      {"top", top}};
}

Json count_report_to_json(const CountReport& r) {
  return Json{{"schema", "qmsa.count.v1"},
              {"n_strings", r.n_strings},
              {"max_length", r.max_length},
              {"n_qubits", r.n_qubits},
              {"unique_max", r.unique_max},
              {"feasible_count", r.feasible.str()},
              {"hilbert_dim", r.hilbert.str()},
              {"fraction", r.fraction.convert_to<double>()},
              {"log10_feasible", r.log10_feasible},
              {"log10_fraction", r.log10_fraction},
              {"bound", r.bound.convert_to<double>()},
              {"log10_bound", r.log10_bound}};
}

std::string count_report_text(const CountReport& r) {
  std::ostringstream out;
  out << "strings           N = " << r.n_strings << "\n"
      << "longest length    L = " << r.max_length << "\n"
      << "qubits            n = " << r.n_qubits << "\n"
      << "feasible count  |S| = " << r.feasible.str() << "\n"
      << "                      (log10 = " << format_double(r.log10_feasible)
      << ")\n"
      << "hilbert dim     |H| = 2^" << r.n_qubits << "\n"
      << "fraction    |S|/|H| = " << format_double(r.fraction.convert_to<double>())
      << "  (log10 = " << format_double(r.log10_fraction) << ")\n";
  if (r.n_strings >= 2 && r.max_length >= 2) {
    out << "decay bound         = "
        << format_double(r.bound.convert_to<double>())
        << "  (log10 = " << format_double(r.log10_bound) << ")\n";
    if (r.unique_max)
      out << "fraction <= bound   : " << (r.fraction <= r.bound ? "yes" : "NO")
          << "\n";
  }
  return out.str();
}

Json oracle_outputs_to_json(const RunConfig& cfg, const OracleReport& rep,
                            const CrossValidation& cv) {
  Json lowest = Json::array();
  for (const auto& [bits, e] : rep.lowest)
    lowest.push_back(Json::array({bits, e}));
  return Json{
      {"schema", "qmsa.oracle.v1"},
      {"config", run_config_to_json(cfg)},
      {"global_min",
       {{"bitstring", rep.global_min_bitstring}, {"energy", rep.global_min_energy}}},
      {"best_feasible",
       {{"bitstring", rep.feasible_min_bitstring}, {"sp_score", rep.feasible_min_sp}}},
      {"lowest", lowest},
      {"top_k", rep.top_k},
      {"cross_validation",
       {{"penalties_sufficient", cv.penalties_sufficient},
        {"penalty_margin", cv.penalty_margin},
        {"global_min_feasible", cv.global_min_feasible},
        {"agrees_with_best_feasible", cv.agrees_with_best_feasible},
        {"consistent", cv.consistent},
        {"findings", cv.findings}}}};
}

std::string histogram_csv(const SequenceSet& seqs, const QaoaResult& r) {
  struct Row {
    std::string bits;
    std::int64_t count;
    double probability;
    bool feasible;
    double energy;
  };
  std::vector<Row> rows;
  for (const auto& [bits, count] : r.histogram.counts) {
    const Bitstring b = Bitstring::from_string(bits);
    const auto k = b.to_index();
    rows.push_back(Row{bits, count, r.probabilities[k], is_feasible(b, seqs),
                       r.energies[k]});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.bits < b.bits;
  });
  std::string out = "bitstring,count,probability,feasible,energy\n";
  for (const auto& row : rows) {
    out += row.bits;
    out += ',';
    out += std::to_string(row.count);
    out += ',';
    out += format_double(row.probability);
    out += ',';
    out += row.feasible ? '1' : '0';
    out += ',';
    out += format_double(row.energy);
    out += '\n';
  }
  return out;
}

std::string series_csv(const std::vector<QaoaResult>& results) {
  std::string out = "p,best_expectation,probability_global_min\n";
  for (const auto& r : results) {
    out += std::to_string(r.layers);
    out += ',';
    out += format_double(r.best_expectation);
    out += ',';
    out += format_double(r.global_min_probability);
    out += '\n';
  }
  return out;
}

std::string top_table(const QaoaResult& r) {
  std::ostringstream out;
  out << "rank  bitstring";
  for (int pad = 9; pad < r.n_qubits; ++pad) out << ' ';
  out << "  probability  count  feasible  energy  alignment\n";
  int rank = 1;
  for (const auto& d : r.top) {
    std::string alignment = "-";
    if (d.alignment) {
      alignment.clear();
      for (int row = 0; row < d.alignment->rows(); ++row) {
        if (row) alignment += '|';
        alignment += d.alignment->row(row);
      }
    }
    char line[160];
    std::snprintf(line, sizeof(line), "%-4d  %-*s  %11.6f  %5lld  %-8s  %6s  %s\n",
                  rank++, std::max(9, r.n_qubits), d.bitstring.c_str(),
                  d.probability, static_cast<long long>(d.count),
                  d.feasible ? "yes" : "no", format_double(d.energy).c_str(),
                  alignment.c_str());
    out << line;
  }
  return out.str();
}

std::string encoding_table_text(const SequenceSet& seqs) {
  const auto map = QubitIndexMap::build(seqs);
  std::ostringstream out;
  out << "sequences: ";
  for (int s = 0; s < seqs.count(); ++s)
    out << (s ? "," : "") << seqs.str(s);
  out << "\nN = " << seqs.count() << ", L = " << seqs.max_length()
      << ", qubits n = L * sum(l_i) = " << map.total_qubits() << "\n"
      << "reference string: index " << seqs.reference() + 1 << " ("
      << seqs.str(seqs.reference()) << ")\n"
      << "qubit -> (string s, letter n, column i), 1-based:\n";
  for (int k = 0; k < map.total_qubits(); ++k) {
    const auto site = map.site(k);
    out << "  " << k << " -> (" << site.s + 1 << ", " << site.letter + 1 << ", "
        << site.col + 1 << ")\n";
  }
  std::vector<std::string> rows;
  for (int s = 0; s < seqs.count(); ++s) {
    std::string row = seqs.str(s);
    row += std::string(seqs.max_length() - seqs.length(s), kGap);
    rows.push_back(std::move(row));
  }
  const auto identity = encode_alignment(AlignmentMatrix(rows), map);
  out << "left-packed reference placement: " << identity.str() << "\n";
  return out.str();
}

Json encoding_to_json(const SequenceSet& seqs) {
  const auto map = QubitIndexMap::build(seqs);
  Json sites = Json::array();
  for (int k = 0; k < map.total_qubits(); ++k) {
    const auto site = map.site(k);
    sites.push_back(Json{
        {"index", k}, {"s", site.s}, {"letter", site.letter}, {"column", site.col}});
  }
  std::vector<std::string> rows;
  for (int s = 0; s < seqs.count(); ++s) {
    std::string row = seqs.str(s);
    row += std::string(seqs.max_length() - seqs.length(s), kGap);
    rows.push_back(std::move(row));
  }
  const auto identity = encode_alignment(AlignmentMatrix(rows), map);
  return Json{{"schema", "qmsa.encoding.v1"},
              {"sequences", seqs.strings()},
              {"n_qubits", map.total_qubits()},
              {"columns", map.columns()},
              {"reference_index", seqs.reference()},
              {"sites", sites},
              {"identity_bitstring", identity.str()}};
}

std::vector<std::filesystem::path> write_solve_outputs(
    const std::filesystem::path& dir, const RunConfig& cfg,
    const SequenceSet& seqs, const QaoaResult& result) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;

  const auto result_path = dir / "result.json";
  write_file(result_path, qaoa_result_to_json(cfg, result).dump(2) + "\n");
  written.push_back(result_path);

  const auto csv_path = dir / "histogram.csv";
  write_file(csv_path, histogram_csv(seqs, result));
  written.push_back(csv_path);

  const auto top_path = dir / "top10.txt";
  write_file(top_path, top_table(result));
  written.push_back(top_path);

  if (cfg.emit_models) {
    const auto weights = WeightTensor::build(seqs);
    const auto qubo = build_cost_qubo(seqs, weights, cfg.penalties);
    const auto qubo_path = dir / "qubo.json";
    write_file(qubo_path, qubo_to_json(qubo).dump(2) + "\n");
    written.push_back(qubo_path);
    const auto ising_path = dir / "ising.json";
    write_file(ising_path, ising_to_json(qubo_to_ising(qubo)).dump(2) + "\n");
    written.push_back(ising_path);
  }
  return written;
}

std::vector<std::filesystem::path> write_sweep_outputs(
    const std::filesystem::path& dir, const RunConfig& cfg,
    const SequenceSet& seqs, const std::vector<QaoaResult>& results) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& r : results) {
    RunConfig per_p = cfg;
    per_p.layers = r.layers;
    const auto result_path =
        dir / ("result_p" + std::to_string(r.layers) + ".json");
    write_file(result_path, qaoa_result_to_json(per_p, r).dump(2) + "\n");
    written.push_back(result_path);
    const auto csv_path =
        dir / ("histogram_p" + std::to_string(r.layers) + ".csv");
    write_file(csv_path, histogram_csv(seqs, r));
    written.push_back(csv_path);
  }
  const auto series_path = dir / "series.csv";
  write_file(series_path, series_csv(results));
  written.push_back(series_path);
  return written;
}

} // namespace qmsa
