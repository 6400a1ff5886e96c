#include "qmsa/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>

#include "qmsa/errors.hpp"
#include "qmsa/oracle.hpp"
#include "qmsa/rng.hpp"

namespace qmsa {
namespace {

constexpr std::uint64_t kSamplerStream = 0x53414D50; // "SAMP"
constexpr std::uint64_t kShotObjectiveStream = 0x4F424A53;
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

std::vector<double> flatten(const QaoaParams& p) {
  std::vector<double> x;
  x.reserve(2 * p.betas.size());
  x.insert(x.end(), p.betas.begin(), p.betas.end());
  x.insert(x.end(), p.gammas.begin(), p.gammas.end());
  return x;
}

QaoaParams unflatten(std::span<const double> x, int layers) {
  QaoaParams p;
  p.betas.assign(x.begin(), x.begin() + layers);
  p.gammas.assign(x.begin() + layers, x.begin() + 2 * layers);
  return p;
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

QaoaParams wrap_params(const QaoaParams& p) {
  QaoaParams out = p;
  for (auto& b : out.betas) b = wrap_angle(b);
  for (auto& g : out.gammas) g = wrap_angle(g);
  return out;
}

} // namespace

void OptimizerConfig::validate() const {
  if (starts < 1) throw InputError("optimizer starts must be >= 1");
  if (max_evaluations < 1) throw InputError("max_evaluations must be >= 1");
  if (!(tolerance >= 0.0)) throw InputError("tolerance must be >= 0");
  if (method != "cobyla" && method != "linear-trust-region" &&
      method != "nelder-mead")
    throw InputError("unknown optimizer method: " + method);
  if (shot_objective && objective_shots < 1)
    throw InputError("objective_shots must be >= 1 in shot mode");
}

OptimizeOutcome optimize(const Objective& objective, int layers,
                         const OptimizerConfig& cfg,
                         const std::vector<QaoaParams>& extra_starts) {
  cfg.validate();
  if (layers < 1) throw InputError("layer count must be >= 1");
  const int dim = 2 * layers;
  const Rng base(cfg.seed);

  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(dim, 0.0)); // deterministic zero start
  for (int i = 0; i < cfg.starts; ++i) {
    Rng rng = base.split(static_cast<std::uint64_t>(i) + 1);
    std::vector<double> x(dim);
    for (int k = 0; k < layers; ++k) x[k] = rng.next_double(0.0, cfg.beta_init_max);
    for (int k = 0; k < layers; ++k)
      x[layers + k] = rng.next_double(0.0, cfg.gamma_init_max);
    starts.push_back(std::move(x));
  }
  for (const auto& p : extra_starts) {
    p.validate();
    if (p.layers() != layers)
      throw InputError("extra start has the wrong layer count");
    starts.push_back(flatten(p));
  }

  MinimizeOptions opts;
  opts.max_evaluations = cfg.max_evaluations;
  opts.initial_step = 0.5;
  opts.tolerance = cfg.tolerance;
  opts.min_step = 1e-7;

  OptimizeOutcome out;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_point;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    auto r = minimize(cfg.method, objective, starts[i], opts);
    out.per_start.push_back(StartTrace{static_cast<int>(i), r.value});
    out.total_evaluations += r.evaluations;
    // strict comparison: ties stay with the lowest start index
    if (r.value < best) {
      best = r.value;
      best_point = std::move(r.point);
    }
  }
  out.params = unflatten(best_point, layers);
  out.value = objective(best_point);
  return out;
}

double QaoaResult::probability_of(const std::string& bitstring) const {
  const Bitstring b = Bitstring::from_string(bitstring);
  if (b.size() != n_qubits)
    throw InputError("bitstring length does not match the qubit count");
  return probabilities[b.to_index()];
}

QaoaResult run_qaoa(const SequenceSet& seqs, int layers,
                    const PenaltyConfig& pen, std::int64_t shots,
                    const OptimizerConfig& cfg,
                    const std::vector<QaoaParams>& extra_starts, int top_k,
                    const ScoreFn& score) {
  cfg.validate();
  pen.validate();
  if (layers < 1) throw InputError("layer count must be >= 1");
  if (shots < 1) throw InputError("shots must be >= 1");

  const auto map = QubitIndexMap::build(seqs);
  const int n = map.total_qubits();
  const auto weights = WeightTensor::build(seqs, score);
  const auto qubo = build_cost_qubo(seqs, weights, pen);
  const auto diag = build_energy_diagonal(qubo);

  // Every stream derives from (seed, layers) so that a sweep entry and a
  // direct run with the same config are identical.
  const Rng layer_base = Rng(cfg.seed).split(static_cast<std::uint64_t>(layers));
  OptimizerConfig run_cfg = cfg;
  run_cfg.seed = layer_base.seed();

  Objective objective;
  if (cfg.shot_objective) {
    auto shot_rng = std::make_shared<Rng>(layer_base.split(kShotObjectiveStream));
    const std::int64_t est_shots = cfg.objective_shots;
    objective = [&, shot_rng, est_shots](std::span<const double> x) {
      const auto psi = trial_state(n, diag, unflatten(x, layers));
      const auto hist = sample(psi, est_shots, shot_rng->next_u64());
      double e = 0.0;
      for (const auto& [bits, count] : hist.counts)
        e += static_cast<double>(count) / static_cast<double>(est_shots) *
             diag[Bitstring::from_string(bits).to_index()];
      return e;
    };
  } else {
    objective = [&](std::span<const double> x) {
      return expectation(trial_state(n, diag, unflatten(x, layers)), diag);
    };
  }

  auto outcome = optimize(objective, layers, run_cfg, extra_starts);

  QaoaResult result;
  result.n_qubits = n;
  result.layers = layers;
  result.best_params = outcome.params;
  result.best_params_wrapped = wrap_params(outcome.params);
  result.per_start = std::move(outcome.per_start);
  result.energies = diag;

  const auto psi = trial_state(n, diag, result.best_params);
  result.best_expectation = expectation(psi, diag);
  result.probabilities.resize(psi.amplitudes.size());
  double prob_total = 0.0;
  for (std::size_t k = 0; k < psi.amplitudes.size(); ++k) {
    result.probabilities[k] = std::norm(psi.amplitudes[k]);
    prob_total += result.probabilities[k];
  }
  if (std::abs(prob_total - 1.0) > 1e-9)
    throw std::logic_error("state probabilities do not sum to 1");

  result.sample_seed = layer_base.split(kSamplerStream).seed();
  result.histogram = sample(psi, shots, result.sample_seed);

  const auto gm = brute_force_min(diag);
  result.global_min_bitstring = gm.bitstring.str();
  result.global_min_energy = gm.energy;
  result.global_min_probability = result.probabilities[gm.index];

  std::vector<std::size_t> order(result.probabilities.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.probabilities[a] > result.probabilities[b];
  });
  const int keep = std::min<std::size_t>(top_k, order.size());
  for (int t = 0; t < keep; ++t) {
    const std::size_t k = order[t];
    DecodedOutcome d;
    const Bitstring bits = Bitstring::from_index(k, n);
    d.bitstring = bits.str();
    d.probability = result.probabilities[k];
    d.count = result.histogram.count_of(d.bitstring);
    d.energy = diag[k];
    auto decoded = decode_bitstring(bits, seqs);
    d.feasible = decoded.feasible();
    if (decoded.feasible())
      d.alignment = std::move(decoded.alignment);
    else
      d.violations = std::move(decoded.violations);
    result.top.push_back(std::move(d));
  }
  return result;
}

std::vector<QaoaResult> p_sweep(const SequenceSet& seqs,
                                const std::vector<int>& p_values,
                                const PenaltyConfig& pen, std::int64_t shots,
                                const OptimizerConfig& cfg,
                                const ScoreFn& score) {
  std::vector<QaoaResult> results;
  const QaoaResult* previous = nullptr;
  for (int p : p_values) {
    std::vector<QaoaParams> extras;
    if (previous && previous->layers < p) {
      QaoaParams padded = previous->best_params; // identity layers keep the state
      padded.betas.resize(p, 0.0);
      padded.gammas.resize(p, 0.0);
      extras.push_back(std::move(padded));
    }
    results.push_back(run_qaoa(seqs, p, pen, shots, cfg, extras, 10, score));
    previous = &results.back();
  }
  return results;
}

} // namespace qmsa
