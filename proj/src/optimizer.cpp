#include "qmsa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qmsa/errors.hpp"

namespace qmsa {
namespace {

struct BudgetExhausted {};

/// Counts evaluations, enforces the budget, rejects NaN, and remembers the
/// best point ever seen so a method can never return worse than it evaluated.
class Evaluator {
public:
  Evaluator(const Objective& f, int budget) : f_(f), budget_(std::max(1, budget)) {}

  double operator()(const std::vector<double>& x) {
    if (count_ >= budget_) throw BudgetExhausted{};
    const double v = f_(x);
    ++count_;
    if (std::isnan(v)) throw std::runtime_error("objective evaluated to NaN");
    if (v < best_value_) {
      best_value_ = v;
      best_point_ = x;
    }
    return v;
  }

  int count() const { return count_; }
  const std::vector<double>& best_point() const { return best_point_; }
  double best_value() const { return best_value_; }

private:
  const Objective& f_;
  int budget_;
  int count_ = 0;
  std::vector<double> best_point_;
  double best_value_ = std::numeric_limits<double>::infinity();
};

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

/// Solve A g = rhs by Gaussian elimination with partial pivoting.
/// Returns false when numerically singular.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> rhs,
                 std::vector<double>& out) {
  const int d = static_cast<int>(rhs.size());
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-14) return false;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = col + 1; r < d; ++r) {
      const double m = a[r][col] / a[col][col];
      if (m == 0.0) continue;
      for (int c = col; c < d; ++c) a[r][c] -= m * a[col][c];
      rhs[r] -= m * rhs[col];
    }
  }
  out.assign(d, 0.0);
  for (int r = d - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < d; ++c) s -= a[r][c] * out[c];
    out[r] = s / a[r][r];
  }
  return true;
}

MinimizeResult finish(const Evaluator& ev, bool converged) {
  MinimizeResult r;
  r.point = ev.best_point();
  r.value = ev.best_value();
  r.evaluations = ev.count();
  r.converged = converged;
  return r;
}

} // namespace

MinimizeResult minimize_linear_trust_region(const Objective& objective,
                                            std::vector<double> start,
                                            const MinimizeOptions& options) {
  const int d = static_cast<int>(start.size());
  if (d == 0) throw InputError("cannot optimize over zero parameters");
  Evaluator ev(objective, options.max_evaluations);
  bool converged = false;

  try {
    double rho = options.initial_step;
    const double rho_max = 4.0 * options.initial_step;
    const double rho_end = std::max(options.min_step, 1e-12);

    std::vector<std::vector<double>> pts(d + 1, start);
    std::vector<double> vals(d + 1);
    vals[0] = ev(pts[0]);
    auto rebuild = [&](double radius) {
      for (int i = 1; i <= d; ++i) {
        pts[i] = pts[0];
        pts[i][i - 1] += radius;
        vals[i] = ev(pts[i]);
      }
    };
    rebuild(rho);
    int next_axis = 0;

    while (true) {
      // keep the incumbent at slot 0
      int best = 0;
      for (int i = 1; i <= d; ++i)
        if (vals[i] < vals[best]) best = i;
      std::swap(pts[0], pts[best]);
      std::swap(vals[0], vals[best]);

      // linear interpolation model: (pts[i] - pts[0]) . g = vals[i] - vals[0]
      std::vector<std::vector<double>> a(d, std::vector<double>(d));
      std::vector<double> rhs(d);
      for (int i = 1; i <= d; ++i) {
        for (int c = 0; c < d; ++c) a[i - 1][c] = pts[i][c] - pts[0][c];
        rhs[i - 1] = vals[i] - vals[0];
      }
      std::vector<double> grad;
      const bool solvable = solve_dense(std::move(a), std::move(rhs), grad);
      double gnorm = 0.0;
      if (solvable) {
        for (double g : grad) gnorm += g * g;
        gnorm = std::sqrt(gnorm);
      }
      if (!solvable || !std::isfinite(gnorm) || gnorm < 1e-13) {
        rho *= 0.5;
        if (rho < rho_end) {
          converged = true;
          break;
        }
        rebuild(rho);
        continue;
      }

      std::vector<double> candidate = pts[0];
      for (int c = 0; c < d; ++c) candidate[c] -= (rho / gnorm) * grad[c];
      const double vnew = ev(candidate);
      const double predicted = rho * gnorm;
      const double actual = vals[0] - vnew;

      if (actual > 0.1 * predicted) {
        // evict the farthest vertex unless it beats the newcomer
        int w = 1;
        for (int i = 2; i <= d; ++i)
          if (distance(pts[i], pts[0]) > distance(pts[w], pts[0])) w = i;
        if (vals[w] <= vnew) {
          w = 0;
          for (int i = 1; i <= d; ++i)
            if (vals[i] > vals[w]) w = i;
        }
        pts[w] = std::move(candidate);
        vals[w] = vnew;
        if (actual > 0.7 * predicted) rho = std::min(rho * 2.0, rho_max);
        continue;
      }

      // rejected: repair geometry while any vertex strayed far, else shrink
      int far = 1;
      for (int i = 2; i <= d; ++i)
        if (distance(pts[i], pts[0]) > distance(pts[far], pts[0])) far = i;
      if (distance(pts[far], pts[0]) > 2.0 * rho) {
        pts[far] = pts[0];
        pts[far][next_axis] += rho;
        next_axis = (next_axis + 1) % d;
        vals[far] = ev(pts[far]);
        continue;
      }

      rho *= 0.5;
      if (rho < rho_end) {
        converged = true;
        break;
      }
      rebuild(rho);
    }
  } catch (const BudgetExhausted&) {
    converged = false;
  }
  return finish(ev, converged);
}

MinimizeResult minimize_nelder_mead(const Objective& objective,
                                    std::vector<double> start,
                                    const MinimizeOptions& options) {
  const int d = static_cast<int>(start.size());
  if (d == 0) throw InputError("cannot optimize over zero parameters");
  Evaluator ev(objective, options.max_evaluations);
  bool converged = false;

  // dimension-adaptive coefficients
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / d;
  const double gamma = 0.75 - 1.0 / (2.0 * d);
  const double delta = 1.0 - 1.0 / d;

  try {
    std::vector<std::vector<double>> pts(d + 1, start);
    std::vector<double> vals(d + 1);
    vals[0] = ev(pts[0]);
    for (int i = 1; i <= d; ++i) {
      pts[i][i - 1] += options.initial_step;
      vals[i] = ev(pts[i]);
    }

    while (true) {
      // sort ascending by value
      std::vector<int> order(d + 1);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int x, int y) { return vals[x] < vals[y]; });
      {
        std::vector<std::vector<double>> ps(d + 1);
        std::vector<double> vs(d + 1);
        for (int i = 0; i <= d; ++i) {
          ps[i] = std::move(pts[order[i]]);
          vs[i] = vals[order[i]];
        }
        pts = std::move(ps);
        vals = std::move(vs);
      }

      double diameter = 0.0;
      for (int i = 1; i <= d; ++i)
        diameter = std::max(diameter, distance(pts[i], pts[0]));
      if ((vals[d] - vals[0] < options.tolerance * (1.0 + std::abs(vals[0])) &&
           diameter < options.initial_step / 8.0) ||
          diameter < options.min_step) {
        converged = true;
        break;
      }

      std::vector<double> centroid(d, 0.0);
      for (int i = 0; i < d; ++i)
        for (int c = 0; c < d; ++c) centroid[c] += pts[i][c];
      for (int c = 0; c < d; ++c) centroid[c] /= d;

      auto blend = [&](double t) {
        std::vector<double> x(d);
        for (int c = 0; c < d; ++c)
          x[c] = centroid[c] + t * (centroid[c] - pts[d][c]);
        return x;
      };

      auto reflected = blend(alpha);
      const double fr = ev(reflected);
      if (fr < vals[0]) {
        auto expanded = blend(alpha * beta);
        const double fe = ev(expanded);
        if (fe < fr) {
          pts[d] = std::move(expanded);
          vals[d] = fe;
        } else {
          pts[d] = std::move(reflected);
          vals[d] = fr;
        }
        continue;
      }
      if (fr < vals[d - 1]) {
        pts[d] = std::move(reflected);
        vals[d] = fr;
        continue;
      }
      if (fr < vals[d]) { // outside contraction
        auto contracted = blend(gamma);
        const double fc = ev(contracted);
        if (fc <= fr) {
          pts[d] = std::move(contracted);
          vals[d] = fc;
          continue;
        }
      } else { // inside contraction
        auto contracted = blend(-gamma);
        const double fc = ev(contracted);
        if (fc < vals[d]) {
          pts[d] = std::move(contracted);
          vals[d] = fc;
          continue;
        }
      }
      // shrink toward the best vertex
      for (int i = 1; i <= d; ++i) {
        for (int c = 0; c < d; ++c)
          pts[i][c] = pts[0][c] + delta * (pts[i][c] - pts[0][c]);
        vals[i] = ev(pts[i]);
      }
    }
  } catch (const BudgetExhausted&) {
    converged = false;
  }
  return finish(ev, converged);
}

MinimizeResult minimize_cobyla(const Objective& objective,
                               std::vector<double> start,
                               const MinimizeOptions& options) {
  // Coarse linear-model trust-region descent on the first ~30% of the
  // budget, then a simplex refinement at half the step from the best point.
  // The split keeps the coarse phase from over-committing to a poor model
  // while the refinement digs into the basin it picked.
  MinimizeOptions coarse = options;
  coarse.max_evaluations = std::max(1, options.max_evaluations * 3 / 10);
  auto first = minimize_linear_trust_region(objective, std::move(start), coarse);

  MinimizeOptions fine = options;
  fine.max_evaluations = options.max_evaluations - first.evaluations;
  fine.initial_step = options.initial_step / 2.0;
  if (fine.max_evaluations < 1) return first;
  auto second = minimize_nelder_mead(objective, first.point, fine);
  second.evaluations += first.evaluations;
  if (first.value < second.value) {
    second.point = std::move(first.point);
    second.value = first.value;
  }
  return second;
}

MinimizeResult minimize(const std::string& method, const Objective& objective,
                        std::vector<double> start,
                        const MinimizeOptions& options) {
  if (method == "cobyla")
    return minimize_cobyla(objective, std::move(start), options);
  if (method == "linear-trust-region")
    return minimize_linear_trust_region(objective, std::move(start), options);
  if (method == "nelder-mead")
    return minimize_nelder_mead(objective, std::move(start), options);
  throw InputError("unknown optimizer method: " + method);
}

} // namespace qmsa
