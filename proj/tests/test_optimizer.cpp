#include <doctest.h>

#include <cmath>
#include <vector>

#include "qmsa/errors.hpp"
#include "qmsa/optimizer.hpp"

using namespace qmsa;

namespace {

const char* kMethods[] = {"cobyla", "linear-trust-region", "nelder-mead"};

double bowl(std::span<const double> x) {
  return (x[0] - 0.3) * (x[0] - 0.3) + (x[1] - 1.1) * (x[1] - 1.1);
}

} // namespace

TEST_CASE("quadratic bowl reaches the minimum within 1e-3") {
  for (const auto* method : kMethods) {
    CAPTURE(method);
    for (std::vector<double> start : {std::vector<double>{0.0, 0.0},
                                      std::vector<double>{2.5, 5.9},
                                      std::vector<double>{-1.0, 3.0}}) {
      const auto r = minimize(method, bowl, start, MinimizeOptions{});
      CAPTURE(start[0]);
      CHECK(std::abs(r.point[0] - 0.3) < 1e-3);
      CHECK(std::abs(r.point[1] - 1.1) < 1e-3);
      CHECK(r.evaluations <= 500);
    }
  }
}

TEST_CASE("constant objective is handled") {
  const Objective constant = [](std::span<const double>) { return 4.2; };
  for (const auto* method : kMethods) {
    const auto r = minimize(method, constant, {0.7, 0.1, 0.4}, MinimizeOptions{});
    CHECK(r.value == doctest::Approx(4.2));
  }
}

TEST_CASE("budget is respected and best-ever is returned") {
  int calls = 0;
  double lowest_seen = 1e300;
  const Objective counting = [&](std::span<const double> x) {
    ++calls;
    const double v = bowl(x);
    lowest_seen = std::min(lowest_seen, v);
    return v;
  };
  MinimizeOptions opts;
  opts.max_evaluations = 40;
  for (const auto* method : kMethods) {
    calls = 0;
    lowest_seen = 1e300;
    const auto r = minimize(method, counting, {3.0, -2.0}, opts);
    CHECK(calls <= 40);
    CHECK(r.evaluations == calls);
    CHECK(r.value == doctest::Approx(lowest_seen));
  }
}

TEST_CASE("NaN from the objective is an error") {
  const Objective bad = [](std::span<const double>) {
    return std::nan("");
  };
  for (const auto* method : kMethods)
    CHECK_THROWS_AS(minimize(method, bad, {0.0, 0.0}, MinimizeOptions{}),
                    std::runtime_error);
}

TEST_CASE("unknown method name") {
  CHECK_THROWS_AS(minimize("annealing", bowl, {0.0, 0.0}, MinimizeOptions{}),
                  InputError);
}

TEST_CASE("oscillatory objective still improves on the start") {
  const Objective wavy = [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::sin(3.0 * v) + 0.1 * v * v;
    return s;
  };
  for (const auto* method : kMethods) {
    const std::vector<double> start{1.0, 2.0, 3.0, 4.0};
    const double at_start = wavy(start);
    const auto r = minimize(method, wavy, start, MinimizeOptions{});
    CHECK(r.value < at_start);
  }
}
