#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "qmsa/errors.hpp"
#include "qmsa/hamiltonian.hpp"
#include "qmsa/rng.hpp"
#include "qmsa/simulator.hpp"
#include "support/random_instances.hpp"
#include "support/reference_simulator.hpp"

using namespace qmsa;

namespace {

std::vector<double> toy_diag() {
  const SequenceSet toy({"AG", "G"});
  return build_energy_diagonal(
      build_cost_qubo(toy, WeightTensor::build(toy), PenaltyConfig{}));
}

std::vector<double> random_diag(Rng& rng, int n) {
  std::vector<double> d(std::size_t{1} << n);
  for (auto& e : d) e = rng.next_double(-5.0, 5.0);
  return d;
}

} // namespace

TEST_CASE("uniform initialization") {
  const auto one = init_uniform(1);
  REQUIRE(one.amplitudes.size() == 2);
  CHECK(one.amplitudes[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(one.amplitudes[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  const auto six = init_uniform(6);
  REQUIRE(six.amplitudes.size() == 64);
  for (const auto& a : six.amplitudes) {
    CHECK(a.real() == doctest::Approx(0.125));
    CHECK(a.imag() == doctest::Approx(0.0));
  }
  CHECK(six.norm() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(init_uniform(0), InputError);
  CHECK_THROWS_AS(init_uniform(25), CapError);
}

TEST_CASE("cost phase layer") {
  Rng rng(3);
  SUBCASE("gamma = 0 is the identity") {
    const auto diag = toy_diag();
    const auto psi = apply_cost_phase(init_uniform(6), diag, 0.0);
    for (const auto& a : psi.amplitudes)
      CHECK(a.real() == doctest::Approx(0.125));
  }
  SUBCASE("moduli never change") {
    const auto diag = random_diag(rng, 5);
    auto psi = init_uniform(5);
    psi = apply_mixer(std::move(psi), 0.37); // make amplitudes non-trivial
    const auto before = psi;
    const auto after = apply_cost_phase(psi, diag, rng.next_double(-8, 8));
    for (std::size_t k = 0; k < after.amplitudes.size(); ++k)
      CHECK(std::abs(after.amplitudes[k]) ==
            doctest::Approx(std::abs(before.amplitudes[k])).epsilon(1e-12));
  }
  SUBCASE("pi phase flips the excited amplitude") {
    StateVector psi;
    psi.qubits = 1;
    psi.amplitudes = {{0.6, 0.0}, {0.8, 0.0}};
    const std::vector<double> diag{0.0, 1.0};
    const auto out = apply_cost_phase(psi, diag, 3.14159265358979323846);
    CHECK(out.amplitudes[0].real() == doctest::Approx(0.6));
    CHECK(out.amplitudes[1].real() == doctest::Approx(-0.8));
    CHECK(std::abs(out.amplitudes[1].imag()) < 1e-12);
  }
  SUBCASE("dimension mismatch") {
    const std::vector<double> wrong{0.0, 1.0, 2.0};
    CHECK_THROWS_AS(apply_cost_phase(init_uniform(1), wrong, 1.0), InputError);
  }
}

TEST_CASE("mixer layer") {
  SUBCASE("beta = 0 is the identity") {
    const auto psi = apply_mixer(init_uniform(3), 0.0);
    for (const auto& a : psi.amplitudes)
      CHECK(a.real() == doctest::Approx(1.0 / std::sqrt(8.0)));
  }
  SUBCASE("beta = pi/2 is a bit flip up to phase") {
    StateVector psi;
    psi.qubits = 1;
    psi.amplitudes = {{1.0, 0.0}, {0.0, 0.0}};
    const auto out = apply_mixer(psi, 3.14159265358979323846 / 2.0);
    CHECK(std::abs(out.amplitudes[0]) < 1e-12);
    CHECK(out.amplitudes[1].imag() == doctest::Approx(-1.0));
  }
  SUBCASE("norm preserved for random angles") {
    Rng rng(9);
    for (int t = 0; t < 10; ++t) {
      const int n = 1 + static_cast<int>(rng.next_below(10));
      auto psi = init_uniform(n);
      for (int l = 0; l < 4; ++l)
        psi = apply_mixer(std::move(psi), rng.next_double(-6.3, 6.3));
      CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("trial state") {
  const auto diag = toy_diag();
  SUBCASE("identity layer keeps the uniform state") {
    QaoaParams params{{0.0}, {0.0}};
    const auto psi = trial_state(6, diag, params);
    for (const auto& a : psi.amplitudes)
      CHECK(a.real() == doctest::Approx(0.125));
  }
  SUBCASE("appending an identity layer changes nothing") {
    Rng rng(13);
    QaoaParams params{{0.4, 1.2}, {0.3, 2.2}};
    const auto base = trial_state(6, diag, params);
    QaoaParams padded = params;
    padded.betas.push_back(0.0);
    padded.gammas.push_back(0.0);
    const auto more = trial_state(6, diag, padded);
    for (std::size_t k = 0; k < base.amplitudes.size(); ++k)
      CHECK(std::abs(base.amplitudes[k] - more.amplitudes[k]) < 1e-12);
  }
  SUBCASE("norm conserved through random layers") {
    Rng rng(15);
    for (int t = 0; t < 8; ++t) {
      QaoaParams params;
      const int p = 1 + static_cast<int>(rng.next_below(6));
      for (int l = 0; l < p; ++l) {
        params.betas.push_back(rng.next_double(0, 3.2));
        params.gammas.push_back(rng.next_double(0, 6.3));
      }
      CHECK(std::abs(trial_state(6, diag, params).norm() - 1.0) < 1e-10);
    }
  }
  SUBCASE("parameter validation") {
    QaoaParams bad{{0.1}, {}};
    CHECK_THROWS_AS(trial_state(6, diag, bad), InputError);
  }
}

TEST_CASE("expectation") {
  const auto diag = toy_diag();
  SUBCASE("uniform state gives the arithmetic mean") {
    const double mean =
        std::accumulate(diag.begin(), diag.end(), 0.0) / diag.size();
    CHECK(expectation(init_uniform(6), diag) == doctest::Approx(mean));
  }
  SUBCASE("basis state picks out its energy") {
    StateVector psi;
    psi.qubits = 6;
    psi.amplitudes.assign(64, {0.0, 0.0});
    psi.amplitudes[Bitstring::from_string("100101").to_index()] = {1.0, 0.0};
    CHECK(expectation(psi, diag) == doctest::Approx(-1.0));
  }
  SUBCASE("constant diagonal") {
    const std::vector<double> diag_c(64, 2.5);
    Rng rng(19);
    QaoaParams params{{rng.next_double(0, 3)}, {rng.next_double(0, 6)}};
    const auto psi = trial_state(6, diag_c, params);
    CHECK(expectation(psi, diag_c) == doctest::Approx(2.5).epsilon(1e-12));
  }
}

TEST_CASE("dense-matrix reference agreement") {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng.next_below(4));
    const auto diag = random_diag(rng, n);
    QaoaParams params;
    const int p = 1 + static_cast<int>(rng.next_below(3));
    for (int l = 0; l < p; ++l) {
      params.betas.push_back(rng.next_double(0, 3.2));
      params.gammas.push_back(rng.next_double(0, 6.3));
    }
    const auto fast = trial_state(n, diag, params);
    const auto dense = qmsa::testing::dense_reference_trial_state(n, diag, params);
    REQUIRE(fast.amplitudes.size() == dense.amplitudes.size());
    for (std::size_t k = 0; k < fast.amplitudes.size(); ++k)
      CHECK(std::abs(fast.amplitudes[k] - dense.amplitudes[k]) < 1e-8);
  }
}

TEST_CASE("sampling") {
  SUBCASE("a basis state is deterministic") {
    StateVector psi;
    psi.qubits = 6;
    psi.amplitudes.assign(64, {0.0, 0.0});
    psi.amplitudes[Bitstring::from_string("100101").to_index()] = {1.0, 0.0};
    const auto hist = sample(psi, 5000, 42);
    REQUIRE(hist.counts.size() == 1);
    CHECK(hist.count_of("100101") == 5000);
    CHECK(hist.shots == 5000);
    CHECK(hist.seed == 42);
  }
  SUBCASE("uniform single qubit splits within 3 sigma") {
    const auto hist = sample(init_uniform(1), 1000000, 7);
    // sigma = sqrt(1e6 * 1/4) = 500
    CHECK(std::abs(hist.count_of("0") - 500000) <= 1500);
    CHECK(std::abs(hist.count_of("1") - 500000) <= 1500);
    CHECK(hist.count_of("0") + hist.count_of("1") == 1000000);
  }
  SUBCASE("same seed, same histogram") {
    const auto diag = toy_diag();
    const auto psi = trial_state(6, diag, QaoaParams{{0.7}, {0.2}});
    const auto a = sample(psi, 5000, 99);
    const auto b = sample(psi, 5000, 99);
    CHECK(a.counts == b.counts);
    const auto c = sample(psi, 5000, 100);
    CHECK(a.counts != c.counts);
  }
  SUBCASE("frequencies track probabilities within 4 sigma") {
    const auto diag = toy_diag();
    const auto psi = trial_state(6, diag, QaoaParams{{0.9}, {0.15}});
    const std::int64_t shots = 100000;
    const auto hist = sample(psi, shots, 1234);
    for (std::size_t k = 0; k < psi.amplitudes.size(); ++k) {
      const double p = std::norm(psi.amplitudes[k]);
      const double sigma = std::sqrt(p * (1.0 - p) * shots);
      const double expected = p * shots;
      const auto observed =
          static_cast<double>(hist.count_of(Bitstring::from_index(k, 6).str()));
      CHECK(std::abs(observed - expected) <= 4.0 * sigma + 1.0);
    }
  }
  SUBCASE("shots must be positive") {
    CHECK_THROWS_AS(sample(init_uniform(1), 0, 1), InputError);
  }
}
