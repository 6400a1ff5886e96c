#include <doctest.h>

#include "qmsa/errors.hpp"
#include "qmsa/scoring.hpp"

using namespace qmsa;

TEST_CASE("native similarity") {
  CHECK(sim_sp('A', 'A') == -1);
  CHECK(sim_sp('A', 'G') == +1);
  CHECK(sim_sp('A', kGap) == 0);
  CHECK(sim_sp(kGap, 'T') == 0);
  CHECK(sim_sp(kGap, kGap) == 0);
  CHECK_THROWS_AS(sim_sp('N', 'A'), InputError);
  CHECK_THROWS_AS(sim_sp('A', 'n'), InputError);

  // symmetry over the whole domain
  const std::string domain = "ACGT_";
  for (char a : domain)
    for (char b : domain) CHECK(sim_sp(a, b) == sim_sp(b, a));
}

TEST_CASE("weight tensor on the toy instance") {
  const SequenceSet toy({"AG", "G"});
  const auto w = WeightTensor::build(toy);
  CHECK(w.omega(0, 0, 1, 0) == doctest::Approx(+1.0)); // A vs G
  CHECK(w.omega(0, 1, 1, 0) == doctest::Approx(-1.0)); // G vs G
  CHECK(w.entry_count() == 2);
  CHECK_THROWS_AS(w.omega(1, 0, 0, 0), InputError); // requires s < s2
}

TEST_CASE("weight tensor shapes and all-match case") {
  const auto all_match = WeightTensor::build(SequenceSet({"AA", "A"}));
  CHECK(all_match.omega(0, 0, 1, 0) == doctest::Approx(-1.0));
  CHECK(all_match.omega(0, 1, 1, 0) == doctest::Approx(-1.0));

  const auto three = WeightTensor::build(SequenceSet({"ACGG", "AGG", "AT"}));
  CHECK(three.entry_count() == 26); // 4*3 + 4*2 + 3*2
}

TEST_CASE("sum-of-pairs score") {
  CHECK(sp_score(AlignmentMatrix({"AG", "_G"})) == doctest::Approx(-1.0));
  CHECK(sp_score(AlignmentMatrix({"AG", "G_"})) == doctest::Approx(+1.0));
  CHECK(sp_score(AlignmentMatrix({"ACGT"})) == doctest::Approx(0.0)); // no pairs
  // three rows: every distinct pair per column
  // col1: (A,A) + (A,_) + (A,_) = -1; col2: (C,C)+(C,C)+(C,C) = -3
  CHECK(sp_score(AlignmentMatrix({"AC", "AC", "_C"})) == doctest::Approx(-4.0));
}

TEST_CASE("scheme override from JSON") {
  const auto score = score_from_json(R"({"AA": -2.5, "AG": 0.75, "GG": -3.0})");
  CHECK(score('A', 'A') == doctest::Approx(-2.5));
  CHECK(score('A', 'G') == doctest::Approx(0.75));
  CHECK(score('G', 'A') == doctest::Approx(0.75)); // symmetric lookup
  CHECK(score('A', kGap) == doctest::Approx(0.0)); // gaps never scored
  CHECK_THROWS_AS(score('T', 'T'), InputError);    // missing pair
  CHECK_THROWS_AS(score_from_json("[1,2]"), InputError);
  CHECK_THROWS_AS(score_from_json(R"({"AX": 1})"), InputError);
  CHECK_THROWS_AS(score_from_json(R"({"AA": "x"})"), InputError);

  const SequenceSet toy({"AG", "G"});
  const auto w = WeightTensor::build(toy, score);
  CHECK(w.omega(0, 0, 1, 0) == doctest::Approx(0.75));
  CHECK(w.omega(0, 1, 1, 0) == doctest::Approx(-3.0));
}
