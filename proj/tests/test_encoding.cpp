#include <doctest.h>

#include <algorithm>
#include <set>

#include "qmsa/encoding.hpp"
#include "qmsa/errors.hpp"
#include "qmsa/rng.hpp"
#include "support/random_instances.hpp"

using namespace qmsa;

TEST_CASE("sequence set validation") {
  const SequenceSet toy({"AG", "G"});
  CHECK(toy.count() == 2);
  CHECK(toy.max_length() == 2);
  CHECK(toy.total_length() == 3);
  CHECK(toy.reference() == 0);

  CHECK_THROWS_AS(SequenceSet({"A", "A"}), InputError);   // two maximal strings
  CHECK_THROWS_AS(SequenceSet({"AG", "AG"}), InputError); // same
  CHECK_THROWS_AS(SequenceSet({"AG", ""}), InputError);
  CHECK_THROWS_AS(SequenceSet({"ANG", "G"}), InputError); // 'N' outside alphabet
  CHECK_THROWS_AS(SequenceSet(std::vector<std::string>{}), InputError);

  CHECK(SequenceSet({"ag", "g"}).str(0) == "AG"); // normalized
  CHECK(SequenceSet::from_csv("AG, G").str(1) == "G");
}

TEST_CASE("index map sizes") {
  const auto toy = QubitIndexMap::build(SequenceSet({"AG", "G"}));
  CHECK(toy.total_qubits() == 6); // 2 * (2 + 1)

  const auto bigger = QubitIndexMap::build(SequenceSet({"ACGG", "AGG", "AT"}));
  CHECK(bigger.total_qubits() == 36); // 4 * (4 + 3 + 2)
}

TEST_CASE("index map is a bijection") {
  Rng rng(11);
  for (int t = 0; t < 5; ++t) {
    const auto seqs = qmsa::testing::random_instance(rng, 20);
    const auto map = QubitIndexMap::build(seqs);
    std::set<int> seen;
    for (int s = 0; s < seqs.count(); ++s)
      for (int n = 0; n < seqs.length(s); ++n)
        for (int i = 0; i < map.columns(); ++i) {
          const int k = map.index(s, n, i);
          CHECK(k >= 0);
          CHECK(k < map.total_qubits());
          seen.insert(k);
          const auto site = map.site(k);
          CHECK(site.s == s);
          CHECK(site.letter == n);
          CHECK(site.col == i);
        }
    CHECK(static_cast<int>(seen.size()) == map.total_qubits());
  }
}

TEST_CASE("bitstring conversions") {
  const auto b = Bitstring::from_string("100110");
  CHECK(b.size() == 6);
  CHECK(b.to_index() == 38); // big-endian
  CHECK(Bitstring::from_index(38, 6) == b);
  CHECK(b.str() == "100110");
  CHECK_THROWS_AS(Bitstring::from_string("10x"), InputError);
  CHECK_THROWS_AS(Bitstring::from_index(4, 2), InputError);
}

TEST_CASE("encode toy alignments") {
  const SequenceSet toy({"AG", "G"});
  const auto map = QubitIndexMap::build(toy);
  CHECK(encode_alignment(AlignmentMatrix({"AG", "G_"}), map).str() == "100110");
  CHECK(encode_alignment(AlignmentMatrix({"AG", "_G"}), map).str() == "100101");

  // single string encodes to the identity placement
  const SequenceSet one({"AG"});
  const auto one_map = QubitIndexMap::build(one);
  CHECK(encode_alignment(AlignmentMatrix({"AG"}), one_map).str() == "1001");

  CHECK_THROWS_AS(encode_alignment(AlignmentMatrix({"AG"}), map), InputError);
  CHECK_THROWS_AS(encode_alignment(AlignmentMatrix({"AG", "GG"}), map),
                  InputError); // too many letters in row 2
}

TEST_CASE("alignment matrix row content check") {
  const SequenceSet toy({"AG", "G"});
  CHECK_NOTHROW(AlignmentMatrix::from_rows({"AG", "_G"}, toy));
  CHECK_THROWS_AS(AlignmentMatrix::from_rows({"GA", "_G"}, toy), InputError);
  CHECK_THROWS_AS(AlignmentMatrix({"AG", "G"}), InputError); // ragged
  CHECK_THROWS_AS(AlignmentMatrix({"AX"}), InputError);
}

TEST_CASE("decode toy bitstrings") {
  const SequenceSet toy({"AG", "G"});

  const auto good = decode_bitstring(Bitstring::from_string("100101"), toy);
  REQUIRE(good.feasible());
  CHECK(good.alignment->grid() == std::vector<std::string>{"AG", "_G"});

  const auto empty = decode_bitstring(Bitstring::from_string("000000"), toy);
  CHECK_FALSE(empty.feasible());
  // exactly-one violated for all three letters, nothing else
  CHECK(empty.violations.size() == 3);
  for (const auto& v : empty.violations) CHECK(v.constraint == 1);

  const auto doubled = decode_bitstring(Bitstring::from_string("110110"), toy);
  CHECK_FALSE(doubled.feasible());
  REQUIRE(!doubled.violations.empty());
  // letter 1 of string 1 sits in two columns
  CHECK(doubled.violations[0].constraint == 1);
  CHECK(doubled.violations[0].s == 0);
  CHECK(doubled.violations[0].n == 0);
}

TEST_CASE("feasibility of the toy states") {
  const SequenceSet toy({"AG", "G"});
  CHECK(is_feasible(Bitstring::from_string("100110"), toy));
  CHECK(is_feasible(Bitstring::from_string("100101"), toy));
  CHECK_FALSE(is_feasible(Bitstring::from_string("011010"), toy));
  CHECK_THROWS_AS(is_feasible(Bitstring::from_string("1001"), toy), InputError);
}

TEST_CASE("enumerate_feasible on small instances") {
  const SequenceSet toy({"AG", "G"});
  const auto feasible = enumerate_feasible(toy);
  REQUIRE(feasible.size() == 2);
  std::set<std::string> keys;
  for (const auto& b : feasible) keys.insert(b.str());
  CHECK(keys == std::set<std::string>{"100110", "100101"});

  CHECK(enumerate_feasible(SequenceSet({"ACG", "AC"})).size() == 3);
  CHECK_THROWS_AS(enumerate_feasible(toy, 1), CapError);
}

TEST_CASE("enumerate_feasible equals the exhaustive scan") {
  Rng rng(23);
  for (int t = 0; t < 4; ++t) {
    const auto seqs = qmsa::testing::random_instance(rng, 16);
    const auto map = QubitIndexMap::build(seqs);
    const int n = map.total_qubits();
    std::set<std::string> scanned;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
      const auto b = Bitstring::from_index(k, n);
      if (is_feasible(b, seqs)) scanned.insert(b.str());
    }
    std::set<std::string> enumerated;
    for (const auto& b : enumerate_feasible(seqs)) enumerated.insert(b.str());
    CHECK(enumerated == scanned);
  }
}

TEST_CASE("round trips and the reference placement") {
  Rng rng(37);
  for (int t = 0; t < 6; ++t) {
    const auto seqs = qmsa::testing::random_instance(rng, 18);
    const auto map = QubitIndexMap::build(seqs);
    for (const auto& b : enumerate_feasible(seqs)) {
      const auto decoded = decode_bitstring(b, seqs);
      REQUIRE(decoded.feasible());
      CHECK(encode_alignment(*decoded.alignment, map) == b);
      // the reference row never contains a gap
      const auto& ref_row = decoded.alignment->row(seqs.reference());
      CHECK(ref_row == seqs.str(seqs.reference()));
      // and fresh encode/decode of the alignment is the identity
      const auto again =
          decode_bitstring(encode_alignment(*decoded.alignment, map), seqs);
      REQUIRE(again.feasible());
      CHECK(*again.alignment == *decoded.alignment);
    }
  }
}
