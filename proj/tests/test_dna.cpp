#include <cstdio>
#include <random>

#include "doctest.h"
#include "gf4dna/dna.hpp"

using namespace gf4dna;

namespace {

Gf4Vector random_vector(std::mt19937_64& rng, size_t n) {
  Gf4Vector v(n);
  for (auto& x : v) x = Gf4(static_cast<unsigned>(rng() & 3u));
  return v;
}

// A small reversible code containing the all-ones word: the row space of
// circ(c) + its reversal closure over a palindromic-friendly generator.
LinearCode small_reversible_code() {
  Gf4Matrix g(2, 4);
  g.set_row(0, vector_from_string("1111"));
  g.set_row(1, vector_from_string("01w0"));
  Gf4Matrix full(4, 4);
  full.set_row(0, g.row(0));
  full.set_row(1, g.row(1));
  full.set_row(2, reversed(g.row(0)));
  full.set_row(3, reversed(g.row(1)));
  return LinearCode::from_generator(full);
}

}  // namespace

TEST_SUITE("dna") {

TEST_CASE("eta maps field symbols onto bases") {
  CHECK(eta(vector_from_string("01wW")) == "ATCG");
  CHECK(eta(vector_from_string("000")) == "AAA");
  CHECK(eta_inverse("ATCG") == vector_from_string("01wW"));
  CHECK_THROWS_AS(eta_inverse("ATXG"), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Gf4Vector v = random_vector(rng, 1 + rng() % 30);
    CHECK(eta_inverse(eta(v)) == v);
  }
}

TEST_CASE("reverse, complement and reverse-complement") {
  CHECK(reverse_word("ATCG") == "GCTA");
  CHECK(complement_word("ATCG") == "TAGC");
  CHECK(reverse_complement_word("ATCG") == "CGAT");

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    DnaWord w = eta(random_vector(rng, 1 + rng() % 30));
    CHECK(reverse_word(reverse_word(w)) == w);
    CHECK(complement_word(complement_word(w)) == w);
    CHECK(reverse_word(complement_word(w)) == complement_word(reverse_word(w)));
    CHECK(reverse_complement_word(w) == reverse_word(complement_word(w)));
  }
}

TEST_CASE("complementing is adding one on the field side") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Gf4Vector v = random_vector(rng, 8);
    Gf4Vector plus_one = v;
    for (auto& x : plus_one) x += gf1;
    CHECK(complement_word(eta(v)) == eta(plus_one));
  }
}

TEST_CASE("gc weight") {
  CHECK(gc_weight(DnaWord("ATCG")) == 2);
  CHECK(gc_weight(DnaWord("AAAA")) == 0);
  CHECK(gc_target(16) == 8);
  CHECK(gc_target(9) == 4);

  // gc weight equals the number of w / w^2 symbols, exhaustively at n = 8
  for (uint64_t t = 0; t < (1ull << 16); ++t) {
    Gf4Vector v(8);
    for (size_t i = 0; i < 8; ++i) v[i] = Gf4(static_cast<unsigned>((t >> (2 * i)) & 3u));
    size_t expected = 0;
    for (Gf4 x : v) expected += (x == gfw || x == gfw2);
    CHECK(gc_weight(eta(v)) == expected);
    CHECK(gc_weight(v) == expected);
  }
}

TEST_CASE("hamming distance is a metric on words of fixed length") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 4 + rng() % 12;
    Gf4Vector x = random_vector(rng, n), y = random_vector(rng, n),
              z = random_vector(rng, n);
    CHECK(hamming_distance(x, x) == 0);
    CHECK(hamming_distance(x, y) == hamming_distance(y, x));
    CHECK(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
    if (!(x == y)) CHECK(hamming_distance(x, y) > 0);
  }
}

TEST_CASE("singleton code satisfies pairwise constraints vacuously") {
  ConstraintReport rep =
      check_constraints(LinearCode::from_generator(Gf4Matrix(1, 6)), 3, HD | RV | RC);
  CHECK(rep.satisfied);
  CHECK(rep.count == BigUint(1));
}

TEST_CASE("shortcut verdict matches brute-force checking") {
  std::mt19937_64 rng(13);
  LinearCode code = small_reversible_code();
  REQUIRE(is_reversible(code));
  REQUIRE(code.contains(Gf4Vector(4, gf1)));
  const size_t dmin = min_distance(code, DistanceMethod::brute).distance;

  for (size_t d = 1; d <= dmin + 1; ++d) {
    CheckOptions with, without;
    without.allow_shortcut = false;
    ConstraintReport fast = check_constraints(code, d, HD | RV | RC, with);
    ConstraintReport slow = check_constraints(code, d, HD | RV | RC, without);
    CHECK(fast.satisfied == slow.satisfied);
    CHECK(fast.count == slow.count);
    if (d <= dmin) CHECK(fast.used_shortcut);
  }
}

TEST_CASE("shortcut agreement on random small codes") {
  std::mt19937_64 rng(17);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const size_t n = 4 + (rng() % 4) * 2;
    Gf4Matrix g(2, n);
    for (size_t j = 0; j < n; ++j) {
      g(0, j) = Gf4(static_cast<unsigned>(rng() & 3u));
      g(1, j) = Gf4(static_cast<unsigned>(rng() & 3u));
    }
    LinearCode code = LinearCode::from_generator(g);
    if (code.dimension() == 0) continue;
    for (size_t d = 1; d <= 3; ++d) {
      CheckOptions with, without;
      without.allow_shortcut = false;
      ConstraintReport fast = check_constraints(code, d, HD | RV | RC, with);
      ConstraintReport slow = check_constraints(code, d, HD | RV | RC, without);
      CHECK(fast.satisfied == slow.satisfied);
      CHECK(fast.count == slow.count);
      ++compared;
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("gc filter counts only target-weight words") {
  LinearCode code = small_reversible_code();
  ConstraintReport rep = check_constraints(code, 1, GC);
  // count words of GC weight 2 by hand
  uint64_t expected = 0;
  for (const auto& w : enumerate_codewords(code))
    expected += gc_weight(w) == gc_target(4);
  CHECK(rep.count == BigUint(expected));
  CHECK(rep.satisfied);
}

TEST_CASE("violations come with a witness pair") {
  Gf4Matrix g(1, 4);
  g.set_row(0, vector_from_string("1000"));
  LinearCode code = LinearCode::from_generator(g);
  ConstraintReport rep = check_constraints(code, 2, HD);
  CHECK_FALSE(rep.satisfied);
  CHECK(rep.count == BigUint(0));
  REQUIRE(rep.witness.has_value());
  CHECK(hamming_distance(rep.witness->first, rep.witness->second) < 2);
}

TEST_CASE("reverse constraint sees non-reversible codes") {
  // span of (1,0,0,0) and (0,0,0,1) is reversible; span of (1,w,0,0) is not
  Gf4Matrix g(1, 4);
  g.set_row(0, vector_from_string("1w00"));
  LinearCode code = LinearCode::from_generator(g);
  ConstraintReport rep = check_constraints(code, 1, RV);
  // reverse of (1,w,0,0) is (0,0,w,1), at distance 4 from everything here
  CHECK(rep.satisfied);
  ConstraintReport tight = check_constraints(code, 5, RV);
  CHECK_FALSE(tight.satisfied);
}

TEST_CASE("dna file round trip") {
  std::mt19937_64 rng(19);
  std::vector<Gf4Vector> words;
  for (int i = 0; i < 8; ++i) words.push_back(random_vector(rng, 12));
  const std::string path = "dna_roundtrip_test.txt";
  write_dna_file(path, words);
  CHECK(read_dna_file(path) == words);
  std::remove(path.c_str());
}

}  // TEST_SUITE
