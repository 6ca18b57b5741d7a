#include <random>

#include "doctest.h"
#include "gf4dna/groupring.hpp"
#include "gf4dna/verify.hpp"

using namespace gf4dna;

namespace {

Gf4Vector random_coeffs(std::mt19937_64& rng, size_t n) {
  Gf4Vector v(n);
  for (auto& x : v) x = Gf4(static_cast<unsigned>(rng() & 3u));
  return v;
}

// Independent coefficient placement for the block-reversible product listing:
// identifies x as the element at index 1 and y as the element at index r,
// rebuilds every x^i y^e by table multiplication, and places the coefficient
// slices onto the y-power blocks in the order the construction prescribes
// (0, then each pair k / m-k, then m/2).
Gf4Vector placement_by_generator_walk(const GroupTable& g, size_t r,
                                      const Gf4Vector& coeffs) {
  const size_t n = g.order(), m = n / r;
  const uint16_t x = 1, y = static_cast<uint16_t>(r);
  auto element = [&](size_t xi, size_t ye) {
    uint16_t e = 0;
    for (size_t i = 0; i < xi; ++i) e = g.mul(e, x);
    for (size_t i = 0; i < ye; ++i) e = g.mul(e, y);
    return e;
  };
  Gf4Vector placed(n, gf0);
  auto put = [&](size_t coeff_index, size_t xi, size_t ye) {
    placed[element(xi, ye)] += coeffs[coeff_index];
  };
  for (size_t i = 0; i < r; ++i) {
    put(i, i, 0);
    put(i + (m - 1) * r, i, m / 2);
  }
  for (size_t k = 1; k < m / 2; ++k)
    for (size_t j = 0; j < r; ++j) {
      put(j + (2 * k - 1) * r, j, k);
      put(j + 2 * k * r, j, m - k);
    }
  return placed;
}

}  // namespace

TEST_SUITE("groupring") {

TEST_CASE("sigma of the identity element is the identity matrix") {
  GroupPtr g = direct_product(4, 4, ProductListing::block_reversible);
  Gf4Vector coeffs(16, gf0);
  coeffs[0] = gf1;
  Gf4Matrix m = sigma(make_element(g, coeffs));
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = 0; j < 16; ++j) CHECK(m(i, j) == (i == j ? gf1 : gf0));
}

TEST_CASE("sigma over C_6 x C_2 splits into two circulant blocks") {
  GroupPtr g = direct_product(6, 2, ProductListing::block_reversible);
  const Gf4Vector coeffs = refdata::mixed_assignment_coeffs();
  Gf4Matrix m = sigma(make_element(g, coeffs));

  Gf4Vector a(coeffs.begin(), coeffs.begin() + 6);
  Gf4Vector b(coeffs.begin() + 6, coeffs.end());
  Gf4Matrix ca = circulant(a), cb = circulant(b);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) {
      CHECK(m(i, j) == ca(i, j));
      CHECK(m(i, j + 6) == cb(i, j));
      CHECK(m(i + 6, j) == cb(i, j));
      CHECK(m(i + 6, j + 6) == ca(i, j));
    }
}

TEST_CASE("sigma is an injective ring homomorphism") {
  GroupPtr g = direct_product(4, 4, ProductListing::block_reversible);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    GroupRingElement v = make_element(g, random_coeffs(rng, 16));
    GroupRingElement w = make_element(g, random_coeffs(rng, 16));
    CHECK(sigma(add(v, w)) == [&] {
      Gf4Matrix s = sigma(v);
      Gf4Matrix t = sigma(w);
      Gf4Matrix sum(16, 16);
      for (size_t i = 0; i < 16; ++i)
        for (size_t j = 0; j < 16; ++j) sum(i, j) = s(i, j) + t(i, j);
      return sum;
    }());
    CHECK(sigma(multiply(v, w)) == matmul(sigma(v), sigma(w)));
    // injectivity: distinct coefficients give distinct images (the first row
    // of sigma(v) recovers the coefficients up to the listing permutation)
    if (!(v.coeffs == w.coeffs)) CHECK(sigma(v) != sigma(w));
  }
}

TEST_CASE("partition extracts content symbols") {
  GroupPtr g = direct_product(6, 2, ProductListing::block_reversible);
  Gf4Matrix m = sigma(make_element(g, refdata::mixed_assignment_coeffs()));
  BlockPartition p = partition(m, 6);
  CHECK(p.m == 2);
  CHECK(p.symbol_count == 2);
  CHECK(p.symbol_of(0, 0) == 0);
  CHECK(p.symbol_of(0, 1) == 1);
  CHECK(p.symbol_of(1, 0) == 1);
  CHECK(p.symbol_of(1, 1) == 0);

  CHECK_THROWS_AS(partition(m, 12), std::invalid_argument);
  CHECK_THROWS_AS(partition(m, 1), std::invalid_argument);
  CHECK_THROWS_AS(partition(m, 5), std::invalid_argument);
}

TEST_CASE("the four-block symbol pattern of the quartic product") {
  GroupPtr g = direct_product(4, 4, ProductListing::block_reversible);
  std::mt19937_64 rng(17);
  Gf4Vector coeffs;
  // quarters with distinct leading values so the four symbols stay distinct
  do {
    coeffs = random_coeffs(rng, 16);
  } while (coeffs[0] == coeffs[4] || coeffs[0] == coeffs[8] || coeffs[0] == coeffs[12] ||
           coeffs[4] == coeffs[8] || coeffs[4] == coeffs[12] || coeffs[8] == coeffs[12]);
  BlockPartition p = partition(sigma(make_element(g, coeffs)), 4);
  const int A = p.symbol_of(0, 0), B = p.symbol_of(0, 1), C = p.symbol_of(0, 2),
            D = p.symbol_of(0, 3);
  const int expected[4][4] = {{A, B, C, D}, {C, A, D, B}, {B, D, A, C}, {D, C, B, A}};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(p.symbol_of(i, j) == expected[i][j]);
}

TEST_CASE("partition and reassemble are inverse") {
  std::mt19937_64 rng(29);
  for (size_t n : {8u, 12u, 16u}) {
    Gf4Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set_row(i, random_coeffs(rng, n));
    CHECK(reassemble(partition(m, n / 2)) == m);
    CHECK(reassemble(partition(m, n / 4)) == m);
  }
}

TEST_CASE("block reversibility detection and pairing") {
  GroupPtr g2 = direct_product(6, 2, ProductListing::block_reversible);
  Gf4Matrix m = sigma(make_element(g2, refdata::mixed_assignment_coeffs()));
  BlockReversibility br = is_block_reversible(partition(m, 6));
  CHECK(br.reversible);
  CHECK(br.pairing == std::vector<int>{1, 0});

  GroupPtr g4 = direct_product(4, 4, ProductListing::block_reversible);
  std::mt19937_64 rng(31);
  BlockReversibility br4 =
      is_block_reversible(partition(sigma(make_element(g4, random_coeffs(rng, 16))), 4));
  CHECK(br4.reversible);

  // generic asymmetric matrix is not block reversible
  Gf4Matrix bad(8, 8);
  for (size_t i = 0; i < 8; ++i) bad.set_row(i, random_coeffs(rng, 8));
  bad(0, 0) = gf1;
  bad(0, 7) = gf0;  // break palindromic luck in row one
  BlockReversibility brb = is_block_reversible(partition(bad, 4));
  CHECK_FALSE(brb.reversible);
}

TEST_CASE("block-reversible elements require the block-listed product") {
  std::mt19937_64 rng(41);
  GroupPtr good = direct_product(4, 4, ProductListing::block_reversible);
  make_block_reversible_element(random_coeffs(rng, 16), 4, good);

  GroupPtr natural = direct_product(4, 4, ProductListing::natural);
  CHECK_THROWS_AS(make_block_reversible_element(random_coeffs(rng, 16), 4, natural),
                  std::invalid_argument);
  // n/r odd is rejected
  GroupPtr odd = direct_product(4, 3, ProductListing::natural);
  CHECK_THROWS_AS(make_block_reversible_element(random_coeffs(rng, 12), 4, odd),
                  std::invalid_argument);
}

TEST_CASE("coefficient placement cross-check against a generator walk") {
  std::mt19937_64 rng(43);
  for (auto [n, r] : std::vector<std::pair<size_t, size_t>>{
           {16, 4}, {16, 8}, {32, 4}, {32, 8}, {32, 16}}) {
    GroupPtr g = direct_product(r, n / r, ProductListing::block_reversible);
    for (int trial = 0; trial < 5; ++trial) {
      Gf4Vector coeffs = random_coeffs(rng, n);
      GroupRingElement v = make_block_reversible_element(coeffs, r, g);
      CHECK(placement_by_generator_walk(*g, r, coeffs) == v.coeffs);
    }
  }
}

TEST_CASE("images of block-reversible elements are block reversible") {
  std::mt19937_64 rng(47);
  for (auto [n, r] : std::vector<std::pair<size_t, size_t>>{{16, 4}, {16, 8}, {32, 8}}) {
    GroupPtr g = direct_product(r, n / r, ProductListing::block_reversible);
    for (int trial = 0; trial < 20; ++trial) {
      GroupRingElement v = make_block_reversible_element(random_coeffs(rng, n), r, g);
      CHECK(is_block_reversible(partition(sigma(v), r)).reversible);
    }
  }
}

}  // TEST_SUITE
