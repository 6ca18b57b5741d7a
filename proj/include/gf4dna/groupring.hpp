#ifndef GF4DNA_GROUPRING_HPP
#define GF4DNA_GROUPRING_HPP

#include <vector>

#include "gf4dna/gf4.hpp"
#include "gf4dna/groups.hpp"

namespace gf4dna {

// An element of the group algebra GF(4)G: one coefficient per listing index.
struct GroupRingElement {
  GroupPtr group;
  Gf4Vector coeffs;
};

GroupRingElement make_element(GroupPtr group, Gf4Vector coeffs);

GroupRingElement add(const GroupRingElement& v, const GroupRingElement& w);
GroupRingElement multiply(const GroupRingElement& v, const GroupRingElement& w);

// The n x n matrix with entry (i,j) equal to the coefficient of
// g_i^{-1} g_j. Ring homomorphism from GF(4)G into the n x n matrices.
Gf4Matrix sigma(const GroupRingElement& v);

// An n x n matrix cut into an m x m grid of r x r blocks (m = n/r), with
// content-based symbol ids: equal blocks share a symbol, ids numbered by
// first appearance in row-major order.
struct BlockPartition {
  size_t r = 0;
  size_t m = 0;
  std::vector<Gf4Matrix> blocks;  // m*m, row-major
  std::vector<int> symbol;        // m*m, row-major
  int symbol_count = 0;

  const Gf4Matrix& block(size_t bi, size_t bj) const { return blocks[bi * m + bj]; }
  int symbol_of(size_t bi, size_t bj) const { return symbol[bi * m + bj]; }
};

// Requires r | n and 1 < r < n.
BlockPartition partition(const Gf4Matrix& mat, size_t r);
Gf4Matrix reassemble(const BlockPartition& p);

// Block reversibility: reversing the block-columns of every block-row must
// reproduce a permutation of the block-rows. pairing[i] is the block-row
// equal to the block-reverse of row i (largest-indexed match that keeps the
// pairing injective), or -1 when reversibility fails for that row.
struct BlockReversibility {
  bool reversible = false;
  std::vector<int> pairing;
};
BlockReversibility is_block_reversible(const BlockPartition& p);

// Group-ring element over C_r x C_{n/r} (block-reversible listing) whose
// coefficient placement makes sigma(v) block reversible. With that listing
// the placement is the identity; this validates the structural
// preconditions (4 | n, n/r even, the group really is the block-listed
// product) and tags the coefficients onto the group.
GroupRingElement make_block_reversible_element(const Gf4Vector& coeffs, size_t r,
                                               GroupPtr group);

}  // namespace gf4dna

#endif
