#ifndef GF4DNA_COMPOSITE_HPP
#define GF4DNA_COMPOSITE_HPP

#include <array>
#include <map>
#include <string>

#include "gf4dna/groupring.hpp"

namespace gf4dna {

// Anchor data of block l (1-based, row-major over the m x m grid) of the
// partitioned image matrix. word[t] is the base-listing index of
// g_j^{-1} g_{k+t}; substituting through an order-r auxiliary group H sends
// position h_u^{-1} h_v of H onto word[.] via the listing bijection.
struct BlockMap {
  size_t l = 0;              // 1-based block index
  size_t j = 0, k = 0;       // 1-based anchor indices into the base listing
  std::vector<uint16_t> word;
};

BlockMap block_map(const GroupTable& base, size_t r, size_t l);

// The substituted r x r block: entry (u,v) = coeff[word[pos(h_u^{-1} h_v)]].
// Row 0 always equals the unsubstituted block's row 0.
Gf4Matrix substituted_block(const BlockMap& map, const GroupTable& h,
                            const Gf4Vector& coeffs);

enum class SubstitutionMode {
  general,     // at least one symbol substituted, no reversibility claim
  reversible,  // every symbol substituted; auxiliary listings must be
               // reversal-symmetric, assignment is per block symbol
};

struct CompositeSpec {
  GroupRingElement base;
  size_t r = 0;
  SubstitutionMode mode = SubstitutionMode::reversible;
  std::map<int, GroupPtr> assignment;  // content symbol id of sigma(base) -> H
};

// Validates the spec invariants (r | n with 1 < r < n, auxiliary orders equal
// r, listings reversal-symmetric in reversible mode, assignment coverage).
CompositeSpec make_composite_spec(GroupRingElement base, size_t r,
                                  SubstitutionMode mode,
                                  std::map<int, GroupPtr> assignment);

// The composite matrix: sigma(base) with assigned blocks rewritten through
// their auxiliary groups. In reversible mode every block is substituted.
Gf4Matrix omega(const CompositeSpec& spec);

// Escape hatch with a raw per-block assignment (size m*m, null = leave the
// block unsubstituted). Performs no pairing-rule validation; exists so that
// invalid mixed assignments can be reproduced and studied in tests.
Gf4Matrix omega_unchecked_assignment(const GroupRingElement& base, size_t r,
                                     const std::vector<GroupPtr>& per_block);

// Permutation matrix P with reverse(a * B) = (a * P) * B for every vector a
// and every block B substituted through a reversal-symmetric listed group of
// order r: the exchange permutation swapping row u with row r-1-u. Validates
// h's listing and returns P as an r x r GF(4) matrix.
Gf4Matrix row_reversal_permutation(const GroupTable& h);

// Closed-form builders for the composite families over C_2 x C_{n/2}
// (n = coeffs.size(), 16 | n). They reproduce omega() of the corresponding
// spec entry for entry; the cross-check lives in the test suite.
Gf4Matrix closed_form_g12(const Gf4Vector& coeffs);
Gf4Matrix closed_form_g22(const Gf4Vector& coeffs);
Gf4Matrix closed_form_g32(const Gf4Vector& coeffs);

// Family descriptors: "G12", "G22", "G32" (two-block grid, auxiliary groups
// of order n/2 assigned by base-row symbol: first index -> diagonal symbol,
// second -> off-diagonal), general "Gij" likewise, and four-digit "Gijkl"
// (four-block grid, order n/4, indices assigned to the first block-row's
// symbols left to right). Digits select the auxiliary family (1 dihedral,
// 2 quasidihedral, 3 C_{r/2} x C_2).
CompositeSpec family_spec(const std::string& family, size_t n, const Gf4Vector& coeffs);

// n/r for a family name (2 for Gij, 4 for Gijkl).
size_t family_grid(const std::string& family);

}  // namespace gf4dna

#endif
