#ifndef GF4DNA_GROUPS_HPP
#define GF4DNA_GROUPS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gf4dna {

// A finite group as an indexed Cayley table. The index order of elements IS
// the listing: index 0 is the identity and all constructions that depend on a
// particular element order (reversible listings, block-ordered products) bake
// that order into the table via relabeled().
class GroupTable {
 public:
  GroupTable(std::vector<uint16_t> mul, std::vector<std::string> labels = {});

  size_t order() const { return n_; }
  uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * n_ + b]; }
  uint16_t inv(uint16_t a) const { return inv_[a]; }
  const std::string& label(uint16_t a) const { return labels_[a]; }

  // New table whose element at position p is this table's element listing[p].
  // listing[0] must be the identity.
  GroupTable relabeled(const std::vector<uint16_t>& listing) const;

  // Whether the table's own element order satisfies the listing-reversal
  // property: with beta the last element, beta^2 = e and for every position v,
  // beta * element(v) = element(n-1-v). This is the property that makes each
  // substituted block closed under row reversal, and it holds for every
  // listing of the {e, t_1, ..., t_{l-1}, beta*t_{l-1}, ..., beta*t_1, beta}
  // shape with beta an involution.
  bool listing_is_reversal_symmetric() const;

  bool operator==(const GroupTable& o) const { return mul_ == o.mul_; }

  // Checks Latin-square property, identity at index 0, inverses, and full
  // associativity. Throws std::logic_error on violation.
  void validate() const;

 private:
  size_t n_;
  std::vector<uint16_t> mul_;
  std::vector<uint16_t> inv_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// C_m with natural power order 1, g, g^2, ...
GroupPtr cyclic(size_t m);

// Dihedral group of order 2*half, <a,b | a^half = b^2 = 1, a^b = a^-1>,
// listed as {1, a, ..., a^(half-1), b a^(half-1), ..., b a, b}.
GroupPtr dihedral(size_t half);

// Quasidihedral-style group of order 2*half,
// <c,d | c^half = d^2 = 1, c^d = c^s> with s = half/2 - 1,
// listed as {1, c, ..., c^(half-1), d c^(half-1), ..., d c, d}.
// Requires s^2 = 1 (mod half), i.e. 4 | half, so that c -> c^s is an
// automorphism; throws std::invalid_argument otherwise.
GroupPtr quasidihedral(size_t half);

// Element order for direct products of cyclic groups C_r x C_m
// (x of order r varying fastest inside blocks of fixed y-power).
enum class ProductListing {
  natural,           // y-power blocks in order 0, 1, ..., m-1
  block_reversible,  // y-power blocks in order 0, 1, m-1, 2, m-2, ..., m/2
                     // (requires m even); makes the block matrix of any
                     // group-ring image reversal-paired by construction
};
GroupPtr direct_product(size_t r, size_t m, ProductListing listing);

// Generic direct product of two arbitrary groups, natural order (the first
// factor varies fastest). The block-reversible listing only exists for
// cyclic factors; use the overload above for it.
GroupPtr direct_product(const GroupTable& a, const GroupTable& b);

// The permutation realizing the listing
//   {e, t_1, ..., t_{l-1}, beta t_{l-1}, ..., beta t_1, beta}
// for an index-2 subgroup T (given in the order e, t_1, ..., t_{l-1}) and an
// order-2 element beta outside T. Throws std::invalid_argument when T is not
// an index-2 subgroup, beta lies in T, or beta is not an involution.
std::vector<uint16_t> reversible_listing(const GroupTable& g,
                                         const std::vector<uint16_t>& subgroup,
                                         uint16_t beta);

// The three auxiliary-group families used by the composite builders, all of
// order r and already in their reversible listings:
//   1 -> dihedral(r/2)
//   2 -> quasidihedral(r/2)
//   3 -> C_{r/2} x C_2 listed as {1, u, ..., u^(r/2-1), v u^(r/2-1), ..., v u, v}
// Throws std::invalid_argument when the family is undefined at this order
// (e.g. family 2 needs 8 | r).
GroupPtr block_group(int family, size_t r);

// Convenience: natural-order index listing of the cyclic subgroup generated
// by element g (identity first).
std::vector<uint16_t> cyclic_subgroup(const GroupTable& table, uint16_t g);

}  // namespace gf4dna

#endif
