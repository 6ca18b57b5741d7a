#include "gf4dna/composite.hpp"

#include <stdexcept>

namespace gf4dna {

BlockMap block_map(const GroupTable& base, size_t r, size_t l) {
  const size_t n = base.order();
  if (r <= 1 || r >= n || n % r != 0)
    throw std::invalid_argument("block_map: need r | n with 1 < r < n");
  const size_t m = n / r;
  if (l < 1 || l > m * m) throw std::invalid_argument("block_map: block index out of range");
  BlockMap bm;
  bm.l = l;
  const size_t row = (l - 1) / m, col = (l - 1) % m;
  bm.j = row * r + 1;
  bm.k = col * r + 1;
  bm.word.resize(r);
  const uint16_t gj_inv = base.inv(static_cast<uint16_t>(bm.j - 1));
  for (size_t t = 0; t < r; ++t)
    bm.word[t] = base.mul(gj_inv, static_cast<uint16_t>(bm.k - 1 + t));
  return bm;
}

Gf4Matrix substituted_block(const BlockMap& map, const GroupTable& h,
                            const Gf4Vector& coeffs) {
  const size_t r = map.word.size();
  if (h.order() != r)
    throw std::invalid_argument("substituted_block: auxiliary group order mismatch");
  Gf4Matrix b(r, r);
  for (size_t u = 0; u < r; ++u) {
    const uint16_t hu_inv = h.inv(static_cast<uint16_t>(u));
    for (size_t v = 0; v < r; ++v)
      b(u, v) = coeffs[map.word[h.mul(hu_inv, static_cast<uint16_t>(v))]];
  }
  return b;
}

namespace {

Gf4Matrix plain_block(const GroupTable& base, const Gf4Vector& coeffs, size_t r,
                      size_t j, size_t k) {
  Gf4Matrix b(r, r);
  for (size_t u = 0; u < r; ++u) {
    const uint16_t g_inv = base.inv(static_cast<uint16_t>(j - 1 + u));
    for (size_t v = 0; v < r; ++v)
      b(u, v) = coeffs[base.mul(g_inv, static_cast<uint16_t>(k - 1 + v))];
  }
  return b;
}

void place_block(Gf4Matrix& out, const Gf4Matrix& b, size_t bi, size_t bj, size_t r) {
  for (size_t u = 0; u < r; ++u)
    for (size_t v = 0; v < r; ++v) out(bi * r + u, bj * r + v) = b(u, v);
}

}  // namespace

CompositeSpec make_composite_spec(GroupRingElement base, size_t r,
                                  SubstitutionMode mode,
                                  std::map<int, GroupPtr> assignment) {
  const size_t n = base.group->order();
  if (r <= 1 || r >= n || n % r != 0)
    throw std::invalid_argument("make_composite_spec: need r | n with 1 < r < n");
  for (const auto& [sym, h] : assignment) {
    if (!h) throw std::invalid_argument("make_composite_spec: null auxiliary group");
    if (h->order() != r)
      throw std::invalid_argument("make_composite_spec: auxiliary group order must be r");
    if (mode == SubstitutionMode::reversible && !h->listing_is_reversal_symmetric())
      throw std::invalid_argument(
          "make_composite_spec: auxiliary listing is not reversal-symmetric");
  }
  BlockPartition part = partition(sigma(base), r);
  if (mode == SubstitutionMode::reversible) {
    for (int s = 0; s < part.symbol_count; ++s)
      if (!assignment.count(s))
        throw std::invalid_argument(
            "make_composite_spec: reversible mode requires every block symbol assigned");
  } else {
    // general mode: empty assignment degenerates to the plain group-ring image
    for (const auto& [sym, h] : assignment)
      if (sym < 0 || sym >= part.symbol_count)
        throw std::invalid_argument("make_composite_spec: unknown block symbol id");
  }
  return CompositeSpec{std::move(base), r, mode, std::move(assignment)};
}

Gf4Matrix omega(const CompositeSpec& spec) {
  const GroupTable& base = *spec.base.group;
  const size_t n = base.order(), r = spec.r, m = n / r;
  BlockPartition part = partition(sigma(spec.base), r);
  Gf4Matrix out(n, n);
  for (size_t bi = 0; bi < m; ++bi)
    for (size_t bj = 0; bj < m; ++bj) {
      const size_t l = bi * m + bj + 1;
      auto it = spec.assignment.find(part.symbol_of(bi, bj));
      if (it == spec.assignment.end()) {
        place_block(out, part.block(bi, bj), bi, bj, r);
      } else {
        BlockMap bm = block_map(base, r, l);
        place_block(out, substituted_block(bm, *it->second, spec.base.coeffs), bi, bj, r);
      }
    }
  return out;
}

Gf4Matrix omega_unchecked_assignment(const GroupRingElement& base, size_t r,
                                     const std::vector<GroupPtr>& per_block) {
  const size_t n = base.group->order(), m = n / r;
  if (per_block.size() != m * m)
    throw std::invalid_argument("omega_unchecked_assignment: need one entry per block");
  Gf4Matrix out(n, n);
  for (size_t bi = 0; bi < m; ++bi)
    for (size_t bj = 0; bj < m; ++bj) {
      const size_t l = bi * m + bj + 1;
      BlockMap bm = block_map(*base.group, r, l);
      if (per_block[l - 1]) {
        place_block(out, substituted_block(bm, *per_block[l - 1], base.coeffs), bi, bj, r);
      } else {
        place_block(out, plain_block(*base.group, base.coeffs, r, bm.j, bm.k), bi, bj, r);
      }
    }
  return out;
}

Gf4Matrix row_reversal_permutation(const GroupTable& h) {
  if (!h.listing_is_reversal_symmetric())
    throw std::invalid_argument(
        "row_reversal_permutation: listing is not reversal-symmetric");
  const size_t r = h.order();
  Gf4Matrix p(r, r);
  for (size_t i = 0; i < r; ++i) p(i, r - 1 - i) = gf1;
  return p;
}

namespace {

Gf4Vector slice(const Gf4Vector& v, size_t begin, size_t len) {
  return Gf4Vector(v.begin() + begin, v.begin() + begin + len);
}

Gf4Vector check_g_family_coeffs(const Gf4Vector& coeffs) {
  if (coeffs.size() % 16 != 0 || coeffs.empty())
    throw std::invalid_argument("closed form: length must be divisible by 16");
  return coeffs;
}

// Assembles a 4x4 grid of q x q blocks.
Gf4Matrix grid4(const std::array<Gf4Matrix, 16>& b, size_t q) {
  Gf4Matrix out(4 * q, 4 * q);
  for (size_t bi = 0; bi < 4; ++bi)
    for (size_t bj = 0; bj < 4; ++bj)
      for (size_t u = 0; u < q; ++u)
        for (size_t v = 0; v < q; ++v)
          out(bi * q + u, bj * q + v) = b[bi * 4 + bj](u, v);
  return out;
}

}  // namespace

Gf4Matrix closed_form_g12(const Gf4Vector& coeffs) {
  check_g_family_coeffs(coeffs);
  const size_t n = coeffs.size(), q = n / 4, s = n / 8 + 1;
  Gf4Matrix a1 = circulant(slice(coeffs, 0, q));
  Gf4Matrix b1 = circulant(slice(coeffs, q, q));
  Gf4Matrix a2 = circulant(slice(coeffs, 2 * q, q));
  Gf4Matrix b2 = l_circulant(s, slice(coeffs, 3 * q, q));
  Gf4Matrix a1t = transpose(a1), a2t = transpose(a2), b1t = transpose(b1);
  Gf4Matrix b2f = flip(b2);
  return grid4({a1,  b1,  a2,  b2,
                b1t, a1t, b2f, a2t,
                a2,  b2,  a1,  b1,
                b2f, a2t, b1t, a1t},
               q);
}

Gf4Matrix closed_form_g22(const Gf4Vector& coeffs) {
  check_g_family_coeffs(coeffs);
  const size_t n = coeffs.size(), q = n / 4, s = n / 8 + 1;
  Gf4Matrix a1 = circulant(slice(coeffs, 0, q));
  Gf4Matrix b1 = l_circulant(s, slice(coeffs, q, q));
  Gf4Matrix a2 = circulant(slice(coeffs, 2 * q, q));
  Gf4Matrix b2 = l_circulant(s, slice(coeffs, 3 * q, q));
  Gf4Matrix a1t = transpose(a1), a2t = transpose(a2);
  Gf4Matrix b1f = flip(b1), b2f = flip(b2);
  return grid4({a1,  b1,  a2,  b2,
                b1f, a1t, b2f, a2t,
                a2,  b2,  a1,  b1,
                b2f, a2t, b1f, a1t},
               q);
}

Gf4Matrix closed_form_g32(const Gf4Vector& coeffs) {
  check_g_family_coeffs(coeffs);
  const size_t n = coeffs.size(), q = n / 4, s = n / 8 + 1;
  Gf4Matrix a1 = circulant(slice(coeffs, 0, q));
  Gf4Matrix b1 = reverse_circulant(slice(coeffs, q, q));
  // a2 reuses the first quarter with the tail reversed; b2 the second quarter
  // rotated so its last entry stays last.
  Gf4Vector a2row{coeffs[0]};
  for (size_t i = q; i-- > 1;) a2row.push_back(coeffs[i]);
  Gf4Vector b2row;
  for (size_t i = 2 * q - 1; i-- > q;) b2row.push_back(coeffs[i]);
  b2row.push_back(coeffs[2 * q - 1]);
  Gf4Matrix a2 = circulant(a2row);
  Gf4Matrix b2 = reverse_circulant(b2row);
  Gf4Matrix a3 = circulant(slice(coeffs, 2 * q, q));
  Gf4Matrix b3 = l_circulant(s, slice(coeffs, 3 * q, q));
  Gf4Matrix a3t = transpose(a3);
  Gf4Matrix b3f = flip(b3);
  return grid4({a1,  b1, a3,  b3,
                b2,  a2, b3f, a3t,
                a3,  b3, a1,  b1,
                b3f, a3t, b2, a2},
               q);
}

size_t family_grid(const std::string& family) {
  if (family.size() == 3 && family[0] == 'G') return 2;
  if (family.size() == 5 && family[0] == 'G') return 4;
  throw std::invalid_argument("unknown family '" + family + "'");
}

CompositeSpec family_spec(const std::string& family, size_t n, const Gf4Vector& coeffs) {
  const size_t m = family_grid(family);
  std::vector<int> digits;
  for (size_t i = 1; i < family.size(); ++i) {
    if (family[i] < '1' || family[i] > '3')
      throw std::invalid_argument("family digits must be 1, 2 or 3");
    digits.push_back(family[i] - '0');
  }
  if (n % 16 != 0) throw std::invalid_argument("family_spec: need 16 | n");
  if (coeffs.size() != n) throw std::invalid_argument("family_spec: coefficient count mismatch");
  const size_t r = n / m;
  GroupPtr base_group = direct_product(r, m, ProductListing::block_reversible);
  GroupRingElement base = make_block_reversible_element(coeffs, r, base_group);

  BlockPartition part = partition(sigma(base), r);
  std::map<int, GroupPtr> assignment;
  for (size_t col = 0; col < m; ++col) {
    const int sym = part.symbol_of(0, col);
    GroupPtr h = block_group(digits[col], r);
    auto [it, inserted] = assignment.emplace(sym, h);
    if (!inserted && !(*it->second == *h))
      throw std::invalid_argument(
          "family_spec: coefficient collision merges symbols assigned to different groups");
  }
  return make_composite_spec(std::move(base), r, SubstitutionMode::reversible,
                             std::move(assignment));
}

}  // namespace gf4dna
