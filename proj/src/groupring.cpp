#include "gf4dna/groupring.hpp"

#include <stdexcept>

namespace gf4dna {

GroupRingElement make_element(GroupPtr group, Gf4Vector coeffs) {
  if (!group) throw std::invalid_argument("make_element: null group");
  if (coeffs.size() != group->order())
    throw std::invalid_argument("make_element: coefficient count must equal group order");
  return GroupRingElement{std::move(group), std::move(coeffs)};
}

GroupRingElement add(const GroupRingElement& v, const GroupRingElement& w) {
  if (v.group != w.group && !(*v.group == *w.group))
    throw std::invalid_argument("add: mismatched groups");
  Gf4Vector c(v.coeffs);
  for (size_t i = 0; i < c.size(); ++i) c[i] += w.coeffs[i];
  return GroupRingElement{v.group, std::move(c)};
}

GroupRingElement multiply(const GroupRingElement& v, const GroupRingElement& w) {
  if (v.group != w.group && !(*v.group == *w.group))
    throw std::invalid_argument("multiply: mismatched groups");
  const GroupTable& g = *v.group;
  const size_t n = g.order();
  Gf4Vector c(n, gf0);
  for (size_t i = 0; i < n; ++i) {
    if (v.coeffs[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (w.coeffs[j].is_zero()) continue;
      c[g.mul(static_cast<uint16_t>(i), static_cast<uint16_t>(j))] +=
          v.coeffs[i] * w.coeffs[j];
    }
  }
  return GroupRingElement{v.group, std::move(c)};
}

Gf4Matrix sigma(const GroupRingElement& v) {
  const GroupTable& g = *v.group;
  const size_t n = g.order();
  Gf4Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    const uint16_t gi_inv = g.inv(static_cast<uint16_t>(i));
    for (size_t j = 0; j < n; ++j)
      m(i, j) = v.coeffs[g.mul(gi_inv, static_cast<uint16_t>(j))];
  }
  return m;
}

BlockPartition partition(const Gf4Matrix& mat, size_t r) {
  const size_t n = mat.rows();
  if (n != mat.cols()) throw std::invalid_argument("partition: matrix not square");
  if (r <= 1 || r >= n || n % r != 0)
    throw std::invalid_argument("partition: need r | n with 1 < r < n");
  BlockPartition p;
  p.r = r;
  p.m = n / r;
  p.blocks.reserve(p.m * p.m);
  p.symbol.assign(p.m * p.m, -1);
  for (size_t bi = 0; bi < p.m; ++bi)
    for (size_t bj = 0; bj < p.m; ++bj) {
      Gf4Matrix b(r, r);
      for (size_t u = 0; u < r; ++u)
        for (size_t v = 0; v < r; ++v) b(u, v) = mat(bi * r + u, bj * r + v);
      int sym = -1;
      for (size_t k = 0; k < p.blocks.size(); ++k)
        if (p.blocks[k] == b) {
          sym = p.symbol[k];
          break;
        }
      if (sym < 0) sym = p.symbol_count++;
      p.symbol[bi * p.m + bj] = sym;
      p.blocks.push_back(std::move(b));
    }
  return p;
}

Gf4Matrix reassemble(const BlockPartition& p) {
  const size_t n = p.r * p.m;
  Gf4Matrix mat(n, n);
  for (size_t bi = 0; bi < p.m; ++bi)
    for (size_t bj = 0; bj < p.m; ++bj) {
      const Gf4Matrix& b = p.block(bi, bj);
      for (size_t u = 0; u < p.r; ++u)
        for (size_t v = 0; v < p.r; ++v) mat(bi * p.r + u, bj * p.r + v) = b(u, v);
    }
  return mat;
}

BlockReversibility is_block_reversible(const BlockPartition& p) {
  BlockReversibility res;
  res.pairing.assign(p.m, -1);
  res.reversible = true;
  std::vector<bool> used(p.m, false);
  for (size_t bi = 0; bi < p.m; ++bi) {
    int match = -1;
    for (size_t w = p.m; w-- > 0;) {
      if (used[w]) continue;
      bool eq = true;
      for (size_t bj = 0; bj < p.m && eq; ++bj)
        eq = p.symbol_of(bi, p.m - 1 - bj) == p.symbol_of(w, bj);
      if (eq) {
        match = static_cast<int>(w);
        break;
      }
    }
    if (match < 0) {
      res.reversible = false;
    } else {
      used[match] = true;
      res.pairing[bi] = match;
    }
  }
  return res;
}

GroupRingElement make_block_reversible_element(const Gf4Vector& coeffs, size_t r,
                                               GroupPtr group) {
  if (!group) throw std::invalid_argument("make_block_reversible_element: null group");
  const size_t n = group->order();
  if (coeffs.size() != n)
    throw std::invalid_argument("make_block_reversible_element: coefficient count mismatch");
  if (n % 4 != 0) throw std::invalid_argument("make_block_reversible_element: need 4 | n");
  if (r <= 1 || r >= n || n % r != 0)
    throw std::invalid_argument("make_block_reversible_element: need r | n with 1 < r < n");
  if ((n / r) % 2 != 0)
    throw std::invalid_argument("make_block_reversible_element: n/r must be even");
  GroupPtr expected = direct_product(r, n / r, ProductListing::block_reversible);
  if (!(*group == *expected))
    throw std::invalid_argument(
        "make_block_reversible_element: group is not the block-listed product C_r x C_{n/r}");
  return GroupRingElement{std::move(group), coeffs};
}

}  // namespace gf4dna
