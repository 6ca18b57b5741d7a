#include "gf4dna/groups.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gf4dna {

namespace {

std::string power_label(const std::string& g, size_t e) {
  if (e == 0) return "1";
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

std::string pair_label(const std::string& x, size_t i, const std::string& y, size_t e) {
  std::string xl = power_label(x, i), yl = power_label(y, e);
  if (xl == "1") return yl;
  if (yl == "1") return xl;
  return xl + "*" + yl;
}

}  // namespace

GroupTable::GroupTable(std::vector<uint16_t> mul, std::vector<std::string> labels)
    : mul_(std::move(mul)), labels_(std::move(labels)) {
  const size_t n = static_cast<size_t>(std::llround(std::sqrt(double(mul_.size()))));
  if (n == 0 || n * n != mul_.size())
    throw std::invalid_argument("GroupTable: mul table is not square");
  n_ = n;
  inv_.assign(n_, 0);
  for (size_t a = 0; a < n_; ++a) {
    bool found = false;
    for (size_t b = 0; b < n_; ++b) {
      if (mul_[a * n_ + b] == 0) {
        inv_[a] = static_cast<uint16_t>(b);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("GroupTable: element without inverse");
  }
  if (labels_.empty()) {
    labels_.resize(n_);
    for (size_t i = 0; i < n_; ++i) labels_[i] = "g" + std::to_string(i);
  }
  if (labels_.size() != n_) throw std::invalid_argument("GroupTable: label count mismatch");
}

GroupTable GroupTable::relabeled(const std::vector<uint16_t>& listing) const {
  if (listing.size() != n_) throw std::invalid_argument("relabeled: listing size mismatch");
  if (listing[0] != 0) throw std::invalid_argument("relabeled: identity must stay first");
  std::vector<uint16_t> pos(n_, 0);
  std::vector<bool> seen(n_, false);
  for (size_t p = 0; p < n_; ++p) {
    if (listing[p] >= n_ || seen[listing[p]])
      throw std::invalid_argument("relabeled: listing is not a permutation");
    seen[listing[p]] = true;
    pos[listing[p]] = static_cast<uint16_t>(p);
  }
  std::vector<uint16_t> m(n_ * n_);
  std::vector<std::string> lab(n_);
  for (size_t p = 0; p < n_; ++p) {
    lab[p] = labels_[listing[p]];
    for (size_t q = 0; q < n_; ++q)
      m[p * n_ + q] = pos[mul(listing[p], listing[q])];
  }
  return GroupTable(std::move(m), std::move(lab));
}

bool GroupTable::listing_is_reversal_symmetric() const {
  if (n_ % 2 != 0) return false;
  const uint16_t beta = static_cast<uint16_t>(n_ - 1);
  if (mul(beta, beta) != 0) return false;
  for (size_t v = 0; v < n_; ++v)
    if (mul(beta, static_cast<uint16_t>(v)) != n_ - 1 - v) return false;
  return true;
}

void GroupTable::validate() const {
  for (size_t i = 0; i < n_; ++i) {
    if (mul(0, static_cast<uint16_t>(i)) != i || mul(static_cast<uint16_t>(i), 0) != i)
      throw std::logic_error("GroupTable: index 0 is not the identity");
    if (mul(static_cast<uint16_t>(i), inv_[i]) != 0)
      throw std::logic_error("GroupTable: bad inverse");
  }
  std::vector<bool> seen(n_);
  for (size_t i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (size_t j = 0; j < n_; ++j) {
      uint16_t p = mul(static_cast<uint16_t>(i), static_cast<uint16_t>(j));
      if (seen[p]) throw std::logic_error("GroupTable: row is not a permutation");
      seen[p] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (size_t j = 0; j < n_; ++j) {
      uint16_t p = mul(static_cast<uint16_t>(j), static_cast<uint16_t>(i));
      if (seen[p]) throw std::logic_error("GroupTable: column is not a permutation");
      seen[p] = true;
    }
  }
  for (size_t a = 0; a < n_; ++a)
    for (size_t b = 0; b < n_; ++b)
      for (size_t c = 0; c < n_; ++c) {
        uint16_t ab_c = mul(mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b)),
                            static_cast<uint16_t>(c));
        uint16_t a_bc = mul(static_cast<uint16_t>(a),
                            mul(static_cast<uint16_t>(b), static_cast<uint16_t>(c)));
        if (ab_c != a_bc) throw std::logic_error("GroupTable: not associative");
      }
}

GroupPtr cyclic(size_t m) {
  if (m == 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<uint16_t> mul(m * m);
  std::vector<std::string> lab(m);
  for (size_t i = 0; i < m; ++i) {
    lab[i] = power_label("g", i);
    for (size_t j = 0; j < m; ++j) mul[i * m + j] = static_cast<uint16_t>((i + j) % m);
  }
  return std::make_shared<GroupTable>(std::move(mul), std::move(lab));
}

GroupPtr dihedral(size_t half) {
  if (half < 2) throw std::invalid_argument("dihedral: half must be at least 2");
  const size_t n = 2 * half;
  // index i < half: rotation a^i; index i >= half: reflection b*a^k with
  // k = 2*half-1-i, so the order reads {1, a, ..., a^(half-1), b a^(half-1), ..., b a, b}
  auto rot = [half](size_t e) { return static_cast<uint16_t>(e % half); };
  auto refl = [half](size_t k) { return static_cast<uint16_t>(2 * half - 1 - (k % half)); };
  std::vector<uint16_t> mul(n * n);
  std::vector<std::string> lab(n);
  for (size_t i = 0; i < n; ++i) {
    const bool ir = i >= half;
    const size_t ik = ir ? 2 * half - 1 - i : i;
    lab[i] = ir ? (ik == 0 ? "b" : "b*" + power_label("a", ik)) : power_label("a", i);
    for (size_t j = 0; j < n; ++j) {
      const bool jr = j >= half;
      const size_t jk = jr ? 2 * half - 1 - j : j;
      uint16_t p;
      if (!ir && !jr) p = rot(ik + jk);                     // a^i a^j
      else if (!ir && jr) p = refl(jk + half - (ik % half)); // a^i (b a^k) = b a^(k-i)
      else if (ir && !jr) p = refl(ik + jk);                 // (b a^k) a^j = b a^(k+j)
      else p = rot(jk + half - (ik % half));                 // (b a^k)(b a^k') = a^(k'-k)
      mul[i * n + j] = p;
    }
  }
  return std::make_shared<GroupTable>(std::move(mul), std::move(lab));
}

GroupPtr quasidihedral(size_t half) {
  if (half < 4 || half % 2 != 0)
    throw std::invalid_argument("quasidihedral: half must be even and at least 4");
  const size_t s = half / 2 - 1;
  if ((s * s) % half != 1 % half)
    throw std::invalid_argument("quasidihedral: s^2 != 1 (mod half); c -> c^s is not an automorphism");
  const size_t n = 2 * half;
  auto rot = [half](size_t e) { return static_cast<uint16_t>(e % half); };
  auto refl = [half](size_t k) { return static_cast<uint16_t>(2 * half - 1 - (k % half)); };
  std::vector<uint16_t> mul(n * n);
  std::vector<std::string> lab(n);
  for (size_t i = 0; i < n; ++i) {
    const bool ir = i >= half;
    const size_t ik = ir ? 2 * half - 1 - i : i;
    lab[i] = ir ? (ik == 0 ? "d" : "d*" + power_label("c", ik)) : power_label("c", i);
    for (size_t j = 0; j < n; ++j) {
      const bool jr = j >= half;
      const size_t jk = jr ? 2 * half - 1 - j : j;
      uint16_t p;
      if (!ir && !jr) p = rot(ik + jk);                 // c^i c^j
      else if (!ir && jr) p = refl(s * ik + jk);        // c^i (d c^k) = d c^(s*i+k)
      else if (ir && !jr) p = refl(ik + jk);            // (d c^k) c^j = d c^(k+j)
      else p = rot(s * ik + jk);                        // (d c^k)(d c^k') = c^(s*k+k')
      mul[i * n + j] = p;
    }
  }
  return std::make_shared<GroupTable>(std::move(mul), std::move(lab));
}

GroupPtr direct_product(size_t r, size_t m, ProductListing listing) {
  if (r == 0 || m == 0) throw std::invalid_argument("direct_product: zero order");
  std::vector<size_t> block_exp(m);
  if (listing == ProductListing::natural) {
    for (size_t b = 0; b < m; ++b) block_exp[b] = b;
  } else {
    if (m % 2 != 0)
      throw std::invalid_argument("direct_product: block_reversible listing needs even m");
    block_exp[0] = 0;
    for (size_t k = 1; k < m / 2; ++k) {
      block_exp[2 * k - 1] = k;
      block_exp[2 * k] = m - k;
    }
    block_exp[m - 1] = m / 2;
  }
  std::vector<size_t> block_of(m);
  for (size_t b = 0; b < m; ++b) block_of[block_exp[b]] = b;

  const size_t n = r * m;
  std::vector<uint16_t> mul(n * n);
  std::vector<std::string> lab(n);
  auto idx = [&](size_t xi, size_t ye) { return block_of[ye] * r + xi; };
  for (size_t p = 0; p < n; ++p) {
    const size_t pi = p % r, pe = block_exp[p / r];
    lab[p] = pair_label("x", pi, "y", pe);
    for (size_t q = 0; q < n; ++q) {
      const size_t qi = q % r, qe = block_exp[q / r];
      mul[p * n + q] = static_cast<uint16_t>(idx((pi + qi) % r, (pe + qe) % m));
    }
  }
  return std::make_shared<GroupTable>(std::move(mul), std::move(lab));
}

GroupPtr direct_product(const GroupTable& a, const GroupTable& b) {
  const size_t ra = a.order(), rb = b.order(), n = ra * rb;
  std::vector<uint16_t> mul(n * n);
  std::vector<std::string> lab(n);
  for (size_t p = 0; p < n; ++p) {
    const size_t pa = p % ra, pb = p / ra;
    lab[p] = a.label(static_cast<uint16_t>(pa)) + "," + b.label(static_cast<uint16_t>(pb));
    for (size_t q = 0; q < n; ++q) {
      const size_t qa = q % ra, qb = q / ra;
      mul[p * n + q] = static_cast<uint16_t>(
          b.mul(static_cast<uint16_t>(pb), static_cast<uint16_t>(qb)) * ra +
          a.mul(static_cast<uint16_t>(pa), static_cast<uint16_t>(qa)));
    }
  }
  return std::make_shared<GroupTable>(std::move(mul), std::move(lab));
}

std::vector<uint16_t> reversible_listing(const GroupTable& g,
                                         const std::vector<uint16_t>& subgroup,
                                         uint16_t beta) {
  const size_t n = g.order();
  if (n % 2 != 0) throw std::invalid_argument("reversible_listing: group order must be even");
  const size_t l = n / 2;
  if (subgroup.size() != l)
    throw std::invalid_argument("reversible_listing: subgroup must have index 2");
  if (subgroup[0] != 0)
    throw std::invalid_argument("reversible_listing: subgroup must be listed identity-first");
  std::set<uint16_t> t(subgroup.begin(), subgroup.end());
  if (t.size() != l)
    throw std::invalid_argument("reversible_listing: repeated subgroup elements");
  for (uint16_t a : subgroup)
    for (uint16_t b : subgroup)
      if (!t.count(g.mul(a, b)))
        throw std::invalid_argument("reversible_listing: set is not closed under multiplication");
  if (t.count(beta))
    throw std::invalid_argument("reversible_listing: beta must lie outside the subgroup");
  if (g.mul(beta, beta) != 0)
    throw std::invalid_argument("reversible_listing: beta must have order 2");

  std::vector<uint16_t> listing(n);
  for (size_t i = 0; i < l; ++i) listing[i] = subgroup[i];
  for (size_t i = 1; i < l; ++i) listing[l + i - 1] = g.mul(beta, subgroup[l - i]);
  listing[n - 1] = beta;
  return listing;
}

GroupPtr block_group(int family, size_t r) {
  if (r < 2 || r % 2 != 0)
    throw std::invalid_argument("block_group: order must be even and at least 2");
  switch (family) {
    case 1:
      return dihedral(r / 2);
    case 2:
      return quasidihedral(r / 2);
    case 3: {
      const size_t q = r / 2;
      GroupPtr prod = direct_product(*cyclic(q), *cyclic(2));
      std::vector<uint16_t> t(q);
      for (size_t i = 0; i < q; ++i) t[i] = static_cast<uint16_t>(i);
      auto listing = reversible_listing(*prod, t, static_cast<uint16_t>(q));
      return std::make_shared<GroupTable>(prod->relabeled(listing));
    }
    default:
      throw std::invalid_argument("block_group: family must be 1, 2 or 3");
  }
}

std::vector<uint16_t> cyclic_subgroup(const GroupTable& table, uint16_t g) {
  std::vector<uint16_t> powers{0};
  uint16_t p = g;
  while (p != 0) {
    powers.push_back(p);
    p = table.mul(p, g);
  }
  return powers;
}

}  // namespace gf4dna
