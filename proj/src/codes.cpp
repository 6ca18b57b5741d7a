#include "gf4dna/codes.hpp"

#include <algorithm>
#include <sstream>

namespace gf4dna {

LinearCode LinearCode::from_generator(const Gf4Matrix& gen) {
  LinearCode c;
  c.gen_ = gen;
  c.n_ = gen.cols();
  RowReduceResult rr = row_reduce(gen);
  c.k_ = rr.rank;
  c.basis_ = Gf4Matrix(c.k_, c.n_);
  for (size_t i = 0; i < c.k_; ++i)
    for (size_t j = 0; j < c.n_; ++j) c.basis_(i, j) = rr.reduced(i, j);
  c.pivots_.resize(c.k_);
  for (size_t i = 0; i < c.k_; ++i) {
    size_t p = 0;
    while (p < c.n_ && c.basis_(i, p).is_zero()) ++p;
    c.pivots_[i] = p;
  }
  return c;
}

bool LinearCode::contains(const Gf4Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("contains: length mismatch");
  Gf4Vector w = v;
  for (size_t i = 0; i < k_; ++i) {
    const Gf4 f = w[pivots_[i]];
    if (f.is_zero()) continue;
    for (size_t j = pivots_[i]; j < n_; ++j) w[j] += f * basis_(i, j);
  }
  return hamming_weight(w) == 0;
}

void for_each_codeword(const LinearCode& code,
                       const std::function<void(const Gf4Vector&)>& fn,
                       size_t budget_k) {
  const size_t k = code.dimension(), n = code.length();
  if (k > budget_k || k > 31)
    throw EnumerationBudgetExceeded("enumeration budget exceeded: k = " +
                                    std::to_string(k) + " > " + std::to_string(budget_k));
  Gf4Vector cw(n, gf0);
  fn(cw);
  if (k == 0) return;

  // Modular Gray walk: between steps exactly one message digit moves
  // s -> s+1 (mod 4); the codeword changes by (s xor s+1) times that row.
  std::vector<uint8_t> counter(k, 0);  // plain base-4 counter of the step index
  std::vector<uint8_t> msg(k, 0);
  const uint64_t total = 1ull << (2 * k);
  for (uint64_t t = 0; t + 1 < total; ++t) {
    size_t p = 0;
    while (counter[p] == 3) {
      counter[p] = 0;
      ++p;
    }
    ++counter[p];
    const uint8_t old = msg[p];
    msg[p] = (old + 1) & 3;
    const Gf4 delta(old ^ msg[p]);
    for (size_t j = 0; j < n; ++j) cw[j] += delta * code.basis()(p, j);
    fn(cw);
  }
}

std::vector<Gf4Vector> enumerate_codewords(const LinearCode& code, size_t budget_k) {
  std::vector<Gf4Vector> out;
  if (code.dimension() <= budget_k)
    out.reserve(static_cast<size_t>(1) << (2 * code.dimension()));
  for_each_codeword(code, [&](const Gf4Vector& c) { out.push_back(c); }, budget_k);
  return out;
}

namespace {

DistanceResult brute_distance(const LinearCode& code, const DistanceOptions& opts) {
  DistanceResult res;
  res.method = DistanceMethod::brute;
  size_t best = SIZE_MAX;
  bool first = true;
  for_each_codeword(
      code,
      [&](const Gf4Vector& c) {
        if (first) {  // skip the zero word
          first = false;
          return;
        }
        best = std::min(best, hamming_weight(c));
      },
      opts.budget_k);
  res.distance = best;
  res.lower_bound = best;
  res.certified = true;
  return res;
}

// Disjoint information sets: repeatedly row-reduce using only still-unused
// columns as pivots; keep the full-rank rounds.
std::vector<Gf4Matrix> disjoint_information_sets(const LinearCode& code) {
  const size_t k = code.dimension(), n = code.length();
  std::vector<bool> used(n, false);
  std::vector<Gf4Matrix> sets;
  for (;;) {
    Gf4Matrix a = code.basis();
    std::vector<size_t> piv;
    size_t row = 0;
    for (size_t col = 0; col < n && row < k; ++col) {
      if (used[col]) continue;
      size_t sel = row;
      while (sel < k && a(sel, col).is_zero()) ++sel;
      if (sel == k) continue;
      if (sel != row)
        for (size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(row, j));
      const Gf4 inv = a(row, col).inverse();
      for (size_t j = 0; j < n; ++j) a(row, j) *= inv;
      for (size_t i = 0; i < k; ++i) {
        if (i == row) continue;
        const Gf4 f = a(i, col);
        if (f.is_zero()) continue;
        for (size_t j = 0; j < n; ++j) a(i, j) += f * a(row, j);
      }
      piv.push_back(col);
      ++row;
    }
    if (row < k) break;
    for (size_t col : piv) used[col] = true;
    sets.push_back(std::move(a));
  }
  return sets;
}

DistanceResult info_set_distance(const LinearCode& code, const DistanceOptions& opts) {
  const size_t k = code.dimension(), n = code.length();
  DistanceResult res;
  res.method = DistanceMethod::information_set;
  std::vector<Gf4Matrix> sets = disjoint_information_sets(code);
  const size_t s = sets.size();

  size_t best = SIZE_MAX;
  static constexpr Gf4 kNonzero[3] = {gf1, gfw, gfw2};

  // Enumerates messages of weight exactly w over one standard-form generator,
  // extending support positions left to right with running partial sums.
  Gf4Vector sum(n, gf0);
  std::vector<size_t> support;
  auto extend = [&](auto&& self, const Gf4Matrix& g, size_t next, size_t w) -> void {
    if (w == 0) {
      best = std::min(best, hamming_weight(sum));
      return;
    }
    for (size_t pos = next; pos + w <= k; ++pos)
      for (Gf4 coef : kNonzero) {
        for (size_t j = 0; j < n; ++j) sum[j] += coef * g(pos, j);
        self(self, g, pos + 1, w - 1);
        for (size_t j = 0; j < n; ++j) sum[j] += coef * g(pos, j);
      }
  };

  const size_t wmax = std::min(opts.max_weight, k);
  for (size_t w = 1; w <= wmax; ++w) {
    for (const Gf4Matrix& g : sets) extend(extend, g, 0, w);
    res.lower_bound = s * (w + 1);
    if (w == k) res.lower_bound = std::max(res.lower_bound, best);
    if (best <= res.lower_bound || (opts.fail_below && best < opts.fail_below)) break;
  }
  res.distance = best == SIZE_MAX ? 0 : best;
  res.certified = best != SIZE_MAX && best <= res.lower_bound;
  if (res.certified) res.lower_bound = res.distance;
  return res;
}

}  // namespace

DistanceResult min_distance(const LinearCode& code, DistanceMethod method,
                            DistanceOptions opts) {
  if (code.dimension() == 0)
    throw std::invalid_argument("min_distance: zero code has no minimum distance");
  return method == DistanceMethod::brute ? brute_distance(code, opts)
                                         : info_set_distance(code, opts);
}

bool is_reversible(const LinearCode& code) {
  for (size_t i = 0; i < code.dimension(); ++i)
    if (!code.contains(reversed(code.basis().row(i)))) return false;
  return true;
}

WeightEnumerator weight_enumerators(const LinearCode& code, size_t budget_k) {
  WeightEnumerator we;
  we.gcw.assign(code.length() + 1, 0);
  for_each_codeword(
      code,
      [&](const Gf4Vector& c) {
        std::array<uint32_t, 4> comp{0, 0, 0, 0};
        for (Gf4 x : c) ++comp[x.bits()];
        ++we.cwe[comp];
        ++we.gcw[comp[2] + comp[3]];
      },
      budget_k);
  return we;
}

BigUint WeightEnumerator::total() const {
  BigUint t(0);
  for (const auto& [comp, count] : cwe) t += BigUint(count);
  return t;
}

std::string WeightEnumerator::gcw_string() const {
  std::ostringstream os;
  os << "GCW: [";
  for (size_t i = 0; i < gcw.size(); ++i) {
    if (i) os << ", ";
    os << gcw[i];
  }
  os << "]";
  return os.str();
}

std::string WeightEnumerator::cwe_csv() const {
  std::ostringstream os;
  os << "n0,n1,nw,nW,count\n";
  for (const auto& [comp, count] : cwe)
    os << comp[0] << ',' << comp[1] << ',' << comp[2] << ',' << comp[3] << ',' << count << '\n';
  return os.str();
}

}  // namespace gf4dna
