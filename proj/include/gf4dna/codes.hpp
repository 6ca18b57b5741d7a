#ifndef GF4DNA_CODES_HPP
#define GF4DNA_CODES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "gf4dna/bigint.hpp"
#include "gf4dna/gf4.hpp"

namespace gf4dna {

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Row space of a generator matrix over GF(4).
class LinearCode {
 public:
  static LinearCode from_generator(const Gf4Matrix& gen);

  size_t length() const { return n_; }
  size_t dimension() const { return k_; }
  const Gf4Matrix& generator() const { return gen_; }
  const Gf4Matrix& basis() const { return basis_; }  // k x n, RREF rows
  const std::vector<size_t>& pivots() const { return pivots_; }

  BigUint size() const { return BigUint::pow4(k_); }
  std::string size_decimal() const { return size().to_string(); }

  bool contains(const Gf4Vector& v) const;

 private:
  Gf4Matrix gen_;
  Gf4Matrix basis_;
  std::vector<size_t> pivots_;
  size_t n_ = 0, k_ = 0;
};

inline constexpr size_t kDefaultEnumBudgetK = 14;

// Visits every codeword exactly once (message-space order is a modular
// base-4 Gray walk, so each step costs one row addition). Throws
// EnumerationBudgetExceeded when 4^k exceeds the budget.
void for_each_codeword(const LinearCode& code,
                       const std::function<void(const Gf4Vector&)>& fn,
                       size_t budget_k = kDefaultEnumBudgetK);

std::vector<Gf4Vector> enumerate_codewords(const LinearCode& code,
                                           size_t budget_k = kDefaultEnumBudgetK);

enum class DistanceMethod { brute, information_set };

struct DistanceOptions {
  size_t budget_k = kDefaultEnumBudgetK;  // brute enumeration cap
  size_t max_weight = SIZE_MAX;           // information-set pass cap
  size_t fail_below = 0;  // stop early once a nonzero word lighter than this appears
};

struct DistanceResult {
  size_t distance = 0;     // lightest nonzero codeword weight seen
  size_t lower_bound = 0;  // proven bound on the minimum distance
  bool certified = false;  // distance == true minimum
  DistanceMethod method = DistanceMethod::brute;

  bool at_least(size_t d) const {
    return lower_bound >= d && (distance >= d || distance == 0);
  }
};

// Minimum distance of a nonzero code (throws std::invalid_argument on the
// zero code). The information_set method enumerates low-weight messages over
// disjoint information sets until the growing lower bound meets the best
// weight found, so its result is certified exact unless max_weight cuts the
// loop short.
DistanceResult min_distance(const LinearCode& code, DistanceMethod method,
                            DistanceOptions opts = {});

// True iff the reversal of every basis row stays in the row space.
bool is_reversible(const LinearCode& code);

struct WeightEnumerator {
  // composition (n_0, n_1, n_w, n_w2) -> number of codewords
  std::map<std::array<uint32_t, 4>, uint64_t> cwe;
  // gcw[i] = number of codewords with exactly i symbols in {w, w^2}
  std::vector<uint64_t> gcw;

  BigUint total() const;
  std::string gcw_string() const;  // "GCW: [c0, c1, ..., cn]"
  std::string cwe_csv() const;     // "n0,n1,nw,nW,count" lines
};

WeightEnumerator weight_enumerators(const LinearCode& code,
                                    size_t budget_k = kDefaultEnumBudgetK);

}  // namespace gf4dna

#endif
