#ifndef GF4DNA_BIGINT_HPP
#define GF4DNA_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gf4dna {

// Unsigned big integer, base-1e9 limbs, little-endian. Just enough arithmetic
// for exact code-size bookkeeping (4^k for k far beyond 64-bit range) and for
// summing enumerator counts without overflow.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(uint64_t v);

  static BigUint pow4(size_t k);  // 4^k

  BigUint& operator+=(const BigUint& o);
  BigUint& mul_u32(uint32_t m);

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigUint& o) const { return !(*this == o); }
  bool operator<(const BigUint& o) const;

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  std::string to_string() const;
  static BigUint from_string(const std::string& s);

 private:
  void trim();
  std::vector<uint32_t> limbs_;
};

}  // namespace gf4dna

#endif
