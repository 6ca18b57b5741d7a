#include "gf4dna/bigint.hpp"

#include <stdexcept>

namespace gf4dna {

namespace {
constexpr uint32_t kBase = 1000000000u;
}

BigUint::BigUint(uint64_t v) {
  limbs_.clear();
  do {
    limbs_.push_back(static_cast<uint32_t>(v % kBase));
    v /= kBase;
  } while (v != 0);
}

BigUint BigUint::pow4(size_t k) {
  BigUint r(1);
  for (size_t i = 0; i < k; ++i) r.mul_u32(4);
  return r;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  uint32_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t s = static_cast<uint64_t>(limbs_[i]) + carry +
                 (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<uint32_t>(s % kBase);
    carry = static_cast<uint32_t>(s / kBase);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::mul_u32(uint32_t m) {
  uint64_t carry = 0;
  for (auto& limb : limbs_) {
    uint64_t p = static_cast<uint64_t>(limb) * m + carry;
    limb = static_cast<uint32_t>(p % kBase);
    carry = p / kBase;
  }
  while (carry) {
    limbs_.push_back(static_cast<uint32_t>(carry % kBase));
    carry /= kBase;
  }
  trim();
  return *this;
}

bool BigUint::operator<(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
  for (size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
  return false;
}

void BigUint::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

std::string BigUint::to_string() const {
  std::string s = std::to_string(limbs_.back());
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

BigUint BigUint::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty big integer literal");
  BigUint r(0);
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad big integer literal");
    r.mul_u32(10);
    r += BigUint(static_cast<uint64_t>(c - '0'));
  }
  return r;
}

}  // namespace gf4dna
