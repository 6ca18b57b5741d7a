#ifndef GF4DNA_GF4_HPP
#define GF4DNA_GF4_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gf4dna {

// The field GF(4) = {0, 1, w, w^2} with w^2 = w + 1 and characteristic 2.
// Elements are stored in two bits over the basis {1, w}:
//   0 -> 00, 1 -> 01, w -> 10, w^2 -> 11,
// so addition is XOR and multiplication is a 4x4 table lookup.
class Gf4 {
 public:
  constexpr Gf4() = default;
  constexpr explicit Gf4(unsigned bits) : v_(static_cast<uint8_t>(bits & 3u)) {}

  constexpr unsigned bits() const { return v_; }

  friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(a.v_ ^ b.v_); }
  friend constexpr Gf4 operator*(Gf4 a, Gf4 b) { return Gf4(kMul[a.v_][b.v_]); }
  Gf4& operator+=(Gf4 o) { v_ ^= o.v_; return *this; }
  Gf4& operator*=(Gf4 o) { v_ = kMul[v_][o.v_]; return *this; }

  friend constexpr bool operator==(Gf4 a, Gf4 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Gf4 a, Gf4 b) { return a.v_ != b.v_; }

  constexpr bool is_zero() const { return v_ == 0; }

  // Multiplicative inverse; throws std::domain_error for 0.
  Gf4 inverse() const;

  // Text symbols: '0', '1', 'w', 'W' (W denotes w^2).
  char to_char() const;
  static Gf4 from_char(char c);

 private:
  static constexpr uint8_t kMul[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  uint8_t v_ = 0;
};

inline constexpr Gf4 gf0{0u};
inline constexpr Gf4 gf1{1u};
inline constexpr Gf4 gfw{2u};
inline constexpr Gf4 gfw2{3u};

using Gf4Vector = std::vector<Gf4>;

// Parse/print coefficient strings over {0,1,w,W}.
Gf4Vector vector_from_string(const std::string& s);
std::string vector_to_string(const Gf4Vector& v);
size_t hamming_weight(const Gf4Vector& v);
size_t hamming_distance(const Gf4Vector& a, const Gf4Vector& b);
Gf4Vector reversed(const Gf4Vector& v);

// Dense row-major matrix over GF(4).
class Gf4Matrix {
 public:
  Gf4Matrix() = default;
  Gf4Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Gf4& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  Gf4 operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Gf4Vector row(size_t r) const;
  void set_row(size_t r, const Gf4Vector& v);

  bool operator==(const Gf4Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Gf4Matrix& o) const { return !(*this == o); }

  bool is_zero() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Gf4> data_;
};

// Structured builders. first_row must be nonempty; l must satisfy 1 <= l <= n.
// circulant: each row is the previous one cyclically shifted right by one.
// l_circulant: shifted right by l (row 2 begins with entry n-l+1 of the first).
// reverse_circulant: shifted left by one.
Gf4Matrix circulant(const Gf4Vector& first_row);
Gf4Matrix l_circulant(size_t l, const Gf4Vector& first_row);
Gf4Matrix reverse_circulant(const Gf4Vector& first_row);

// flip: 180-degree rotation (entry (i,j) <- entry (n-1-i, n-1-j)); square only.
Gf4Matrix flip(const Gf4Matrix& m);
Gf4Matrix transpose(const Gf4Matrix& m);

Gf4Matrix matmul(const Gf4Matrix& a, const Gf4Matrix& b);
Gf4Vector vecmat(const Gf4Vector& a, const Gf4Matrix& m);

struct RowReduceResult {
  Gf4Matrix reduced;  // reduced row-echelon form
  size_t rank = 0;
};
RowReduceResult row_reduce(const Gf4Matrix& m);

// Text fixture format: one row per line, symbols {0,1,w,W} separated by
// single spaces. Round-trips bit-exactly.
std::string matrix_to_text(const Gf4Matrix& m);
Gf4Matrix matrix_from_text(const std::string& text);

}  // namespace gf4dna

#endif
