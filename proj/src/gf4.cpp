#include "gf4dna/gf4.hpp"

#include <sstream>
#include <stdexcept>

namespace gf4dna {

Gf4 Gf4::inverse() const {
  switch (v_) {
    case 1: return gf1;
    case 2: return gfw2;  // w * w^2 = w^3 = 1
    case 3: return gfw;
    default: throw std::domain_error("inverse of zero in GF(4)");
  }
}

char Gf4::to_char() const {
  static constexpr char kSym[4] = {'0', '1', 'w', 'W'};
  return kSym[v_];
}

Gf4 Gf4::from_char(char c) {
  switch (c) {
    case '0': return gf0;
    case '1': return gf1;
    case 'w': return gfw;
    case 'W': return gfw2;
    default: throw std::invalid_argument(std::string("bad GF(4) symbol '") + c + "'");
  }
}

Gf4Vector vector_from_string(const std::string& s) {
  Gf4Vector v;
  v.reserve(s.size());
  for (char c : s) v.push_back(Gf4::from_char(c));
  return v;
}

std::string vector_to_string(const Gf4Vector& v) {
  std::string s;
  s.reserve(v.size());
  for (Gf4 x : v) s.push_back(x.to_char());
  return s;
}

size_t hamming_weight(const Gf4Vector& v) {
  size_t w = 0;
  for (Gf4 x : v) w += !x.is_zero();
  return w;
}

size_t hamming_distance(const Gf4Vector& a, const Gf4Vector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: length mismatch");
  size_t d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

Gf4Vector reversed(const Gf4Vector& v) { return Gf4Vector(v.rbegin(), v.rend()); }

Gf4Vector Gf4Matrix::row(size_t r) const {
  Gf4Vector v(cols_);
  for (size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

void Gf4Matrix::set_row(size_t r, const Gf4Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
  for (size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

bool Gf4Matrix::is_zero() const {
  for (Gf4 x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Gf4Matrix l_circulant(size_t l, const Gf4Vector& first_row) {
  const size_t n = first_row.size();
  if (n == 0) throw std::invalid_argument("l_circulant: empty first row");
  if (l < 1 || l > n) throw std::invalid_argument("l_circulant: shift out of range");
  Gf4Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    const size_t shift = (i * l) % n;
    for (size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + n - shift) % n];
  }
  return m;
}

Gf4Matrix circulant(const Gf4Vector& first_row) { return l_circulant(1, first_row); }

Gf4Matrix reverse_circulant(const Gf4Vector& first_row) {
  const size_t n = first_row.size();
  if (n == 0) throw std::invalid_argument("reverse_circulant: empty first row");
  Gf4Matrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + i) % n];
  return m;
}

Gf4Matrix flip(const Gf4Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("flip: matrix not square");
  const size_t n = m.rows();
  Gf4Matrix f(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) f(i, j) = m(n - 1 - i, n - 1 - j);
  return f;
}

Gf4Matrix transpose(const Gf4Matrix& m) {
  Gf4Matrix t(m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Gf4Matrix matmul(const Gf4Matrix& a, const Gf4Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Gf4Matrix c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const Gf4 aik = a(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Gf4Vector vecmat(const Gf4Vector& a, const Gf4Matrix& m) {
  if (a.size() != m.rows()) throw std::invalid_argument("vecmat: shape mismatch");
  Gf4Vector r(m.cols());
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    for (size_t j = 0; j < m.cols(); ++j) r[j] += a[k] * m(k, j);
  }
  return r;
}

RowReduceResult row_reduce(const Gf4Matrix& m) {
  RowReduceResult res{m, 0};
  Gf4Matrix& a = res.reduced;
  const size_t rows = a.rows(), cols = a.cols();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = pivot_row;
    while (sel < rows && a(sel, col).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(pivot_row, j));
    const Gf4 inv = a(pivot_row, col).inverse();
    for (size_t j = 0; j < cols; ++j) a(pivot_row, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == pivot_row) continue;
      const Gf4 f = a(i, col);
      if (f.is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) a(i, j) += f * a(pivot_row, j);
    }
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

std::string matrix_to_text(const Gf4Matrix& m) {
  std::string out;
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out.push_back(' ');
      out.push_back(m(i, j).to_char());
    }
    out.push_back('\n');
  }
  return out;
}

Gf4Matrix matrix_from_text(const std::string& text) {
  std::vector<Gf4Vector> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    Gf4Vector row;
    for (char c : line) {
      if (c == ' ' || c == '\t' || c == '\r') continue;
      row.push_back(Gf4::from_char(c));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix_from_text: no rows");
  const size_t cols = rows[0].size();
  Gf4Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("matrix_from_text: ragged rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

}  // namespace gf4dna
