#include "cokasch/intmat.hpp"

#include <numeric>
#include <stdexcept>

namespace cokasch {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact arithmetic (add)");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact arithmetic (mul)");
  return r;
}

i64 lcm_checked(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  i64 g = std::gcd(a, b);
  return checked_mul(a / g, b < 0 ? -b : b);
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 mod_floor(i64 a, i64 b) {
  i64 r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

i64 balanced_rem(i64 a, i64 b) {
  i64 p = b < 0 ? -b : b;
  i64 r = mod_floor(a, p);
  if (2 * r > p) r -= p;
  return r;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

u128 checked_mul_u128(u128 a, u128 b) {
  if (a != 0 && b > static_cast<u128>(-1) / a)
    throw std::overflow_error("integer overflow in exact arithmetic (u128 mul)");
  return a * b;
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const i64> entries) {
  IntMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<i64>>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != cols)
      throw std::invalid_argument("ragged row list");
    m.set_row(r, rows[static_cast<std::size_t>(r)]);
  }
  return m;
}

std::vector<i64> IntMatrix::row(int r) const {
  std::vector<i64> v(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) v[static_cast<std::size_t>(c)] = (*this)(r, c);
  return v;
}

void IntMatrix::set_row(int r, std::span<const i64> v) {
  for (int c = 0; c < cols_; ++c) (*this)(r, c) = v[static_cast<std::size_t>(c)];
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::add_row_multiple(int dst, int src, i64 q) {
  if (q == 0) return;
  for (int c = 0; c < cols_; ++c)
    (*this)(dst, c) = checked_add((*this)(dst, c), checked_mul(q, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(int dst, int src, i64 q) {
  if (q == 0) return;
  for (int r = 0; r < rows_; ++r)
    (*this)(r, dst) = checked_add((*this)(r, dst), checked_mul(q, (*this)(r, src)));
}

bool IntMatrix::is_zero() const {
  for (i64 v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      i64 aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

std::vector<i64> row_times_matrix(std::span<const i64> v, const IntMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows())
    throw std::invalid_argument("row_times_matrix shape mismatch");
  std::vector<i64> out(static_cast<std::size_t>(m.cols()), 0);
  for (int r = 0; r < m.rows(); ++r) {
    i64 vr = v[static_cast<std::size_t>(r)];
    if (vr == 0) continue;
    for (int c = 0; c < m.cols(); ++c)
      out[static_cast<std::size_t>(c)] =
          checked_add(out[static_cast<std::size_t>(c)], checked_mul(vr, m(r, c)));
  }
  return out;
}

}  // namespace cokasch
