#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cokasch {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Coordinate vector of a ring or module element in its generator basis.
using Vec = std::vector<i64>;

// Overflow-checked arithmetic. The normal-form kernels route every product
// through these; at desk scale (moduli <= 4096, matrices < 100 per side)
// they never trip, but a malicious input must fail loudly, not wrap.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 lcm_checked(i64 a, i64 b);

i64 floor_div(i64 a, i64 b);
i64 mod_floor(i64 a, i64 b);     // representative in [0, b), b > 0
i64 balanced_rem(i64 a, i64 b);  // representative in (-b/2, b/2], b > 0

std::string u128_to_string(u128 v);
u128 checked_mul_u128(u128 a, u128 b);

/// Dense row-major integer matrix. No sparse path: every matrix in this
/// library stays small enough that dense is both simpler and faster.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix diagonal(std::span<const i64> entries);
  static IntMatrix from_rows(const std::vector<std::vector<i64>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  i64 operator()(int r, int c) const { return data_[idx(r, c)]; }
  i64& operator()(int r, int c) { return data_[idx(r, c)]; }

  std::vector<i64> row(int r) const;
  void set_row(int r, std::span<const i64> v);

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);
  void add_row_multiple(int dst, int src, i64 q);  // row[dst] += q * row[src]
  void add_col_multiple(int dst, int src, i64 q);  // col[dst] += q * col[src]

  bool is_zero() const;
  bool is_diagonal() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<i64> data_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
std::vector<i64> row_times_matrix(std::span<const i64> v, const IntMatrix& m);

}  // namespace cokasch
