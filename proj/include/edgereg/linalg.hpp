#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace edgereg {

/// Coefficient field for homology ranks. Both modes are exact.
enum class Field { F2, Q };

std::string to_string(Field f);
/// Accepts "f2"/"F2" and "q"/"Q".
Field parse_field(std::string_view text);

/// Dense integer matrix; boundary matrices here have entries in {-1, 0, 1}.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Rank over GF(2) by bit-packed Gauss-Jordan elimination; entries are read mod 2.
std::size_t rank_f2(const IntMatrix& m);

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
/// overflow-checked 64-bit arithmetic and restarts with arbitrary-precision
/// integers if any intermediate overflows.
std::size_t rank_q(const IntMatrix& m);

std::size_t rank(const IntMatrix& m, Field f);

}  // namespace edgereg
