#include "edgereg/linalg.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

#include "edgereg/error.hpp"

namespace edgereg {

std::string to_string(Field f) { return f == Field::F2 ? "F2" : "Q"; }

Field parse_field(std::string_view text) {
  if (text == "f2" || text == "F2") return Field::F2;
  if (text == "q" || text == "Q") return Field::Q;
  throw PreconditionError("unknown field '" + std::string(text) + "' (expected f2 or q)");
}

std::size_t rank_f2(const IntMatrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if ((m.at(r, c) & 1) != 0) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && (rows[pivot][w] & bit) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if ((rows[r][w] & bit) == 0) continue;
      for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

struct Overflow {};

struct Checked {
  std::int64_t v = 0;

  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) { return Checked{a.v / b.v}; }
  friend bool operator==(Checked a, int b) { return a.v == b; }
};

template <class T>
std::size_t bareiss_rank(std::vector<std::vector<T>> a, std::size_t cols) {
  const std::size_t n = a.size();
  T prev{1};
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < n; ++c) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = T{0};
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

template <class T>
std::vector<std::vector<T>> copy_as(const IntMatrix& m) {
  std::vector<std::vector<T>> a(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = T{m.at(r, c)};
  }
  return a;
}

}  // namespace

std::size_t rank_q(const IntMatrix& m) {
  try {
    return bareiss_rank(copy_as<Checked>(m), m.cols());
  } catch (const Overflow&) {
    return bareiss_rank(copy_as<boost::multiprecision::cpp_int>(m), m.cols());
  }
}

std::size_t rank(const IntMatrix& m, Field f) { return f == Field::F2 ? rank_f2(m) : rank_q(m); }

}  // namespace edgereg
