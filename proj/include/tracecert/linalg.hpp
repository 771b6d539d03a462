#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tracecert/bigint.hpp"
#include "tracecert/polynomial.hpp"

namespace tracecert {

namespace detail {

inline bool is_zero_entry(const Int& v) { return v == 0; }
inline bool is_zero_entry(const SparsePolynomial& p) { return p.is_zero(); }

inline Int divide_exact_entry(const Int& num, const Int& den) { return num / den; }
inline SparsePolynomial divide_exact_entry(const SparsePolynomial& num, const SparsePolynomial& den) {
  return exact_divide(num, den);
}

}  // namespace detail

// Fraction-free Bareiss elimination; every division is exact over the
// underlying integral domain (entries stay minors of the input, up to the
// sign of the row swaps).  Instantiated for Int and for SparsePolynomial.
template <class Ring>
Ring fraction_free_determinant(std::vector<std::vector<Ring>> m, const Ring& one) {
  const std::size_t n = m.size();
  if (n == 0) throw Error("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant requires a square matrix");
  const Ring zero = one - one;
  if (n == 1) return m[0][0];
  bool negate = false;
  Ring denom = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && detail::is_zero_entry(m[pivot][k])) ++pivot;
    if (pivot == n) return zero;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = detail::divide_exact_entry(m[k][k] * m[i][j] - m[i][k] * m[k][j], denom);
      m[i][k] = zero;
    }
    denom = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

inline Int integer_determinant(std::vector<std::vector<Int>> m) {
  return fraction_free_determinant<Int>(std::move(m), Int(1));
}

// Rank by fraction-free elimination with full pivot search; column swaps
// preserve the exact-division property just as row swaps do.
inline std::size_t integer_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw Error("ragged matrix");
  std::size_t rank = 0;
  Int denom = 1;
  while (rank < rows && rank < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t j = rank; j < cols && pr == rows; ++j)
      for (std::size_t i = rank; i < rows; ++i)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    std::swap(m[pr], m[rank]);
    if (pc != rank)
      for (auto& row : m) std::swap(row[pc], row[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = rank + 1; j < cols; ++j)
        m[i][j] = (m[rank][rank] * m[i][j] - m[i][rank] * m[rank][j]) / denom;
      m[i][rank] = 0;
    }
    denom = m[rank][rank];
    ++rank;
  }
  return rank;
}

// Maintains a rational row-echelon basis; add_row answers whether the new
// row is independent of everything accepted so far.
class IncrementalRank {
 public:
  explicit IncrementalRank(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return basis_.size(); }

  bool add_row(const std::vector<Int>& row) {
    if (row.size() != cols_) throw Error("row length mismatch");
    std::vector<Rat> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = Rat(row[j]);
    reduce(v);
    std::size_t lead = leading(v);
    if (lead == cols_) return false;
    Rat inv = v[lead];
    for (auto& x : v) x /= inv;
    basis_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
  }

 private:
  std::size_t leading(const std::vector<Rat>& v) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0) return j;
    return cols_;
  }

  void reduce(std::vector<Rat>& v) const {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Rat& c = v[lead_[b]];
      if (c == 0) continue;
      Rat factor = c;
      for (std::size_t j = lead_[b]; j < cols_; ++j) v[j] -= factor * basis_[b][j];
    }
  }

  std::size_t cols_;
  std::vector<std::vector<Rat>> basis_;
  std::vector<std::size_t> lead_;
};

// A nonzero rational combination of the rows summing to zero, if one exists.
// Tracks the transform T with T*M = echelon; a zero echelon row exposes the
// dependency.
inline std::optional<std::vector<Rat>> row_dependency(const std::vector<std::vector<Int>>& m) {
  if (m.empty()) return std::nullopt;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<Rat>> work(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) throw Error("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) work[i][j] = Rat(m[i][j]);
  }
  std::vector<std::vector<Rat>> transform(rows, std::vector<Rat>(rows, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i) transform[i][i] = 1;

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && work[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(work[pivot], work[row]);
    std::swap(transform[pivot], transform[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (work[i][col] == 0) continue;
      Rat factor = work[i][col] / work[row][col];
      for (std::size_t j = col; j < cols; ++j) work[i][j] -= factor * work[row][j];
      for (std::size_t j = 0; j < rows; ++j) transform[i][j] -= factor * transform[row][j];
    }
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < cols; ++j)
      if (work[i][j] != 0) {
        zero = false;
        break;
      }
    if (zero) return transform[i];
  }
  return std::nullopt;
}

}  // namespace tracecert
