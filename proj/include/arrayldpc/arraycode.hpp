#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "arrayldpc/bitmatrix.hpp"
#include "arrayldpc/modarith.hpp"

namespace arrayldpc {

/// A parity-check column (x, x+y, ..., x+(m-1)y) mod q, identified by (x, y).
struct ColumnXY {
  Int x = 0;
  Int y = 0;

  auto operator<=>(const ColumnXY&) const = default;
};

std::vector<Int> column_entries(ColumnXY c, Int q, Int m);

/// The array LDPC code C(q, m) of length q^2.
///
/// The parity-check matrix is kept implicit in (x, y) form. The expanded
/// binary matrix, its GF(2) rank and a generator basis are computed on first
/// use and shared between copies; column index y*q + x addresses block y,
/// offset x, and row index j*q + r addresses block-row j, offset r.
class ArrayCode {
 public:
  static constexpr std::size_t kDefaultColumnCap = 10000;

  ArrayCode(Int q, Int m);

  Int q() const noexcept { return q_; }
  Int m() const noexcept { return m_; }
  std::size_t length() const noexcept { return static_cast<std::size_t>(q_ * q_); }
  std::size_t check_rows() const noexcept { return static_cast<std::size_t>(q_ * m_); }
  /// qm - m + 1
  std::size_t rank() const noexcept { return static_cast<std::size_t>(q_ * m_ - m_ + 1); }
  /// q^2 - qm + m - 1
  std::size_t dimension() const noexcept { return length() - rank(); }

  std::size_t column_index(ColumnXY c) const noexcept { return static_cast<std::size_t>(c.y * q_ + c.x); }
  ColumnXY column_at(std::size_t index) const noexcept {
    return {static_cast<Int>(index) % q_, static_cast<Int>(index) / q_};
  }
  std::vector<Int> column_entries(ColumnXY c) const { return arrayldpc::column_entries(c, q_, m_); }

  /// Row of the expanded matrix hit by column c in block-row j.
  std::size_t check_row(ColumnXY c, Int j) const noexcept {
    return static_cast<std::size_t>(j * q_ + mod(c.x + j * c.y, q_));
  }

  const BitMatrix& parity_check(std::size_t column_cap = kDefaultColumnCap) const;
  /// GF(2) rank of the expanded parity-check matrix, computed by elimination.
  std::size_t computed_rank(std::size_t column_cap = kDefaultColumnCap) const;
  /// Null-space basis of the expanded matrix (dimension() rows of length q^2).
  const BitMatrix& generator(std::size_t column_cap = kDefaultColumnCap) const;

  bool syndrome_zero(std::span<const std::size_t> support) const;
  bool is_stopping_set(std::span<const std::size_t> support) const;

  std::string export_alist(std::size_t column_cap = kDefaultColumnCap) const;

 private:
  struct Cache;

  void check_support(std::span<const std::size_t> support) const;
  std::vector<unsigned> row_counts(std::span<const std::size_t> support) const;

  Int q_;
  Int m_;
  std::shared_ptr<Cache> cache_;
};

ArrayCode build_code(Int q, Int m);

}  // namespace arrayldpc
