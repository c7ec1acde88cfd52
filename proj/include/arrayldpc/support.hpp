#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arrayldpc/arraycode.hpp"

namespace arrayldpc {

/// The m x w residue matrix of a codeword or stopping set, held as its w
/// columns in (x, y) form. Entry (j, c) is x_c + j*y_c mod q.
class SupportMatrix {
 public:
  SupportMatrix(Int q, Int m, std::vector<ColumnXY> columns);

  Int q() const noexcept { return q_; }
  Int m() const noexcept { return m_; }
  std::size_t weight() const noexcept { return columns_.size(); }
  const std::vector<ColumnXY>& columns() const noexcept { return columns_; }
  const ColumnXY& column(std::size_t c) const { return columns_.at(c); }

  Int entry(Int row, std::size_t c) const { return mod(columns_[c].x + row * columns_[c].y, q_); }
  std::vector<Int> row(Int j) const;

  bool contains(ColumnXY c) const;
  /// Contains both (0,0) and (q-1,1), the columns the cycle analysis is anchored on.
  bool is_normalized() const { return contains({0, 0}) && contains({q_ - 1, 1}); }

  /// Parity-check column indices y*q + x, in column order.
  std::vector<std::size_t> indices() const;

  bool operator==(const SupportMatrix&) const = default;

 private:
  Int q_;
  Int m_;
  std::vector<ColumnXY> columns_;
};

bool same_columns_up_to_order(const SupportMatrix& a, const SupportMatrix& b);

SupportMatrix support_matrix_from_set(const ArrayCode& code, std::span<const std::size_t> support);

/// Recovers (x, y) from an arithmetic progression x, x+y, ... mod q.
ColumnXY column_xy(std::span<const Int> entries, Int q);

/// Code automorphism (x, y) -> (alpha*x + beta, alpha*y + delta); row j is
/// relabelled by u -> alpha*u + beta + j*delta.
struct AffineMap {
  Int alpha = 1;
  Int beta = 0;
  Int delta = 0;

  ColumnXY apply(ColumnXY c, Int q) const noexcept {
    return {mod(alpha * c.x + beta, q), mod(alpha * c.y + delta, q)};
  }
  auto operator<=>(const AffineMap&) const = default;
};

SupportMatrix apply_map(const AffineMap& map, const SupportMatrix& sm);

struct NormalizeResult {
  SupportMatrix matrix;
  /// Empty when no ordered column pair can be mapped onto (0,0), (q-1,1);
  /// `matrix` is then the unchanged input.
  std::optional<AffineMap> map;

  bool normalized() const noexcept { return map.has_value(); }
};

NormalizeResult normalize(const SupportMatrix& sm);

bool is_minimal_codeword(const ArrayCode& code, std::span<const std::size_t> support);

}  // namespace arrayldpc
