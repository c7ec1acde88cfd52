#include "arrayldpc/support.hpp"

#include <algorithm>

#include "arrayldpc/bitmatrix.hpp"
#include "arrayldpc/error.hpp"

namespace arrayldpc {

SupportMatrix::SupportMatrix(Int q, Int m, std::vector<ColumnXY> columns)
    : q_(q), m_(m), columns_(std::move(columns)) {
  if (q < 2 || m < 1) throw Error(Errc::invalid_parameter, "support matrix needs q >= 2 and m >= 1");
  for (const ColumnXY& c : columns_) {
    if (c.x < 0 || c.x >= q || c.y < 0 || c.y >= q) {
      throw Error(Errc::invalid_column, "column (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                                            ") is not reduced modulo " + std::to_string(q));
    }
  }
}

std::vector<Int> SupportMatrix::row(Int j) const {
  std::vector<Int> out;
  out.reserve(columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) out.push_back(entry(j, c));
  return out;
}

bool SupportMatrix::contains(ColumnXY c) const {
  return std::find(columns_.begin(), columns_.end(), c) != columns_.end();
}

std::vector<std::size_t> SupportMatrix::indices() const {
  std::vector<std::size_t> out;
  out.reserve(columns_.size());
  for (const ColumnXY& c : columns_) out.push_back(static_cast<std::size_t>(c.y * q_ + c.x));
  return out;
}

bool same_columns_up_to_order(const SupportMatrix& a, const SupportMatrix& b) {
  if (a.q() != b.q() || a.m() != b.m() || a.weight() != b.weight()) return false;
  auto ca = a.columns();
  auto cb = b.columns();
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

SupportMatrix support_matrix_from_set(const ArrayCode& code, std::span<const std::size_t> support) {
  std::vector<std::size_t> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<ColumnXY> cols;
  cols.reserve(sorted.size());
  for (const std::size_t idx : sorted) {
    if (idx >= code.length()) throw Error(Errc::out_of_range, "column index " + std::to_string(idx));
    cols.push_back(code.column_at(idx));
  }
  return SupportMatrix(code.q(), code.m(), std::move(cols));
}

ColumnXY column_xy(std::span<const Int> entries, Int q) {
  if (entries.empty()) throw Error(Errc::invalid_column, "empty column");
  const Int x = mod(entries[0], q);
  const Int y = entries.size() > 1 ? mod(entries[1] - entries[0], q) : 0;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (mod(entries[j], q) != mod(x + static_cast<Int>(j) * y, q)) {
      throw Error(Errc::invalid_column, "entries are not an arithmetic progression modulo " + std::to_string(q));
    }
  }
  return {x, y};
}

SupportMatrix apply_map(const AffineMap& map, const SupportMatrix& sm) {
  std::vector<ColumnXY> cols;
  cols.reserve(sm.weight());
  for (const ColumnXY& c : sm.columns()) cols.push_back(map.apply(c, sm.q()));
  return SupportMatrix(sm.q(), sm.m(), std::move(cols));
}

NormalizeResult normalize(const SupportMatrix& sm) {
  const Int q = sm.q();
  std::optional<AffineMap> best;
  // Sending c1 to (0,0) and c2 to (q-1,1) needs alpha*(x2-x1) = -1 and
  // alpha*(y2-y1) = 1, so dx = -dy != 0 and alpha = dy^{-1}.
  for (const ColumnXY& c1 : sm.columns()) {
    for (const ColumnXY& c2 : sm.columns()) {
      const Int dx = mod(c2.x - c1.x, q);
      const Int dy = mod(c2.y - c1.y, q);
      if (dy == 0 || mod(dx + dy, q) != 0) continue;
      const Int alpha = mod_inverse(dy, q);
      const AffineMap map{alpha, mod(-alpha * c1.x, q), mod(-alpha * c1.y, q)};
      if (!best || map < *best) best = map;
    }
  }
  if (!best) return {sm, std::nullopt};
  return {apply_map(*best, sm), best};
}

bool is_minimal_codeword(const ArrayCode& code, std::span<const std::size_t> support) {
  if (!code.syndrome_zero(support)) {
    throw Error(Errc::precondition, "support is not a codeword of C(" + std::to_string(code.q()) + "," +
                                        std::to_string(code.m()) + ")");
  }
  if (support.empty()) return false;
  BitMatrix sub(code.check_rows(), support.size());
  for (std::size_t k = 0; k < support.size(); ++k) {
    const ColumnXY c = code.column_at(support[k]);
    for (Int j = 0; j < code.m(); ++j) sub.flip(code.check_row(c, j), k);
  }
  return support.size() - sub.rank() == 1;
}

}  // namespace arrayldpc
