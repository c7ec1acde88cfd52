#include "arrayldpc/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace arrayldpc {

std::size_t popcount(std::span<const Word> words) noexcept {
  std::size_t n = 0;
  for (const Word w : words) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) noexcept {
  Word& w = data_[r * stride_ + c / kWordBits];
  const Word bit = Word{1} << (c % kWordBits);
  if (value) {
    w |= bit;
  } else {
    w &= ~bit;
  }
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) noexcept {
  Word* d = data_.data() + dst * stride_;
  const Word* s = data_.data() + src * stride_;
  for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

void BitMatrix::append_row(std::span<const Word> words) {
  data_.insert(data_.end(), words.begin(), words.end());
  ++rows_;
}

std::vector<std::size_t> BitMatrix::reduce(std::span<const std::size_t> column_order) {
  std::vector<std::size_t> natural;
  if (column_order.empty()) {
    natural.resize(cols_);
    std::iota(natural.begin(), natural.end(), std::size_t{0});
    column_order = natural;
  }
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (const std::size_t c : column_order) {
    if (next == rows_) break;
    std::size_t p = next;
    while (p < rows_ && !get(p, c)) ++p;
    if (p == rows_) continue;
    swap_rows(next, p);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != next && get(r, c)) xor_row(r, next);
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.reduce().size();
}

BitMatrix BitMatrix::null_space() const {
  BitMatrix echelon = *this;
  const std::vector<std::size_t> pivots = echelon.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (const std::size_t p : pivots) is_pivot[p] = true;

  BitMatrix basis(0, cols_);
  std::vector<Word> v(stride_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Word{0});
    v[f / kWordBits] |= Word{1} << (f % kWordBits);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (echelon.get(i, f)) v[pivots[i] / kWordBits] |= Word{1} << (pivots[i] % kWordBits);
    }
    basis.append_row(v);
  }
  return basis;
}

}  // namespace arrayldpc
