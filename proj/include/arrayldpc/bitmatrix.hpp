#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace arrayldpc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

std::size_t popcount(std::span<const Word> words) noexcept;

/// Dense GF(2) matrix, row-major, each row packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept;
  void flip(std::size_t r, std::size_t c) noexcept {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<Word> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }

  /// row(dst) ^= row(src)
  void xor_row(std::size_t dst, std::size_t src) noexcept;
  void swap_rows(std::size_t a, std::size_t b) noexcept;
  std::size_t row_weight(std::size_t r) const noexcept { return popcount(row(r)); }

  void append_row(std::span<const Word> words);

  /// Gauss-Jordan elimination in place, visiting columns in `column_order`
  /// (natural order when empty). Returns the pivot column of each of the
  /// leading rank() rows; the remaining rows end up zero.
  std::vector<std::size_t> reduce(std::span<const std::size_t> column_order = {});

  std::size_t rank() const;

  /// Basis of {v : M v = 0}, one vector per row. Each basis vector has a
  /// single 1 among the non-pivot columns, at its own free column.
  BitMatrix null_space() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace arrayldpc
