#include "arrayldpc/arraycode.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "arrayldpc/error.hpp"

namespace arrayldpc {

struct ArrayCode::Cache {
  std::once_flag h_once;
  std::once_flag rank_once;
  std::once_flag g_once;
  BitMatrix h;
  std::size_t rank = 0;
  BitMatrix g;
};

std::vector<Int> column_entries(ColumnXY c, Int q, Int m) {
  std::vector<Int> out(static_cast<std::size_t>(m));
  for (Int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = mod(c.x + j * c.y, q);
  return out;
}

ArrayCode::ArrayCode(Int q, Int m) : q_(q), m_(m), cache_(std::make_shared<Cache>()) {
  if (!is_odd_prime(q)) {
    throw Error(Errc::invalid_parameter, "q = " + std::to_string(q) + " is not an odd prime");
  }
  if (m < 1 || m > q) {
    throw Error(Errc::invalid_parameter, "m = " + std::to_string(m) + " must satisfy 1 <= m <= q");
  }
}

ArrayCode build_code(Int q, Int m) { return ArrayCode(q, m); }

const BitMatrix& ArrayCode::parity_check(std::size_t column_cap) const {
  if (length() > column_cap) {
    throw Error(Errc::size_limit, "expanding " + std::to_string(length()) + " columns exceeds the cap of " +
                                      std::to_string(column_cap));
  }
  std::call_once(cache_->h_once, [this] {
    BitMatrix h(check_rows(), length());
    for (std::size_t idx = 0; idx < length(); ++idx) {
      const ColumnXY c = column_at(idx);
      for (Int j = 0; j < m_; ++j) h.set(check_row(c, j), idx);
    }
    cache_->h = std::move(h);
  });
  return cache_->h;
}

std::size_t ArrayCode::computed_rank(std::size_t column_cap) const {
  const BitMatrix& h = parity_check(column_cap);
  std::call_once(cache_->rank_once, [this, &h] { cache_->rank = h.rank(); });
  return cache_->rank;
}

const BitMatrix& ArrayCode::generator(std::size_t column_cap) const {
  const BitMatrix& h = parity_check(column_cap);
  std::call_once(cache_->g_once, [this, &h] { cache_->g = h.null_space(); });
  return cache_->g;
}

void ArrayCode::check_support(std::span<const std::size_t> support) const {
  for (const std::size_t idx : support) {
    if (idx >= length()) {
      throw Error(Errc::out_of_range,
                  "column index " + std::to_string(idx) + " outside [0, " + std::to_string(length()) + ")");
    }
  }
}

std::vector<unsigned> ArrayCode::row_counts(std::span<const std::size_t> support) const {
  check_support(support);
  std::vector<unsigned> counts(check_rows(), 0);
  for (const std::size_t idx : support) {
    const ColumnXY c = column_at(idx);
    for (Int j = 0; j < m_; ++j) ++counts[check_row(c, j)];
  }
  return counts;
}

bool ArrayCode::syndrome_zero(std::span<const std::size_t> support) const {
  const auto counts = row_counts(support);
  return std::all_of(counts.begin(), counts.end(), [](unsigned n) { return n % 2 == 0; });
}

bool ArrayCode::is_stopping_set(std::span<const std::size_t> support) const {
  if (support.empty()) throw Error(Errc::precondition, "the empty set is not considered a stopping set");
  const auto counts = row_counts(support);
  return std::none_of(counts.begin(), counts.end(), [](unsigned n) { return n == 1; });
}

std::string ArrayCode::export_alist(std::size_t column_cap) const {
  const BitMatrix& h = parity_check(column_cap);
  const std::size_t n = h.cols();
  const std::size_t rows = h.rows();

  std::vector<std::vector<std::size_t>> col_lists(n);
  std::vector<std::vector<std::size_t>> row_lists(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (h.get(r, c)) {
        col_lists[c].push_back(r + 1);
        row_lists[r].push_back(c + 1);
      }
    }
  }
  std::size_t max_col = 0;
  std::size_t max_row = 0;
  for (const auto& l : col_lists) max_col = std::max(max_col, l.size());
  for (const auto& l : row_lists) max_row = std::max(max_row, l.size());

  std::ostringstream out;
  auto write_list = [&out](const std::vector<std::size_t>& values, std::size_t width) {
    for (std::size_t k = 0; k < width; ++k) {
      if (k) out << ' ';
      out << (k < values.size() ? values[k] : 0);
    }
    out << '\n';
  };
  out << n << ' ' << rows << '\n';
  out << max_col << ' ' << max_row << '\n';
  for (std::size_t c = 0; c < n; ++c) out << (c ? " " : "") << col_lists[c].size();
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) out << (r ? " " : "") << row_lists[r].size();
  out << '\n';
  for (const auto& l : col_lists) write_list(l, max_col);
  for (const auto& l : row_lists) write_list(l, max_row);
  return out.str();
}

}  // namespace arrayldpc
