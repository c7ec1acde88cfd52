#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arrayldpc/modarith.hpp"
#include "arrayldpc/support.hpp"

namespace arrayldpc {

/// Symbolic column (x, y); its instance at prime q has entries
/// eval(x) + j*eval(y) mod q.
struct TemplateColumn {
  ModRational x;
  ModRational y;
  bool operator==(const TemplateColumn&) const = default;
  auto operator<=>(const TemplateColumn&) const = default;
};

/// An m x w matrix of q-dependent entries. Columns may be erased while
/// inference is still filling them in.
class TemplateSupportMatrix {
 public:
  TemplateSupportMatrix(Int m, std::size_t w);
  TemplateSupportMatrix(Int m, std::vector<TemplateColumn> columns, std::optional<Int> q0 = std::nullopt);

  Int m() const noexcept { return m_; }
  std::size_t weight() const noexcept { return columns_.size(); }
  std::optional<Int> q0() const noexcept { return q0_; }
  void set_q0(std::optional<Int> q0) noexcept { q0_ = q0; }

  const std::optional<TemplateColumn>& column(std::size_t c) const { return columns_.at(c); }
  void set_column(std::size_t c, TemplateColumn value) { columns_.at(c) = value; }

  bool complete() const noexcept;
  std::vector<std::size_t> erased() const;
  /// All columns; throws incomplete_template if any is erased.
  std::vector<TemplateColumn> filled_columns() const;

  /// Symbolic entry x + row*y of a filled column.
  ModRational entry(Int row, std::size_t c) const;

  bool operator==(const TemplateSupportMatrix&) const = default;

 private:
  Int m_;
  std::vector<std::optional<TemplateColumn>> columns_;
  std::optional<Int> q0_;
};

struct InferenceConfig {
  /// Multipliers tried in the CRT lift are 1..I; 0 selects m - 1.
  Int I = 0;
  /// Match cycle structures on minimum lengths only.
  bool relaxed = false;
  /// Try alternative cycle pairings when one fails; without it the first
  /// conflict is reported as an error.
  bool backtrack = true;
  /// Search-node budget for the backtracking scheduler.
  std::size_t max_nodes = 1'000'000;

  Int multiplier_bound(Int m) const noexcept { return I > 0 ? I : m - 1; }
};

/// pi: column index of the second support matrix -> template column.
struct ColumnPermutation {
  std::vector<std::optional<std::size_t>> map;

  bool total() const noexcept;
  bool operator==(const ColumnPermutation&) const = default;
};

struct ColumnSolution {
  Int x;
  Int y;
  bool operator==(const ColumnSolution&) const = default;
};

/// Unique (x, y) with x + gamma*y = a_r and x + delta*y = a_next (mod q).
ColumnSolution solve_column_pair(Int a_r, Int a_next, Int gamma, Int delta, Int q);

/// Smallest rational u/k (k in 1..I) that reduces to v1 mod q1 and v2 mod q2.
ModRational simplest_crt_solution(Int v1, Int q1, Int v2, Int q2, Int I);

struct InferenceResult {
  TemplateSupportMatrix matrix;
  ColumnPermutation permutation;
  std::size_t nodes = 0;
};

/// Template inference from two normalized support matrices of equal shape at
/// primes q1 < q2, driven by matched cycles through the designated edges.
InferenceResult infer_template(const SupportMatrix& sm1, const SupportMatrix& sm2,
                               const InferenceConfig& cfg = {});

SupportMatrix instantiate(const TemplateSupportMatrix& t, Int q);

}  // namespace arrayldpc
