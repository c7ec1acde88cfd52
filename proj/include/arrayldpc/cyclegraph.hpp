#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrayldpc/support.hpp"

namespace arrayldpc {

/// Bipartite graph between the distinct residues of rows i and j of a
/// support matrix; column c contributes the edge (entry(i,c), entry(j,c)).
class SupportGraph {
 public:
  struct Edge {
    Int left;
    Int right;
    /// Support-matrix columns realizing this edge; more than one only for
    /// duplicate columns.
    std::vector<std::size_t> columns;
  };

  SupportGraph(const SupportMatrix& sm, Int i, Int j);

  Int row_i() const noexcept { return i_; }
  Int row_j() const noexcept { return j_; }
  const std::vector<Int>& left() const noexcept { return left_; }
  const std::vector<Int>& right() const noexcept { return right_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const Edge* find_edge(Int left, Int right) const;
  /// Sorted labels of the right vertices adjacent to left vertex `label`.
  const std::vector<Int>& right_neighbors(Int label) const;
  const std::vector<Int>& left_neighbors(Int label) const;

  /// Graphviz rendering with vertex names "i:alpha" / "j:beta".
  std::string to_dot() const;

 private:
  Int i_;
  Int j_;
  std::vector<Int> left_;
  std::vector<Int> right_;
  std::vector<Edge> edges_;  // sorted by (left, right)
  std::vector<std::vector<Int>> left_adj_;
  std::vector<std::vector<Int>> right_adj_;
};

SupportGraph build_graph(const SupportMatrix& sm, Int i, Int j);

/// A simple cycle (alpha_0, alpha_1, ..., alpha_2l = alpha_0); even
/// positions are row-i labels, odd positions row-j labels.
struct Cycle {
  Int row_i = 0;
  Int row_j = 0;
  std::vector<Int> labels;

  std::size_t length() const noexcept { return labels.empty() ? 0 : labels.size() - 1; }
  bool operator==(const Cycle&) const = default;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Every simple cycle through edge (left, right), oriented left -> right
/// first, ordered by length and then lexicographically by label sequence.
std::vector<Cycle> cycles_through_edge(const SupportGraph& g, Int left, Int right,
                                       std::size_t cap = kDefaultCycleCap);

/// The two anchor edges of G^(i,j): (q-1+i, q-1+j) from column (q-1,1) and
/// (0,0) from column (0,0).
struct DesignatedEdge {
  Int left;
  Int right;
};
std::array<DesignatedEdge, 2> designated_edges(Int q, Int i, Int j);

bool same_cycle_structure(const SupportMatrix& sm1, const SupportMatrix& sm2);
bool relaxed_structure_match(const SupportMatrix& sm1, const SupportMatrix& sm2);

}  // namespace arrayldpc
