#include "arrayldpc/cyclegraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "arrayldpc/error.hpp"

namespace arrayldpc {

namespace {

std::size_t position(const std::vector<Int>& sorted, Int label) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), label);
  if (it == sorted.end() || *it != label) return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

const std::vector<Int>& empty_list() {
  static const std::vector<Int> empty;
  return empty;
}

class CycleSearch {
 public:
  CycleSearch(const SupportGraph& g, Int left, Int right, std::size_t cap)
      : g_(g), start_(left), first_(right), cap_(cap) {}

  std::vector<Cycle> run() {
    path_ = {start_, first_};
    left_seen_ = {start_};
    right_seen_ = {first_};
    extend_from_right(first_);
    std::sort(found_.begin(), found_.end(), [](const Cycle& a, const Cycle& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.labels < b.labels;
    });
    return std::move(found_);
  }

 private:
  void record() {
    if (found_.size() >= cap_) {
      throw Error(Errc::cycle_overflow, "more than " + std::to_string(cap_) + " cycles through one edge");
    }
    Cycle c{g_.row_i(), g_.row_j(), path_};
    c.labels.push_back(start_);
    found_.push_back(std::move(c));
  }

  void extend_from_right(Int r) {
    for (const Int l : g_.left_neighbors(r)) {
      if (l == start_) {
        // Closing directly back over the anchor edge is not a cycle.
        if (path_.size() > 2) record();
        continue;
      }
      if (std::find(left_seen_.begin(), left_seen_.end(), l) != left_seen_.end()) continue;
      path_.push_back(l);
      left_seen_.push_back(l);
      extend_from_left(l);
      left_seen_.pop_back();
      path_.pop_back();
    }
  }

  void extend_from_left(Int l) {
    for (const Int r : g_.right_neighbors(l)) {
      if (std::find(right_seen_.begin(), right_seen_.end(), r) != right_seen_.end()) continue;
      path_.push_back(r);
      right_seen_.push_back(r);
      extend_from_right(r);
      right_seen_.pop_back();
      path_.pop_back();
    }
  }

  const SupportGraph& g_;
  Int start_;
  Int first_;
  std::size_t cap_;
  std::vector<Int> path_;
  std::vector<Int> left_seen_;
  std::vector<Int> right_seen_;
  std::vector<Cycle> found_;
};

std::vector<std::size_t> cycle_lengths(const SupportGraph& g, DesignatedEdge e) {
  std::vector<std::size_t> out;
  for (const Cycle& c : cycles_through_edge(g, e.left, e.right)) out.push_back(c.length());
  return out;
}

void check_comparable(const SupportMatrix& sm1, const SupportMatrix& sm2) {
  if (sm1.m() != sm2.m() || sm1.weight() != sm2.weight()) {
    throw Error(Errc::invalid_parameter, "support matrices differ in m or weight");
  }
  if (!sm1.is_normalized() || !sm2.is_normalized()) {
    throw Error(Errc::precondition, "support matrices must contain the columns (0,0) and (q-1,1)");
  }
}

template <typename Compare>
bool compare_structures(const SupportMatrix& sm1, const SupportMatrix& sm2, Compare same) {
  check_comparable(sm1, sm2);
  for (Int i = 0; i < sm1.m(); ++i) {
    for (Int j = i + 1; j < sm1.m(); ++j) {
      const SupportGraph g1(sm1, i, j);
      const SupportGraph g2(sm2, i, j);
      const auto e1 = designated_edges(sm1.q(), i, j);
      const auto e2 = designated_edges(sm2.q(), i, j);
      for (std::size_t k = 0; k < 2; ++k) {
        if (!same(cycle_lengths(g1, e1[k]), cycle_lengths(g2, e2[k]))) return false;
      }
    }
  }
  return true;
}

}  // namespace

SupportGraph::SupportGraph(const SupportMatrix& sm, Int i, Int j) : i_(i), j_(j) {
  if (i < 0 || j <= i || j >= sm.m()) {
    throw Error(Errc::invalid_parameter, "row pair must satisfy 0 <= i < j < m");
  }
  std::map<std::pair<Int, Int>, std::vector<std::size_t>> by_edge;
  for (std::size_t c = 0; c < sm.weight(); ++c) by_edge[{sm.entry(i, c), sm.entry(j, c)}].push_back(c);
  for (auto& [key, cols] : by_edge) {
    edges_.push_back({key.first, key.second, std::move(cols)});
    left_.push_back(key.first);
    right_.push_back(key.second);
  }
  std::sort(left_.begin(), left_.end());
  left_.erase(std::unique(left_.begin(), left_.end()), left_.end());
  std::sort(right_.begin(), right_.end());
  right_.erase(std::unique(right_.begin(), right_.end()), right_.end());

  left_adj_.resize(left_.size());
  right_adj_.resize(right_.size());
  for (const Edge& e : edges_) {
    left_adj_[position(left_, e.left)].push_back(e.right);
    right_adj_[position(right_, e.right)].push_back(e.left);
  }
  for (auto& a : right_adj_) std::sort(a.begin(), a.end());
}

SupportGraph build_graph(const SupportMatrix& sm, Int i, Int j) { return SupportGraph(sm, i, j); }

const SupportGraph::Edge* SupportGraph::find_edge(Int left, Int right) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{left, right},
                                   [](const Edge& e, const std::pair<Int, Int>& key) {
                                     return std::pair{e.left, e.right} < key;
                                   });
  if (it == edges_.end() || it->left != left || it->right != right) return nullptr;
  return &*it;
}

const std::vector<Int>& SupportGraph::right_neighbors(Int label) const {
  const std::size_t p = position(left_, label);
  return p < left_.size() ? left_adj_[p] : empty_list();
}

const std::vector<Int>& SupportGraph::left_neighbors(Int label) const {
  const std::size_t p = position(right_, label);
  return p < right_.size() ? right_adj_[p] : empty_list();
}

std::string SupportGraph::to_dot() const {
  std::ostringstream out;
  out << "graph G_" << i_ << "_" << j_ << " {\n";
  for (const Int l : left_) out << "  \"" << i_ << ":" << l << "\";\n";
  for (const Int r : right_) out << "  \"" << j_ << ":" << r << "\";\n";
  for (const Edge& e : edges_) {
    out << "  \"" << i_ << ":" << e.left << "\" -- \"" << j_ << ":" << e.right << "\"";
    if (e.columns.size() > 1) out << " [label=\"x" << e.columns.size() << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<Cycle> cycles_through_edge(const SupportGraph& g, Int left, Int right, std::size_t cap) {
  if (g.find_edge(left, right) == nullptr) {
    throw Error(Errc::missing_edge, "edge (" + std::to_string(left) + "," + std::to_string(right) +
                                        ") is not in G^(" + std::to_string(g.row_i()) + "," +
                                        std::to_string(g.row_j()) + ")");
  }
  return CycleSearch(g, left, right, cap).run();
}

std::array<DesignatedEdge, 2> designated_edges(Int q, Int i, Int j) {
  return {DesignatedEdge{mod(q - 1 + i, q), mod(q - 1 + j, q)}, DesignatedEdge{0, 0}};
}

bool same_cycle_structure(const SupportMatrix& sm1, const SupportMatrix& sm2) {
  return compare_structures(sm1, sm2, [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return a == b;  // both already sorted by length
  });
}

bool relaxed_structure_match(const SupportMatrix& sm1, const SupportMatrix& sm2) {
  return compare_structures(sm1, sm2, [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty();
    return a.front() == b.front();
  });
}

}  // namespace arrayldpc
