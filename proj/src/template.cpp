#include "arrayldpc/template.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <sstream>

#include "arrayldpc/cyclegraph.hpp"
#include "arrayldpc/error.hpp"

namespace arrayldpc {

TemplateSupportMatrix::TemplateSupportMatrix(Int m, std::size_t w) : m_(m), columns_(w) {
  if (m < 1) throw Error(Errc::invalid_parameter, "template needs m >= 1");
}

TemplateSupportMatrix::TemplateSupportMatrix(Int m, std::vector<TemplateColumn> columns, std::optional<Int> q0)
    : m_(m), columns_(columns.begin(), columns.end()), q0_(q0) {
  if (m < 1) throw Error(Errc::invalid_parameter, "template needs m >= 1");
}

bool TemplateSupportMatrix::complete() const noexcept {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.has_value(); });
}

std::vector<std::size_t> TemplateSupportMatrix::erased() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (!columns_[c]) out.push_back(c);
  }
  return out;
}

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? ", " : "") << xs[k];
  return out.str();
}

}  // namespace

std::vector<TemplateColumn> TemplateSupportMatrix::filled_columns() const {
  if (!complete()) throw Error(Errc::incomplete_template, "erased columns: " + join(erased()));
  std::vector<TemplateColumn> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) out.push_back(*c);
  return out;
}

ModRational TemplateSupportMatrix::entry(Int row, std::size_t c) const {
  const auto& col = columns_.at(c);
  if (!col) throw Error(Errc::incomplete_template, "column " + std::to_string(c) + " is erased");
  return col->x + col->y * row;
}

bool ColumnPermutation::total() const noexcept {
  return std::all_of(map.begin(), map.end(), [](const auto& v) { return v.has_value(); });
}

ColumnSolution solve_column_pair(Int a_r, Int a_next, Int gamma, Int delta, Int q) {
  if (gamma == delta) throw Error(Errc::singular_system, "rows gamma and delta coincide");
  const Int y = mul_mod(mod_inverse(mod(delta - gamma, q), q), mod(a_next - a_r, q), q);
  const Int x = mod(a_r - mul_mod(mod(gamma, q), y, q), q);
  return {x, y};
}

ModRational simplest_crt_solution(Int v1, Int q1, Int v2, Int q2, Int I) {
  if (I < 1) throw Error(Errc::invalid_parameter, "multiplier bound I must be positive");
  const Int n = q1 * q2;
  Int best_score = 0;
  std::optional<ModRational> best;
  for (Int k = 1; k <= I; ++k) {
    const Int u = crt_lift(mul_mod(k, v1, q1), q1, mul_mod(k, v2, q2), q2);
    const Int score = std::max(k, std::min(u, n - u));
    // k ascends, so a strict comparison keeps the smaller multiplier on ties.
    if (!best || score < best_score) {
      best_score = score;
      best = ModRational(u <= n - u ? u : u - n, k);
    }
  }
  return *best;
}

namespace {

struct Failure {
  Errc code;
  std::string what;
};

struct State {
  std::vector<std::optional<TemplateColumn>> columns;
  std::vector<std::optional<std::size_t>> pi;

  std::size_t filled() const {
    return static_cast<std::size_t>(std::count_if(columns.begin(), columns.end(), [](const auto& c) { return c.has_value(); }));
  }
};

/// Equal-length cycles through one designated edge of one row pair.
struct Unit {
  std::size_t length;
  Int i;
  Int j;
  int kind;
  std::vector<Cycle> first;
  std::vector<Cycle> second;
};

class Inference {
 public:
  Inference(const SupportMatrix& sm1, const SupportMatrix& sm2, const InferenceConfig& cfg)
      : sm1_(sm1), sm2_(sm2), cfg_(cfg), I_(cfg.multiplier_bound(sm1.m())) {
    build_units();
  }

  InferenceResult run() {
    State start{std::vector<std::optional<TemplateColumn>>(sm1_.weight()),
                std::vector<std::optional<std::size_t>>(sm2_.weight())};
    best_ = start;
    std::optional<State> done = cfg_.backtrack ? search(0, start) : greedy(start);
    if (!done) {
      std::string why = "erased columns after exhausting cycle pairs: " + join(erased_of(best_));
      if (budget_hit_) why += " (search-node budget exhausted)";
      throw Error(Errc::incomplete_template, why);
    }
    TemplateSupportMatrix t(sm1_.m(), sm1_.weight());
    for (std::size_t c = 0; c < done->columns.size(); ++c) t.set_column(c, *done->columns[c]);
    return {std::move(t), ColumnPermutation{std::move(done->pi)}, nodes_};
  }

 private:
  static std::vector<std::size_t> erased_of(const State& s) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < s.columns.size(); ++c) {
      if (!s.columns[c]) out.push_back(c);
    }
    return out;
  }

  void build_units() {
    const Int m = sm1_.m();
    for (Int i = 0; i < m; ++i) {
      for (Int j = i + 1; j < m; ++j) {
        const SupportGraph g1(sm1_, i, j);
        const SupportGraph g2(sm2_, i, j);
        const auto e1 = designated_edges(sm1_.q(), i, j);
        const auto e2 = designated_edges(sm2_.q(), i, j);
        for (int kind = 0; kind < 2; ++kind) {
          const auto c1 = cycles_through_edge(g1, e1[kind].left, e1[kind].right);
          const auto c2 = cycles_through_edge(g2, e2[kind].left, e2[kind].right);
          std::map<std::size_t, Unit> by_length;
          for (const Cycle& c : c1) {
            auto [it, fresh] = by_length.try_emplace(c.length(), Unit{c.length(), i, j, kind, {}, {}});
            it->second.first.push_back(c);
          }
          for (const Cycle& c : c2) {
            const auto it = by_length.find(c.length());
            if (it != by_length.end()) it->second.second.push_back(c);
          }
          for (auto& [len, unit] : by_length) {
            if (!unit.second.empty()) units_.push_back(std::move(unit));
          }
        }
      }
    }
    std::stable_sort(units_.begin(), units_.end(), [](const Unit& a, const Unit& b) {
      return std::tie(a.length, a.i, a.j, a.kind) < std::tie(b.length, b.i, b.j, b.kind);
    });
  }

  /// Walks both cycles step by step, writing template columns and pi.
  std::optional<Failure> apply(const Cycle& c1, const Cycle& c2, State& s) const {
    const SupportGraph& g1 = graph(0, c1.row_i, c1.row_j);
    const SupportGraph& g2 = graph(1, c2.row_i, c2.row_j);
    for (std::size_t r = 0; r + 1 < c1.labels.size(); ++r) {
      const bool even = r % 2 == 0;
      const Int gamma = even ? c1.row_i : c1.row_j;
      const Int delta = even ? c1.row_j : c1.row_i;
      const Int l1 = c1.labels[r], n1 = c1.labels[r + 1];
      const Int l2 = c2.labels[r], n2 = c2.labels[r + 1];
      const auto* edge1 = even ? g1.find_edge(l1, n1) : g1.find_edge(n1, l1);
      const auto* edge2 = even ? g2.find_edge(l2, n2) : g2.find_edge(n2, l2);
      if (edge1->columns.size() != 1 || edge2->columns.size() != 1) {
        return Failure{Errc::ambiguous_match, "cycle step " + std::to_string(r) + " in rows (" +
                                                  std::to_string(c1.row_i) + "," + std::to_string(c1.row_j) +
                                                  ") is realized by duplicate columns"};
      }
      const std::size_t a = edge1->columns.front();
      const std::size_t b = edge2->columns.front();
      const ColumnSolution s1 = solve_column_pair(l1, n1, gamma, delta, sm1_.q());
      const ColumnSolution s2 = solve_column_pair(l2, n2, gamma, delta, sm2_.q());
      const TemplateColumn value{simplest_crt_solution(s1.x, sm1_.q(), s2.x, sm2_.q(), I_),
                                 simplest_crt_solution(s1.y, sm1_.q(), s2.y, sm2_.q(), I_)};
      if (!s.columns[a]) {
        if (s.pi[b]) {
          return Failure{Errc::inference_inconsistent, "column " + std::to_string(b) +
                                                           " of the second matrix is already mapped to " +
                                                           std::to_string(*s.pi[b])};
        }
        s.columns[a] = value;
        s.pi[b] = a;
      } else if (*s.columns[a] != value || s.pi[b] != a) {
        return Failure{Errc::inference_inconsistent,
                       "column " + std::to_string(a) + " already holds (" + s.columns[a]->x.to_string() + "," +
                           s.columns[a]->y.to_string() + "), new solve gives (" + value.x.to_string() + "," +
                           value.y.to_string() + ")"};
      }
    }
    return std::nullopt;
  }

  const SupportGraph& graph(int side, Int i, Int j) const {
    auto& cache = graphs_[side];
    const auto key = std::pair{i, j};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, SupportGraph(side == 0 ? sm1_ : sm2_, i, j)).first;
    return it->second;
  }

  std::optional<State> greedy(State s) const {
    for (const Unit& u : units_) {
      const std::size_t n = std::min(u.first.size(), u.second.size());
      for (std::size_t k = 0; k < n; ++k) {
        if (auto f = apply(u.first[k], u.second[k], s)) throw Error(f->code, f->what);
        if (s.filled() == s.columns.size()) return s;
      }
    }
    best_ = s;
    return std::nullopt;
  }

  std::optional<State> search(std::size_t k, const State& s) {
    if (++nodes_ > cfg_.max_nodes) {
      budget_hit_ = true;
      return std::nullopt;
    }
    const std::size_t filled = s.filled();
    if (filled == s.columns.size()) return s;
    if (filled > best_.filled()) best_ = s;
    if (k == units_.size()) return std::nullopt;

    const Unit& u = units_[k];
    const bool first_smaller = u.first.size() <= u.second.size();
    const std::size_t small = first_smaller ? u.first.size() : u.second.size();
    const std::size_t large = first_smaller ? u.second.size() : u.first.size();
    std::vector<bool> used(large, false);
    if (auto r = inject(k, u, first_smaller, small, 0, used, s)) return r;
    if (budget_hit_) return std::nullopt;
    return search(k + 1, s);
  }

  /// Maps the smaller cycle list injectively into the larger one, applying
  /// each pairing as soon as it is chosen.
  std::optional<State> inject(std::size_t k, const Unit& u, bool first_smaller, std::size_t small, std::size_t pos,
                              std::vector<bool>& used, const State& s) {
    if (pos == small) return search(k + 1, s);
    for (std::size_t l = 0; l < used.size(); ++l) {
      if (used[l]) continue;
      State next = s;
      const Cycle& c1 = first_smaller ? u.first[pos] : u.first[l];
      const Cycle& c2 = first_smaller ? u.second[l] : u.second[pos];
      if (apply(c1, c2, next)) continue;
      used[l] = true;
      auto r = inject(k, u, first_smaller, small, pos + 1, used, next);
      used[l] = false;
      if (r || budget_hit_) return r;
    }
    return std::nullopt;
  }

  const SupportMatrix& sm1_;
  const SupportMatrix& sm2_;
  const InferenceConfig& cfg_;
  Int I_;
  std::vector<Unit> units_;
  mutable std::map<std::pair<Int, Int>, SupportGraph> graphs_[2];
  mutable State best_;
  std::size_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

InferenceResult infer_template(const SupportMatrix& sm1, const SupportMatrix& sm2, const InferenceConfig& cfg) {
  if (sm1.q() >= sm2.q()) throw Error(Errc::precondition, "inference needs q1 < q2");
  if (sm1.m() != sm2.m() || sm1.weight() != sm2.weight()) {
    throw Error(Errc::invalid_parameter, "support matrices differ in m or weight");
  }
  if (sm1.m() < 2) throw Error(Errc::invalid_parameter, "inference needs m >= 2");
  if (!is_odd_prime(sm1.q()) || !is_odd_prime(sm2.q())) {
    throw Error(Errc::invalid_parameter, "inference needs odd prime moduli");
  }
  const bool match = cfg.relaxed ? relaxed_structure_match(sm1, sm2) : same_cycle_structure(sm1, sm2);
  if (!match) {
    throw Error(Errc::precondition, cfg.relaxed ? "minimum cycle lengths differ"
                                                : "graphical cycle structures differ; try relaxed matching");
  }
  return Inference(sm1, sm2, cfg).run();
}

SupportMatrix instantiate(const TemplateSupportMatrix& t, Int q) {
  if (!is_odd_prime(q)) throw Error(Errc::invalid_parameter, std::to_string(q) + " is not an odd prime");
  std::vector<ColumnXY> cols;
  cols.reserve(t.weight());
  for (const TemplateColumn& c : t.filled_columns()) cols.push_back({eval_rational(c.x, q), eval_rational(c.y, q)});
  return SupportMatrix(q, t.m(), std::move(cols));
}

}  // namespace arrayldpc
