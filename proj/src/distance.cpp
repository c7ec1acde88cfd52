#include "arrayldpc/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "arrayldpc/error.hpp"

namespace arrayldpc {

std::string_view to_string(DistanceKind kind) noexcept {
  switch (kind) {
    case DistanceKind::exact: return "exact";
    case DistanceKind::upper_bound: return "upper-bound";
    case DistanceKind::lower_bound: return "lower-bound";
  }
  return "exact";
}

namespace {

unsigned worker_count(unsigned requested) { return requested == 0 ? 1 : requested; }

/// Runs body(worker) on `n` threads (inline when n == 1).
template <typename Body>
void run_workers(unsigned n, Body body) {
  if (n <= 1) {
    body(0U);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(n);
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&, t] {
      try {
        body(t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<std::size_t> ones_of(std::span<const Word> v, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < n; ++c) {
    if ((v[c / kWordBits] >> (c % kWordBits)) & 1U) out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------- Gray code

struct GrayBest {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::uint64_t mask = 0;

  bool better(std::size_t w, std::uint64_t m) const { return w < weight || (w == weight && m < mask); }
};

DistanceResult gray_enumeration(const ArrayCode& code, unsigned threads) {
  const BitMatrix& g = code.generator();
  const std::size_t k = g.rows();
  const std::size_t words = g.words_per_row();
  if (k == 0) throw Error(Errc::precondition, "code has no nonzero codewords");

  const std::size_t prefix_bits = std::min<std::size_t>(k, 6);
  const std::size_t low = k - prefix_bits;
  const std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
  const std::uint64_t steps = std::uint64_t{1} << low;

  std::atomic<std::uint64_t> next{0};
  std::mutex merge;
  GrayBest best;
  run_workers(worker_count(threads), [&](unsigned) {
    GrayBest local;
    std::vector<Word> v(words);
    for (std::uint64_t p = next++; p < prefixes; p = next++) {
      std::fill(v.begin(), v.end(), Word{0});
      for (std::size_t b = 0; b < prefix_bits; ++b) {
        if ((p >> b) & 1U) {
          const auto row = g.row(low + b);
          for (std::size_t w = 0; w < words; ++w) v[w] ^= row[w];
        }
      }
      const std::uint64_t high = p << low;
      for (std::uint64_t i = 0; i < steps; ++i) {
        if (i != 0) {
          const auto row = g.row(static_cast<std::size_t>(std::countr_zero(i)));
          for (std::size_t w = 0; w < words; ++w) v[w] ^= row[w];
        } else if (p == 0) {
          continue;  // the zero codeword
        }
        std::size_t wt = 0;
        for (std::size_t w = 0; w < words; ++w) wt += static_cast<std::size_t>(std::popcount(v[w]));
        if (wt <= local.weight) {
          const std::uint64_t mask = high | (i ^ (i >> 1));
          if (local.better(wt, mask)) local = {wt, mask};
        }
      }
    }
    std::lock_guard lock(merge);
    if (best.better(local.weight, local.mask)) best = local;
  });

  std::vector<Word> cw(words, 0);
  for (std::size_t r = 0; r < k; ++r) {
    if ((best.mask >> r) & 1U) {
      const auto row = g.row(r);
      for (std::size_t w = 0; w < words; ++w) cw[w] ^= row[w];
    }
  }
  DistanceResult res;
  res.kind = DistanceKind::exact;
  res.value = best.weight;
  res.witness = ones_of(cw, code.length());
  res.effort = prefixes * steps - 1;
  res.method = "gray-code enumeration";
  return res;
}

// --------------------------------------------------------- branch and bound

/// Depth-first search for a column set with no deficient check row, where a
/// row is deficient when covered exactly once (stopping sets) or an odd
/// number of times (codewords). Column 0 is always included: translations
/// (x, y) -> (x + b, y + d) are code automorphisms acting transitively.
class SubsetSearch {
 public:
  SubsetSearch(const ArrayCode& code, bool parity, std::atomic<std::uint64_t>& nodes, std::uint64_t node_limit)
      : q_(static_cast<std::size_t>(code.q())),
        m_(static_cast<std::size_t>(code.m())),
        n_(code.length()),
        parity_(parity),
        nodes_(nodes),
        node_limit_(node_limit),
        col_rows_(n_ * m_),
        row_cols_(q_ * m_),
        count_(q_ * m_, 0),
        deficient_per_block_(m_, 0),
        in_set_(n_, false),
        forbidden_(n_, 0) {
    for (std::size_t c = 0; c < n_; ++c) {
      for (std::size_t j = 0; j < m_; ++j) {
        const std::size_t r = code.check_row(code.column_at(c), static_cast<Int>(j));
        col_rows_[c * m_ + j] = r;
        row_cols_[r].push_back(c);
      }
    }
  }

  bool aborted() const { return aborted_; }
  const std::vector<std::size_t>& set() const { return set_; }

  /// Columns to branch on at the root {0}, in branching order.
  std::vector<std::size_t> root_candidates() {
    reset();
    add(0);
    auto c = candidates();
    return c;
  }

  /// Searches for a set of exactly `target` columns containing 0 and
  /// root[branch], excluding root[0..branch).
  bool search_branch(const std::vector<std::size_t>& root, std::size_t branch, std::size_t target) {
    reset();
    add(0);
    for (std::size_t b = 0; b < branch; ++b) ++forbidden_[root[b]];
    add(root[branch]);
    return dfs(target);
  }

  bool root_is_solution() {
    reset();
    add(0);
    return total_deficient_ == 0;
  }

 private:
  bool deficient(std::size_t count) const { return parity_ ? (count % 2 == 1) : count == 1; }

  void reset() {
    while (!set_.empty()) remove(set_.back());
    std::fill(forbidden_.begin(), forbidden_.end(), 0);
  }

  void bump(std::size_t r, int delta) {
    const std::size_t block = r / q_;
    const bool before = deficient(count_[r]);
    count_[r] = static_cast<std::uint32_t>(static_cast<int>(count_[r]) + delta);
    const bool after = deficient(count_[r]);
    if (before != after) {
      const int d = after ? 1 : -1;
      deficient_per_block_[block] = static_cast<std::size_t>(static_cast<long>(deficient_per_block_[block]) + d);
      total_deficient_ = static_cast<std::size_t>(static_cast<long>(total_deficient_) + d);
    }
  }

  void add(std::size_t c) {
    in_set_[c] = true;
    set_.push_back(c);
    for (std::size_t j = 0; j < m_; ++j) bump(col_rows_[c * m_ + j], +1);
  }

  void remove(std::size_t c) {
    in_set_[c] = false;
    set_.pop_back();
    for (std::size_t j = 0; j < m_; ++j) bump(col_rows_[c * m_ + j], -1);
  }

  bool available(std::size_t c) const { return !in_set_[c] && forbidden_[c] == 0; }

  /// Open columns covering the most constrained deficient row, best first.
  /// Empty when some deficient row can no longer be fixed.
  std::vector<std::size_t> candidates() const {
    std::size_t best_row = 0;
    std::size_t best_n = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < count_.size(); ++r) {
      if (!deficient(count_[r])) continue;
      std::size_t n = 0;
      for (const std::size_t c : row_cols_[r]) n += available(c);
      if (n < best_n) {
        best_n = n;
        best_row = r;
        if (n == 0) return {};
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> scored;  // (-resolved, column)
    for (const std::size_t c : row_cols_[best_row]) {
      if (!available(c)) continue;
      std::size_t resolved = 0;
      for (std::size_t j = 0; j < m_; ++j) resolved += deficient(count_[col_rows_[c * m_ + j]]);
      scored.emplace_back(m_ - resolved, c);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<std::size_t> out;
    out.reserve(scored.size());
    for (const auto& s : scored) out.push_back(s.second);
    return out;
  }

  bool dfs(std::size_t target) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= node_limit_) {
      aborted_ = true;
      return false;
    }
    if (total_deficient_ == 0) return true;
    const std::size_t need = *std::max_element(deficient_per_block_.begin(), deficient_per_block_.end());
    if (set_.size() + need > target) return false;
    const auto cands = candidates();
    std::size_t tried = 0;
    bool found = false;
    for (const std::size_t c : cands) {
      add(c);
      if (dfs(target)) {
        found = true;
        break;
      }
      remove(c);
      if (aborted_) break;
      ++forbidden_[c];
      ++tried;
    }
    for (std::size_t t = 0; t < tried; ++t) --forbidden_[cands[t]];
    return found;
  }

  std::size_t q_;
  std::size_t m_;
  std::size_t n_;
  bool parity_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t node_limit_;
  std::vector<std::size_t> col_rows_;
  std::vector<std::vector<std::size_t>> row_cols_;
  std::vector<std::uint32_t> count_;
  std::vector<std::size_t> deficient_per_block_;
  std::size_t total_deficient_ = 0;
  std::vector<bool> in_set_;
  std::vector<unsigned> forbidden_;
  std::vector<std::size_t> set_;
  bool aborted_ = false;
};

DistanceResult subset_branch_and_bound(const ArrayCode& code, std::size_t cap, const StoppingOptions& opts,
                                       bool parity) {
  if (cap < 1) throw Error(Errc::invalid_parameter, "size cap must be at least 1");
  std::atomic<std::uint64_t> nodes{0};
  const std::uint64_t limit = opts.node_limit.value_or(std::numeric_limits<std::uint64_t>::max());
  const unsigned n_workers = worker_count(opts.threads);

  DistanceResult res;
  res.method = parity ? "codeword branch-and-bound" : "stopping-set branch-and-bound";
  auto finish = [&](DistanceKind kind, std::size_t value, std::vector<std::size_t> witness) {
    res.kind = kind;
    res.value = value;
    std::sort(witness.begin(), witness.end());
    res.witness = std::move(witness);
    res.effort = nodes.load();
    return res;
  };

  SubsetSearch probe(code, parity, nodes, limit);
  if (probe.root_is_solution()) return finish(DistanceKind::exact, 1, {0});
  const std::vector<std::size_t> root = probe.root_candidates();

  for (std::size_t target = 2; target <= cap; ++target) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> found_branch{root.size()};
    std::atomic<bool> aborted{false};
    std::mutex merge;
    std::vector<std::size_t> witness;
    run_workers(n_workers, [&](unsigned) {
      SubsetSearch s(code, parity, nodes, limit);
      for (std::size_t b = next++; b < root.size(); b = next++) {
        if (b > found_branch.load() || aborted.load()) break;
        if (s.search_branch(root, b, target)) {
          std::lock_guard lock(merge);
          if (b < found_branch.load()) {
            found_branch = b;
            witness = s.set();
          }
          break;
        }
        if (s.aborted()) {
          aborted = true;
          break;
        }
      }
    });
    if (found_branch.load() < root.size()) return finish(DistanceKind::exact, target, std::move(witness));
    if (aborted.load()) return finish(DistanceKind::lower_bound, target, {});
  }
  return finish(DistanceKind::lower_bound, cap + 1, {});
}

// ------------------------------------------------------ information sets

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct SearchBest {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::uint64_t iteration = std::numeric_limits<std::uint64_t>::max();
  std::vector<Word> word;

  bool better(std::size_t w, std::uint64_t it) const { return w < weight || (w == weight && it < iteration); }
};

}  // namespace

DistanceResult exact_min_distance(const ArrayCode& code, const MinDistanceOptions& opts) {
  if (code.dimension() > opts.max_dimension) {
    if (!opts.weight_cap) {
      throw Error(Errc::size_limit, "dimension " + std::to_string(code.dimension()) +
                                        " exceeds the enumeration limit " + std::to_string(opts.max_dimension) +
                                        "; pass a weight cap or use the heuristic search");
    }
    return codeword_branch_and_bound(code, *opts.weight_cap, StoppingOptions{opts.threads, std::nullopt});
  }
  DistanceResult res = gray_enumeration(code, opts.threads);
  if (opts.weight_cap && res.value > *opts.weight_cap) {
    res.kind = DistanceKind::lower_bound;
    res.value = *opts.weight_cap + 1;
    res.witness.clear();
  }
  return res;
}

DistanceResult exact_stopping_distance(const ArrayCode& code, std::size_t size_cap, const StoppingOptions& opts) {
  return subset_branch_and_bound(code, size_cap, opts, false);
}

DistanceResult codeword_branch_and_bound(const ArrayCode& code, std::size_t weight_cap, const StoppingOptions& opts) {
  return subset_branch_and_bound(code, weight_cap, opts, true);
}

DistanceResult heuristic_low_weight_search(const ArrayCode& code, const SearchOptions& opts) {
  if (opts.budget < 1) throw Error(Errc::invalid_parameter, "search budget must be at least 1");
  const BitMatrix& g = code.generator();
  const std::size_t k = g.rows();
  const std::size_t n = code.length();
  const std::size_t words = g.words_per_row();
  if (k == 0) throw Error(Errc::precondition, "code has no nonzero codewords");

  SearchBest best;
  // Lightest generator row: the trivial bound, credited to iteration 0.
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t w = g.row_weight(r);
    if (w < best.weight) {
      best.weight = w;
      best.iteration = 0;
      const auto row = g.row(r);
      best.word.assign(row.begin(), row.end());
    }
  }

  // In systematic form a combination of t rows has weight t plus the weight
  // of its redundancy part, so scans run on rows projected to those columns.
  const std::size_t red_words = words_for(n - k);
  std::atomic<std::uint64_t> next{0};
  std::mutex merge;
  run_workers(worker_count(opts.threads), [&](unsigned) {
    SearchBest local;
    std::vector<std::size_t> order(n);
    std::vector<Word> red(k * red_words);
    std::vector<Word> pairs;
    std::vector<std::uint8_t> is_pivot(n);
    // Combination (a, b, c) of the systematic rows; unused slots are k.
    std::size_t best_combo[3] = {k, k, k};
    std::size_t best_here = std::numeric_limits<std::size_t>::max();
    auto weigh = [&](const Word* v) {
      std::size_t wt = 0;
      for (std::size_t w = 0; w < red_words; ++w) wt += static_cast<std::size_t>(std::popcount(v[w]));
      return wt;
    };
    for (std::uint64_t it = next++; it < opts.budget; it = next++) {
      std::mt19937_64 rng(splitmix64(opts.seed ^ it));
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng);
      BitMatrix sys = g;
      const auto pivots = sys.reduce(order);
      std::fill(is_pivot.begin(), is_pivot.end(), 0);
      for (const std::size_t p : pivots) is_pivot[p] = 1;
      std::fill(red.begin(), red.end(), Word{0});
      std::size_t pos = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        for (std::size_t r = 0; r < k; ++r) {
          if (sys.get(r, c)) red[r * red_words + pos / kWordBits] |= Word{1} << (pos % kWordBits);
        }
        ++pos;
      }

      best_here = std::numeric_limits<std::size_t>::max();
      auto offer = [&](std::size_t wt, std::size_t a, std::size_t b, std::size_t c) {
        if (wt < best_here) {
          best_here = wt;
          best_combo[0] = a;
          best_combo[1] = b;
          best_combo[2] = c;
        }
      };
      for (std::size_t a = 0; a < k; ++a) offer(1 + weigh(&red[a * red_words]), a, k, k);
      if (opts.max_info_weight >= 2) {
        pairs.assign(k * k * red_words, 0);
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = a + 1; b < k; ++b) {
            Word* p = pairs.data() + (a * k + b) * red_words;
            for (std::size_t w = 0; w < red_words; ++w) p[w] = red[a * red_words + w] ^ red[b * red_words + w];
            offer(2 + weigh(p), a, b, k);
          }
        }
      }
      if (opts.max_info_weight >= 3) {
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = a + 1; b < k; ++b) {
            const Word* p = pairs.data() + (a * k + b) * red_words;
            if (red_words == 1) {
              const Word pw = *p;
              for (std::size_t c = b + 1; c < k; ++c) {
                offer(3 + static_cast<std::size_t>(std::popcount(pw ^ red[c])), a, b, c);
              }
              continue;
            }
            for (std::size_t c = b + 1; c < k; ++c) {
              const Word* rc = &red[c * red_words];
              std::size_t wt = 3;
              for (std::size_t w = 0; w < red_words; ++w) wt += static_cast<std::size_t>(std::popcount(p[w] ^ rc[w]));
              offer(wt, a, b, c);
            }
          }
        }
      }
      if (local.better(best_here, it)) {
        local.weight = best_here;
        local.iteration = it;
        local.word.assign(words, 0);
        for (const std::size_t r : best_combo) {
          if (r == k) continue;
          const auto row = sys.row(r);
          for (std::size_t w = 0; w < words; ++w) local.word[w] ^= row[w];
        }
      }
    }
    std::lock_guard lock(merge);
    if (best.better(local.weight, local.iteration)) best = std::move(local);
  });

  DistanceResult res;
  res.kind = DistanceKind::upper_bound;
  res.value = best.weight;
  res.witness = ones_of(best.word, n);
  res.effort = opts.budget;
  res.method = "information-set search";
  res.seed = opts.seed;
  return res;
}

bool is_even_weight_code(const ArrayCode& code) {
  BitMatrix h = code.parity_check();
  const std::size_t r = h.rank();
  std::vector<Word> ones(h.words_per_row(), ~Word{0});
  const std::size_t tail = code.length() % kWordBits;
  if (tail != 0) ones.back() = (Word{1} << tail) - 1;
  h.append_row(ones);
  return h.rank() == r;
}

bool revalidate(const ArrayCode& code, const DistanceResult& result, WitnessRole role) {
  if (result.witness.empty()) return result.kind == DistanceKind::lower_bound;
  auto w = result.witness;
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end() || w.size() != result.value) return false;
  if (w.back() >= code.length()) return false;
  return role == WitnessRole::codeword ? code.syndrome_zero(w) : code.is_stopping_set(w);
}

}  // namespace arrayldpc
