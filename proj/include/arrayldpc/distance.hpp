#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrayldpc/arraycode.hpp"

namespace arrayldpc {

enum class DistanceKind { exact, upper_bound, lower_bound };
std::string_view to_string(DistanceKind kind) noexcept;

struct DistanceResult {
  DistanceKind kind = DistanceKind::exact;
  /// The distance, or the bound on it.
  std::size_t value = 0;
  /// Sorted column indices with |witness| == value; empty for lower bounds.
  std::vector<std::size_t> witness;
  /// Codewords enumerated, search nodes visited, or iterations run.
  std::uint64_t effort = 0;
  std::string method;
  std::optional<std::uint64_t> seed;
};

struct MinDistanceOptions {
  /// Report "no codeword of weight <= cap" instead of a larger exact value.
  std::optional<std::size_t> weight_cap;
  /// Largest dimension enumerated exhaustively. Above it a cap is required
  /// and the search switches to branch-and-bound over supports.
  std::size_t max_dimension = 60;
  unsigned threads = 1;
};

DistanceResult exact_min_distance(const ArrayCode& code, const MinDistanceOptions& opts = {});

struct StoppingOptions {
  unsigned threads = 1;
  /// Abort after this many search nodes and report a lower bound.
  std::optional<std::uint64_t> node_limit;
};

/// Smallest nonempty stopping set of size <= size_cap, or the lower bound
/// size_cap + 1 when there is none.
DistanceResult exact_stopping_distance(const ArrayCode& code, std::size_t size_cap, const StoppingOptions& opts = {});

/// Same search, but for nonzero codewords (every check row covered evenly).
DistanceResult codeword_branch_and_bound(const ArrayCode& code, std::size_t weight_cap,
                                         const StoppingOptions& opts = {});

inline constexpr std::uint64_t kDefaultSeed = 20080701;
inline constexpr std::uint64_t kDefaultBudget = 100000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  /// Largest number of information-set positions combined per codeword.
  unsigned max_info_weight = 3;
};

/// Randomized information-set search; the result is an upper bound that
/// depends only on (budget, seed), not on the thread count.
DistanceResult heuristic_low_weight_search(const ArrayCode& code, const SearchOptions& opts = {});

/// True when the all-ones word is a sum of parity checks, i.e. every
/// codeword has even weight.
bool is_even_weight_code(const ArrayCode& code);

enum class WitnessRole { codeword, stopping_set };

/// The witness has `value` distinct columns and is a nonzero codeword or a
/// stopping set; lower bounds without witness pass vacuously.
bool revalidate(const ArrayCode& code, const DistanceResult& result, WitnessRole role);

}  // namespace arrayldpc
