#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrayldpc/support.hpp"
#include "arrayldpc/template.hpp"

namespace arrayldpc {

enum class VerifyMode { codeword, stopping };

std::string_view to_string(VerifyMode mode) noexcept;
VerifyMode parse_verify_mode(std::string_view text);

/// Codeword mode: every residue of every row occurs an even number of times.
/// Stopping mode: every occurring residue occurs at least twice.
bool check_multiplicities(const SupportMatrix& inst, VerifyMode mode);

/// At least two distinct columns occur an odd number of times.
bool odd_pair_condition(const SupportMatrix& inst);

/// Drops equal column pairs; each survivor appears once, at the position of
/// its first occurrence.
SupportMatrix reduce_duplicate_columns(const SupportMatrix& inst);

/// Columns are in nondecreasing (y, x) order, i.e. increasing column index.
bool canonical_order_check(const SupportMatrix& inst);

struct RowThreshold {
  Int row;
  Int lambda;  // max |numerator| over integer entries
  Int mu;      // max |numerator| over half-integer entries
  Int t;       // 2*lambda + mu
};

struct ColumnCollision {
  std::size_t a;
  std::size_t b;
  /// gcd over rows of the cross-multiplied entry differences; the columns
  /// coincide exactly at the primes dividing it.
  Int gcd;
};

struct DistinctnessAnalysis {
  std::vector<RowThreshold> thresholds;
  std::vector<ColumnCollision> collisions;
  /// Primes dividing some denominator; the template cannot be evaluated there.
  std::vector<Int> denominator_primes;
  /// Sorted union of collision primes and denominator primes.
  std::vector<Int> exceptional_primes;
};

DistinctnessAnalysis distinctness_analysis(const TemplateSupportMatrix& t);

enum class PrimeStatus { clean, reduced, invalid };
std::string_view to_string(PrimeStatus status) noexcept;

struct PrimeOutcome {
  Int q = 0;
  PrimeStatus status = PrimeStatus::invalid;
  std::size_t distinct_columns = 0;
  /// Size of the codeword / stopping set left after duplicate reduction.
  std::size_t effective_weight = 0;
  bool multiplicities = false;
  bool odd_pair = false;
  /// Codeword mode: syndrome of the reduced support is zero. Stopping mode:
  /// the distinct columns form a stopping set.
  bool support_check = false;
  std::string reason;
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::codeword;
  Int m = 0;
  std::size_t w = 0;
  Int numeric_sweep_max = 0;
  /// Smallest prime from which every instance is clean: all w columns
  /// distinct and the conditions hold. Empty if the template is not valid
  /// for large primes.
  std::optional<Int> q0;
  /// Smallest prime from which every instance yields a valid (possibly
  /// reduced) codeword or stopping set.
  std::optional<Int> bound_from;
  /// Row multiplicities of the symbolic template satisfy the mode's rule.
  bool symbolic_multiplicities = false;
  std::vector<RowThreshold> thresholds;
  std::vector<Int> exceptional_primes;
  /// Every prime in [m, numeric_sweep_max] plus exceptional primes beyond it.
  std::vector<PrimeOutcome> outcomes;

  bool valid() const noexcept { return q0.has_value(); }
  const PrimeOutcome* outcome(Int q) const;
};

PrimeOutcome evaluate_instance(const TemplateSupportMatrix& t, Int q, VerifyMode mode);

VerificationReport verify_template(const TemplateSupportMatrix& t, VerifyMode mode, Int numeric_sweep_max);

}  // namespace arrayldpc
