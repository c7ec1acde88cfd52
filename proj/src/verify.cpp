#include "arrayldpc/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "arrayldpc/error.hpp"

namespace arrayldpc {

std::string_view to_string(VerifyMode mode) noexcept {
  return mode == VerifyMode::codeword ? "codeword" : "stopping";
}

VerifyMode parse_verify_mode(std::string_view text) {
  if (text == "codeword") return VerifyMode::codeword;
  if (text == "stopping" || text == "stopping-set") return VerifyMode::stopping;
  throw Error(Errc::invalid_parameter, "unknown verification mode '" + std::string(text) + "'");
}

std::string_view to_string(PrimeStatus status) noexcept {
  switch (status) {
    case PrimeStatus::clean: return "clean";
    case PrimeStatus::reduced: return "reduced";
    case PrimeStatus::invalid: return "invalid";
  }
  return "invalid";
}

namespace {

template <typename T>
bool multiplicities_ok(const std::map<T, std::size_t>& counts, VerifyMode mode) {
  return std::all_of(counts.begin(), counts.end(), [mode](const auto& kv) {
    return mode == VerifyMode::codeword ? kv.second % 2 == 0 : kv.second >= 2;
  });
}

std::map<ColumnXY, std::size_t> column_counts(const SupportMatrix& inst) {
  std::map<ColumnXY, std::size_t> counts;
  for (const ColumnXY& c : inst.columns()) ++counts[c];
  return counts;
}

Int abs_gcd(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

bool check_multiplicities(const SupportMatrix& inst, VerifyMode mode) {
  for (Int j = 0; j < inst.m(); ++j) {
    std::map<Int, std::size_t> counts;
    for (const Int v : inst.row(j)) ++counts[v];
    if (!multiplicities_ok(counts, mode)) return false;
  }
  return true;
}

bool odd_pair_condition(const SupportMatrix& inst) {
  std::size_t odd = 0;
  for (const auto& [col, n] : column_counts(inst)) odd += n % 2;
  return odd >= 2;
}

SupportMatrix reduce_duplicate_columns(const SupportMatrix& inst) {
  const auto counts = column_counts(inst);
  std::set<ColumnXY> emitted;
  std::vector<ColumnXY> kept;
  for (const ColumnXY& c : inst.columns()) {
    if (counts.at(c) % 2 == 1 && emitted.insert(c).second) kept.push_back(c);
  }
  return SupportMatrix(inst.q(), inst.m(), std::move(kept));
}

bool canonical_order_check(const SupportMatrix& inst) {
  const auto& cols = inst.columns();
  return std::is_sorted(cols.begin(), cols.end(), [](const ColumnXY& a, const ColumnXY& b) {
    return std::pair{a.y, a.x} < std::pair{b.y, b.x};
  });
}

DistinctnessAnalysis distinctness_analysis(const TemplateSupportMatrix& t) {
  const auto cols = t.filled_columns();
  DistinctnessAnalysis out;

  for (Int row = 0; row < t.m(); ++row) {
    RowThreshold th{row, 0, 0, 0};
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const ModRational e = t.entry(row, c);
      const Int a = e.num() < 0 ? -e.num() : e.num();
      if (e.den() == 1) th.lambda = std::max(th.lambda, a);
      if (e.den() == 2) th.mu = std::max(th.mu, a);
    }
    th.t = 2 * th.lambda + th.mu;
    out.thresholds.push_back(th);
  }

  std::set<Int> exceptional;
  std::set<Int> den_primes;
  for (const TemplateColumn& c : cols) {
    for (const Int p : prime_factors(c.x.den())) den_primes.insert(p);
    for (const Int p : prime_factors(c.y.den())) den_primes.insert(p);
  }
  for (std::size_t a = 0; a < cols.size(); ++a) {
    for (std::size_t b = a + 1; b < cols.size(); ++b) {
      Int g = 0;
      for (Int row = 0; row < t.m(); ++row) {
        const ModRational e1 = t.entry(row, a);
        const ModRational e2 = t.entry(row, b);
        g = abs_gcd(g, e1.num() * e2.den() - e2.num() * e1.den());
      }
      if (g == 0) {
        throw Error(Errc::degenerate_template,
                    "template columns " + std::to_string(a) + " and " + std::to_string(b) + " are identical");
      }
      if (g == 1) continue;
      out.collisions.push_back({a, b, g});
      for (const Int p : prime_factors(g)) exceptional.insert(p);
    }
  }
  out.denominator_primes.assign(den_primes.begin(), den_primes.end());
  exceptional.insert(den_primes.begin(), den_primes.end());
  out.exceptional_primes.assign(exceptional.begin(), exceptional.end());
  return out;
}

PrimeOutcome evaluate_instance(const TemplateSupportMatrix& t, Int q, VerifyMode mode) {
  PrimeOutcome o;
  o.q = q;
  std::optional<SupportMatrix> inst;
  try {
    inst = instantiate(t, q);
  } catch (const Error& e) {
    if (e.code() != Errc::evaluation_undefined && e.code() != Errc::invalid_parameter) throw;
    o.reason = "template cannot be evaluated at this prime";
    return o;
  }
  const SupportMatrix reduced = reduce_duplicate_columns(*inst);
  const auto counts = column_counts(*inst);
  o.distinct_columns = counts.size();
  o.odd_pair = odd_pair_condition(*inst);
  if (t.m() > q) {
    o.reason = "m exceeds q";
    return o;
  }
  const ArrayCode code(q, t.m());

  if (mode == VerifyMode::codeword) {
    o.multiplicities = check_multiplicities(*inst, mode);
    o.effective_weight = reduced.weight();
    const auto idx = reduced.indices();
    o.support_check = code.syndrome_zero(idx);
    const bool ok = o.multiplicities && o.odd_pair && o.support_check;
    if (!ok) {
      o.reason = !o.multiplicities ? "a row residue has odd multiplicity"
                 : !o.odd_pair     ? "fewer than two distinct odd-multiplicity columns"
                                   : "reduced support has nonzero syndrome";
    }
    o.status = !ok ? PrimeStatus::invalid : o.distinct_columns == t.weight() ? PrimeStatus::clean : PrimeStatus::reduced;
  } else {
    std::vector<ColumnXY> distinct;
    for (const auto& [c, n] : counts) distinct.push_back(c);
    const SupportMatrix set(q, t.m(), distinct);
    o.effective_weight = distinct.size();
    o.multiplicities = check_multiplicities(set, mode);
    o.support_check = !distinct.empty() && code.is_stopping_set(set.indices());
    const bool ok = o.multiplicities && o.support_check;
    if (!ok) o.reason = "distinct columns do not form a stopping set";
    o.status = !ok ? PrimeStatus::invalid : o.distinct_columns == t.weight() ? PrimeStatus::clean : PrimeStatus::reduced;
  }
  if (o.status == PrimeStatus::reduced) {
    o.reason = std::to_string(t.weight() - o.distinct_columns) + " duplicate column(s)";
  }
  return o;
}

const PrimeOutcome* VerificationReport::outcome(Int q) const {
  for (const PrimeOutcome& o : outcomes) {
    if (o.q == q) return &o;
  }
  return nullptr;
}

VerificationReport verify_template(const TemplateSupportMatrix& t, VerifyMode mode, Int numeric_sweep_max) {
  const auto cols = t.filled_columns();
  VerificationReport r;
  r.mode = mode;
  r.m = t.m();
  r.w = t.weight();
  r.numeric_sweep_max = numeric_sweep_max;

  const DistinctnessAnalysis da = distinctness_analysis(t);
  r.thresholds = da.thresholds;
  r.exceptional_primes = da.exceptional_primes;

  // Once columns are distinct, instance row multiplicities can only merge
  // classes of the symbolic row, which preserves both the even and the
  // at-least-two rule; failure symbolically means failure for large q.
  r.symbolic_multiplicities = true;
  for (Int row = 0; row < t.m(); ++row) {
    std::map<ModRational, std::size_t> counts;
    for (std::size_t c = 0; c < cols.size(); ++c) ++counts[t.entry(row, c)];
    if (!multiplicities_ok(counts, mode)) r.symbolic_multiplicities = false;
  }

  std::set<Int> primes;
  for (const Int p : primes_between(std::max<Int>(t.m(), 3), numeric_sweep_max)) primes.insert(p);
  for (const Int p : da.exceptional_primes) {
    if (p >= t.m() && p > 2) primes.insert(p);
  }
  for (const Int q : primes) r.outcomes.push_back(evaluate_instance(t, q, mode));

  if (!r.symbolic_multiplicities) return r;
  // Primes outside the evaluated set are not exceptional and hence clean.
  Int clean_from = std::max<Int>(t.m(), 3);
  Int valid_from = clean_from;
  for (const PrimeOutcome& o : r.outcomes) {
    if (o.status != PrimeStatus::clean) clean_from = std::max(clean_from, o.q + 1);
    if (o.status == PrimeStatus::invalid) valid_from = std::max(valid_from, o.q + 1);
  }
  auto next_prime = [](Int n) {
    while (!is_odd_prime(n)) ++n;
    return n;
  };
  r.q0 = next_prime(clean_from);
  r.bound_from = next_prime(valid_from);
  return r;
}

}  // namespace arrayldpc
