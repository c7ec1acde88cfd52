#include <doctest.h>

#include "arrayldpc/error.hpp"
#include "arrayldpc/verify.hpp"
#include "common.hpp"

using namespace arrayldpc;

namespace {

SupportMatrix drop_column(const SupportMatrix& sm, std::size_t c) {
  auto cols = sm.columns();
  cols.erase(cols.begin() + static_cast<long>(c));
  return SupportMatrix(sm.q(), sm.m(), cols);
}

const RowThreshold& row(const DistinctnessAnalysis& a, Int r) { return a.thresholds.at(static_cast<std::size_t>(r)); }

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("check_multiplicities examples") {
    const TemplateSupportMatrix t = testutil::template_m6();
    CHECK(check_multiplicities(instantiate(t, 47), VerifyMode::codeword));
    const SupportMatrix q7 = instantiate(t, 7);
    CHECK(check_multiplicities(q7, VerifyMode::codeword));
    CHECK_FALSE(check_multiplicities(drop_column(instantiate(t, 47), 5), VerifyMode::codeword));
  }

  TEST_CASE("q=47 instance rows contain every value exactly twice") {
    const SupportMatrix inst = instantiate(testutil::template_m6(), 47);
    for (Int j = 0; j < inst.m(); ++j) {
      std::map<Int, int> counts;
      for (const Int v : inst.row(j)) ++counts[v];
      for (const auto& [v, n] : counts) CHECK(n == 2);
    }
  }

  TEST_CASE("stopping-mode multiplicities") {
    const SupportMatrix sm(7, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 6}, {0, 0}});
    CHECK(check_multiplicities(sm, VerifyMode::stopping));
    CHECK_FALSE(check_multiplicities(sm, VerifyMode::codeword));
    CHECK_FALSE(check_multiplicities(drop_column(sm, 3), VerifyMode::stopping));
  }

  TEST_CASE("odd_pair_condition examples") {
    const TemplateSupportMatrix t = testutil::template_m6();
    CHECK(odd_pair_condition(instantiate(t, 47)));
    CHECK(odd_pair_condition(instantiate(t, 7)));
    CHECK_FALSE(odd_pair_condition(SupportMatrix(7, 3, {{1, 2}, {1, 2}})));
  }

  TEST_CASE("m=6 thresholds: 32 on row 0, 22 on row 2") {
    const DistinctnessAnalysis a = distinctness_analysis(testutil::template_m6());
    CHECK(row(a, 0).lambda == 16);
    CHECK(row(a, 0).t == 32);
    CHECK(row(a, 2).lambda == 11);
    CHECK(row(a, 2).t == 22);
  }

  TEST_CASE("m=7 thresholds: 21 on row 0, 9 on row 2") {
    const DistinctnessAnalysis a = distinctness_analysis(testutil::template_m7());
    CHECK(row(a, 0).lambda == 5);
    CHECK(row(a, 0).mu == 11);
    CHECK(row(a, 0).t == 21);
    CHECK(row(a, 2).lambda == 2);
    CHECK(row(a, 2).mu == 5);
    CHECK(row(a, 2).t == 9);
  }

  TEST_CASE("m=6 exceptional primes are 2, 3, 5, 7 and 11") {
    const DistinctnessAnalysis a = distinctness_analysis(testutil::template_m6());
    CHECK(a.exceptional_primes == std::vector<Int>{2, 3, 5, 7, 11});
    CHECK(a.denominator_primes == std::vector<Int>{2});
    // Exactly two column pairs meet at q = 11.
    std::vector<std::pair<std::size_t, std::size_t>> at11;
    for (const auto& c : a.collisions) {
      if (c.gcd % 11 == 0) at11.emplace_back(c.a, c.b);
    }
    CHECK(at11 == std::vector<std::pair<std::size_t, std::size_t>>{{4, 8}, {7, 11}});
  }

  TEST_CASE("m=7 exceptional primes are 2, 3, 5 and 7") {
    CHECK(distinctness_analysis(testutil::template_m7()).exceptional_primes == std::vector<Int>{2, 3, 5, 7});
  }

  TEST_CASE("exceptional primes never exceed the largest row threshold") {
    for (const TemplateSupportMatrix& t : {testutil::template_m6(), testutil::template_m7()}) {
      const DistinctnessAnalysis a = distinctness_analysis(t);
      Int worst = 0;
      for (const auto& th : a.thresholds) worst = std::max(worst, th.t);
      for (const Int p : a.exceptional_primes) CHECK(p <= worst);
    }
  }

  TEST_CASE("identical template columns are degenerate") {
    const TemplateSupportMatrix t(3, {{ModRational(1), ModRational(1, 2)}, {ModRational(2, 2), ModRational(1, 2)}});
    try {
      distinctness_analysis(t);
      FAIL("expected degenerate template");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::degenerate_template);
    }
  }

  TEST_CASE("m=6 verification report") {
    const VerificationReport r = verify_template(testutil::template_m6(), VerifyMode::codeword, 1000);
    REQUIRE(r.valid());
    CHECK(*r.q0 == 13);
    CHECK(*r.bound_from == 7);
    CHECK(r.symbolic_multiplicities);
    const PrimeOutcome* q7 = r.outcome(7);
    REQUIRE(q7);
    CHECK(q7->status == PrimeStatus::reduced);
    CHECK(q7->effective_weight == 12);
    const PrimeOutcome* q11 = r.outcome(11);
    REQUIRE(q11);
    CHECK(q11->status == PrimeStatus::reduced);
    CHECK(q11->distinct_columns == 18);
    CHECK(q11->effective_weight == 16);
    for (const PrimeOutcome& o : r.outcomes) {
      if (o.q > 11) CHECK_MESSAGE(o.status == PrimeStatus::clean, "q=" << o.q);
    }
    CHECK(r.outcomes.size() == primes_between(7, 1000).size());
  }

  TEST_CASE("m=7 verification report") {
    const VerificationReport r = verify_template(testutil::template_m7(), VerifyMode::codeword, 1000);
    REQUIRE(r.valid());
    CHECK(*r.q0 == 11);
    CHECK(*r.bound_from == 11);
    const PrimeOutcome* q7 = r.outcome(7);
    REQUIRE(q7);
    CHECK(q7->status == PrimeStatus::invalid);
    for (const PrimeOutcome& o : r.outcomes) {
      if (o.q > 7) CHECK(o.status == PrimeStatus::clean);
    }
  }

  TEST_CASE("valid primes give nonempty odd supports with zero syndrome") {
    for (const TemplateSupportMatrix& t : {testutil::template_m6(), testutil::template_m7()}) {
      const VerificationReport r = verify_template(t, VerifyMode::codeword, 400);
      for (const PrimeOutcome& o : r.outcomes) {
        if (o.status == PrimeStatus::invalid) continue;
        const SupportMatrix reduced = reduce_duplicate_columns(instantiate(t, o.q));
        CHECK(reduced.weight() >= 2);
        CHECK(ArrayCode(o.q, t.m()).syndrome_zero(reduced.indices()));
      }
    }
  }

  TEST_CASE("a broken template fails verification") {
    auto cols = testutil::template_m6().filled_columns();
    cols.pop_back();
    const VerificationReport r = verify_template(TemplateSupportMatrix(6, cols), VerifyMode::codeword, 100);
    CHECK_FALSE(r.valid());
    CHECK_FALSE(r.symbolic_multiplicities);
  }

  TEST_CASE("stopping-mode verification") {
    const VerificationReport r = verify_template(testutil::template_m6(), VerifyMode::stopping, 200);
    REQUIRE(r.valid());
    CHECK(*r.q0 == 13);
    CHECK(r.outcome(7)->status == PrimeStatus::reduced);
    CHECK(r.outcome(7)->effective_weight == 16);
    // Removing the colliding pairs at q = 11 leaves residues covered once.
    CHECK(r.outcome(11)->status == PrimeStatus::invalid);
    CHECK(*r.bound_from == 13);
  }

  TEST_CASE("reduce_duplicate_columns on the q=7 instance gives the weight-12 matrix") {
    const SupportMatrix inst = testutil::load_fixture("m6_q7_instance.json");
    const SupportMatrix reduced = reduce_duplicate_columns(inst);
    CHECK(reduced == testutil::load_fixture("m6_q7_weight12.json"));
    CHECK(check_multiplicities(reduced, VerifyMode::codeword));
    CHECK(reduced.weight() == inst.weight() - 2 * 4);
  }

  TEST_CASE("reduce_duplicate_columns trivial cases") {
    const SupportMatrix distinct = instantiate(testutil::template_m6(), 47);
    CHECK(reduce_duplicate_columns(distinct) == distinct);
    CHECK(reduce_duplicate_columns(SupportMatrix(7, 3, {{1, 2}, {1, 2}})).weight() == 0);
    const SupportMatrix three(7, 3, {{1, 2}, {3, 4}, {1, 2}, {1, 2}});
    const SupportMatrix r3 = reduce_duplicate_columns(three);
    CHECK(r3.columns() == std::vector<ColumnXY>{{1, 2}, {3, 4}});
    CHECK(r3.weight() == three.weight() - 2 * 1);
  }

  TEST_CASE("canonical_order_check") {
    const TemplateSupportMatrix t = testutil::template_m6();
    CHECK(canonical_order_check(instantiate(t, 23)));
    CHECK_FALSE(canonical_order_check(instantiate(t, 11)));
    CHECK(canonical_order_check(SupportMatrix(7, 3, {{4, 5}})));
  }

  TEST_CASE("verification report JSON") {
    const VerificationReport r = verify_template(testutil::template_m6(), VerifyMode::codeword, 100);
    const auto j = io::to_json(r);
    CHECK(j["valid"] == true);
    CHECK(j["q0"] == 13);
    CHECK(j["bound_from"] == 7);
    CHECK(j["exceptions"].size() == 2);
    CHECK(j["thresholds"][0]["threshold"] == 32);
  }

  TEST_CASE("mode names") {
    CHECK(parse_verify_mode("codeword") == VerifyMode::codeword);
    CHECK(parse_verify_mode("stopping") == VerifyMode::stopping);
    CHECK_THROWS_AS(parse_verify_mode("other"), Error);
  }
}
