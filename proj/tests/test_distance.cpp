#include <doctest.h>

#include "arrayldpc/distance.hpp"
#include "arrayldpc/error.hpp"
#include "oracles.hpp"

using namespace arrayldpc;

namespace {

void check_exact(Int q, Int m, std::size_t expected) {
  const ArrayCode code(q, m);
  const DistanceResult r = exact_min_distance(code);
  CHECK_MESSAGE(r.kind == DistanceKind::exact, "q=" << q << " m=" << m);
  CHECK_MESSAGE(r.value == expected, "q=" << q << " m=" << m);
  CHECK(revalidate(code, r, WitnessRole::codeword));
}

}  // namespace

TEST_SUITE("distance") {
  TEST_CASE("exact minimum distances") {
    check_exact(7, 6, 12);
    check_exact(7, 7, 14);
    check_exact(5, 3, 6);
    check_exact(7, 4, 8);
    check_exact(7, 5, 12);
  }

  TEST_CASE("enumeration agrees with the naive oracle for dimensions up to 16") {
    std::size_t cases = 0;
    for (const Int q : {3, 5, 7, 11, 13}) {
      for (Int m = 1; m <= q; ++m) {
        const ArrayCode code(q, m);
        if (code.dimension() > 16) continue;
        ++cases;
        const DistanceResult r = exact_min_distance(code);
        CHECK_MESSAGE(r.value == oracle::min_distance(q, m), "q=" << q << " m=" << m);
        CHECK(revalidate(code, r, WitnessRole::codeword));
      }
    }
    CHECK(cases >= 8);
  }

  TEST_CASE("weight cap turns a miss into a lower bound") {
    const ArrayCode code(7, 6);
    MinDistanceOptions opts;
    opts.weight_cap = 10;
    const DistanceResult low = exact_min_distance(code, opts);
    CHECK(low.kind == DistanceKind::lower_bound);
    CHECK(low.value == 11);
    CHECK(low.witness.empty());
    CHECK(revalidate(code, low, WitnessRole::codeword));
    opts.weight_cap = 12;
    const DistanceResult hit = exact_min_distance(code, opts);
    CHECK(hit.kind == DistanceKind::exact);
    CHECK(hit.value == 12);
  }

  TEST_CASE("dimension above the limit needs a cap") {
    const ArrayCode code(7, 4);
    MinDistanceOptions opts;
    opts.max_dimension = 10;
    try {
      exact_min_distance(code, opts);
      FAIL("expected a size limit");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::size_limit);
    }
    opts.weight_cap = 8;
    const DistanceResult r = exact_min_distance(code, opts);
    CHECK(r.kind == DistanceKind::exact);
    CHECK(r.value == 8);
    CHECK(revalidate(code, r, WitnessRole::codeword));
    opts.weight_cap = 7;
    CHECK(exact_min_distance(code, opts).kind == DistanceKind::lower_bound);
  }

  TEST_CASE("codeword branch-and-bound matches enumeration") {
    for (const auto& [q, m] : std::vector<std::pair<Int, Int>>{{5, 3}, {7, 5}, {7, 6}, {7, 7}}) {
      const ArrayCode code(q, m);
      const DistanceResult bb = codeword_branch_and_bound(code, 16);
      CHECK(bb.kind == DistanceKind::exact);
      CHECK(bb.value == exact_min_distance(code).value);
      CHECK(revalidate(code, bb, WitnessRole::codeword));
    }
  }

  TEST_CASE("enumeration is independent of the thread count") {
    const ArrayCode code(7, 5);
    MinDistanceOptions one, four;
    four.threads = 4;
    const DistanceResult a = exact_min_distance(code, one);
    const DistanceResult b = exact_min_distance(code, four);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
  }

  TEST_CASE("exact stopping distances") {
    const ArrayCode c75(7, 5);
    const DistanceResult h75 = exact_stopping_distance(c75, 12);
    CHECK(h75.kind == DistanceKind::exact);
    CHECK(h75.value == 9);
    CHECK(revalidate(c75, h75, WitnessRole::stopping_set));
    CHECK(c75.is_stopping_set(h75.witness));

    const ArrayCode c74(7, 4);
    const DistanceResult h74 = exact_stopping_distance(c74, 10);
    CHECK(h74.value == 8);
    CHECK(revalidate(c74, h74, WitnessRole::stopping_set));
  }

  TEST_CASE("stopping search with cap 1 finds nothing") {
    const ArrayCode code(7, 4);
    const DistanceResult r = exact_stopping_distance(code, 1);
    CHECK(r.kind == DistanceKind::lower_bound);
    CHECK(r.value == 2);
    CHECK(r.witness.empty());
  }

  TEST_CASE("stopping search below the true size proves a lower bound") {
    const ArrayCode code(7, 5);
    const DistanceResult r = exact_stopping_distance(code, 8);
    CHECK(r.kind == DistanceKind::lower_bound);
    CHECK(r.value == 9);
  }

  TEST_CASE("stopping search node limit") {
    const ArrayCode code(7, 5);
    StoppingOptions opts;
    opts.node_limit = 50;
    const DistanceResult r = exact_stopping_distance(code, 12, opts);
    CHECK(r.kind == DistanceKind::lower_bound);
    CHECK(r.value <= 9);
  }

  TEST_CASE("stopping search is independent of the thread count") {
    const ArrayCode code(7, 5);
    StoppingOptions four;
    four.threads = 4;
    const DistanceResult a = exact_stopping_distance(code, 12);
    const DistanceResult b = exact_stopping_distance(code, 12, four);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
  }

  TEST_CASE("stopping distance never exceeds minimum distance for q=7") {
    for (Int m = 4; m <= 7; ++m) {
      const ArrayCode code(7, m);
      const DistanceResult d = exact_min_distance(code);
      const DistanceResult h = exact_stopping_distance(code, d.value);
      CHECK(h.kind == DistanceKind::exact);
      CHECK(h.value <= d.value);
      CHECK(revalidate(code, h, WitnessRole::stopping_set));
    }
  }

  TEST_CASE("heuristic search never beats the exact value") {
    for (Int m = 4; m <= 7; ++m) {
      const ArrayCode code(7, m);
      SearchOptions opts;
      opts.budget = 300;
      const DistanceResult h = heuristic_low_weight_search(code, opts);
      CHECK(h.kind == DistanceKind::upper_bound);
      CHECK(h.value >= exact_min_distance(code).value);
      CHECK(revalidate(code, h, WitnessRole::codeword));
      CHECK(h.seed == kDefaultSeed);
    }
  }

  TEST_CASE("heuristic search is deterministic and thread-count independent") {
    const ArrayCode code(11, 5);
    SearchOptions a;
    a.budget = 200;
    a.seed = 99;
    SearchOptions b = a;
    b.threads = 3;
    const DistanceResult ra = heuristic_low_weight_search(code, a);
    const DistanceResult rb = heuristic_low_weight_search(code, b);
    const DistanceResult rc = heuristic_low_weight_search(code, a);
    CHECK(ra.value == rb.value);
    CHECK(ra.witness == rb.witness);
    CHECK(ra.witness == rc.witness);
    CHECK(revalidate(code, ra, WitnessRole::codeword));
  }

  TEST_CASE("smallest budget still returns a codeword") {
    const ArrayCode code(7, 4);
    SearchOptions opts;
    opts.budget = 1;
    opts.max_info_weight = 1;
    const DistanceResult r = heuristic_low_weight_search(code, opts);
    std::size_t lightest = code.length();
    for (std::size_t i = 0; i < code.generator().rows(); ++i) lightest = std::min(lightest, code.generator().row_weight(i));
    CHECK(r.value <= lightest);
    CHECK(revalidate(code, r, WitnessRole::codeword));
    opts.budget = 0;
    CHECK_THROWS_AS(heuristic_low_weight_search(code, opts), Error);
  }

  TEST_CASE("array codes of q=7 are even-weight codes") {
    for (Int m = 1; m <= 7; ++m) CHECK(is_even_weight_code(ArrayCode(7, m)));
  }

  TEST_CASE("revalidate rejects bad witnesses") {
    const ArrayCode code(7, 6);
    DistanceResult r = exact_min_distance(code);
    REQUIRE(revalidate(code, r, WitnessRole::codeword));
    DistanceResult wrong_size = r;
    wrong_size.value += 1;
    CHECK_FALSE(revalidate(code, wrong_size, WitnessRole::codeword));
    DistanceResult broken = r;
    broken.witness.pop_back();
    broken.value -= 1;
    CHECK_FALSE(revalidate(code, broken, WitnessRole::codeword));
    DistanceResult empty_exact;
    CHECK_FALSE(revalidate(code, empty_exact, WitnessRole::codeword));
  }
}
