// Transformation-operator tests: exact kernel semantics, closure and
// multiset-preservation properties of the randomized generators, uniformity
// of the substitute operator, and the greedy/risk acceptance rule.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "wdn/rng.hpp"
#include "wdn/sta.hpp"

namespace {

using namespace wdn;

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Fake evaluation: totals equal `objective` at every coefficient.
Evaluation fake_eval(double objective) {
  Evaluation ev;
  ev.objective = objective;
  ev.deficit_measure = 0.0;
  ev.hydraulic_ok = true;
  ev.feasible = true;
  ev.total = objective;
  return ev;
}

double index_sum(const Design& d) {
  double s = 0.0;
  for (int v : d.indices) s += v;
  return s;
}

}  // namespace

TEST_CASE("swap kernel rotates the chosen positions left") {
  const Design d{{1, 2, 3, 4, 5}};
  CHECK(swap_apply(d, {0, 2}).indices == std::vector<int>{3, 2, 1, 4, 5});
  CHECK(swap_apply(d, {0, 2, 4}).indices == std::vector<int>{3, 2, 5, 4, 1});
  CHECK(swap_apply(d, {4, 0}).indices == std::vector<int>{5, 2, 3, 4, 1});
  CHECK(swap_apply(d, {1}).indices == d.indices);  // fewer than two: no-op
  CHECK(swap_apply(d, {}).indices == d.indices);
}

TEST_CASE("shift kernel moves a run to a new slot") {
  const Design d{{1, 2, 3, 4, 5}};
  CHECK(shift_apply(d, 1, 2, 0).indices == std::vector<int>{2, 3, 1, 4, 5});
  CHECK(shift_apply(d, 1, 2, 3).indices == std::vector<int>{1, 4, 5, 2, 3});
  CHECK(shift_apply(d, 1, 2, 1).indices == d.indices);  // reinserted in place
  CHECK(shift_apply(d, 0, 5, 0).indices == d.indices);  // whole vector
  CHECK_THROWS_AS(shift_apply(d, -1, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(shift_apply(d, 1, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(shift_apply(d, 4, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(shift_apply(d, 1, 2, 4), std::out_of_range);
}

TEST_CASE("symmetry kernel reverses a block") {
  const Design d{{1, 2, 3, 4, 5}};
  CHECK(reverse_apply(d, 1, 3).indices == std::vector<int>{1, 4, 3, 2, 5});
  CHECK(reverse_apply(d, 0, 5).indices == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(reverse_apply(d, 2, 0).indices == d.indices);
  CHECK_THROWS_AS(reverse_apply(d, 3, 3), std::out_of_range);
}

TEST_CASE("substitute kernel sets positions to values") {
  const Design d{{1, 2, 3}};
  CHECK(substitute_apply(d, {{0, 9}, {2, 7}}).indices == std::vector<int>{9, 2, 7});
  CHECK(substitute_apply(d, {}).indices == d.indices);
  CHECK_THROWS_AS(substitute_apply(d, {{5, 1}}), std::out_of_range);
}

TEST_CASE("randomized generators: candidate count, closure, multiset rules") {
  const Design d{{3, 1, 4, 1, 5, 9, 2, 6}};
  const int catalog = 14;
  const int se = 200;
  Rng rng(42);

  SUBCASE("swap permutes") {
    const auto out = op_swap(d, 3, se, rng);
    REQUIRE(static_cast<int>(out.size()) == se);
    int changed = 0;
    for (const Design& c : out) {
      REQUIRE(c.indices.size() == d.indices.size());
      CHECK(sorted(c.indices) == sorted(d.indices));
      changed += c.indices != d.indices;
    }
    CHECK(changed > 0);
  }

  SUBCASE("shift permutes") {
    const auto out = op_shift(d, 2, se, rng);
    REQUIRE(static_cast<int>(out.size()) == se);
    for (const Design& c : out) CHECK(sorted(c.indices) == sorted(d.indices));
  }

  SUBCASE("symmetry permutes, with and without a fixed center") {
    for (int m_c : {0, 2}) {
      const auto out = op_symmetry(d, m_c, se, rng);
      REQUIRE(static_cast<int>(out.size()) == se);
      int changed = 0;
      for (const Design& c : out) {
        CHECK(sorted(c.indices) == sorted(d.indices));
        changed += c.indices != d.indices;
      }
      CHECK(changed > 0);
    }
  }

  SUBCASE("substitute changes 1..m_d positions to fresh in-range values") {
    const auto out = op_substitute(d, 2, 500, rng, catalog);
    REQUIRE(out.size() == 500);
    for (const Design& c : out) {
      REQUIRE(c.indices.size() == d.indices.size());
      int changed = 0;
      for (std::size_t i = 0; i < c.indices.size(); ++i) {
        CHECK(c.indices[i] >= 1);
        CHECK(c.indices[i] <= catalog);
        if (c.indices[i] != d.indices[i]) {
          ++changed;
          CHECK(c.indices[i] != d.indices[i]);
        }
      }
      CHECK(changed >= 1);
      CHECK(changed <= 2);
    }
  }
}

TEST_CASE("degenerate inputs produce copies, never crashes") {
  const Design single{{5}};
  Rng rng(1);
  for (const Design& c : op_swap(single, 2, 10, rng)) CHECK(c.indices == single.indices);
  for (const Design& c : op_shift(single, 1, 10, rng)) CHECK(c.indices == single.indices);
  for (const Design& c : op_symmetry(single, 0, 10, rng)) CHECK(c.indices == single.indices);
  // A one-entry catalog leaves nothing to substitute with.
  for (const Design& c : op_substitute(single, 1, 10, rng, 1)) CHECK(c.indices == single.indices);
}

TEST_CASE("substitute draws (position, value) uniformly") {
  // All positions hold 7, so every output differs in exactly one place and
  // the (position, new value) pair ranges over 8 x 13 equally likely cells.
  const Design d{{7, 7, 7, 7, 7, 7, 7, 7}};
  const int catalog = 14;
  const int samples = 52000;
  Rng rng(987654321);
  const auto out = op_substitute(d, 1, samples, rng, catalog);

  std::map<std::pair<int, int>, int> cells;
  for (const Design& c : out) {
    int pos = -1;
    for (int i = 0; i < 8; ++i) {
      if (c.indices[i] != 7) {
        REQUIRE(pos == -1);  // exactly one change
        pos = i;
      }
    }
    REQUIRE(pos >= 0);
    CHECK(c.indices[pos] != 7);
    ++cells[{pos, c.indices[pos]}];
  }

  REQUIRE(cells.size() == 8 * 13);
  const double expected = samples / 104.0;
  double chi2 = 0.0;
  for (const auto& [cell, count] : cells) {
    chi2 += (count - expected) * (count - expected) / expected;
  }
  // 103 degrees of freedom; 160 is past the 0.9995 quantile.
  CHECK(chi2 < 160.0);
}

TEST_CASE("operator application: greedy on improvement") {
  const SearchConfig config = [] {
    SearchConfig c;
    c.se = 64;
    c.p2 = 0.0;
    return c;
  }();
  Rng rng(2024);

  Scored working{Design{{7, 7, 7, 7, 7, 7, 7, 7}}, fake_eval(56.0)};
  std::vector<Design> seen;
  const EvaluateFn fn = [&](const Design& d) {
    seen.push_back(d);
    return fake_eval(index_sum(d));
  };

  const OperatorOutcome out =
      apply_operator(working, 2e4, Operator::substitute, config, 14, rng, fn);
  CHECK(out.evaluations == 64);
  REQUIRE(static_cast<int>(seen.size()) == 64);

  // With 64 single-position substitutions some value below 7 certainly
  // appeared, so the fittest strictly improves and must be taken.
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_at = 0;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (index_sum(seen[i]) < best) {
      best = index_sum(seen[i]);
      best_at = i;
    }
  }
  REQUIRE(best < 56.0);
  CHECK(out.accepted);
  CHECK(working.eval.objective == best);
  CHECK(working.design == seen[best_at]);
}

TEST_CASE("operator application: a worse fittest needs the risk draw") {
  // All-minimum design: every substitution is strictly worse.
  const Design floor_design{{1, 1, 1, 1, 1, 1, 1, 1}};
  const EvaluateFn fn = [](const Design& d) { return fake_eval(index_sum(d)); };

  SUBCASE("p2 = 0 rejects") {
    SearchConfig config;
    config.se = 16;
    config.p2 = 0.0;
    Rng rng(5);
    Scored working{floor_design, fake_eval(8.0)};
    const OperatorOutcome out =
        apply_operator(working, 1e4, Operator::substitute, config, 14, rng, fn);
    CHECK_FALSE(out.accepted);
    CHECK(working.design == floor_design);
    CHECK(working.eval.objective == 8.0);
  }

  SUBCASE("p2 = 1 always accepts the fittest candidate") {
    SearchConfig config;
    config.se = 16;
    config.p2 = 1.0;
    Rng rng(5);
    Scored working{floor_design, fake_eval(8.0)};
    std::vector<Design> seen;
    const EvaluateFn spy = [&](const Design& d) {
      seen.push_back(d);
      return fake_eval(index_sum(d));
    };
    const OperatorOutcome out =
        apply_operator(working, 1e4, Operator::substitute, config, 14, rng, spy);
    CHECK(out.accepted);
    CHECK(working.eval.objective > 8.0);
    double best = std::numeric_limits<double>::infinity();
    for (const Design& d : seen) best = std::min(best, index_sum(d));
    CHECK(working.eval.objective == best);
  }
}

TEST_CASE("ties go to the first candidate generated") {
  SearchConfig config;
  config.se = 8;
  config.p2 = 1.0;  // equal totals are not an improvement, so risk must fire
  Rng rng(99);
  Scored working{Design{{4, 4, 4, 4, 4, 4, 4, 4}}, fake_eval(100.0)};
  std::vector<Design> seen;
  const EvaluateFn constant = [&](const Design& d) {
    seen.push_back(d);
    return fake_eval(100.0);
  };
  const OperatorOutcome out = apply_operator(working, 1e4, Operator::swap, config, 14, rng, constant);
  CHECK(out.accepted);
  REQUIRE_FALSE(seen.empty());
  CHECK(working.design == seen.front());
}

TEST_CASE("the risk draw is consumed exactly on the non-improving branch") {
  const Design base{{3, 1, 4, 1, 5, 9, 2, 6}};
  SearchConfig config;
  config.se = 8;
  config.m_a = 2;
  config.p2 = 0.0;

  SUBCASE("improving: only the generator consumes randomness") {
    Rng rng(314159);
    Scored working{base, fake_eval(1e9)};
    int calls = 0;
    const EvaluateFn improving = [&](const Design&) { return fake_eval(-(++calls)); };
    apply_operator(working, 1e4, Operator::swap, config, 14, rng, improving);

    Rng replay(314159);
    op_swap(base, config.m_a, config.se, replay);
    for (int i = 0; i < 3; ++i) CHECK(rng.next_u64() == replay.next_u64());
  }

  SUBCASE("non-improving: one extra draw, even at p2 = 0") {
    Rng rng(314159);
    Scored working{base, fake_eval(-1e9)};
    const EvaluateFn worse = [](const Design&) { return fake_eval(0.0); };
    apply_operator(working, 1e4, Operator::swap, config, 14, rng, worse);

    Rng replay(314159);
    op_swap(base, config.m_a, config.se, replay);
    replay.uniform01();  // the single risk draw
    for (int i = 0; i < 3; ++i) CHECK(rng.next_u64() == replay.next_u64());
  }
}

TEST_CASE("candidate totals are compared at the supplied coefficient") {
  // Candidate A: cheap but a little short on head. Candidate B: expensive and
  // clean. A tiny coefficient prefers A, a steep one prefers B.
  SearchConfig config;
  config.se = 1;
  config.m_d = 1;
  config.p2 = 0.0;

  auto deficient = fake_eval(100.0);
  deficient.deficit_measure = 1.0;
  deficient.feasible = false;

  const EvaluateFn fn = [&](const Design&) { return deficient; };

  Scored cheap_start{Design{{2, 2}}, fake_eval(150.0)};
  Rng rng_a(7);
  const OperatorOutcome low = apply_operator(cheap_start, 10.0, Operator::substitute, config, 14,
                                             rng_a, fn);  // 100 + 10 < 150
  CHECK(low.accepted);

  Scored clean_start{Design{{2, 2}}, fake_eval(150.0)};
  Rng rng_b(7);
  const OperatorOutcome high = apply_operator(clean_start, 1e6, Operator::substitute, config, 14,
                                              rng_b, fn);  // 100 + 1e6 > 150
  CHECK_FALSE(high.accepted);
}

TEST_CASE("search configuration is validated") {
  const PenaltySchedule sched = PenaltySchedule::fixed_pc(1.0);

  // Validation fires before any network access, so an empty network works.
  Network empty;
  SearchConfig bad;
  bad.se = 0;
  CHECK_THROWS_AS(run_sta(empty, sched, bad), std::invalid_argument);

  SearchConfig low_ma;
  low_ma.m_a = 1;
  CHECK_THROWS_AS(run_sta(empty, sched, low_ma), std::invalid_argument);

  SearchConfig bad_p1;
  bad_p1.p1 = 1.5;
  CHECK_THROWS_AS(run_sta(empty, sched, bad_p1), std::invalid_argument);

  SearchConfig bad_p2;
  bad_p2.p2 = -0.1;
  CHECK_THROWS_AS(run_sta(empty, sched, bad_p2), std::invalid_argument);
}
