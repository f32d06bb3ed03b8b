#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stanley/stanley.hpp"

using namespace stanley;
using V = std::vector<value_t>;

TEST(Search, Examples) {
  const auto forced = search_near_modular({3, 2, 2});
  ASSERT_EQ(forced.outcome, search_outcome::found);
  EXPECT_EQ(forced.witness, (V{0, 2}));

  const auto row57 = search_near_modular({28, 57, 8});
  ASSERT_EQ(row57.outcome, search_outcome::found);
  EXPECT_EQ(row57.witness, (V{0, 5, 11, 13, 16, 18, 24, 57}));
  EXPECT_TRUE(oracles::near_modular(row57.witness_set()));

  const auto row46 = search_near_modular({30, 46, 8});
  ASSERT_EQ(row46.outcome, search_outcome::found);
  EXPECT_TRUE(oracles::near_modular(row46.witness_set()));
  EXPECT_EQ(row46.witness.back(), 46u);
}

TEST(Search, DegenerateSpecs) {
  EXPECT_THROW((void)search_near_modular({1, 0, 1}), error);
  EXPECT_THROW((void)search_near_modular({9, 2, 4}), error);  // t + 1 < s
  EXPECT_EQ(search_near_modular({9, 20, 2}).outcome, search_outcome::exhausted);
}

TEST(Search, CompletenessAgainstFullEnumeration) {
  for (value_t n = 1; n <= 9; ++n)
    for (value_t t = 1; t <= 10; ++t)
      for (std::size_t s = 2; s <= 4 && s <= t + 1; ++s) {
        const auto expect = oracles::first_by_enumeration(n, t, s);
        for (bool prune : {true, false}) {
          const auto got = search_near_modular({n, t, s}, {1, 0, prune});
          ASSERT_NE(got.outcome, search_outcome::budget_exceeded);
          EXPECT_EQ(got.outcome == search_outcome::found, expect.has_value()) << n << " " << t << " " << s;
          if (expect) {
            EXPECT_EQ(got.witness, *expect) << n << " " << t << " " << s;
          }
        }
      }
}

TEST(Search, PruningNeverLosesWitnesses) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const value_t n = 8 + rng() % 25;
    const value_t t = 4 + rng() % 30;
    const std::size_t s = 4 + rng() % 2;
    const auto pruned = search_near_modular({n, t, s});
    const auto full = search_near_modular({n, t, s}, {1, 0, false});
    EXPECT_EQ(pruned.outcome, full.outcome);
    EXPECT_EQ(pruned.witness, full.witness);
    EXPECT_LE(pruned.nodes, full.nodes);
  }
}

TEST(Search, ParallelMatchesSerial) {
  for (auto [n, t] : {std::pair<value_t, value_t>{28, 57}, {30, 50}, {28, 63}, {30, 45}}) {
    const auto one = search_near_modular({n, t, 8, true, 200'000'000}, {1});
    const auto four = search_near_modular({n, t, 8, true, 200'000'000}, {4});
    EXPECT_EQ(one.outcome, four.outcome);
    EXPECT_EQ(one.witness, four.witness);
    if (one.outcome == search_outcome::found) {
      EXPECT_TRUE(verify(one.witness_set()).is_near_modular);
    }
  }
}

TEST(Search, BudgetAndResume) {
  const auto starved = search_near_modular({28, 57, 8, true, 100});
  EXPECT_EQ(starved.outcome, search_outcome::budget_exceeded);
  EXPECT_GE(starved.nodes, 100u);

  const auto full = search_near_modular({28, 57, 8});
  ASSERT_EQ(full.outcome, search_outcome::found);
  // Resuming from the partition that held the witness finds the same set.
  const auto resumed = search_near_modular({28, 57, 8}, {1, full.next_partition - 1});
  EXPECT_EQ(resumed.witness, full.witness);
  const auto past = search_near_modular({28, 57, 8}, {1, full.next_partition});
  EXPECT_NE(past.witness, full.witness);
}

TEST(Search, WithoutForcedZero) {
  const auto r = search_near_modular({9, 6, 4, false});
  ASSERT_EQ(r.outcome, search_outcome::found);
  EXPECT_EQ(r.witness.size(), 4u);
  EXPECT_EQ(r.witness.back(), 6u);
}

TEST(BruteCharacter, Examples) {
  EXPECT_EQ(brute_character({0}, 4)->lambda, 0u);
  EXPECT_EQ(brute_character({0, 2}, 4)->lambda, 2u);
  try {
    (void)brute_character({0, 1, 2}, 4);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::precondition);
  }
  EXPECT_THROW((void)brute_character({0}, 7), error);
}

TEST(BruteCharacter, AgreesWithDetectorOnRandomSeeds) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    V seed{0};
    for (value_t c = 1; c < 20 && seed.size() < 4; ++c) {
      if (rng() % 3) continue;
      seed.push_back(c);
      if (!oracle::naive_3_free(seed)) seed.pop_back();
    }
    const auto brute = brute_character(seed, 5);
    const auto fast = detect_character(greedy_extend(StanleyPrefix::from_seed(seed), 64));
    ASSERT_EQ(brute.has_value(), fast.has_value());
    if (brute) {
      EXPECT_EQ(brute->lambda, fast->lambda);
      EXPECT_EQ(brute->kappa, fast->kappa);
      EXPECT_EQ(brute->repeat_factor, fast->repeat_factor);
    }
  }
}

TEST(BruteCharacter, OracleAgreementOnNearModularSets) {
  // 50 near-modular sets with |L| a power of two and modulus <= 270.
  std::vector<ResidueSet> sets;
  for (value_t n = 3; n <= 30 && sets.size() < 50; ++n)
    for (std::size_t s : {2, 4, 8})
      for (value_t t = std::max<value_t>((n + 1) / 2, s - 1); t <= n + 6 && sets.size() < 50; ++t) {
        const auto r = search_near_modular({n, t, s, true, 1'000'000});
        if (r.outcome != search_outcome::found) continue;
        const auto set = r.witness_set();
        const auto m = to_modular(set);
        if (m.set.modulus() > 270 || m.set.size() > 32) continue;
        sets.push_back(set);
      }
  ASSERT_EQ(sets.size(), 50u);
  for (const auto& l : sets) {
    const auto m = to_modular(l);
    unsigned levels = 1;
    while ((std::size_t{2} << levels) < 4 * m.set.size() && levels < 6) ++levels;
    const auto c = brute_character(V(m.set.elements().begin(), m.set.elements().end()), levels);
    ASSERT_TRUE(c) << format_set(l);
    EXPECT_EQ(c->lambda, character_of(l)) << format_set(l);
  }
}
