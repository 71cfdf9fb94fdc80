#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "upho/congruence.hpp"
#include "upho/error.hpp"

using namespace upho;

namespace {

Presentation parse(const char* text) { return parse_presentation(text); }

const char* kM2 =
    "generators: y1 y2\nzero\n"
    "zrel y1 y1 y1\nzrel y1 y1 y2\nzrel y1 y2 y1\nzrel y1 y2 y2\n"
    "zrel y2 y1 y1\nzrel y2 y1 y2\nzrel y2 y2\n";

// Agreement of a LengthClasses table with the BFS closure.
void expect_matches_oracle(const Presentation& p, std::size_t k, const LengthClasses& lc) {
  const auto closure = oracle::bfs_closure(p, k);
  EXPECT_EQ(lc.nonzero_count(), closure.reps.size());
  EXPECT_EQ(lc.zero_class().has_value(), closure.zero_min.has_value());
  for (const auto& [word, canon] : closure.canon) {
    const ClassId c = lc.class_of(word);
    if (canon) {
      EXPECT_FALSE(lc.is_zero(c));
      EXPECT_EQ(lc.rep(c), *canon);
    } else {
      EXPECT_TRUE(lc.is_zero(c));
    }
  }
  if (closure.zero_min) EXPECT_EQ(lc.rep(*lc.zero_class()), *closure.zero_min);
}

}  // namespace

TEST(LengthClasses, FreeMonoidSingletons) {
  const auto lc = length_classes(free_monoid(2), 3);
  EXPECT_EQ(lc.nonzero_count(), 8u);
  EXPECT_EQ(lc.class_count(), 8u);
  EXPECT_FALSE(lc.zero_class());
}

TEST(LengthClasses, CommutativeLengthTwo) {
  const Presentation p = parse("generators: x1 x2\nrel x1 x2 = x2 x1\n");
  const auto lc = length_classes(p, 2);
  EXPECT_EQ(lc.nonzero_count(), 3u);
  EXPECT_EQ(lc.class_of(Word{0, 1}), lc.class_of(Word{1, 0}));
  EXPECT_NE(lc.class_of(Word{0, 0}), lc.class_of(Word{1, 1}));
  EXPECT_EQ(lc.rep(lc.class_of(Word{1, 0})), (Word{0, 1}));
}

TEST(LengthClasses, TwoLetterZeroMonoidVanishesAtLengthThree) {
  const Presentation p = parse(kM2);
  const auto lc = length_classes(p, 3);
  EXPECT_EQ(lc.nonzero_count(), 0u);
  ASSERT_TRUE(lc.zero_class());
  EXPECT_EQ(lc.class_count(), 1u);
  EXPECT_EQ(count_nonzero(p, 2), 3u);
  expect_matches_oracle(p, 3, lc);
}

TEST(LengthClasses, RejectsNonHomogeneousAndBudget) {
  const Presentation p = parse("generators: x1 x2\nrel x1 x1 x1 = x2 x1\n");
  EXPECT_THROW(length_classes(p, 2), NonHomogeneousError);
  EXPECT_THROW(count_nonzero(p, 2), NonHomogeneousError);
  EXPECT_THROW(length_classes(free_monoid(3), 6, ClosureEngine::full, 100), BudgetExceeded);
  EXPECT_THROW(count_nonzero(free_monoid(3), 6, 100), BudgetExceeded);
}

TEST(CountNonzero, Examples) {
  EXPECT_EQ(count_nonzero(free_monoid(2), 5), 32u);
  EXPECT_EQ(count_nonzero(free_monoid(2), 0), 1u);
  const Presentation hc = parse("generators: a b c\nrel c a = a a\n");
  // Oracle: 1/(1-3x+x^2).
  const auto series = oracle::series_quotient({1}, {1, -3, 1}, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_EQ(count_nonzero(hc, k), static_cast<std::uint64_t>(series[k]));
  }
  EXPECT_EQ(count_nonzero(hc, 3), 21u);
  const Presentation sq = parse("generators: x1 x2\nrel x1 x1 = x2 x2\n");
  EXPECT_EQ(count_nonzero(sq, 2), oracle::bfs_count(sq, 2));
  EXPECT_EQ(count_nonzero(sq, 2), 3u);
}

TEST(CanonicalRep, Examples) {
  const auto free = length_classes(free_monoid(3), 3);
  EXPECT_EQ(canonical_rep(free, Word{2, 0, 1}), (Word{2, 0, 1}));
  const auto comm = length_classes(parse("generators: x1 x2\nrel x1 x2 = x2 x1\n"), 2);
  EXPECT_EQ(canonical_rep(comm, Word{1, 0}), (Word{0, 1}));
  const auto hc = length_classes(parse("generators: a b c\nrel c a = a a\n"), 2);
  EXPECT_EQ(canonical_rep(hc, Word{2, 0}), (Word{0, 0}));
  EXPECT_THROW(canonical_rep(hc, Word{0}), InvalidArgument);
}

TEST(LeftCancellative, Examples) {
  const auto bad = check_left_cancellative(parse("generators: a b c\nrel a b = a c\n"), 2);
  EXPECT_FALSE(bad.pass);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->generator, 0u);
  EXPECT_EQ(bad.witness->first, (Word{1}));
  EXPECT_EQ(bad.witness->second, (Word{2}));

  EXPECT_TRUE(check_left_cancellative(parse("generators: a b c\nrel c a = a a\n"), 6).pass);
  EXPECT_TRUE(check_left_cancellative(free_monoid(2), 8).pass);
  EXPECT_THROW(check_left_cancellative(parse(kM2), 2), InvalidArgument);
}

TEST(LeftCancellative, WitnessIsRecheckable) {
  std::mt19937_64 rng(3);
  int violations = 0;
  for (int i = 0; i < 150; ++i) {
    const Presentation p = oracle::random_homogeneous(rng, 3, 3, 3, false);
    const auto report = check_left_cancellative(p, 4);
    if (report.pass) continue;
    ++violations;
    ASSERT_TRUE(report.witness);
    const auto& wit = *report.witness;
    const std::size_t k = wit.first.size();
    const auto at_k = oracle::bfs_closure(p, k);
    const auto at_k1 = oracle::bfs_closure(p, k + 1);
    EXPECT_NE(at_k.canon.at(wit.first), at_k.canon.at(wit.second));
    EXPECT_EQ(at_k1.canon.at(Word{wit.generator} + wit.first),
              at_k1.canon.at(Word{wit.generator} + wit.second));
  }
  EXPECT_GT(violations, 0);
}

TEST(LeftCancellative, AgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Presentation p = oracle::random_homogeneous(rng, 3, 3, 2, false);
    bool brute_pass = true;
    for (std::size_t k = 0; k < 4 && brute_pass; ++k) {
      const auto lo = oracle::bfs_closure(p, k);
      const auto hi = oracle::bfs_closure(p, k + 1);
      for (Letter x = 0; x < p.alphabet.size() && brute_pass; ++x) {
        std::map<Word, Word> image;
        for (const Word& r : lo.reps) {
          const auto target = hi.canon.at(Word{x} + r);
          if (!target) continue;
          if (image.count(*target)) brute_pass = false;
          image[*target] = r;
        }
      }
    }
    EXPECT_EQ(check_left_cancellative(p, 4).pass, brute_pass);
  }
}

TEST(Engines, AgreeWithOracleAndEachOther) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 60; ++i) {
    const Presentation p = oracle::random_homogeneous(rng, 3, 3, 3, true);
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto pruned = length_classes(p, k, ClosureEngine::pruned);
      const auto full = length_classes(p, k, ClosureEngine::full);
      EXPECT_EQ(pruned, full) << serialize_presentation(p) << "k=" << k;
      expect_matches_oracle(p, k, pruned);
    }
  }
}

TEST(Engines, PartitionAndZeroAbsorption) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const Presentation p = oracle::random_homogeneous(rng, 2, 3, 2, true);
    for (std::size_t k = 0; k <= 6; ++k) {
      const auto lc = length_classes(p, k);
      std::vector<bool> used(lc.class_count(), false);
      for (std::uint64_t i2 = 0; i2 < lc.table().size(); ++i2) {
        const ClassId c = lc.class_of_index(i2);
        ASSERT_LT(c, lc.class_count());
        used[c] = true;
        const Word word = word_from_index(i2, k, p.alphabet.size());
        for (const Relation& r : p.relations) {
          if (r.is_zero() && contains_factor(word, r.lhs)) EXPECT_TRUE(lc.is_zero(c));
        }
        // Representatives are minimal members.
        EXPECT_LE(lc.rep(c), word);
      }
      for (bool u : used) EXPECT_TRUE(u);
    }
  }
}

TEST(Engines, FreeZeroMonoidMatchesFactorScan) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    Presentation p = free_zero_monoid(3);
    std::uniform_int_distribution<Letter> letter(0, 2);
    std::uniform_int_distribution<std::size_t> len(1, 3);
    for (int j = 0; j < 4; ++j) {
      std::vector<Letter> v(len(rng));
      for (auto& x : v) x = letter(rng);
      p.relations.push_back(Relation::zero(Word(v)));
    }
    for (std::size_t k = 0; k <= 5; ++k) {
      const auto lc = length_classes(p, k);
      for (std::uint64_t idx = 0; idx < lc.table().size(); ++idx) {
        const Word word = word_from_index(idx, k, 3);
        bool zero = false;
        for (const Relation& r : p.relations) zero = zero || oracle::has_factor(word, r.lhs);
        EXPECT_EQ(lc.is_zero(lc.class_of_index(idx)), zero);
      }
    }
  }
}

TEST(Engines, CanonicalFactorsAreCanonicalForLcPresentations) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    const Presentation p = oracle::random_homogeneous(rng, 3, 3, 2, false);
    if (!check_left_cancellative(p, 5).pass) continue;
    ++checked;
    GradedMonoid monoid(p);
    for (std::size_t k = 1; k <= 5; ++k) {
      for (const Word& rep : monoid.representatives(k)) {
        for (std::size_t pos = 0; pos < k; ++pos) {
          for (std::size_t len = 1; pos + len <= k; ++len) {
            EXPECT_TRUE(monoid.is_canonical(rep.subword(pos, len)));
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(GradedMonoid, IncrementalRelationsMatchFreshBuild) {
  Presentation p = free_monoid(2);
  GradedMonoid monoid(p);
  EXPECT_EQ(monoid.count(1), 2u);
  monoid.add_relation(Relation::equation(Word{1, 1}, Word{0, 1}));
  EXPECT_EQ(monoid.count(2), 3u);
  EXPECT_THROW(monoid.add_relation(Relation::equation(Word{1}, Word{0})), InvalidArgument);
  p.relations.push_back(Relation::equation(Word{1, 1}, Word{0, 1}));
  EXPECT_EQ(monoid.counts(5), GradedMonoid(p).counts(5));
  monoid.truncate(1);
  EXPECT_EQ(monoid.computed_length(), 1u);
}

TEST(GradedMonoid, ZeroRepresentative) {
  GradedMonoid monoid(parse(kM2));
  EXPECT_FALSE(monoid.zero_representative(1));
  EXPECT_EQ(monoid.zero_representative(2), (Word{1, 1}));
  EXPECT_EQ(monoid.zero_representative(3), (Word{0, 0, 0}));
  EXPECT_EQ(monoid.class_of(Word{1, 1}), kZeroClass);
  EXPECT_FALSE(monoid.canonical_form(Word{0, 1, 1}));
}

TEST(Stratum, RoundTrip) {
  const Presentation p = parse("generators: a b c\nzero\nrel c a = a a\nzrel b b\n");
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto lc = length_classes(p, k);
    std::stringstream buf;
    write_stratum(buf, lc);
    EXPECT_EQ(buf.str().rfind("UPHO-STRATUM v1\n", 0), 0u);
    EXPECT_EQ(read_stratum(buf), lc);
  }
  std::stringstream bad("NOT-A-STRATUM\n");
  EXPECT_THROW(read_stratum(bad), InvalidArgument);
}

TEST(Budget, EnvironmentOverride) {
  ::setenv("UPHO_BUDGET", "1234", 1);
  EXPECT_EQ(default_budget(), 1234u);
  ::setenv("UPHO_BUDGET", "junk", 1);
  EXPECT_EQ(default_budget(), kDefaultBudget);
  ::unsetenv("UPHO_BUDGET");
  EXPECT_EQ(default_budget(), kDefaultBudget);
}
