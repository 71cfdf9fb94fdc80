#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "upho/congruence.hpp"
#include "upho/convolution.hpp"
#include "upho/error.hpp"
#include "upho/greedy.hpp"

using namespace upho;

namespace {

const char* kM2 =
    "generators: y1 y2\nzero\n"
    "zrel y1 y1 y1\nzrel y1 y1 y2\nzrel y1 y2 y1\nzrel y1 y2 y2\n"
    "zrel y2 y1 y1\nzrel y2 y1 y2\nzrel y2 y2\n";

ConvolutionSpec figure_spec() {
  return make_convolution_spec(free_monoid(std::vector<std::string>{"x"}),
                               parse_presentation(kM2), {{"y1", "x"}, {"y2", "x"}});
}

Relation rel(const Presentation& p, const std::string& lhs, const std::string& rhs) {
  return Relation::equation(p.alphabet.parse_word(lhs), p.alphabet.parse_word(rhs));
}

}  // namespace

TEST(Convolve, FigureExampleRelations) {
  const Convolution conv = convolve(figure_spec());
  const Presentation& p = conv.presentation;
  EXPECT_EQ(p.alphabet.names(), (std::vector<std::string>{"x", "y1", "y2"}));
  const std::vector<Relation> expected{
      rel(p, "y1 y1 y1", "x y1 y1"), rel(p, "y1 y1 y2", "x y1 y2"),
      rel(p, "y1 y2 y1", "x y2 y1"), rel(p, "y1 y2 y2", "x y2 y2"),
      rel(p, "y2 y1 y1", "x y1 y1"), rel(p, "y2 y1 y2", "x y1 y2"),
      rel(p, "y2 y2", "x y2"),       rel(p, "y1 x", "x x"),
      rel(p, "y2 x", "x x"),
  };
  EXPECT_EQ(p.relations, expected);
  EXPECT_TRUE(validate(p).head_changing);
}

TEST(Convolve, SingleClassThreeRelation) {
  const auto spec = make_convolution_spec(free_monoid(std::vector<std::string>{"x"}),
                                          free_zero_monoid(1, "y"), {{"y1", "x"}});
  const Convolution conv = convolve(spec);
  ASSERT_EQ(conv.presentation.relations.size(), 1u);
  EXPECT_EQ(conv.presentation.relations[0], Relation::equation(Word{1, 0}, Word{0, 0}));
}

TEST(Convolve, RejectsBadSpecs) {
  const Presentation chain = free_monoid(std::vector<std::string>{"x"});
  EXPECT_THROW(make_convolution_spec(chain, parse_presentation(kM2), {{"y1", "z"}}),
               InvalidArgument);
  EXPECT_THROW(make_convolution_spec(chain, parse_presentation(kM2), {{"q", "x"}}),
               InvalidArgument);
  const Presentation eq = parse_presentation("generators: y1 y2\nrel y1 y2 = y2 y1\n");
  EXPECT_THROW(make_convolution_spec(chain, eq, {}), InvalidArgument);
  EXPECT_THROW(make_convolution_spec(free_monoid(1, "y"), parse_presentation(kM2), {}),
               InvalidArgument);
}

TEST(StandardWord, Examples) {
  const auto spec = make_convolution_spec(free_monoid(std::vector<std::string>{"x"}),
                                          free_zero_monoid(1, "y"), {});
  const Convolution conv = convolve(spec);
  const auto yx = standard_word(conv, Word{1, 0});
  EXPECT_EQ(yx.x_part, (Word{0, 0}));
  EXPECT_EQ(yx.depth(), 0u);
  const auto xy = standard_word(conv, Word{0, 1});
  EXPECT_EQ(xy.x_part, (Word{0}));
  EXPECT_EQ(xy.y_part, (Word{0}));
  EXPECT_EQ(xy.depth(), 1u);

  const Convolution fig = convolve(figure_spec());
  EXPECT_EQ(standard_word(fig, Word{1, 2}).depth(), 2u);
  EXPECT_EQ(standard_word(fig, Word{2, 2}).depth(), 1u);
}

TEST(VerifyCounts, Examples) {
  const auto fig = verify_convolution_counts(figure_spec(), 4);
  EXPECT_TRUE(fig.pass);
  EXPECT_EQ(fig.enumerated, (std::vector<std::uint64_t>{1, 3, 6, 6, 6}));

  const auto spec = make_convolution_spec(free_monoid(std::vector<std::string>{"x"}),
                                          free_zero_monoid(1, "y"), {});
  const auto lin = verify_convolution_counts(spec, 4);
  EXPECT_TRUE(lin.pass);
  EXPECT_EQ(lin.enumerated, (std::vector<std::uint64_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(verify_convolution_counts(spec, 0).enumerated, (std::vector<std::uint64_t>{1}));
}

TEST(VerifyCounts, OracleAgreesOnFigure) {
  const Convolution conv = convolve(figure_spec());
  for (std::size_t k = 0; k <= 4; ++k) {
    EXPECT_EQ(oracle::bfs_count(conv.presentation, k), (std::vector<std::uint64_t>{1, 3, 6, 6, 6})[k]);
  }
}

TEST(ConvolutionProperties, IdentityAndLeftCancellativity) {
  const std::vector<const char*> m1s = {
      "generators: a b c\nrel c a = a a\n",
      "generators: a b\n",
      "generators: a b c\nrel b a = a a\nrel c b = a b\n",
  };
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> val(1, 3);
  int tested = 0;
  for (const char* text : m1s) {
    const Presentation m1 = parse_presentation(text);
    for (int i = 0; i < 6; ++i) {
      std::vector<std::uint64_t> b{1, val(rng)};
      while (b.size() < 6) {
        const std::uint64_t prev = b.back();
        if (prev == 0) {
          b.push_back(0);
          continue;
        }
        const std::uint64_t next = std::min<std::uint64_t>(
            prev * prev / b[b.size() - 2], prev + val(rng) - 1);
        b.push_back(next);
      }
      const auto g = greedy_zero_series(b, 5, "y");
      if (!g.success) continue;
      std::map<std::string, std::string> xmap;
      const auto& ynames = g.final_presentation.alphabet.names();
      for (std::size_t j = 0; j < ynames.size(); ++j) {
        xmap[ynames[j]] = m1.alphabet.names()[j % m1.alphabet.size()];
      }
      const auto spec = make_convolution_spec(m1, g.final_presentation, xmap);
      EXPECT_TRUE(verify_convolution_counts(spec, 5).pass);
      EXPECT_TRUE(check_left_cancellative(convolve(spec).presentation, 4).pass);
      ++tested;
    }
  }
  EXPECT_GE(tested, 10);
}

TEST(ConvolutionProperties, YPartInvariantAndDepthMinimal) {
  const std::vector<Convolution> convs = {
      convolve(figure_spec()),
      convolve(make_convolution_spec(parse_presentation("generators: a b c\nrel c a = a a\n"),
                                     greedy_zero_series({1, 2, 3, 3, 2}, 4, "y").final_presentation,
                                     {{"y1", "a"}, {"y2", "c"}})),
  };
  for (const Convolution& conv : convs) {
    const Presentation& p = conv.presentation;
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto closure = oracle::bfs_closure(p, k);
      std::map<Word, std::vector<Word>> members;
      for (const auto& [w, c] : closure.canon) members[*c].push_back(w);
      for (const auto& [rep, words] : members) {
        const auto view = standard_word(conv, rep);
        std::size_t min_separate = k + 1;
        for (const Word& w : words) {
          EXPECT_EQ(standard_word(conv, w).y_part, view.y_part);
          std::size_t i = 0;
          while (i < w.size() && conv.is_m1_letter(w[i])) ++i;
          bool separate = true;
          for (std::size_t j = i; j < w.size(); ++j) separate = separate && !conv.is_m1_letter(w[j]);
          if (separate) min_separate = std::min(min_separate, w.size() - i);
        }
        EXPECT_EQ(view.depth(), min_separate);
        // The standard word itself lies in the class.
        std::vector<Letter> sw(view.x_part.begin(), view.x_part.end());
        for (Letter y : view.y_part) sw.push_back(static_cast<Letter>(y + conv.m1_size));
        EXPECT_EQ(closure.canon.at(Word(sw)), rep);
      }
    }
  }
}
