#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rackiso/free_group.hpp"
#include "rackiso/sampling.hpp"

using namespace rackiso;

namespace {
const Letter X = Letter::x();
const Letter Y1 = Letter::gen(1);
const Letter Y2 = Letter::gen(2);
}  // namespace

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(GroupWord{pos(Y1), neg(Y1)}), GroupWord{});
  const GroupWord w{pos(Y1), pos(Y2), neg(Y2), neg(Y1), pos(Y1)};
  EXPECT_EQ(reduce(w), oracle::naive_reduce(w));
  EXPECT_EQ(reduce(w), GroupWord{pos(Y1)});
  EXPECT_EQ(reduce(GroupWord{pos(X), pos(Y1)}), (GroupWord{pos(X), pos(Y1)}));
}

TEST(Reduce, AgreesWithRepeatedScanOracle) {
  Rng rng(1);
  const std::vector<Letter> alphabet = {X, Y1, Y2};
  std::uniform_int_distribution<int> len(0, 14), pick(0, 5);
  for (int i = 0; i < 5000; ++i) {
    GroupWord w;
    const int m = len(rng);
    for (int k = 0; k < m; ++k) {
      const int c = pick(rng);
      w.letters.push_back({alphabet[static_cast<std::size_t>(c / 2)], c % 2 ? Sign::Neg : Sign::Pos});
    }
    const GroupWord r = reduce(w);
    ASSERT_EQ(r, oracle::naive_reduce(w)) << render_word(w);
    ASSERT_TRUE(is_reduced(r));
    ASSERT_LE(r.size(), w.size());
    ASSERT_EQ(reduce(r), r);
  }
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(GroupWord{pos(Y1)}, GroupWord{neg(Y1)}), GroupWord{});
  const GroupWord w{pos(Y2), pos(Y1), neg(Y1)};
  EXPECT_EQ(multiply(GroupWord{}, w), reduce(w));
  const GroupWord u{pos(Y1), pos(Y2)}, v{neg(Y2), pos(Y1)};
  EXPECT_EQ(multiply(u, v), oracle::naive_reduce(concat(u, v)));
  EXPECT_EQ(multiply(u, v), (GroupWord{pos(Y1), pos(Y1)}));
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(GroupWord{pos(Y1), neg(Y2)}), (GroupWord{pos(Y2), neg(Y1)}));
  EXPECT_EQ(inverse(GroupWord{}), GroupWord{});
  EXPECT_EQ(inverse(GroupWord{pos(X), pos(X)}), (GroupWord{neg(X), neg(X)}));
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(GroupWord{pos(X)}, GroupWord{pos(Y1), pos(Y2)}, X),
            (GroupWord{pos(Y1), pos(Y2)}));
  EXPECT_EQ(substitute(GroupWord{neg(X)}, GroupWord{pos(Y1)}, X), GroupWord{neg(Y1)});
  const GroupWord u{pos(Y1), pos(X), neg(Y1)}, v{neg(Y1), pos(X), pos(Y1)};
  EXPECT_EQ(reduce(substitute(u, v, X)),
            oracle::naive_reduce(GroupWord{pos(Y1), neg(Y1), pos(X), pos(Y1), neg(Y1)}));
  EXPECT_EQ(reduce(substitute(u, v, X)), GroupWord{pos(X)});
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(GroupWord{pos(Y1), neg(Y1)}, GroupWord{}));
  EXPECT_FALSE(equivalent(GroupWord{pos(Y1)}, GroupWord{pos(Y2)}));
  EXPECT_TRUE(equivalent(GroupWord{pos(X), pos(Y1), neg(Y1)}, GroupWord{pos(X)}));
}

TEST(GroupLaws, AllTriplesUpToLength3) {
  const std::vector<Letter> alphabet = {Y1, Y2};
  const auto words = enumerate_reduced_words(alphabet, 3);
  ASSERT_EQ(words.size(), 1u + 4 + 12 + 36);
  for (const auto& u : words) {
    ASSERT_EQ(multiply(u, GroupWord{}), u);
    ASSERT_EQ(multiply(GroupWord{}, u), u);
    ASSERT_EQ(multiply(u, inverse(u)), GroupWord{});
    ASSERT_EQ(multiply(inverse(u), u), GroupWord{});
    for (const auto& v : words)
      for (const auto& w : words)
        ASSERT_EQ(multiply(multiply(u, v), w), multiply(u, multiply(v, w)));
  }
}

TEST(Substitute, CommutesWithInverse) {
  Rng rng(2);
  const std::vector<Letter> alphabet = {X, Y1, Y2};
  for (int i = 0; i < 2000; ++i) {
    const GroupWord u = random_reduced_word(rng, alphabet, 8);
    const GroupWord v = random_reduced_word(rng, alphabet, 5);
    ASSERT_TRUE(equivalent(inverse(substitute(u, v, X)), substitute(inverse(u), v, X)));
    // Substitution is a homomorphism.
    const GroupWord w = random_reduced_word(rng, alphabet, 5);
    ASSERT_TRUE(equivalent(substitute(concat(u, w), v, X),
                           concat(substitute(u, v, X), substitute(w, v, X))));
  }
}

TEST(Helpers, PowerStripAndConjugateSplit) {
  EXPECT_EQ(power(Y1, -2), (GroupWord{neg(Y1), neg(Y1)}));
  EXPECT_EQ(power(Y1, 0), GroupWord{});
  GroupWord rest;
  EXPECT_EQ(strip_leading_power(GroupWord{pos(X), pos(X), pos(Y1), pos(X)}, X, rest), 2);
  EXPECT_EQ(rest, (GroupWord{pos(Y1), pos(X)}));
  EXPECT_EQ(strip_leading_power(GroupWord{neg(X), pos(Y1)}, X, rest), -1);

  // y2 y1^-1 y2 y1 y2^-1 = (y1 y2^-1)^-1 y2 (y1 y2^-1)
  GroupWord core, conj;
  conjugate_split(GroupWord{pos(Y2), neg(Y1), pos(Y2), pos(Y1), neg(Y2)}, core, conj);
  EXPECT_EQ(core, GroupWord{pos(Y2)});
  EXPECT_EQ(conj, (GroupWord{pos(Y1), neg(Y2)}));
  conjugate_split(GroupWord{neg(Y1), pos(Y2), pos(Y1)}, core, conj);
  EXPECT_EQ(core, GroupWord{pos(Y2)});
  EXPECT_EQ(conj, GroupWord{pos(Y1)});
}

TEST(Text, RenderAndParse) {
  const GroupWord w{neg(Y1), pos(X), pos(Y1)};
  EXPECT_EQ(render_word(w), "y1^-1 x y1");
  EXPECT_EQ(render_word(GroupWord{}), "e");
  EXPECT_EQ(parse_word("y1^-1 x y1", 1), w);
  EXPECT_EQ(parse_word("e", 0), GroupWord{});
  EXPECT_THROW(parse_word("", 1), SyntaxError);
  EXPECT_THROW(parse_word("y1^2", 1), SyntaxError);
  EXPECT_THROW(parse_word("y2", 1), UnknownGenerator);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const GroupWord u = random_reduced_word(rng, std::vector<Letter>{X, Y1, Y2}, 8);
    ASSERT_EQ(parse_word(render_word(u), 2), u);
  }
}

TEST(Enumerate, ReducedWordCounts) {
  // 2k letters: 1, 2k, 2k(2k-1), ...
  const auto words = enumerate_reduced_words(std::vector<Letter>{X, Y1}, 5);
  std::vector<std::size_t> seen(6, 0);
  for (const auto& w : words) {
    ASSERT_TRUE(is_reduced(w));
    ++seen[w.size()];
  }
  EXPECT_EQ(seen, (std::vector<std::size_t>{1, 4, 12, 36, 108, 324}));
}
