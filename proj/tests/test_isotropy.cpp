#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rackiso/isotropy.hpp"
#include "rackiso/sampling.hpp"

using namespace rackiso;

namespace {
const Letter X = Letter::x();
const Letter Y1 = Letter::gen(1);
const Letter Y2 = Letter::gen(2);
Term p(std::string_view s, std::uint32_t n = 2) { return parse_term(s, n); }

// Product computed at the term level: canonical form of t_a[t_b/x].
QuandleIsoElem subst_product(const QuandleIsoElem& a, const QuandleIsoElem& b) {
  return quandle_canonical(subst_term(to_term(a), to_term(b), X), 3).value();
}
RackIsoElem subst_product(const RackIsoElem& a, const RackIsoElem& b) {
  return rack_canonical(subst_term(to_term(a), to_term(b), X), 3).value();
}
}  // namespace

TEST(GenericCommutation, Examples) {
  EXPECT_TRUE(check_generic_commutation(p("x |> y1", 1), Theory::Quandle, 1));
  EXPECT_TRUE(check_generic_commutation(p("x", 0), Theory::Rack, 0));
  EXPECT_FALSE(check_generic_commutation(p("y1 |> x", 1), Theory::Quandle, 1));
  EXPECT_THROW(check_generic_commutation(p("y2"), Theory::Rack, 1), UnknownGenerator);
}

TEST(QuandleCanonical, Examples) {
  EXPECT_EQ(quandle_canonical(p("x"), 2), QuandleIsoElem{});
  EXPECT_EQ(quandle_canonical(p("(x |> y1) |>~ y2"), 2),
            (QuandleIsoElem{GroupWord{pos(Y1), neg(Y2)}}));
  EXPECT_EQ(quandle_canonical(p("y1 |> x"), 2), std::nullopt);
  EXPECT_EQ(quandle_canonical(p("(x |> y1) |> (y2 |>~ y2)"), 2),
            (QuandleIsoElem{GroupWord{pos(Y1), pos(Y2)}}));
  EXPECT_EQ(quandle_canonical(p("y1"), 2), std::nullopt);
  EXPECT_EQ(quandle_canonical(p("x |> x"), 2), QuandleIsoElem{});
}

TEST(RackCanonical, Examples) {
  EXPECT_EQ(rack_canonical(p("x"), 1), RackIsoElem{});
  EXPECT_EQ(rack_canonical(p("x |> x"), 1), (RackIsoElem{1, {}}));
  EXPECT_EQ(rack_canonical(p("(x |>~ x) |> y1"), 1), (RackIsoElem{-1, GroupWord{pos(Y1)}}));
  EXPECT_EQ(rack_canonical(p("y1 |> x"), 1), std::nullopt);
  EXPECT_EQ(rack_canonical(p("x |> y1 |> x"), 1), std::nullopt);
}

TEST(QuandleMul, Examples) {
  const QuandleIsoElem e{}, a{GroupWord{pos(Y1)}}, b{GroupWord{pos(Y2)}}, c{GroupWord{neg(Y1)}};
  EXPECT_EQ(multiply(e, b), b);
  EXPECT_EQ(multiply(a, b), (QuandleIsoElem{GroupWord{pos(Y2), pos(Y1)}}));
  EXPECT_EQ(multiply(a, b), subst_product(a, b));
  EXPECT_EQ(multiply(a, c), e);
}

TEST(RackMul, Examples) {
  const RackIsoElem g{2, GroupWord{neg(Y1)}};
  EXPECT_EQ(multiply(RackIsoElem{}, g), g);
  const RackIsoElem a{1, GroupWord{pos(Y1)}}, b{2, GroupWord{pos(Y2)}};
  EXPECT_EQ(subst_product(a, b), (RackIsoElem{3, GroupWord{pos(Y2), pos(Y1)}}));
  EXPECT_EQ(multiply(a, b), subst_product(a, b));
  EXPECT_EQ(multiply(RackIsoElem{1, {}}, RackIsoElem{-1, {}}), RackIsoElem{});
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(QuandleIsoElem{GroupWord{pos(Y1), neg(Y2)}}),
            (QuandleIsoElem{GroupWord{pos(Y2), neg(Y1)}}));
  const RackIsoElem g{2, GroupWord{pos(Y1)}};
  EXPECT_EQ(inverse(g), (RackIsoElem{-2, GroupWord{neg(Y1)}}));
  EXPECT_EQ(multiply(g, inverse(g)), RackIsoElem{});
  EXPECT_EQ(inverse(QuandleIsoElem{}), QuandleIsoElem{});
}

TEST(ToTerm, Examples) {
  EXPECT_EQ(to_term(QuandleIsoElem{GroupWord{pos(Y1), neg(Y2)}}), p("(x |> y1) |>~ y2"));
  EXPECT_EQ(to_term(RackIsoElem{-1, GroupWord{pos(Y1)}}), p("(x |>~ x) |> y1"));
  EXPECT_EQ(to_term(RackIsoElem{}), p("x"));
  EXPECT_EQ(to_term(RackIsoElem{2, {}}), p("x |> x |> x"));
}

TEST(PhiQuandle, Examples) {
  EXPECT_EQ(quandle_from_free_group(GroupWord{pos(Y1)}), (QuandleIsoElem{GroupWord{pos(Y1)}}));
  EXPECT_EQ(quandle_canonical(act(atom(X), atom(Y1)), 1), quandle_from_free_group(GroupWord{pos(Y1)}));
  EXPECT_EQ(quandle_from_free_group(GroupWord{pos(Y1), pos(Y2)}),
            (QuandleIsoElem{GroupWord{pos(Y2), pos(Y1)}}));
  EXPECT_EQ(quandle_from_free_group(GroupWord{}), QuandleIsoElem{});
  EXPECT_THROW(quandle_from_free_group(GroupWord{pos(X)}), std::invalid_argument);
}

TEST(PhiRack, Examples) {
  EXPECT_EQ(rack_from_free_group(0, GroupWord{pos(Y1)}), (RackIsoElem{0, GroupWord{pos(Y1)}}));
  EXPECT_EQ(rack_from_free_group(3, GroupWord{}), (RackIsoElem{3, {}}));
  // Anti-law, both sides through the substitution oracle.
  const RackIsoElem lhs =
      subst_product(rack_from_free_group(1, GroupWord{pos(Y2)}), rack_from_free_group(1, GroupWord{pos(Y1)}));
  EXPECT_EQ(lhs, rack_from_free_group(2, GroupWord{pos(Y1), pos(Y2)}));
}

TEST(ApplyInner, Examples) {
  const std::vector<Term> img_y2 = {atom(Y2)};
  EXPECT_EQ(apply_inner(QuandleIsoElem{GroupWord{pos(Y1)}}, img_y2, atom(Y1), 1), p("y1 |> y2"));
  EXPECT_TRUE(quandle_equal(apply_inner(QuandleIsoElem{}, {atom(Y1)}, p("y1 |> y1"), 1),
                            p("y1 |> y1")));
  EXPECT_EQ(apply_inner(RackIsoElem{1, {}}, {}, atom(Y1), 0), p("y1 |> y1"));
  EXPECT_THROW(apply_inner(QuandleIsoElem{}, {atom(Y1)}, atom(Y1), 2), ArityMismatch);
  EXPECT_THROW(apply_inner(QuandleIsoElem{GroupWord{pos(Y2)}}, {atom(Y1)}, atom(Y1), 1),
               ArityMismatch);
}

TEST(QuandleInnerWitness, Examples) {
  EXPECT_EQ(quandle_inner_witness({p("y1 |> y2"), p("y2 |> y2")}, 2),
            (QuandleIsoElem{GroupWord{pos(Y2)}}));
  EXPECT_EQ(quandle_inner_witness({p("y1"), p("y2")}, 2), QuandleIsoElem{});
  EXPECT_EQ(quandle_inner_witness({p("y2"), p("y1")}, 2), std::nullopt);
  EXPECT_EQ(quandle_inner_witness({}, 0), QuandleIsoElem{});
  EXPECT_THROW(quandle_inner_witness({p("y1")}, 2), ArityMismatch);
  // Conjugates by different elements are not inner.
  EXPECT_EQ(quandle_inner_witness({p("y1 |> y2"), p("y2 |> y1")}, 2), std::nullopt);
}

TEST(RackInnerWitness, Examples) {
  EXPECT_EQ(rack_inner_witness({p("y1 |> y1", 1)}, 1), (RackIsoElem{1, {}}));
  EXPECT_EQ(rack_inner_witness({p("y1"), p("y2")}, 2), RackIsoElem{});
  EXPECT_EQ(rack_inner_witness({p("y1 |> y2"), p("y2")}, 2), std::nullopt);
  EXPECT_EQ(rack_inner_witness({p("y2"), p("y1")}, 2), std::nullopt);
  // Quandle-inner but not rack-inner: y2 |> y2 differs from y2 in racks.
  EXPECT_EQ(rack_inner_witness({p("y1 |> y2"), p("y2 |> y2")}, 2),
            (RackIsoElem{0, GroupWord{pos(Y2)}}));
  EXPECT_EQ(rack_inner_witness({p("y1 |> y2 |> y1"), p("y2 |> y2 |> y1")}, 2),
            (RackIsoElem{0, GroupWord{pos(Y2), pos(Y1)}}));
  // Self-action on one generator only.
  EXPECT_EQ(rack_inner_witness({p("y1 |> y1"), p("y2")}, 2), std::nullopt);
  EXPECT_EQ(rack_inner_witness({p("y1 |> y1"), p("y2 |> y2")}, 2), (RackIsoElem{1, {}}));
}

// Group laws and agreement with the substitution product, n = 2.
TEST(Group, QuandleLawsAndSubstitutionAgreement) {
  const auto words = enumerate_reduced_words(generator_alphabet(2), 3);
  for (const auto& u : words) {
    const QuandleIsoElem a{u};
    ASSERT_EQ(quandle_canonical(to_term(a), 2), a);
    ASSERT_TRUE(check_generic_commutation(to_term(a), Theory::Quandle, 2));
    for (const auto& v : words) ASSERT_EQ(multiply(a, QuandleIsoElem{v}), subst_product(a, QuandleIsoElem{v}));
  }
}

TEST(Group, RackLawsAndSubstitutionAgreement) {
  const auto words = enumerate_reduced_words(generator_alphabet(2), 2);
  for (long z = -2; z <= 2; ++z)
    for (const auto& u : words) {
      const RackIsoElem a{z, u};
      ASSERT_EQ(rack_canonical(to_term(a), 2), a);
      ASSERT_TRUE(check_generic_commutation(to_term(a), Theory::Rack, 2));
      for (long z2 = -2; z2 <= 2; ++z2)
        for (const auto& v : words) ASSERT_EQ(multiply(a, RackIsoElem{z2, v}), subst_product(a, RackIsoElem{z2, v}));
    }
}

// Canonical elements act as conjugation in the conjugation quandle of S5:
// apply_inner(a, id, q) evaluates to w^-1 q w where w is the word of a.
TEST(ApplyInner, MatchesConjugationInS5) {
  std::mt19937_64 rng(4);
  const auto alphabet = generator_alphabet(2);
  const auto id = identity_images(2);
  for (const auto& u : enumerate_reduced_words(alphabet, 3)) {
    const auto env = oracle::random_assignment(rng, generator_alphabet(2, true));
    oracle::Perm w = oracle::identity_perm();
    for (const auto& l : u.letters) {
      const auto& g = env.at(l.letter);
      w = oracle::compose(w, l.exp == Sign::Pos ? g : oracle::invert(g));
    }
    const Term q = act(atom(Y1), atom(Y2));
    const oracle::Perm expect = oracle::compose(oracle::compose(oracle::invert(w), oracle::eval_conj(q, env)), w);
    ASSERT_EQ(oracle::eval_conj(apply_inner(QuandleIsoElem{u}, id, q, 2), env), expect);
  }
}
