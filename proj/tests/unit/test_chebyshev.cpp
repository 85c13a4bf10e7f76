#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "quadbound/chebyshev.hpp"
#include "quadbound/errors.hpp"

using namespace quadbound;

TEST(EvalT, KnownValues) {
    EXPECT_DOUBLE_EQ(eval_T(0, 0.3), 1.0);
    EXPECT_DOUBLE_EQ(eval_T(1, 0.3), 0.3);
    EXPECT_NEAR(eval_T(3, 0.5), -1.0, 1e-15);
    EXPECT_NEAR(eval_T(2, 0.7), 2 * 0.49 - 1, 1e-15);
}

TEST(EvalT, MatchesCosineOfMultipleAngle) {
    for (int n = 0; n <= 30; ++n) {
        for (double theta : {0.1, 0.9, 2.0, 3.0}) {
            EXPECT_NEAR(eval_T(n, std::cos(theta)), std::cos(n * theta), 1e-12) << n << " " << theta;
        }
    }
}

TEST(EvalT, DomainChecks) {
    EXPECT_THROW((void)eval_T(3, 1.1), DomainError);
    EXPECT_THROW((void)eval_T(-1, 0.0), ParameterError);
    EXPECT_NEAR(eval_T(4, 1.0 + 1e-13), 1.0, 1e-12);
}

TEST(ScaledT, SineOverN) {
    for (int n = 1; n <= 12; ++n) {
        for (double theta : {0.2, 1.3, 2.9}) {
            EXPECT_NEAR(eval_scaled_T(n, std::cos(theta)), std::sin(n * theta) / n, 1e-14);
        }
        EXPECT_EQ(eval_scaled_T(n, 1.0), 0.0);
        EXPECT_EQ(eval_scaled_T(n, -1.0), 0.0);
    }
    EXPECT_THROW((void)eval_scaled_T(0, 0.5), ParameterError);
}

TEST(ModeCombination, AddAndCancel) {
    ModeCombination c;
    c.add(4, Rational(1, 3));
    c.add(4, Rational(-1, 3));
    EXPECT_TRUE(c.empty());
    c.add(7, 0);
    EXPECT_TRUE(c.empty());
    c.add(2, Rational(1, 2));
    c.add(5, -1);
    EXPECT_EQ(c.min_mode(), 2);
    EXPECT_EQ(c.max_mode(), 5);
    EXPECT_EQ(c.coefficient(3), 0);
    EXPECT_EQ(c.coefficient(5), -1);
}

TEST(RewriteOnce, SingleMode) {
    ModeCombination s3;
    s3.add(3, 1);
    const auto out = rewrite_once(s3);
    EXPECT_EQ(out.coefficient(2), Rational(-1, 6));
    EXPECT_EQ(out.coefficient(4), Rational(1, 6));
    EXPECT_EQ(out.terms().size(), 2u);

    ModeCombination s1;
    s1.add(1, 1);
    EXPECT_THROW((void)rewrite_once(s1), ParameterError);
}

TEST(LemmaKey, HandWorkedCase) {
    // Two rewrites of S_5: S_3/80 - S_5/48 + S_7/120.
    const auto c = lemma_key_expansion(5, 2);
    EXPECT_EQ(c.coefficient(3), Rational(1, 80));
    EXPECT_EQ(c.coefficient(5), Rational(-1, 48));
    EXPECT_EQ(c.coefficient(7), Rational(1, 120));
    EXPECT_EQ(c.terms().size(), 3u);
}

TEST(LemmaKey, MatchesBinomialClosedForm) {
    for (int n = 2; n <= 40; ++n) {
        for (int r = 1; r <= std::min(12, n - 1); ++r) {
            const auto c = lemma_key_expansion(n, r);
            ASSERT_EQ(c.terms().size(), static_cast<std::size_t>(r + 1)) << n << "," << r;
            for (int k = 0; k <= r; ++k) {
                ASSERT_EQ(c.coefficient(n - r + 2 * k), oracle::key_coefficient(n, r, k)) << n << "," << r << "," << k;
            }
        }
    }
}

TEST(LemmaKey, Preconditions) {
    EXPECT_THROW((void)lemma_key_expansion(1, 1), ParameterError);
    EXPECT_THROW((void)lemma_key_expansion(5, 0), ParameterError);
    EXPECT_THROW((void)lemma_key_expansion(5, 5), ParameterError);
}

TEST(LemmaKey2, Examples) {
    EXPECT_EQ(centered_product(5, 2), 105);
    const auto s = lemma_key2_check(5, 2);
    EXPECT_EQ(s.lhs, Rational(1, 105));
    EXPECT_EQ(s.rhs, Rational(1, 105));
    const auto t = lemma_key2_check(40, 12);
    EXPECT_EQ(t.lhs, t.rhs);
}

TEST(BetaLadder, SmallCaseTerms) {
    const auto ladder = beta_ladder(5, 2);
    ASSERT_EQ(ladder.terms.size(), 4u);
    const int modes[] = {3, 5, 5, 7};
    const int signs[] = {1, -1, -1, 1};
    const int betas[] = {80, 80, 120, 120};
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(ladder.terms[i].mode, modes[i]);
        EXPECT_EQ(ladder.terms[i].sign, signs[i]);
        EXPECT_EQ(ladder.terms[i].beta, betas[i]);
    }
    EXPECT_EQ(ladder_beta_min(5, 2), 80);
    EXPECT_EQ(ladder_beta_max(5, 2), 120);
    EXPECT_EQ(ladder.merged(), lemma_key_expansion(5, 2));
}

TEST(BetaLadder, PairsShareDenominators) {
    const auto ladder = beta_ladder(20, 8);
    ASSERT_EQ(ladder.terms.size(), 256u);
    for (std::size_t i = 1; i < ladder.terms.size(); i += 2) {
        EXPECT_EQ(ladder.terms[i].beta, ladder.terms[i - 1].beta);
    }
    EXPECT_EQ(ladder.terms.front().beta, ladder_beta_min(20, 8));
    EXPECT_EQ(ladder.terms.back().beta, ladder_beta_max(20, 8));
}

TEST(RationalFormat, ToString) {
    EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
    EXPECT_EQ(to_string(Rational(6, 3)), "2");
}
