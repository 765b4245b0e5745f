#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "weylcheb/exp_ring.hpp"
#include "weylcheb/weyl.hpp"

using namespace weylcheb;

namespace {

ExpSum from_map(Rank r, const std::map<oracle::Vec, std::int64_t>& m) {
    ExpSum s(r);
    for (const auto& [k, c] : m) s.add_term(k, c);
    return s;
}

ExpSum terms(Rank r, std::initializer_list<std::pair<WeightKey, std::int64_t>> list) {
    ExpSum s(r);
    for (const auto& [k, c] : list) s.add_term(k, c);
    return s;
}

OrbitDecomposition decomposition(Rank r, std::initializer_list<std::pair<WeightKey, std::int64_t>> list) {
    OrbitDecomposition d(r);
    for (const auto& [k, c] : list) d.terms[k] = c;
    return d;
}

Weight random_dominant(int n, int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> u(0, hi);
    std::vector<std::int64_t> c(n);
    for (auto& v : c) v = u(rng);
    return Weight(Rank(n), c);
}

}  // namespace

TEST(HeightOrder, DominantWeightIsOrbitMaximum) {
    for (int n = 1; n <= 4; ++n) {
        std::mt19937_64 rng(n);
        for (int t = 0; t < 20; ++t) {
            const Weight lam = random_dominant(n, 3, rng);
            for (const auto& p : orbit(lam).points) {
                if (!(p.weight == lam)) EXPECT_TRUE(HeightLess{}(p.weight.coords, lam.coords));
            }
        }
    }
    // Plain grlex would rank (1,-1,1) above omega_2 in A_3.
    EXPECT_TRUE(HeightLess{}({1, -1, 1}, {0, 1, 0}));
    EXPECT_EQ(weight_height({1, 0, 0}), 3);
    EXPECT_EQ(weight_height({0, 1, 0}), 4);
}

TEST(HeightOrder, TranslationInvariant) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> u(-4, 4);
    for (int t = 0; t < 500; ++t) {
        WeightKey a(3), b(3), c(3);
        for (int k = 0; k < 3; ++k) a[k] = u(rng), b[k] = u(rng), c[k] = u(rng);
        WeightKey ac(3), bc(3);
        for (int k = 0; k < 3; ++k) ac[k] = a[k] + c[k], bc[k] = b[k] + c[k];
        EXPECT_EQ(HeightLess{}(a, b), HeightLess{}(ac, bc));
    }
}

TEST(ExpSumBasics, AddTermDropsZerosAndChecksRank) {
    ExpSum s{Rank(2)};
    s.add_term({1, 0}, 3);
    s.add_term({1, 0}, -3);
    EXPECT_TRUE(s.empty());
    EXPECT_THROW(s.add_term({1, 0, 0}, 1), PreconditionError);
    EXPECT_THROW(ExpSum(Rank(2)) + ExpSum(Rank(3)), PreconditionError);
    EXPECT_THROW(ExpSum(Rank(2)).leading(), PreconditionError);
}

TEST(ExpSumOf, Examples) {
    EXPECT_EQ(exp_sum(Weight(Rank(2), {1, 0}), OrbitKind::C), terms(Rank(2), {{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}}));
    EXPECT_EQ(exp_sum(Weight(Rank(1), {1}), OrbitKind::S), terms(Rank(1), {{{1}, 1}, {{-1}, -1}}));
    EXPECT_EQ(exp_sum(Weight(Rank(1), {0}), OrbitKind::C), ExpSum::one(Rank(1)));
    EXPECT_THROW(exp_sum(Weight(Rank(2), {1, 0}), OrbitKind::S), PreconditionError);
    EXPECT_THROW(exp_sum(Weight(Rank(2), {-1, 0}), OrbitKind::C), PreconditionError);
    EXPECT_EQ(exp_sum(Weight(Rank(2), {1, 1}), OrbitKind::E).size(), 3u);
}

TEST(ExpSumOf, EvaluatesLikeOrbitFunctions) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0, 1);
    const Weight w(Rank(3), {1, 2, 1});
    const AlphaPoint x(Rank(3), {u(rng), u(rng), u(rng)});
    EXPECT_LT(std::abs(exp_sum(w, OrbitKind::C).evaluate(x) - eval_C(w, x)), 1e-10);
    EXPECT_LT(std::abs(exp_sum(w, OrbitKind::S).evaluate(x) - eval_S(w, x).value), 1e-10);
    EXPECT_LT(std::abs(exp_sum(w, OrbitKind::E).evaluate(x) - eval_E(w, x)), 1e-10);
}

TEST(Multiply, Examples) {
    const ExpSum x = exp_sum(Weight(Rank(1), {1}), OrbitKind::C);
    EXPECT_EQ(multiply(x, x), terms(Rank(1), {{{2}, 1}, {{-2}, 1}, {{0}, 2}}));
    const ExpSum a = exp_sum(Weight(Rank(2), {2, 1}), OrbitKind::S);
    EXPECT_EQ(multiply(a, ExpSum::one(Rank(2))), a);
    const ExpSum c10 = exp_sum(Weight(Rank(2), {1, 0}), OrbitKind::C);
    EXPECT_EQ(multiply(c10, c10).coefficient_sum(), 9);
}

TEST(Multiply, MatchesDirectConvolution) {
    std::mt19937_64 rng(6);
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 10; ++t) {
            const Weight a = random_dominant(n, 3, rng), b = random_dominant(n, 3, rng);
            const auto ref = oracle::convolve(oracle::orbit_sum(a.coords), oracle::orbit_sum(b.coords));
            EXPECT_EQ(multiply(exp_sum(a, OrbitKind::C), exp_sum(b, OrbitKind::C)), from_map(Rank(n), ref));
        }
    }
}

TEST(Decompose, Examples) {
    const Rank r2(2), r1(1);
    const ExpSum c10 = exp_sum(Weight(r2, {1, 0}), OrbitKind::C);
    EXPECT_EQ(decompose_into_C(multiply(c10, c10)), decomposition(r2, {{{2, 0}, 1}, {{0, 1}, 2}}));
    const Weight lam(Rank(3), {1, 0, 2});
    EXPECT_EQ(decompose_into_C(exp_sum(lam, OrbitKind::C)), decomposition(Rank(3), {{{1, 0, 2}, 1}}));
    const ExpSum x = exp_sum(Weight(r1, {1}), OrbitKind::C);
    for (std::int64_t m = 2; m <= 8; ++m) {
        EXPECT_EQ(decompose_into_C(multiply(x, exp_sum(Weight(r1, {m}), OrbitKind::C))),
                  decomposition(r1, {{{m + 1}, 1}, {{m - 1}, 1}}));
    }
    EXPECT_EQ(decompose_into_C(multiply(x, x)), decomposition(r1, {{{2}, 1}, {{0}, 2}}));
}

TEST(Decompose, RoundTripAndCongruence) {
    std::mt19937_64 rng(12);
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 15; ++t) {
            const Weight a = random_dominant(n, 3, rng), b = random_dominant(n, 3, rng);
            const ExpSum prod = multiply(exp_sum(a, OrbitKind::C), exp_sum(b, OrbitKind::C));
            const auto d = decompose_into_C(prod);
            EXPECT_EQ(d.expand(), prod);
            EXPECT_EQ(d.total_points(), BigInt(orbit_size(a) * orbit_size(b)));
            const int cls = (congruence_number(a) + congruence_number(b)) % (n + 1);
            for (const auto& [w, m] : d.terms) {
                EXPECT_GT(m, 0);
                EXPECT_EQ(congruence_number(Weight(Rank(n), w)), cls);
            }
        }
    }
}

TEST(Decompose, RejectsNonInvariantInput) {
    const Rank r(2);
    try {
        decompose_into_C(terms(r, {{{1, 0}, 1}}));
        FAIL() << "expected DecompositionError";
    } catch (const DecompositionError& e) {
        EXPECT_EQ(e.offending(), (WeightKey{-1, 1}));
    }
    EXPECT_THROW(decompose_into_C(terms(r, {{{-1, 1}, 1}})), DecompositionError);
    EXPECT_THROW(decompose_into_C(exp_sum(Weight(r, {1, 0}), OrbitKind::C) * BigInt(-1)), DecompositionError);
}

TEST(ExactDivide, Examples) {
    const Rank r1(1);
    const ExpSum s3 = exp_sum(Weight(r1, {3}), OrbitKind::S), s1 = exp_sum(Weight(r1, {1}), OrbitKind::S);
    EXPECT_EQ(exact_divide(s3, s1), terms(r1, {{{2}, 1}, {{0}, 1}, {{-2}, 1}}));
    EXPECT_EQ(exact_divide(s3, s3), ExpSum::one(r1));

    const Rank r2(2);
    const ExpSum q = exact_divide(exp_sum(Weight(r2, {2, 2}), OrbitKind::S), exp_sum(Weight::rho(r2), OrbitKind::S));
    const auto d = decompose_into_C(q);
    EXPECT_EQ(d, decomposition(r2, {{{1, 1}, 1}, {{0, 0}, 2}}));
    EXPECT_EQ(d.total_points(), 8);
}

TEST(ExactDivide, RecoversFactorsOfRandomProducts) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> c(-3, 3), w(-3, 3);
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 10; ++t) {
            ExpSum a{Rank(n)}, b{Rank(n)};
            for (int k = 0; k < 5; ++k) {
                WeightKey ka(n), kb(n);
                for (int j = 0; j < n; ++j) ka[j] = w(rng), kb[j] = w(rng);
                a.add_term(ka, c(rng));
                b.add_term(kb, c(rng));
            }
            if (a.empty() || b.empty()) continue;
            EXPECT_EQ(exact_divide(multiply(a, b), b), a);
        }
    }
}

TEST(ExactDivide, ReportsNonDivisibility) {
    const Rank r(1);
    const ExpSum s1 = exp_sum(Weight(r, {1}), OrbitKind::S);
    EXPECT_THROW(exact_divide(exp_sum(Weight(r, {1}), OrbitKind::C), s1), DivisionError);
    EXPECT_THROW(exact_divide(s1, ExpSum(r)), PreconditionError);
    EXPECT_EQ(exact_divide(ExpSum(r), s1), ExpSum(r));
}

TEST(Character, Examples) {
    EXPECT_EQ(character(Weight(Rank(1), {4})), decomposition(Rank(1), {{{4}, 1}, {{2}, 1}, {{0}, 1}}));
    EXPECT_EQ(character(Weight::zero(Rank(3))), decomposition(Rank(3), {{{0, 0, 0}, 1}}));
    EXPECT_EQ(character(Weight(Rank(2), {1, 1})), decomposition(Rank(2), {{{1, 1}, 1}, {{0, 0}, 2}}));
}

TEST(Character, DimensionsFollowWeylFormula) {
    // dim V(lambda) = prod_{i<j} (l_i - l_j + j - i) / (j - i) with l = e-coordinates of lambda.
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < 8; ++t) {
            const Weight lam = random_dominant(n, 2, rng);
            const auto l = oracle::e_coords(lam.coords);
            double dim = 1.0;
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) dim *= (l[i] - l[j] + (j - i)) / (j - i);
            EXPECT_EQ(character(lam).total_points(), BigInt(static_cast<std::int64_t>(std::llround(dim))));
        }
    }
}
