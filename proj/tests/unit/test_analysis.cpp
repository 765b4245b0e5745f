#include <gtest/gtest.h>

#include <numbers>

#include "weylcheb/analysis.hpp"
#include "weylcheb/weyl.hpp"

using namespace weylcheb;

TEST(TorusInnerProduct, DiagonalAndOffDiagonal) {
    const Rank r(2);
    const auto c = [&](std::int64_t a, std::int64_t b) { return exp_sum(Weight(r, {a, b}), OrbitKind::C); };
    EXPECT_EQ(torus_inner_product(c(1, 0), c(1, 0)), 3);
    EXPECT_EQ(torus_inner_product(c(2, 1), c(2, 1)), 6);
    EXPECT_EQ(torus_inner_product(c(1, 0), c(0, 1)), 0);
    const ExpSum s = exp_sum(Weight(Rank(3), {1, 2, 1}), OrbitKind::S);
    EXPECT_EQ(torus_inner_product(s, s), 24);
    EXPECT_THROW(torus_inner_product(c(1, 0), exp_sum(Weight(Rank(1), {1}), OrbitKind::C)), PreconditionError);
}

TEST(Quadrature, Examples) {
    const Rank r(2);
    const auto q1 = quadrature_inner_product(OrbitKind::C, Weight(r, {1, 0}), Weight(r, {1, 0}), 8);
    EXPECT_NEAR(q1.value.real(), 3.0, 1e-9);
    EXPECT_NEAR(q1.value.imag(), 0.0, 1e-9);
    EXPECT_FALSE(q1.aliasing_possible);
    EXPECT_NEAR(std::abs(quadrature_inner_product(OrbitKind::C, Weight(r, {1, 0}), Weight(r, {0, 1}), 8).value),
                0.0, 1e-9);
    const auto q3 = quadrature_inner_product(OrbitKind::S, Weight(Rank(1), {2}), Weight(Rank(1), {2}), 8);
    EXPECT_NEAR(q3.value.real(), 2.0, 1e-9);
}

TEST(Quadrature, BelowNyquistAliases) {
    // C_(2) = 2 cos(4 pi x) sampled at x = 0, 1/2 is constant 2, so it is not
    // orthogonal to C_(0) on that grid.
    const Rank r(1);
    const auto q = quadrature_inner_product(OrbitKind::C, Weight(r, {2}), Weight(r, {0}), 2);
    EXPECT_TRUE(q.aliasing_possible);
    EXPECT_NEAR(q.value.real(), 2.0, 1e-12);
    EXPECT_NE(torus_inner_product(exp_sum(Weight(r, {2}), OrbitKind::C), exp_sum(Weight(r, {0}), OrbitKind::C)), 2);
    EXPECT_THROW(quadrature_inner_product(OrbitKind::C, Weight(r, {2}), Weight(r, {0}), 0), PreconditionError);
}

TEST(Orthogonality, SuitesPassInSmallRanks) {
    for (int n = 1; n <= 2; ++n) {
        for (OrbitKind k : {OrbitKind::C, OrbitKind::S, OrbitKind::E}) {
            const auto rep = orthogonality_suite(k, Rank(n), 3, 16);
            EXPECT_TRUE(rep.passed) << to_string(k) << n;
            EXPECT_EQ(rep.max_deviation, 0.0);
            EXPECT_LT(rep.max_quadrature_deviation, 1e-9);
            EXPECT_GT(rep.pairs_tested, 0u);
        }
    }
}

TEST(Orthogonality, LabelSets) {
    EXPECT_EQ(orthogonality_labels(OrbitKind::C, Rank(2), 3).size(), 16u);
    EXPECT_EQ(orthogonality_labels(OrbitKind::S, Rank(2), 3).size(), 9u);
    // Dominant labels plus r_1 of each generic one.
    EXPECT_EQ(orthogonality_labels(OrbitKind::E, Rank(2), 3).size(), 25u);
}

TEST(Frames, OrthonormalAndInHyperplane) {
    for (int n = 1; n <= 5; ++n) {
        for (Stencil s : {Stencil::Roots, Stencil::GramSchmidt, Stencil::GramSchmidtReversed}) {
            const auto f = stencil_frame(Rank(n), s);
            // sum_v w_v v v^T must be the projector onto the hyperplane.
            for (int i = 0; i <= n; ++i) {
                for (int j = 0; j <= n; ++j) {
                    double m = 0.0;
                    for (std::size_t d = 0; d < f.directions.size(); ++d) {
                        m += f.weights[d] * f.directions[d][i] * f.directions[d][j];
                    }
                    const double proj = (i == j ? 1.0 : 0.0) - 1.0 / (n + 1);
                    EXPECT_NEAR(m, proj, 1e-12);
                }
            }
        }
        const auto gs = hyperplane_frame(Rank(n));
        for (std::size_t a = 0; a < gs.size(); ++a) {
            double sum = 0.0;
            for (double v : gs[a]) sum += v;
            EXPECT_NEAR(sum, 0.0, 1e-12);
            for (std::size_t b = 0; b < gs.size(); ++b) {
                double dot = 0.0;
                for (int k = 0; k <= n; ++k) dot += gs[a][k] * gs[b][k];
                EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-12);
            }
        }
    }
}

TEST(Laplacian, Examples) {
    const std::vector<double> x{0.137, -0.137};
    const auto r = laplacian_eigenvalue_check(OrbitKind::C, Weight(Rank(1), {1}), x, 1e-3);
    EXPECT_FALSE(r.inconclusive);
    EXPECT_LT(r.relative_error, 1e-4);
    const auto z = laplacian_eigenvalue_check(OrbitKind::C, Weight::zero(Rank(2)), std::vector<double>{0.1, 0.2, -0.3}, 1e-3);
    EXPECT_LT(z.relative_error, 1e-9);

    std::mt19937_64 rng(kDefaultSeed);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_alpha_point(Rank(2), rng).to_e();
        EXPECT_LT(laplacian_eigenvalue_check(OrbitKind::S, Weight(Rank(2), {1, 1}), p, 1e-3).relative_error, 1e-4);
    }
}

TEST(Laplacian, FramesAgreeAwayFromNodalSet) {
    // Rotation invariance: all stencils approximate the same operator. Compare
    // at points where |f| is a sizeable fraction of its maximum.
    std::mt19937_64 rng(77);
    const Weight w(Rank(3), {1, 2, 1});
    int compared = 0;
    while (compared < 10) {
        const auto p = random_alpha_point(Rank(3), rng).to_e();
        if (std::abs(eval_C_e(w, p)) < 4.0) continue;
        const auto a = laplacian_eigenvalue_check(OrbitKind::C, w, p, 1e-3, 1, Stencil::Roots);
        const auto b = laplacian_eigenvalue_check(OrbitKind::C, w, p, 1e-3, 1, Stencil::GramSchmidt);
        const auto c = laplacian_eigenvalue_check(OrbitKind::C, w, p, 1e-3, 1, Stencil::GramSchmidtReversed);
        EXPECT_LT(a.relative_error, 1e-4);
        EXPECT_LT(b.relative_error, 1e-4);
        EXPECT_LT(c.relative_error, 1e-4);
        ++compared;
    }
}

TEST(Laplacian, SecondOrderConvergence) {
    std::mt19937_64 rng(5);
    const Weight w(Rank(2), {2, 1});
    for (OrbitKind k : {OrbitKind::C, OrbitKind::S, OrbitKind::E}) {
        const auto p = random_alpha_point(Rank(2), rng).to_e();
        const auto a = laplacian_eigenvalue_check(k, w, p, 2e-3);
        const auto b = laplacian_eigenvalue_check(k, w, a.point, 1e-3);
        const double ratio = a.relative_error / b.relative_error;
        EXPECT_GT(ratio, 3.0);
        EXPECT_LT(ratio, 5.0);
    }
}

TEST(Laplacian, Preconditions) {
    const std::vector<double> x{0.1, -0.1};
    EXPECT_THROW(laplacian_eigenvalue_check(OrbitKind::C, Weight(Rank(1), {1}), x, 0.02), PreconditionError);
    EXPECT_THROW(laplacian_eigenvalue_check(OrbitKind::C, Weight(Rank(1), {1}), x, 0.0), PreconditionError);
    EXPECT_THROW(laplacian_eigenvalue_check(OrbitKind::S, Weight(Rank(2), {1, 0}), std::vector<double>{0.1, 0, -0.1}, 1e-3),
                 PreconditionError);
}

TEST(Laplacian, RetriesAtZerosOfF) {
    // S_(1) vanishes at x = 0; a fresh point must be drawn.
    const std::vector<double> x{0.0, 0.0};
    const auto r = laplacian_eigenvalue_check(OrbitKind::S, Weight(Rank(1), {1}), x, 1e-3);
    EXPECT_FALSE(r.inconclusive);
    EXPECT_NE(r.point[0], 0.0);
    EXPECT_LT(r.relative_error, 1e-4);
}

TEST(Symmetry, Examples) {
    EXPECT_TRUE(symmetry_suite(Weight(Rank(2), {1, 1}), 100).passed);
    EXPECT_TRUE(symmetry_suite(Weight::zero(Rank(3)), 10).passed);
    for (int n = 1; n <= 3; ++n) {
        EXPECT_TRUE(symmetry_suite(Weight(Rank(n), std::vector<std::int64_t>(n, 2)), 30).passed);
    }
    EXPECT_TRUE(symmetry_suite(Weight(Rank(3), {2, 0, 1}), 30).passed);
    EXPECT_THROW(symmetry_suite(Weight(Rank(2), {-1, 1}), 10), PreconditionError);
}

TEST(Symmetry, A1SIsOdd) {
    const Weight w(Rank(1), {3});
    for (double t : {0.1, 0.27, 0.4}) {
        const std::vector<double> x{t, -t};
        const auto xr = reflect(1, std::span<const double>(x));
        EXPECT_NEAR(std::abs(eval_S_e(w, xr).value + eval_S_e(w, x).value), 0.0, 1e-12);
    }
}

TEST(DetFormsSuite, PassesUpToRankFour) {
    for (int n = 1; n <= 4; ++n) {
        const auto rep = detforms_suite(Rank(n), 20, 3);
        EXPECT_TRUE(rep.passed) << n;
    }
}
