#include "weylcheb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weylcheb/weyl.hpp"

namespace weylcheb {

BigInt torus_inner_product(const ExpSum& a, const ExpSum& b) {
    if (!(a.rank() == b.rank())) throw PreconditionError("rank mismatch in inner product");
    const ExpSum& small = a.size() <= b.size() ? a : b;
    const ExpSum& large = a.size() <= b.size() ? b : a;
    BigInt total = 0;
    for (const auto& [mu, c] : small.terms()) {
        auto it = large.terms().find(mu);
        if (it != large.terms().end()) total += c * it->second;
    }
    return total;
}

namespace {

std::int64_t max_abs_exponent(const ExpSum& s) {
    std::int64_t m = 0;
    for (const auto& [mu, c] : s.terms())
        for (auto v : mu) m = std::max(m, v < 0 ? -v : v);
    return m;
}

// Values of s at the grid points k/N, k in {0..N-1}^n, in row-major order.
// Phases are exact residues mod N.
std::vector<Complex> grid_values(const ExpSum& s, int points_per_axis) {
    const int n = s.rank().value();
    const std::int64_t N = points_per_axis;
    std::vector<Complex> roots(static_cast<std::size_t>(N));
    for (std::int64_t p = 0; p < N; ++p) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(N);
        roots[static_cast<std::size_t>(p)] = {std::cos(angle), std::sin(angle)};
    }
    std::size_t total = 1;
    for (int j = 0; j < n; ++j) total *= static_cast<std::size_t>(N);

    std::vector<Complex> out(total);
    std::vector<std::int64_t> k(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<Complex> terms;
        terms.reserve(s.size());
        for (const auto& [mu, c] : s.terms()) {
            std::int64_t phase = 0;
            for (int j = 0; j < n; ++j) phase += mu[j] * k[j];
            phase %= N;
            if (phase < 0) phase += N;
            terms.push_back(c.convert_to<double>() * roots[static_cast<std::size_t>(phase)]);
        }
        out[idx] = pairwise_sum(terms);
        for (int j = n - 1; j >= 0; --j) {
            if (++k[j] < N) break;
            k[j] = 0;
        }
    }
    return out;
}

Complex grid_inner(const std::vector<Complex>& fa, const std::vector<Complex>& fb) {
    std::vector<Complex> prods(fa.size());
    for (std::size_t i = 0; i < fa.size(); ++i) prods[i] = fa[i] * std::conj(fb[i]);
    return pairwise_sum(prods) / static_cast<double>(fa.size());
}

std::int64_t expected_diagonal(OrbitKind kind, const Weight& lambda) {
    switch (kind) {
        case OrbitKind::C: return static_cast<std::int64_t>(orbit_size(lambda));
        case OrbitKind::S: return static_cast<std::int64_t>(weyl_group_order(lambda.rank));
        case OrbitKind::E: {
            const auto dom = dominant_representative(lambda).weight;
            const auto full = orbit_size(dom);
            return static_cast<std::int64_t>(is_generic(dom) ? full / 2 : full);
        }
    }
    return 0;
}

}  // namespace

QuadratureResult quadrature_inner_product(OrbitKind kind, const Weight& a, const Weight& b,
                                          int points_per_axis) {
    if (points_per_axis < 1) throw PreconditionError("quadrature needs at least one point per axis");
    const ExpSum sa = exp_sum(a, kind);
    const ExpSum sb = exp_sum(b, kind);
    const auto bound = 2 * std::max(max_abs_exponent(sa), max_abs_exponent(sb));
    const Complex v = grid_inner(grid_values(sa, points_per_axis), grid_values(sb, points_per_axis));
    return {v, points_per_axis <= bound};
}

std::vector<Weight> orthogonality_labels(OrbitKind kind, Rank n, int coord_bound) {
    std::vector<Weight> out;
    const std::int64_t lo = kind == OrbitKind::S ? 1 : 0;
    std::vector<std::int64_t> c(n.value(), lo);
    if (coord_bound < lo) return out;
    while (true) {
        Weight w(n, c);
        out.push_back(w);
        if (kind == OrbitKind::E && is_generic(w)) out.push_back(reflect(1, w));
        int j = n.value() - 1;
        while (j >= 0 && c[j] == coord_bound) c[j--] = lo;
        if (j < 0) break;
        ++c[j];
    }
    return out;
}

OrthogonalityReport orthogonality_suite(OrbitKind kind, Rank n, int coord_bound, int quadrature_points,
                                        double tolerance) {
    OrthogonalityReport rep{};
    rep.kind = kind;
    rep.rank = n.value();
    rep.coord_bound = coord_bound;
    rep.quadrature_points = quadrature_points;
    const auto labels = orthogonality_labels(kind, n, coord_bound);
    std::vector<ExpSum> sums;
    sums.reserve(labels.size());
    for (const auto& w : labels) sums.push_back(exp_sum(w, kind));

    std::vector<std::vector<Complex>> grids;
    if (quadrature_points > 0) {
        grids.reserve(sums.size());
        for (const auto& s : sums) grids.push_back(grid_values(s, quadrature_points));
    }

    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = 0; j < labels.size(); ++j) {
            ++rep.pairs_tested;
            const BigInt exact = torus_inner_product(sums[i], sums[j]);
            const std::int64_t expected = i == j ? expected_diagonal(kind, labels[i]) : 0;
            const double dev = std::abs(exact.convert_to<double>() - static_cast<double>(expected));
            rep.max_deviation = std::max(rep.max_deviation, dev);
            if (exact != expected) {
                rep.failures.push_back(std::string("<") + to_string(kind) + labels[i].to_string() + ", " +
                                       to_string(kind) + labels[j].to_string() + "> = " + exact.str() +
                                       ", expected " + std::to_string(expected));
            }
            if (!grids.empty()) {
                const Complex q = grid_inner(grids[i], grids[j]);
                const double qdev = std::abs(q - exact.convert_to<double>());
                rep.max_quadrature_deviation = std::max(rep.max_quadrature_deviation, qdev);
                const auto bound = 2 * std::max(max_abs_exponent(sums[i]), max_abs_exponent(sums[j]));
                if (quadrature_points <= bound) ++rep.aliasing_pairs;
                if (qdev > tolerance) {
                    rep.failures.push_back("quadrature mismatch for " + labels[i].to_string() + ", " +
                                           labels[j].to_string());
                }
            }
        }
    }
    rep.passed = rep.failures.empty();
    return rep;
}

std::vector<std::vector<double>> hyperplane_frame(Rank n, int variant) {
    const int dim = n.dim();
    std::vector<std::vector<double>> raw;
    for (int i = 0; i < n.value(); ++i) {
        std::vector<double> v(dim, 0.0);
        v[i] = 1.0;
        v[i + 1] = -1.0;
        raw.push_back(std::move(v));
    }
    if (variant == 1) std::reverse(raw.begin(), raw.end());

    std::vector<std::vector<double>> frame;
    for (auto v : raw) {
        for (const auto& u : frame) {
            double dot = 0.0;
            for (int k = 0; k < dim; ++k) dot += v[k] * u[k];
            for (int k = 0; k < dim; ++k) v[k] -= dot * u[k];
        }
        double norm = 0.0;
        for (double c : v) norm += c * c;
        norm = std::sqrt(norm);
        for (double& c : v) c /= norm;
        frame.push_back(std::move(v));
    }
    return frame;
}

StencilFrame stencil_frame(Rank n, Stencil stencil) {
    StencilFrame f;
    if (stencil != Stencil::Roots) {
        f.directions = hyperplane_frame(n, stencil == Stencil::GramSchmidt ? 0 : 1);
        f.weights.assign(f.directions.size(), 1.0);
        return f;
    }
    const int dim = n.dim();
    const double w = 2.0 / dim;
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            std::vector<double> v(dim, 0.0);
            v[i] = std::numbers::sqrt2 / 2;
            v[j] = -std::numbers::sqrt2 / 2;
            f.directions.push_back(std::move(v));
            f.weights.push_back(w);
        }
    }
    return f;
}

AlphaPoint random_alpha_point(Rank n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(n.value());
    for (double& v : x) v = u(rng);
    return AlphaPoint(n, std::move(x));
}

Weight random_weight(Rank n, std::int64_t lo, std::int64_t hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> u(lo, hi);
    std::vector<std::int64_t> c(n.value());
    for (auto& v : c) v = u(rng);
    return Weight(n, std::move(c));
}

LaplacianResult laplacian_eigenvalue_check(OrbitKind kind, const Weight& lambda, std::span<const double> x_e,
                                           double h, std::uint64_t seed, Stencil stencil) {
    if (!(h > 0.0 && h <= 0.01)) throw PreconditionError("step h must lie in (0, 0.01]");
    if (x_e.size() != static_cast<std::size_t>(lambda.rank.dim())) {
        throw PreconditionError("e-point needs n+1 coordinates");
    }
    if (kind == OrbitKind::S && !lambda.is_strictly_dominant()) {
        throw PreconditionError("S Laplacian check requires a strictly dominant weight, got " + lambda.to_string());
    }
    auto f = [&](std::span<const double> p) -> Complex {
        switch (kind) {
            case OrbitKind::C: return eval_C_e(lambda, p);
            case OrbitKind::S: return eval_S_e(lambda, p).value;
            case OrbitKind::E: return eval_E_e(lambda, p);
        }
        return {};
    };
    // Validates lambda for the kind before any retry loop.
    f(x_e);

    const StencilFrame frame = stencil_frame(lambda.rank, stencil);
    const double norm2 = inner_product(lambda, lambda).convert_to<double>();
    const double eig = 4.0 * std::numbers::pi * std::numbers::pi * norm2;

    std::mt19937_64 rng(seed);
    std::vector<double> x(x_e.begin(), x_e.end());
    constexpr int kMaxAttempts = 32;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const Complex f0 = f(x);
        if (std::abs(f0) >= 1e-6) {
            Complex lap{};
            std::vector<double> xp(x.size()), xm(x.size());
            for (std::size_t d = 0; d < frame.directions.size(); ++d) {
                const auto& v = frame.directions[d];
                for (std::size_t k = 0; k < x.size(); ++k) {
                    xp[k] = x[k] + h * v[k];
                    xm[k] = x[k] - h * v[k];
                }
                lap += frame.weights[d] * (f(xp) - 2.0 * f0 + f(xm)) / (h * h);
            }
            LaplacianResult r;
            r.point = x;
            r.value = f0;
            r.relative_error = eig > 0.0 ? std::abs(lap + eig * f0) / (eig * std::abs(f0))
                                         : std::abs(lap) / std::abs(f0);
            return r;
        }
        x = random_alpha_point(lambda.rank, rng).to_e();
    }
    LaplacianResult r;
    r.inconclusive = true;
    r.point = x;
    return r;
}

SymmetryReport symmetry_suite(const Weight& lambda, int trials, std::uint64_t seed, double relative_tolerance) {
    if (!lambda.is_dominant()) {
        throw PreconditionError("symmetry suite requires a dominant weight, got " + lambda.to_string());
    }
    const Rank n = lambda.rank;
    SymmetryReport rep{lambda, trials, seed, static_cast<double>(orbit_size(lambda))};
    rep.tolerance = relative_tolerance;
    const bool strict = lambda.is_strictly_dominant();
    const bool generic = is_generic(lambda);

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const AlphaPoint x = random_alpha_point(n, rng);
        const auto xe = x.to_e();
        const Complex c = eval_C(lambda, x);
        const Complex s = eval_S(lambda, x).value;
        const Complex e = eval_E(lambda, x);

        std::vector<double> neg(xe.size());
        for (std::size_t k = 0; k < xe.size(); ++k) neg[k] = -xe[k];
        rep.max_conjugation_deviation =
            std::max({rep.max_conjugation_deviation, std::abs(eval_C_e(lambda, neg) - std::conj(c)),
                      std::abs(eval_S_e(lambda, neg).value - std::conj(s))});

        for (int i = 1; i <= n.value(); ++i) {
            const auto xr = reflect(i, std::span<const double>(xe));
            rep.max_c_deviation = std::max(rep.max_c_deviation, std::abs(eval_C_e(lambda, xr) - c));
            if (strict) rep.max_s_deviation = std::max(rep.max_s_deviation, std::abs(eval_S_e(lambda, xr).value + s));

            const Weight lr = reflect(i, lambda);
            const Complex e_reflected_label = eval_E(lr, x);
            double dev = std::abs(e_reflected_label - eval_E_e(lambda, xr));
            const Complex closed = generic ? 0.5 * (c - s) : e;
            dev = std::max(dev, std::abs(e_reflected_label - closed));
            rep.max_e_deviation = std::max(rep.max_e_deviation, dev);
        }
    }
    const double limit = relative_tolerance * std::max(1.0, rep.scale);
    rep.passed = rep.max_c_deviation < limit && rep.max_s_deviation < limit && rep.max_e_deviation < limit &&
                 rep.max_conjugation_deviation < limit;
    return rep;
}

DetFormsReport detforms_suite(Rank n, int samples, int coord_bound, std::uint64_t seed, double tolerance) {
    if (coord_bound < 1) throw PreconditionError("coordinate bound must be at least 1");
    DetFormsReport rep{n.value(), samples, seed, tolerance};
    std::mt19937_64 rng(seed);
    const double group = static_cast<double>(weyl_group_order(n));

    for (int t = 0; t < samples; ++t) {
        const Weight lambda = random_weight(n, 1, coord_bound, rng);
        const AlphaPoint x = random_alpha_point(n, rng);
        const auto xe = x.to_e();
        const EWeight l = omega_to_e(lambda);

        const Complex plus = perm_D_plus(l, xe);
        const Complex minus = det_D_minus(l, xe);
        const Complex alt = sdet_D_alt(l, xe);
        const Complex c = eval_C(lambda, x);
        const Complex s = eval_S(lambda, x).value;
        const Complex e = eval_E(lambda, x);

        rep.max_plus_deviation = std::max(rep.max_plus_deviation, std::abs(plus - c));
        rep.max_minus_deviation = std::max(rep.max_minus_deviation, std::abs(minus - s));
        rep.max_alt_deviation = std::max(rep.max_alt_deviation, std::abs(alt - e));
        rep.max_alt_half_deviation = std::max(rep.max_alt_half_deviation, std::abs(alt - 0.5 * (plus + minus)));
        if (n.dim() <= 8) {
            const auto mat = exponential_matrix(l, xe);
            rep.max_ryser_deviation =
                std::max(rep.max_ryser_deviation, std::abs(permanent_ryser(mat) - permanent_naive(mat)));
        }

        // A wall weight: zero out one coordinate.
        Weight wall = lambda;
        std::uniform_int_distribution<int> pick(0, n.value() - 1);
        wall.coords[pick(rng)] = 0;
        const EWeight lw = omega_to_e(wall);
        const double k = group / static_cast<double>(orbit_size(wall));
        const Complex cw = eval_C(wall, x);
        const Complex ew = eval_E(wall, x);
        rep.max_plus_deviation = std::max(rep.max_plus_deviation, std::abs(perm_D_plus(lw, xe) - k * cw));
        rep.max_wall_deviation =
            std::max({rep.max_wall_deviation, std::abs(det_D_minus(lw, xe)), std::abs(eval_S(wall, x).value),
                      std::abs(sdet_D_alt(lw, xe) - 0.5 * k * ew), std::abs(ew - cw)});
    }
    rep.passed = rep.max_plus_deviation < tolerance && rep.max_minus_deviation < tolerance &&
                 rep.max_alt_deviation < tolerance && rep.max_alt_half_deviation < tolerance &&
                 rep.max_ryser_deviation < tolerance && rep.max_wall_deviation < tolerance;
    return rep;
}

}  // namespace weylcheb
