#include "weylcheb/orbit_functions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

namespace weylcheb {

const char* to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::C: return "C";
        case OrbitKind::S: return "S";
        case OrbitKind::E: return "E";
    }
    return "?";
}

AlphaPoint::AlphaPoint(Rank r, std::vector<double> c) : rank(r), coords(std::move(c)) {
    if (coords.size() != static_cast<std::size_t>(r.value())) {
        throw PreconditionError("point has " + std::to_string(coords.size()) +
                                " coordinates, rank is " + std::to_string(r.value()));
    }
    for (double v : coords)
        if (!std::isfinite(v)) throw PreconditionError("point coordinates must be finite");
}

AlphaPoint AlphaPoint::from_e(Rank r, std::span<const double> e) {
    if (e.size() != static_cast<std::size_t>(r.dim())) {
        throw PreconditionError("e-point needs n+1 coordinates");
    }
    return AlphaPoint(r, e_to_alpha(e));
}

std::vector<double> AlphaPoint::to_e() const { return alpha_to_e(coords); }

Complex unit_phase(double t) {
    t -= std::nearbyint(t);
    const double angle = 2.0 * std::numbers::pi * t;
    return {std::cos(angle), std::sin(angle)};
}

Complex pairwise_sum(std::span<const Complex> terms) {
    if (terms.size() <= 8) {
        Complex s{};
        for (const auto& t : terms) s += t;
        return s;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

namespace {

double alpha_phase(const Weight& mu, const std::vector<double>& x) {
    double t = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) t += static_cast<double>(mu.coords[j]) * x[j];
    return t;
}

double e_phase(const Weight& mu, std::span<const double> x_e) {
    const auto scaled = scaled_e_coords(mu);
    double t = 0.0;
    for (std::size_t k = 0; k < scaled.size(); ++k) t += static_cast<double>(scaled[k]) * x_e[k];
    return t / mu.rank.dim();
}

void check_point(const Weight& lambda, const AlphaPoint& x) {
    if (!(lambda.rank == x.rank)) throw PreconditionError("rank mismatch between weight and point");
}

void check_e_point(const Weight& lambda, std::span<const double> x_e) {
    if (x_e.size() != static_cast<std::size_t>(lambda.rank.dim())) {
        throw PreconditionError("e-point needs n+1 coordinates");
    }
    double sum = 0.0, scale = 0.0;
    for (double v : x_e) {
        if (!std::isfinite(v)) throw PreconditionError("point coordinates must be finite");
        sum += v;
        scale += std::abs(v);
    }
    if (std::abs(sum) > 1e-12 * std::max(1.0, scale)) {
        throw PreconditionError("e-point does not lie on the hyperplane sum = 0");
    }
}

void require_dominant(const Weight& lambda, const char* what) {
    if (!lambda.is_dominant()) {
        throw PreconditionError(std::string(what) + " requires a dominant weight, got " +
                                lambda.to_string());
    }
}

template <class Phase>
Complex orbit_sum(const SignedOrbit& orb, bool signed_sum, Phase phase) {
    std::vector<Complex> terms;
    terms.reserve(orb.points.size());
    for (const auto& p : orb.points) {
        Complex v = unit_phase(phase(p.weight));
        terms.push_back(signed_sum && p.sign < 0 ? -v : v);
    }
    return pairwise_sum(terms);
}

template <class Phase>
Complex plain_sum(const std::vector<Weight>& points, Phase phase) {
    std::vector<Complex> terms;
    terms.reserve(points.size());
    for (const auto& w : points) terms.push_back(unit_phase(phase(w)));
    return pairwise_sum(terms);
}

}  // namespace

bool in_even_domain(const Weight& lambda) {
    if (lambda.is_dominant()) return true;
    for (int i = 1; i <= lambda.rank.value(); ++i)
        if (reflect(i, lambda).is_dominant()) return true;
    return false;
}

Complex eval_C(const Weight& lambda, const AlphaPoint& x) {
    require_dominant(lambda, "C-function");
    check_point(lambda, x);
    return orbit_sum(orbit(lambda), false, [&](const Weight& mu) { return alpha_phase(mu, x.coords); });
}

SValue eval_S(const Weight& lambda, const AlphaPoint& x) {
    require_dominant(lambda, "S-function");
    check_point(lambda, x);
    if (!lambda.is_strictly_dominant()) return {Complex{0.0, 0.0}, true};
    return {orbit_sum(orbit(lambda), true, [&](const Weight& mu) { return alpha_phase(mu, x.coords); }),
            false};
}

Complex eval_E(const Weight& lambda, const AlphaPoint& x) {
    if (!in_even_domain(lambda)) {
        throw PreconditionError("E-function requires lambda in P+ or r_i P+, got " + lambda.to_string());
    }
    check_point(lambda, x);
    return plain_sum(even_orbit(lambda), [&](const Weight& mu) { return alpha_phase(mu, x.coords); });
}

Complex eval_C_e(const Weight& lambda, std::span<const double> x_e) {
    require_dominant(lambda, "C-function");
    check_e_point(lambda, x_e);
    return orbit_sum(orbit(lambda), false, [&](const Weight& mu) { return e_phase(mu, x_e); });
}

SValue eval_S_e(const Weight& lambda, std::span<const double> x_e) {
    require_dominant(lambda, "S-function");
    check_e_point(lambda, x_e);
    if (!lambda.is_strictly_dominant()) return {Complex{0.0, 0.0}, true};
    return {orbit_sum(orbit(lambda), true, [&](const Weight& mu) { return e_phase(mu, x_e); }), false};
}

Complex eval_E_e(const Weight& lambda, std::span<const double> x_e) {
    if (!in_even_domain(lambda)) {
        throw PreconditionError("E-function requires lambda in P+ or r_i P+, got " + lambda.to_string());
    }
    check_e_point(lambda, x_e);
    return plain_sum(even_orbit(lambda), [&](const Weight& mu) { return e_phase(mu, x_e); });
}

Complex eval_orbit(OrbitKind kind, const Weight& lambda, const AlphaPoint& x) {
    switch (kind) {
        case OrbitKind::C: return eval_C(lambda, x);
        case OrbitKind::S: return eval_S(lambda, x).value;
        case OrbitKind::E: return eval_E(lambda, x);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Determinant forms

namespace {

void check_sorted(const EWeight& lambda, std::span<const double> x) {
    for (std::size_t i = 0; i + 1 < lambda.coords.size(); ++i) {
        if (lambda.coords[i] < lambda.coords[i + 1]) {
            throw PreconditionError("lambda e-coordinates must be weakly decreasing");
        }
    }
    if (x.size() != lambda.coords.size()) throw PreconditionError("x needs n+1 coordinates");
}

bool has_repeated(const EWeight& lambda) {
    for (std::size_t i = 0; i + 1 < lambda.coords.size(); ++i)
        if (lambda.coords[i] == lambda.coords[i + 1]) return true;
    return false;
}

// Visits every permutation of 0..m-1 with its sign.
template <class F>
void for_each_permutation(std::size_t m, F&& visit) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        std::size_t inv = 0;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (perm[a] > perm[b]) ++inv;
        visit(perm, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

ComplexMatrix exponential_matrix(const EWeight& lambda, std::span<const double> x) {
    const std::size_t m = lambda.coords.size();
    ComplexMatrix out{m, std::vector<Complex>(m * m)};
    for (std::size_t j = 0; j < m; ++j) {
        const double l = lambda.coords[j].convert_to<double>();
        for (std::size_t k = 0; k < m; ++k) out.a[j * m + k] = unit_phase(l * x[k]);
    }
    return out;
}

Complex permanent_ryser(const ComplexMatrix& m) {
    const std::size_t n = m.n;
    if (n == 0) return {1.0, 0.0};
    std::vector<Complex> row_sums(n, Complex{});
    Complex total{};
    std::uint64_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const std::uint64_t flipped = next ^ gray;
        const auto col = static_cast<std::size_t>(std::countr_zero(flipped));
        const bool added = (next & flipped) != 0;
        for (std::size_t i = 0; i < n; ++i) row_sums[i] += added ? m(i, col) : -m(i, col);
        gray = next;
        Complex prod{1.0, 0.0};
        for (const auto& s : row_sums) prod *= s;
        const int bits = std::popcount(gray);
        total += (bits % 2 == 0) ? prod : -prod;
    }
    return (n % 2 == 0) ? total : -total;
}

Complex permanent_naive(const ComplexMatrix& m) {
    std::vector<Complex> terms;
    for_each_permutation(m.n, [&](const std::vector<std::size_t>& p, int) {
        Complex prod{1.0, 0.0};
        for (std::size_t i = 0; i < m.n; ++i) prod *= m(i, p[i]);
        terms.push_back(prod);
    });
    return pairwise_sum(terms);
}

Complex determinant(const ComplexMatrix& m) {
    const std::size_t n = m.n;
    std::vector<Complex> a = m.a;
    Complex det{1.0, 0.0};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[pivot * n + c])) pivot = r;
        if (a[pivot * n + c] == Complex{}) return {};
        if (pivot != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[pivot * n + k]);
            det = -det;
        }
        const Complex p = a[c * n + c];
        det *= p;
        for (std::size_t r = c + 1; r < n; ++r) {
            const Complex f = a[r * n + c] / p;
            if (f == Complex{}) continue;
            for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
        }
    }
    return det;
}

Complex alternating_sum(const ComplexMatrix& m) {
    std::vector<Complex> terms;
    for_each_permutation(m.n, [&](const std::vector<std::size_t>& p, int sign) {
        if (sign < 0) return;
        Complex prod{1.0, 0.0};
        for (std::size_t i = 0; i < m.n; ++i) prod *= m(i, p[i]);
        terms.push_back(prod);
    });
    return pairwise_sum(terms);
}

Complex perm_D_plus(const EWeight& lambda, std::span<const double> x) {
    check_sorted(lambda, x);
    const auto mat = exponential_matrix(lambda, x);
    return permanent_ryser(mat);
}

Complex det_D_minus(const EWeight& lambda, std::span<const double> x) {
    check_sorted(lambda, x);
    if (has_repeated(lambda)) return {};
    return determinant(exponential_matrix(lambda, x));
}

Complex sdet_D_alt(const EWeight& lambda, std::span<const double> x) {
    check_sorted(lambda, x);
    return alternating_sum(exponential_matrix(lambda, x));
}

}  // namespace weylcheb
