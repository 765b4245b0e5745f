#include "weylcheb/weyl.hpp"

#include <algorithm>
#include <functional>

namespace weylcheb {

namespace {

void check_index(int i, int n) {
    if (i < 1 || i > n) {
        throw PreconditionError("reflection index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n));
    }
}

bool has_repeat(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

EWeight reflect(int i, const EWeight& x) {
    check_index(i, x.rank.value());
    auto c = x.coords;
    std::swap(c[i - 1], c[i]);
    return EWeight(x.rank, std::move(c));
}

std::vector<double> reflect(int i, std::span<const double> x) {
    check_index(i, static_cast<int>(x.size()) - 1);
    std::vector<double> out(x.begin(), x.end());
    std::swap(out[i - 1], out[i]);
    return out;
}

Weight reflect(int i, const Weight& lambda) {
    const int n = lambda.rank.value();
    check_index(i, n);
    Weight out = lambda;
    const std::int64_t li = lambda.coords[i - 1];
    // alpha_i in omega coordinates is row i of the Cartan matrix.
    out.coords[i - 1] -= 2 * li;
    if (i > 1) out.coords[i - 2] += li;
    if (i < n) out.coords[i] += li;
    return out;
}

int sorting_parity(std::span<const std::int64_t> v) {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (v[a] < v[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

SignedOrbit orbit(const Weight& lambda) {
    if (!lambda.is_dominant()) {
        throw PreconditionError("orbit requires a dominant weight, got " + lambda.to_string());
    }
    auto e = scaled_e_coords(lambda);
    const bool odd_stabilizer = has_repeat(e);

    SignedOrbit result{lambda, {}, {}};
    result.points.reserve(orbit_size(lambda));

    std::sort(e.begin(), e.end());
    do {
        Weight w = weight_from_scaled_e(lambda.rank, e);
        const int sign = sorting_parity(e);
        // Some sigma0 of parity `sign` maps lambda here; the full set of such
        // permutations is sigma0 * Stab(lambda), which contains an even one iff
        // sigma0 is even or the stabilizer contains a transposition.
        if (sign == 1 || odd_stabilizer) result.even_points.push_back(w);
        result.points.push_back({std::move(w), sign});
    } while (std::next_permutation(e.begin(), e.end()));
    return result;
}

DominantRep dominant_representative(const Weight& mu) {
    auto e = scaled_e_coords(mu);
    const int sign = sorting_parity(e);
    std::sort(e.begin(), e.end(), std::greater<>());
    return {weight_from_scaled_e(mu.rank, e), sign};
}

std::uint64_t orbit_size(const Weight& lambda) {
    auto e = scaled_e_coords(lambda);
    std::sort(e.begin(), e.end());
    std::uint64_t size = weyl_group_order(lambda.rank);
    std::size_t run = 1;
    for (std::size_t i = 1; i <= e.size(); ++i) {
        if (i < e.size() && e[i] == e[i - 1]) {
            ++run;
            size /= run;
        } else {
            run = 1;
        }
    }
    return size;
}

std::uint64_t stabilizer_order(const Weight& lambda) {
    return weyl_group_order(lambda.rank) / orbit_size(lambda);
}

bool is_generic(const Weight& lambda) { return !has_repeat(scaled_e_coords(lambda)); }

std::vector<Weight> even_orbit(const Weight& lambda) {
    const auto rep = dominant_representative(lambda);
    auto full = orbit(rep.weight);
    if (!is_generic(rep.weight)) {
        std::vector<Weight> all;
        all.reserve(full.points.size());
        for (auto& p : full.points) all.push_back(std::move(p.weight));
        return all;
    }
    // lambda = sigma(dominant) with parity rep.sign; the even orbit of lambda
    // is the set of points whose parity relative to dominant matches.
    std::vector<Weight> out;
    for (auto& p : full.points)
        if (p.sign == rep.sign) out.push_back(std::move(p.weight));
    return out;
}

}  // namespace weylcheb
