// Independent reference computations for the unit tests. Nothing here calls
// the library's Weyl-group or ring code; weights are plain integer vectors.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Cx = std::complex<double>;

/// r_i in omega coordinates: lambda - lambda_i alpha_i (Cartan matrix column).
inline Vec reflect(int i, Vec v) {
    const auto li = v[i - 1];
    v[i - 1] = -li;
    if (i >= 2) v[i - 2] += li;
    if (i < static_cast<int>(v.size())) v[i] += li;
    return v;
}

/// Orbit by breadth-first closure under simple reflections, each point with
/// the parity of the word that first reached it.
inline std::map<Vec, int> bfs_orbit(const Vec& start) {
    std::map<Vec, int> seen{{start, 1}};
    std::deque<Vec> queue{start};
    while (!queue.empty()) {
        const Vec v = queue.front();
        queue.pop_front();
        for (int i = 1; i <= static_cast<int>(v.size()); ++i) {
            Vec w = reflect(i, v);
            if (!seen.count(w)) {
                seen[w] = -seen[v];
                queue.push_back(w);
            }
        }
    }
    return seen;
}

/// Orbit of the even subgroup: closure under r_i r_j.
inline std::set<Vec> bfs_even_orbit(const Vec& start) {
    std::set<Vec> seen{start};
    std::deque<Vec> queue{start};
    const int n = static_cast<int>(start.size());
    while (!queue.empty()) {
        const Vec v = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                Vec w = reflect(i, reflect(j, v));
                if (seen.insert(w).second) queue.push_back(w);
            }
        }
    }
    return seen;
}

/// e-coordinates of an omega weight: l_k = sum_{j>=k} lambda_j - (1/(n+1)) sum_j j lambda_j.
inline std::vector<double> e_coords(const Vec& lambda) {
    const int n = static_cast<int>(lambda.size());
    double t = 0.0;
    for (int j = 1; j <= n; ++j) t += j * static_cast<double>(lambda[j - 1]);
    std::vector<double> l(n + 1, 0.0);
    for (int k = 1; k <= n + 1; ++k) {
        double s = 0.0;
        for (int j = k; j <= n; ++j) s += static_cast<double>(lambda[j - 1]);
        l[k - 1] = s - t / (n + 1);
    }
    return l;
}

/// e-coordinates of an alpha-coordinate point.
inline std::vector<double> alpha_to_e(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<double> e(n + 1, 0.0);
    for (std::size_t k = 0; k <= n; ++k) e[k] = (k < n ? x[k] : 0.0) - (k > 0 ? x[k - 1] : 0.0);
    return e;
}

inline int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

enum class Sum { All, Signed, Even };

/// sum over all permutations s of S_{n+1} of w(s) exp(2 pi i sum_k l_{s(k)} x_k).
inline Cx permutation_sum(const Vec& lambda, const std::vector<double>& x_alpha, Sum mode) {
    const auto l = e_coords(lambda);
    const auto xe = alpha_to_e(x_alpha);
    std::vector<int> p(l.size());
    std::iota(p.begin(), p.end(), 0);
    Cx total = 0.0;
    do {
        const int sgn = permutation_sign(p);
        if (mode == Sum::Even && sgn < 0) continue;
        double phase = 0.0;
        for (std::size_t k = 0; k < l.size(); ++k) phase += l[p[k]] * xe[k];
        const Cx term = std::polar(1.0, 2.0 * std::numbers::pi * phase);
        total += mode == Sum::Signed ? static_cast<double>(sgn) * term : term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Product of sparse Laurent sums by direct convolution.
inline std::map<Vec, std::int64_t> convolve(const std::map<Vec, std::int64_t>& a,
                                            const std::map<Vec, std::int64_t>& b) {
    std::map<Vec, std::int64_t> out;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) {
            Vec w(u.size());
            for (std::size_t k = 0; k < u.size(); ++k) w[k] = u[k] + v[k];
            out[w] += cu * cv;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline std::map<Vec, std::int64_t> orbit_sum(const Vec& lambda) {
    std::map<Vec, std::int64_t> out;
    for (const auto& [v, s] : bfs_orbit(lambda)) out[v] = 1;
    return out;
}

}  // namespace oracle
