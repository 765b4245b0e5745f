// Numerical evaluation of the C, S and E orbit functions of A_n and of the
// permanent / determinant / alternating-sum exponential functions on the
// hyperplane sum(x_k) = 0.
//
// Orbit functions take lambda in omega coordinates. The point x is given
// either in alpha coordinates (AlphaPoint), where <mu, x> = sum_j mu_j x_j, or
// directly as an e-point on the hyperplane. Phases are reduced modulo 1
// before exponentiation and orbit sums are accumulated pairwise.
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "weylcheb/lie_core.hpp"
#include "weylcheb/weyl.hpp"

namespace weylcheb {

using Complex = std::complex<double>;

enum class OrbitKind { C, S, E };

const char* to_string(OrbitKind kind);

struct AlphaPoint {
    Rank rank;
    std::vector<double> coords;

    AlphaPoint(Rank r, std::vector<double> c);

    static AlphaPoint from_e(Rank r, std::span<const double> e);
    std::vector<double> to_e() const;
};

/// Value of an S-function. `on_wall` is set when lambda is dominant but not
/// strictly dominant, in which case `value` is exactly zero.
struct SValue {
    Complex value;
    bool on_wall = false;
};

/// e^{2 pi i t}, with t reduced to [-1/2, 1/2] first.
Complex unit_phase(double t);

/// Pairwise (cascade) summation.
Complex pairwise_sum(std::span<const Complex> terms);

Complex eval_C(const Weight& lambda, const AlphaPoint& x);
SValue eval_S(const Weight& lambda, const AlphaPoint& x);
/// E over the even-subgroup orbit of lambda; lambda must lie in P^e.
Complex eval_E(const Weight& lambda, const AlphaPoint& x);

// Same functions with x given by its e-coordinates (n+1 values, sum 0).
Complex eval_C_e(const Weight& lambda, std::span<const double> x_e);
SValue eval_S_e(const Weight& lambda, std::span<const double> x_e);
Complex eval_E_e(const Weight& lambda, std::span<const double> x_e);

/// Dispatch on kind; S on a wall yields zero.
Complex eval_orbit(OrbitKind kind, const Weight& lambda, const AlphaPoint& x);

/// lambda in P^e = P+ union r_i P+.
bool in_even_domain(const Weight& lambda);

// Determinant forms. lambda is an exact e-weight with weakly decreasing
// coordinates; x is a real e-point. The matrix is (e^{2 pi i l_j x_k}).

Complex perm_D_plus(const EWeight& lambda, std::span<const double> x);
Complex det_D_minus(const EWeight& lambda, std::span<const double> x);
Complex sdet_D_alt(const EWeight& lambda, std::span<const double> x);

/// Square complex matrix, row-major.
struct ComplexMatrix {
    std::size_t n;
    std::vector<Complex> a;

    Complex operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

ComplexMatrix exponential_matrix(const EWeight& lambda, std::span<const double> x);

/// Ryser inclusion-exclusion with Gray-code ordering, O(2^n n).
Complex permanent_ryser(const ComplexMatrix& m);
/// Sum over all permutations; kept for cross-checking small sizes.
Complex permanent_naive(const ComplexMatrix& m);
/// LU with partial pivoting.
Complex determinant(const ComplexMatrix& m);
/// Sum over even permutations only.
Complex alternating_sum(const ComplexMatrix& m);

}  // namespace weylcheb
