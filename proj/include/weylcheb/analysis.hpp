// Verification of orbit-function identities: exact and quadrature inner
// products on the torus, Laplacian eigenvalues, reflection symmetries and the
// permanent/determinant equivalences.
//
// Orthogonality is taken over the full torus [0,1]^n in alpha coordinates,
// where distinct lattice exponentials integrate to zero. The diagonal values
// are then |W_lambda| (C), |W| (S) and |W^e_lambda| (E).
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "weylcheb/exp_ring.hpp"
#include "weylcheb/lie_core.hpp"
#include "weylcheb/orbit_functions.hpp"

namespace weylcheb {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Exact value of the integral over [0,1]^n of a(x) * conj(b(x)).
BigInt torus_inner_product(const ExpSum& a, const ExpSum& b);

struct QuadratureResult {
    Complex value;
    /// N <= 2 max|mu_j|: the rectangle rule may alias.
    bool aliasing_possible;
};

/// Rectangle rule with N points per axis on [0,1]^n.
QuadratureResult quadrature_inner_product(OrbitKind kind, const Weight& a, const Weight& b,
                                          int points_per_axis);

struct OrthogonalityReport {
    OrbitKind kind = OrbitKind::C;
    int rank = 0;
    int coord_bound = 0;
    int quadrature_points = 0;  // 0 when quadrature was skipped
    std::size_t pairs_tested = 0;
    double max_deviation = 0.0;             // exact inner products vs expected
    double max_quadrature_deviation = 0.0;  // quadrature vs exact
    std::size_t aliasing_pairs = 0;
    std::vector<std::string> failures;
    bool passed = true;
};

/// All pairs of labels with coordinates in [0, coord_bound] valid for `kind`
/// (dominant for C, strictly dominant for S, P^e representatives for E).
OrthogonalityReport orthogonality_suite(OrbitKind kind, Rank n, int coord_bound,
                                        int quadrature_points = 0, double tolerance = 1e-9);

/// Labels used by orthogonality_suite.
std::vector<Weight> orthogonality_labels(OrbitKind kind, Rank n, int coord_bound);

/// Orthonormal basis of the hyperplane sum = 0 by Gram-Schmidt on
/// e_i - e_{i+1}; variant 1 processes the vectors in reverse order.
std::vector<std::vector<double>> hyperplane_frame(Rank n, int variant = 0);

/// Direction sets for the finite-difference Laplacian. Each is a tight frame
/// of the hyperplane: sum_v w_v v v^T is the identity there.
enum class Stencil {
    /// Unit vectors along the positive roots e_i - e_j, weight 2/(n+1). The
    /// set is W-invariant, so every point of an orbit sees the same discrete
    /// eigenvalue and the relative error does not depend on x.
    Roots,
    GramSchmidt,          // hyperplane_frame(n, 0)
    GramSchmidtReversed,  // hyperplane_frame(n, 1)
};

struct StencilFrame {
    std::vector<std::vector<double>> directions;
    std::vector<double> weights;
};

StencilFrame stencil_frame(Rank n, Stencil stencil);

struct LaplacianResult {
    double relative_error = 0.0;
    bool inconclusive = false;
    std::vector<double> point;  // e-coordinates actually used
    Complex value;
};

/// Weighted central second differences along a tight frame of the
/// hyperplane, compared with -4 pi^2 <lambda, lambda> f. If |f(x)| < 1e-6 a
/// fresh random point is drawn from `seed`.
LaplacianResult laplacian_eigenvalue_check(OrbitKind kind, const Weight& lambda,
                                           std::span<const double> x_e, double h,
                                           std::uint64_t seed = kDefaultSeed,
                                           Stencil stencil = Stencil::Roots);

struct SymmetryReport {
    Weight lambda;
    int trials;
    std::uint64_t seed;
    double scale;  // orbit size used to normalize deviations
    double max_c_deviation = 0.0;
    double max_s_deviation = 0.0;
    double max_e_deviation = 0.0;
    double max_conjugation_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = true;
};

/// For random x and every i: C(r_i x) = C(x), S(r_i x) = -S(x),
/// E_{r_i lambda}(x) = E_lambda(r_i x) (and = (C - S)/2 for generic lambda,
/// = E_lambda(x) otherwise), plus C(-x) = conj C(x), S(-x) = conj S(x).
SymmetryReport symmetry_suite(const Weight& lambda, int trials, std::uint64_t seed = kDefaultSeed,
                              double relative_tolerance = 1e-12);

struct DetFormsReport {
    int rank = 0;
    int samples;
    std::uint64_t seed;
    double tolerance = 0.0;
    double max_plus_deviation = 0.0;      // |D+ - k C|
    double max_minus_deviation = 0.0;     // |D- - S|
    double max_alt_deviation = 0.0;       // |D^Alt - E|
    double max_alt_half_deviation = 0.0;  // |D^Alt - (D+ + D-)/2|
    double max_ryser_deviation = 0.0;     // Ryser vs naive permanent
    double max_wall_deviation = 0.0;      // non-generic: D- = 0, D^Alt = (k/2) E
    bool passed = true;
};

/// `samples` random strictly dominant lambda (coordinates 1..coord_bound) and
/// random x per call, plus one non-generic lambda per sample.
DetFormsReport detforms_suite(Rank n, int samples, int coord_bound, std::uint64_t seed = kDefaultSeed,
                              double tolerance = 1e-9);

/// Uniform point of [0,1]^n in alpha coordinates.
AlphaPoint random_alpha_point(Rank n, std::mt19937_64& rng);

/// Uniform weight with coordinates in [lo, hi].
Weight random_weight(Rank n, std::int64_t lo, std::int64_t hi, std::mt19937_64& rng);

}  // namespace weylcheb
