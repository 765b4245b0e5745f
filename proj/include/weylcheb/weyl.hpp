// The Weyl group W(A_n), realized as S_{n+1} permuting e-coordinates.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "weylcheb/lie_core.hpp"

namespace weylcheb {

struct SignedOrbitPoint {
    Weight weight;
    int sign;  // (-1)^{p(mu)}
};

/// A Weyl orbit with parity signs.
///
/// Points are ordered lexicographically (ascending) on their e-coordinates,
/// so the dominant representative comes last. For points with repeated
/// e-coordinates the sign is the parity of the minimal sorting permutation.
struct SignedOrbit {
    Weight dominant;
    std::vector<SignedOrbitPoint> points;
    /// Points reachable from `dominant` by even permutations.
    std::vector<Weight> even_points;

    std::size_t size() const noexcept { return points.size(); }
};

/// r_i on an exact e-point: swaps coordinates i and i+1 (1-based).
EWeight reflect(int i, const EWeight& x);

/// r_i on a real e-point.
std::vector<double> reflect(int i, std::span<const double> x);

/// r_i on an omega-coordinate weight: lambda - lambda_i alpha_i.
Weight reflect(int i, const Weight& lambda);

/// Orbit of a dominant weight. Throws PreconditionError otherwise.
SignedOrbit orbit(const Weight& lambda);

struct DominantRep {
    Weight weight;
    int sign;
};

/// Sorts e-coordinates in descending order; sign is the parity of the
/// minimal sorting permutation.
DominantRep dominant_representative(const Weight& mu);

/// |W_lambda| = (n+1)! / prod(multiplicity!) over repeated e-coordinates.
std::uint64_t orbit_size(const Weight& lambda);
std::uint64_t stabilizer_order(const Weight& lambda);

/// True when the stabilizer of lambda is trivial (all e-coordinates distinct).
bool is_generic(const Weight& lambda);

/// Points of the even-subgroup orbit W^e lambda, for any integer weight.
std::vector<Weight> even_orbit(const Weight& lambda);

/// Parity of the minimal permutation sorting v in descending order:
/// +1 for an even number of strict inversions, -1 otherwise.
int sorting_parity(std::span<const std::int64_t> v);

}  // namespace weylcheb
