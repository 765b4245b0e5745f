// Multivariate Chebyshev polynomials built from A_n orbit functions.
//
// T_lambda = C_lambda written as a polynomial in X_j = C_{omega_j}, obtained
// recursively from the decomposition of X_j * C_mu into C orbit sums.
// U_lambda = S_{lambda+rho} / S_rho, expanded through its character
// multiplicities. The exponential substitution y_j = e^{2 pi i x_j} turns an
// orbit sum directly into a Laurent polynomial P^C, P^S or P^E.
//
// Normalization: C_0 = 1 (one point in the orbit of 0). For A_1 this gives
// C_m = 2 T_m for m >= 1 and C_0 = T_0.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylcheb/exp_ring.hpp"
#include "weylcheb/lie_core.hpp"
#include "weylcheb/orbit_functions.hpp"

namespace weylcheb {

// ---------------------------------------------------------------------------
// Classical one-variable Chebyshev polynomials in z.

struct ClassicalPoly {
    /// coeffs[k] multiplies z^k; no trailing zeros (the zero polynomial is empty).
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void trim();

    ClassicalPoly operator+(const ClassicalPoly& o) const;
    ClassicalPoly operator-(const ClassicalPoly& o) const;
    ClassicalPoly operator*(const ClassicalPoly& o) const;
    ClassicalPoly operator*(const BigInt& s) const;
    /// Multiplication by z.
    ClassicalPoly shift() const;
    ClassicalPoly derivative() const;
    bool operator==(const ClassicalPoly& o) const = default;

    std::string to_string() const;
};

ClassicalPoly classical_T(int m);
ClassicalPoly classical_U(int m);

struct IdentityCheck {
    std::string name;
    bool applicable;  // m lies in the identity's range
    bool holds;
};

struct ClassicalIdentityReport {
    int m;
    std::vector<IdentityCheck> checks;
    bool all_hold() const;
};

/// Checks, as exact integer polynomial identities:
///   T_m' = m U_{m-1}                 (m >= 1)
///   2 T_m = U_m - U_{m-2}            (m >= 2)
///   T_{m+1} = z T_m - (1 - z^2) U_{m-1}  (m >= 1)
///   T_m = U_m - z U_{m-1}            (m >= 1)
ClassicalIdentityReport classical_identities_check(int m);

// ---------------------------------------------------------------------------
// Polynomials in the fundamental variables X_1..X_n.

using Degree = std::vector<std::int64_t>;

/// Graded lexicographic order on nonnegative multi-degrees.
struct GrlexLess {
    bool operator()(const Degree& a, const Degree& b) const;
};

class XPolynomial {
public:
    using Terms = std::map<Degree, BigInt, GrlexLess>;

    explicit XPolynomial(Rank r) : rank_(r) {}

    static XPolynomial constant(Rank r, const BigInt& c);
    /// X_j, 1-based.
    static XPolynomial variable(Rank r, int j);

    Rank rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }

    void add_term(const Degree& d, const BigInt& c);
    BigInt coefficient(const Degree& d) const;

    XPolynomial operator+(const XPolynomial& o) const;
    XPolynomial operator-(const XPolynomial& o) const;
    XPolynomial operator*(const XPolynomial& o) const;
    XPolynomial operator*(const BigInt& s) const;
    XPolynomial times_variable(int j) const;
    bool operator==(const XPolynomial& o) const;

    /// Substitutes X_j := values[j-1].
    Complex evaluate(std::span<const Complex> values) const;

    /// A_1 only: substitutes X = 2z.
    ClassicalPoly to_classical() const;

    std::string to_string() const;

private:
    Rank rank_;
    Terms terms_;
};

/// Laurent polynomial in y_1..y_n, exponents are omega-coordinates.
class YLaurent {
public:
    using Terms = std::map<WeightKey, BigInt, HeightLess>;

    explicit YLaurent(Rank r) : rank_(r) {}
    explicit YLaurent(const ExpSum& s);

    Rank rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }

    /// Substitutes y_j := values[j-1] (nonzero).
    Complex evaluate(std::span<const Complex> values) const;
    /// Substitutes y_j := e^{2 pi i x_j}.
    Complex evaluate_on_torus(const AlphaPoint& x) const;

    BigInt coefficient(const WeightKey& mu) const;
    bool operator==(const YLaurent& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    Rank rank_;
    Terms terms_;
};

/// Which coordinate to peel off when lambda has several positive entries.
enum class IndexChoice { Smallest, Largest };

/// Memoizing builder for T_lambda and U_lambda of one rank.
///
/// Not thread-safe; confine one builder to one thread. Finished polynomials
/// are plain values.
class ChebyshevBuilder {
public:
    explicit ChebyshevBuilder(Rank r, IndexChoice choice = IndexChoice::Smallest);

    const XPolynomial& poly_T(const Weight& lambda);
    XPolynomial poly_U(const Weight& lambda);

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    Rank rank_;
    IndexChoice choice_;
    std::map<WeightKey, XPolynomial, HeightLess> memo_;
};

XPolynomial poly_T(const Weight& lambda);
XPolynomial poly_U(const Weight& lambda);

/// P^C, P^S or P^E: each orbit exponential e^{2 pi i <mu,x>} becomes prod y_j^{mu_j}.
YLaurent substitute_P(const Weight& lambda, OrbitKind kind);

struct RecursionRelation {
    int j;
    Weight a;
    OrbitDecomposition rhs;  // X_j * C_a = sum rhs
    /// rhs orbits + the left-hand side.
    std::size_t total_terms() const { return rhs.terms.size() + 1; }
    /// Every rhs weight has a full orbit and there are binom(n+1, j) of them.
    bool generic;
};

RecursionRelation recursion_relation(int j, const Weight& a);

/// binom(n+1, j) + 1.
std::size_t generic_term_count(Rank n, int j);

/// Smallest k in 1..max_k for which a = (k, ..., k) gives a generic relation.
std::optional<int> generic_threshold(Rank n, int j, int max_k = 8);

}  // namespace weylcheb
