// Exact arithmetic in the group ring Z[P] of the A_n weight lattice.
//
// An ExpSum is a finite integer combination of formal exponentials e^{mu};
// evaluated at x it is sum_mu c_mu e^{2 pi i <mu, x>}. Products, orbit
// decomposition and exact division are all carried out on these formal sums.
//
// Terms are kept in the height order: weights are compared first by
// sum_k k (n+1-k) mu_k (a positive multiple of <mu, rho>, which is positive on
// every simple root) and then lexicographically. The order is total and
// translation invariant, and the dominant weight is the strict maximum of its
// Weyl orbit, so the leading term of a W-invariant sum is always dominant.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylcheb/lie_core.hpp"
#include "weylcheb/orbit_functions.hpp"

namespace weylcheb {

using WeightKey = std::vector<std::int64_t>;

/// sum_k k (n+1-k) mu_k with n+1 = mu.size()+1.
std::int64_t weight_height(const WeightKey& mu);

struct HeightLess {
    bool operator()(const WeightKey& a, const WeightKey& b) const;
};

/// Raised by decompose_into_C on input that is not a nonnegative
/// combination of C orbit sums.
class DecompositionError : public std::runtime_error {
public:
    DecompositionError(const std::string& what, WeightKey offending)
        : std::runtime_error(what), offending_(std::move(offending)) {}
    const WeightKey& offending() const noexcept { return offending_; }

private:
    WeightKey offending_;
};

/// Raised by exact_divide when the numerator is not a multiple of the
/// denominator.
class DivisionError : public std::runtime_error {
public:
    DivisionError(const std::string& what, WeightKey remainder_term)
        : std::runtime_error(what), term_(std::move(remainder_term)) {}
    const WeightKey& remainder_term() const noexcept { return term_; }

private:
    WeightKey term_;
};

class ExpSum {
public:
    using Terms = std::map<WeightKey, BigInt, HeightLess>;

    explicit ExpSum(Rank r) : rank_(r) {}

    static ExpSum monomial(const Weight& mu, const BigInt& coeff = 1);
    static ExpSum one(Rank r) { return monomial(Weight::zero(r)); }

    Rank rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    BigInt coefficient(const WeightKey& mu) const;
    /// Adds c e^{mu}; zero coefficients are removed.
    void add_term(const WeightKey& mu, const BigInt& c);

    /// Largest / smallest term in the height order. Precondition: nonempty.
    std::pair<WeightKey, BigInt> leading() const;
    std::pair<WeightKey, BigInt> trailing() const;

    /// Sum of all coefficients, i.e. the value at x = 0.
    BigInt coefficient_sum() const;

    /// Evaluates at x in alpha coordinates.
    Complex evaluate(const AlphaPoint& x) const;

    ExpSum& operator+=(const ExpSum& other);
    ExpSum& operator-=(const ExpSum& other);
    ExpSum operator+(const ExpSum& other) const;
    ExpSum operator-(const ExpSum& other) const;
    ExpSum operator*(const BigInt& scalar) const;

    bool operator==(const ExpSum& other) const;

private:
    void check_rank(const ExpSum& other) const;

    Rank rank_;
    Terms terms_;
};

/// Dominant weights with positive multiplicities.
struct OrbitDecomposition {
    Rank rank;
    std::map<WeightKey, BigInt, HeightLess> terms;

    explicit OrbitDecomposition(Rank r) : rank(r) {}

    BigInt multiplicity(const WeightKey& lambda) const;
    /// sum mult * C-sum.
    ExpSum expand() const;
    /// sum mult * |W_lambda|.
    BigInt total_points() const;

    bool operator==(const OrbitDecomposition& other) const { return terms == other.terms; }
};

/// The orbit function of the given kind as a formal sum. C needs P+,
/// S needs P++, E needs P^e.
ExpSum exp_sum(const Weight& lambda, OrbitKind kind);

ExpSum multiply(const ExpSum& a, const ExpSum& b);

/// Greedy extraction of C orbit sums by leading term.
OrbitDecomposition decompose_into_C(const ExpSum& s);

/// Long division by the leading term of den, checked by re-multiplication.
ExpSum exact_divide(const ExpSum& num, const ExpSum& den);

/// S_{lambda+rho} / S_rho as a formal sum.
ExpSum character_exp_sum(const Weight& lambda);

/// Decomposition of the Weyl character of lambda into C orbit sums; the
/// multiplicities are the dominant weight multiplicities.
OrbitDecomposition character(const Weight& lambda);

}  // namespace weylcheb
