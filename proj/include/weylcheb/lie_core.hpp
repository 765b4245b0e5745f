// Rank-parametrized data of the Lie algebra A_n: Cartan matrices, conversions
// between the fundamental-weight (omega) basis and the orthonormal e-basis of
// the hyperplane sum(l_k) = 0, inner products and congruence numbers.
//
// All lattice arithmetic here is exact. Floating point only appears in the
// real-valued helpers at the bottom, which the evaluators use.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylcheb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultMaxRank = 8;

/// Rank n of A_n (group SU(n+1)).
class Rank {
public:
    explicit Rank(int n, int max_rank = kDefaultMaxRank);

    int value() const noexcept { return n_; }
    /// n + 1, the size of the permuted tuple.
    int dim() const noexcept { return n_ + 1; }

    friend bool operator==(Rank, Rank) = default;

private:
    int n_;
};

/// Integer weight in omega coordinates (lambda_1, ..., lambda_n).
struct Weight {
    Rank rank;
    std::vector<std::int64_t> coords;

    Weight(Rank r, std::vector<std::int64_t> c);
    Weight(Rank r, std::initializer_list<std::int64_t> c)
        : Weight(r, std::vector<std::int64_t>(c)) {}

    static Weight zero(Rank r);
    /// Fundamental weight omega_j, 1-based.
    static Weight fundamental(Rank r, int j);
    /// rho = (1, ..., 1).
    static Weight rho(Rank r);

    bool is_zero() const;
    bool is_dominant() const;
    bool is_strictly_dominant() const;

    Weight operator+(const Weight& other) const;
    Weight operator-(const Weight& other) const;

    bool operator==(const Weight& other) const { return coords == other.coords; }
    auto operator<=>(const Weight& other) const { return coords <=> other.coords; }

    std::string to_string() const;
};

/// Point of the hyperplane sum(l_k) = 0 with exact rational e-coordinates.
struct EWeight {
    Rank rank;
    std::vector<Rational> coords;

    /// Throws PreconditionError unless coords has n+1 entries summing to 0.
    EWeight(Rank r, std::vector<Rational> c);

    bool operator==(const EWeight& other) const { return coords == other.coords; }
};

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

RationalMatrix cartan_matrix(Rank n);

/// (C^-1)_ij = min(i,j) (n+1-max(i,j)) / (n+1).
RationalMatrix cartan_inverse(Rank n);

/// The (n+1) x n matrix A with l = A lambda.
RationalMatrix omega_to_e_matrix(Rank n);

EWeight omega_to_e(const Weight& lambda);

/// lambda_i = l_i - l_{i+1}. The result is rational in general.
std::vector<Rational> e_to_omega(const EWeight& l);

/// Like e_to_omega but requires every coordinate to be an integer.
Weight e_to_weight(const EWeight& l);

/// <lambda, mu> = lambda^T C^-1 mu.
Rational inner_product(const Weight& lambda, const Weight& mu);

/// sum_k k lambda_k mod (n+1), in {0..n}.
int congruence_number(const Weight& lambda);

/// Integer vector (n+1) * omega_to_e(lambda). Exact and cheap; the Weyl
/// group code permutes these.
std::vector<std::int64_t> scaled_e_coords(const Weight& lambda);

/// Inverse of scaled_e_coords. Throws if the result is not an integer weight.
Weight weight_from_scaled_e(Rank r, std::span<const std::int64_t> scaled);

// Real-valued coordinate changes for evaluation points.

/// x = sum_j x_j alpha_j  ->  e-coordinates (x_1, x_2 - x_1, ..., -x_n).
std::vector<double> alpha_to_e(std::span<const double> alpha);

/// Partial sums; inverse of alpha_to_e on the hyperplane.
std::vector<double> e_to_alpha(std::span<const double> e);

/// e-coordinates of an omega-basis weight as doubles.
std::vector<double> omega_to_e_real(const Weight& lambda);

/// (n+1)! as an unsigned 64-bit integer (n+1 <= 20).
std::uint64_t weyl_group_order(Rank n);

}  // namespace weylcheb
