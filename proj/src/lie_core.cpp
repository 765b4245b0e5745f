#include "weylcheb/lie_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace weylcheb {

Rank::Rank(int n, int max_rank) : n_(n) {
    if (n < 1 || n > max_rank) {
        throw PreconditionError("rank must lie in [1, " + std::to_string(max_rank) +
                                "], got " + std::to_string(n));
    }
}

Weight::Weight(Rank r, std::vector<std::int64_t> c) : rank(r), coords(std::move(c)) {
    if (coords.size() != static_cast<std::size_t>(r.value())) {
        throw PreconditionError("weight has " + std::to_string(coords.size()) +
                                " coordinates, rank is " + std::to_string(r.value()));
    }
}

Weight Weight::zero(Rank r) { return Weight(r, std::vector<std::int64_t>(r.value(), 0)); }

Weight Weight::fundamental(Rank r, int j) {
    if (j < 1 || j > r.value()) {
        throw PreconditionError("fundamental weight index out of range: " + std::to_string(j));
    }
    Weight w = zero(r);
    w.coords[j - 1] = 1;
    return w;
}

Weight Weight::rho(Rank r) { return Weight(r, std::vector<std::int64_t>(r.value(), 1)); }

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

bool Weight::is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](auto c) { return c >= 0; });
}

bool Weight::is_strictly_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](auto c) { return c > 0; });
}

Weight Weight::operator+(const Weight& other) const {
    if (!(rank == other.rank)) throw PreconditionError("rank mismatch in weight addition");
    Weight out = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += other.coords[i];
    return out;
}

Weight Weight::operator-(const Weight& other) const {
    if (!(rank == other.rank)) throw PreconditionError("rank mismatch in weight subtraction");
    Weight out = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] -= other.coords[i];
    return out;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    os << ')';
    return os.str();
}

EWeight::EWeight(Rank r, std::vector<Rational> c) : rank(r), coords(std::move(c)) {
    if (coords.size() != static_cast<std::size_t>(r.dim())) {
        throw PreconditionError("e-weight needs n+1 coordinates");
    }
    Rational sum = 0;
    for (const auto& v : coords) sum += v;
    if (sum != 0) throw PreconditionError("e-weight does not lie on the hyperplane sum = 0");
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw PreconditionError("matrix dimension mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

RationalMatrix cartan_matrix(Rank n) {
    const auto size = static_cast<std::size_t>(n.value());
    RationalMatrix c(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        c(i, i) = 2;
        if (i + 1 < size) {
            c(i, i + 1) = -1;
            c(i + 1, i) = -1;
        }
    }
    return c;
}

RationalMatrix cartan_inverse(Rank n) {
    const int size = n.value();
    RationalMatrix c(size, size);
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j)
            c(i - 1, j - 1) = Rational(std::min(i, j) * (size + 1 - std::max(i, j))) / (size + 1);
    return c;
}

namespace {

// Entry of (n+1) * A, 1-based row r and column c.
std::int64_t scaled_a_entry(int n, int r, int c) { return c >= r ? n + 1 - c : -c; }

}  // namespace

RationalMatrix omega_to_e_matrix(Rank n) {
    const int size = n.value();
    RationalMatrix a(size + 1, size);
    for (int r = 1; r <= size + 1; ++r)
        for (int c = 1; c <= size; ++c)
            a(r - 1, c - 1) = Rational(scaled_a_entry(size, r, c)) / (size + 1);
    return a;
}

std::vector<std::int64_t> scaled_e_coords(const Weight& lambda) {
    const int n = lambda.rank.value();
    std::vector<std::int64_t> out(n + 1, 0);
    for (int r = 1; r <= n + 1; ++r)
        for (int c = 1; c <= n; ++c) out[r - 1] += scaled_a_entry(n, r, c) * lambda.coords[c - 1];
    return out;
}

Weight weight_from_scaled_e(Rank r, std::span<const std::int64_t> scaled) {
    const int n = r.value();
    if (scaled.size() != static_cast<std::size_t>(n + 1)) {
        throw PreconditionError("scaled e-vector has wrong length");
    }
    std::vector<std::int64_t> coords(n);
    for (int i = 0; i < n; ++i) {
        const std::int64_t diff = scaled[i] - scaled[i + 1];
        if (diff % (n + 1) != 0) throw PreconditionError("scaled e-vector is not a lattice weight");
        coords[i] = diff / (n + 1);
    }
    return Weight(r, std::move(coords));
}

EWeight omega_to_e(const Weight& lambda) {
    const auto scaled = scaled_e_coords(lambda);
    std::vector<Rational> l;
    l.reserve(scaled.size());
    for (auto v : scaled) l.emplace_back(Rational(v) / lambda.rank.dim());
    return EWeight(lambda.rank, std::move(l));
}

std::vector<Rational> e_to_omega(const EWeight& l) {
    std::vector<Rational> out;
    out.reserve(l.rank.value());
    for (int i = 0; i < l.rank.value(); ++i) out.push_back(l.coords[i] - l.coords[i + 1]);
    return out;
}

Weight e_to_weight(const EWeight& l) {
    std::vector<std::int64_t> coords;
    for (const auto& v : e_to_omega(l)) {
        if (denominator(v) != 1) throw PreconditionError("e-weight is not an integer weight");
        coords.push_back(static_cast<std::int64_t>(numerator(v)));
    }
    return Weight(l.rank, std::move(coords));
}

Rational inner_product(const Weight& lambda, const Weight& mu) {
    if (!(lambda.rank == mu.rank)) throw PreconditionError("rank mismatch in inner product");
    const auto inv = cartan_inverse(lambda.rank);
    Rational sum = 0;
    const auto n = static_cast<std::size_t>(lambda.rank.value());
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda.coords[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) sum += inv(i, j) * lambda.coords[i] * mu.coords[j];
    }
    return sum;
}

int congruence_number(const Weight& lambda) {
    const std::int64_t mod = lambda.rank.dim();
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < lambda.coords.size(); ++k) {
        sum = (sum + static_cast<std::int64_t>(k + 1) * (lambda.coords[k] % mod)) % mod;
    }
    return static_cast<int>((sum + mod) % mod);
}

std::vector<double> alpha_to_e(std::span<const double> alpha) {
    const std::size_t n = alpha.size();
    std::vector<double> e(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const double cur = k < n ? alpha[k] : 0.0;
        const double prev = k > 0 ? alpha[k - 1] : 0.0;
        e[k] = cur - prev;
    }
    return e;
}

std::vector<double> e_to_alpha(std::span<const double> e) {
    if (e.empty()) return {};
    std::vector<double> alpha(e.size() - 1);
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < e.size(); ++j) {
        acc += e[j];
        alpha[j] = acc;
    }
    return alpha;
}

std::vector<double> omega_to_e_real(const Weight& lambda) {
    const auto scaled = scaled_e_coords(lambda);
    std::vector<double> out(scaled.size());
    const double d = lambda.rank.dim();
    for (std::size_t i = 0; i < scaled.size(); ++i) out[i] = static_cast<double>(scaled[i]) / d;
    return out;
}

std::uint64_t weyl_group_order(Rank n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n.dim(); ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

}  // namespace weylcheb
