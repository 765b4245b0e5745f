#include "weylcheb/chebyshev.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weylcheb/weyl.hpp"

namespace weylcheb {

namespace {

// "c*m" with the usual conventions for +-1 and the constant term.
void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& mono) {
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
        if (neg) os << '-';
    } else {
        os << (neg ? " - " : " + ");
    }
    if (mono.empty()) {
        os << mag;
    } else if (mag == 1) {
        os << mono;
    } else {
        os << mag << '*' << mono;
    }
}

Complex int_power(Complex base, std::int64_t e) {
    if (e < 0) {
        base = 1.0 / base;
        e = -e;
    }
    Complex out{1.0, 0.0};
    for (; e > 0; e >>= 1) {
        if (e & 1) out *= base;
        base *= base;
    }
    return out;
}

std::string monomial_string(const std::vector<std::int64_t>& exps, const std::string& var) {
    std::string out;
    for (std::size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] == 0) continue;
        if (!out.empty()) out += '*';
        out += var;
        if (exps.size() > 1) out += std::to_string(j + 1);
        if (exps[j] != 1) out += '^' + std::to_string(exps[j]);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ClassicalPoly

void ClassicalPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

ClassicalPoly ClassicalPoly::operator+(const ClassicalPoly& o) const {
    ClassicalPoly out;
    out.coeffs.assign(std::max(coeffs.size(), o.coeffs.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) out.coeffs[i] += o.coeffs[i];
    out.trim();
    return out;
}

ClassicalPoly ClassicalPoly::operator-(const ClassicalPoly& o) const { return *this + o * BigInt(-1); }

ClassicalPoly ClassicalPoly::operator*(const ClassicalPoly& o) const {
    ClassicalPoly out;
    if (coeffs.empty() || o.coeffs.empty()) return out;
    out.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) out.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    out.trim();
    return out;
}

ClassicalPoly ClassicalPoly::operator*(const BigInt& s) const {
    ClassicalPoly out = *this;
    for (auto& c : out.coeffs) c *= s;
    out.trim();
    return out;
}

ClassicalPoly ClassicalPoly::shift() const {
    ClassicalPoly out;
    if (coeffs.empty()) return out;
    out.coeffs.reserve(coeffs.size() + 1);
    out.coeffs.push_back(0);
    out.coeffs.insert(out.coeffs.end(), coeffs.begin(), coeffs.end());
    return out;
}

ClassicalPoly ClassicalPoly::derivative() const {
    ClassicalPoly out;
    for (std::size_t k = 1; k < coeffs.size(); ++k) out.coeffs.push_back(coeffs[k] * static_cast<int>(k));
    out.trim();
    return out;
}

std::string ClassicalPoly::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (coeffs[k] == 0) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        append_term(os, first, coeffs[k], mono);
        first = false;
    }
    return os.str();
}

namespace {

ClassicalPoly three_term(int m, ClassicalPoly p0, ClassicalPoly p1) {
    if (m < 0) throw PreconditionError("Chebyshev index must be nonnegative");
    if (m == 0) return p0;
    for (int k = 1; k < m; ++k) {
        ClassicalPoly next = p1.shift() * BigInt(2) - p0;
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

}  // namespace

ClassicalPoly classical_T(int m) { return three_term(m, {{1}}, {{0, 1}}); }

ClassicalPoly classical_U(int m) { return three_term(m, {{1}}, {{0, 2}}); }

bool ClassicalIdentityReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return !c.applicable || c.holds; });
}

ClassicalIdentityReport classical_identities_check(int m) {
    if (m < 0) throw PreconditionError("identity check index must be nonnegative");
    ClassicalIdentityReport r{m, {}};
    const ClassicalPoly one_minus_z2{{1, 0, -1}};
    const bool ge1 = m >= 1;
    const bool ge2 = m >= 2;

    r.checks.push_back({"T_m' = m U_{m-1}", ge1,
                        ge1 && classical_T(m).derivative() == classical_U(m - 1) * BigInt(m)});
    r.checks.push_back({"2 T_m = U_m - U_{m-2}", ge2,
                        ge2 && classical_T(m) * BigInt(2) == classical_U(m) - classical_U(m - 2)});
    r.checks.push_back({"T_{m+1} = z T_m - (1 - z^2) U_{m-1}", ge1,
                        ge1 && classical_T(m + 1) ==
                                   classical_T(m).shift() - one_minus_z2 * classical_U(m - 1)});
    r.checks.push_back({"T_m = U_m - z U_{m-1}", ge1,
                        ge1 && classical_T(m) == classical_U(m) - classical_U(m - 1).shift()});
    return r;
}

// ---------------------------------------------------------------------------
// XPolynomial

bool GrlexLess::operator()(const Degree& a, const Degree& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da < db;
    return a < b;
}

XPolynomial XPolynomial::constant(Rank r, const BigInt& c) {
    XPolynomial p(r);
    p.add_term(Degree(r.value(), 0), c);
    return p;
}

XPolynomial XPolynomial::variable(Rank r, int j) {
    if (j < 1 || j > r.value()) throw PreconditionError("variable index out of range");
    Degree d(r.value(), 0);
    d[j - 1] = 1;
    XPolynomial p(r);
    p.add_term(d, 1);
    return p;
}

void XPolynomial::add_term(const Degree& d, const BigInt& c) {
    if (d.size() != static_cast<std::size_t>(rank_.value())) {
        throw PreconditionError("degree vector has wrong length");
    }
    if (std::any_of(d.begin(), d.end(), [](auto v) { return v < 0; })) {
        throw PreconditionError("degrees must be nonnegative");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt XPolynomial::coefficient(const Degree& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? BigInt(0) : it->second;
}

XPolynomial XPolynomial::operator+(const XPolynomial& o) const {
    if (!(rank_ == o.rank_)) throw PreconditionError("rank mismatch");
    XPolynomial out = *this;
    for (const auto& [d, c] : o.terms_) out.add_term(d, c);
    return out;
}

XPolynomial XPolynomial::operator-(const XPolynomial& o) const {
    if (!(rank_ == o.rank_)) throw PreconditionError("rank mismatch");
    XPolynomial out = *this;
    for (const auto& [d, c] : o.terms_) out.add_term(d, -c);
    return out;
}

XPolynomial XPolynomial::operator*(const XPolynomial& o) const {
    if (!(rank_ == o.rank_)) throw PreconditionError("rank mismatch");
    XPolynomial out(rank_);
    for (const auto& [da, ca] : terms_)
        for (const auto& [db, cb] : o.terms_) {
            Degree d(da.size());
            for (std::size_t k = 0; k < d.size(); ++k) d[k] = da[k] + db[k];
            out.add_term(d, ca * cb);
        }
    return out;
}

XPolynomial XPolynomial::operator*(const BigInt& s) const {
    XPolynomial out(rank_);
    for (const auto& [d, c] : terms_) out.add_term(d, c * s);
    return out;
}

XPolynomial XPolynomial::times_variable(int j) const { return *this * variable(rank_, j); }

bool XPolynomial::operator==(const XPolynomial& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
}

Complex XPolynomial::evaluate(std::span<const Complex> values) const {
    if (values.size() != static_cast<std::size_t>(rank_.value())) {
        throw PreconditionError("need one value per variable");
    }
    std::vector<Complex> terms;
    terms.reserve(terms_.size());
    for (const auto& [d, c] : terms_) {
        Complex v = c.convert_to<double>();
        for (std::size_t j = 0; j < d.size(); ++j)
            for (std::int64_t e = 0; e < d[j]; ++e) v *= values[j];
        terms.push_back(v);
    }
    return pairwise_sum(terms);
}

ClassicalPoly XPolynomial::to_classical() const {
    if (rank_.value() != 1) throw PreconditionError("X = 2z substitution is defined for A_1 only");
    ClassicalPoly out;
    for (const auto& [d, c] : terms_) {
        const auto k = static_cast<std::size_t>(d[0]);
        if (out.coeffs.size() <= k) out.coeffs.resize(k + 1, BigInt(0));
        out.coeffs[k] += c * (BigInt(1) << k);
    }
    out.trim();
    return out;
}

std::string XPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(os, first, it->second, monomial_string(it->first, "X"));
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// YLaurent

YLaurent::YLaurent(const ExpSum& s) : rank_(s.rank()), terms_(s.terms().begin(), s.terms().end()) {}

Complex YLaurent::evaluate(std::span<const Complex> values) const {
    if (values.size() != static_cast<std::size_t>(rank_.value())) {
        throw PreconditionError("need one value per variable");
    }
    std::vector<Complex> terms;
    terms.reserve(terms_.size());
    for (const auto& [mu, c] : terms_) {
        Complex v = c.convert_to<double>();
        for (std::size_t j = 0; j < mu.size(); ++j) v *= int_power(values[j], mu[j]);
        terms.push_back(v);
    }
    return pairwise_sum(terms);
}

Complex YLaurent::evaluate_on_torus(const AlphaPoint& x) const {
    if (!(x.rank == rank_)) throw PreconditionError("rank mismatch");
    std::vector<Complex> y;
    y.reserve(x.coords.size());
    for (double xj : x.coords) y.push_back(unit_phase(xj));
    return evaluate(y);
}

BigInt YLaurent::coefficient(const WeightKey& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::string YLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(os, first, it->second, monomial_string(it->first, "y"));
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Recursive construction

ChebyshevBuilder::ChebyshevBuilder(Rank r, IndexChoice choice) : rank_(r), choice_(choice) {}

const XPolynomial& ChebyshevBuilder::poly_T(const Weight& lambda) {
    if (!(lambda.rank == rank_)) throw PreconditionError("weight rank differs from builder rank");
    if (!lambda.is_dominant()) {
        throw PreconditionError("T polynomial requires a dominant weight, got " + lambda.to_string());
    }
    if (auto it = memo_.find(lambda.coords); it != memo_.end()) return it->second;

    if (lambda.is_zero()) {
        return memo_.emplace(lambda.coords, XPolynomial::constant(rank_, 1)).first->second;
    }

    const auto& c = lambda.coords;
    int j = 0;
    if (choice_ == IndexChoice::Smallest) {
        j = static_cast<int>(std::find_if(c.begin(), c.end(), [](auto v) { return v > 0; }) - c.begin()) + 1;
    } else {
        j = static_cast<int>(std::find_if(c.rbegin(), c.rend(), [](auto v) { return v > 0; }).base() -
                             c.begin());
    }
    const Weight omega = Weight::fundamental(rank_, j);
    const Weight mu = lambda - omega;
    if (mu.is_zero()) {
        return memo_.emplace(lambda.coords, XPolynomial::variable(rank_, j)).first->second;
    }

    // X_j C_mu = C_lambda + sum_{nu < lambda} m_nu C_nu.
    const auto product = decompose_into_C(multiply(exp_sum(omega, OrbitKind::C), exp_sum(mu, OrbitKind::C)));
    if (product.multiplicity(lambda.coords) != 1) {
        throw std::logic_error("leading orbit of X_j C_mu is not lambda with multiplicity 1");
    }
    XPolynomial result = poly_T(mu).times_variable(j);
    for (const auto& [nu, mult] : product.terms) {
        if (nu == lambda.coords) continue;
        result = result - poly_T(Weight(rank_, nu)) * mult;
    }
    return memo_.emplace(lambda.coords, std::move(result)).first->second;
}

XPolynomial ChebyshevBuilder::poly_U(const Weight& lambda) {
    if (!(lambda.rank == rank_)) throw PreconditionError("weight rank differs from builder rank");
    XPolynomial result(rank_);
    for (const auto& [mu, mult] : character(lambda).terms) result = result + poly_T(Weight(rank_, mu)) * mult;
    return result;
}

XPolynomial poly_T(const Weight& lambda) {
    ChebyshevBuilder b(lambda.rank);
    return b.poly_T(lambda);
}

XPolynomial poly_U(const Weight& lambda) {
    ChebyshevBuilder b(lambda.rank);
    return b.poly_U(lambda);
}

YLaurent substitute_P(const Weight& lambda, OrbitKind kind) { return YLaurent(exp_sum(lambda, kind)); }

std::size_t generic_term_count(Rank n, int j) {
    if (j < 1 || j > n.value()) throw PreconditionError("fundamental index out of range");
    std::size_t b = 1;
    for (int k = 1; k <= j; ++k) b = b * static_cast<std::size_t>(n.dim() - j + k) / static_cast<std::size_t>(k);
    return b + 1;
}

RecursionRelation recursion_relation(int j, const Weight& a) {
    const Weight omega = Weight::fundamental(a.rank, j);
    if (!a.is_dominant()) throw PreconditionError("recursion base must be dominant, got " + a.to_string());
    auto rhs = decompose_into_C(multiply(exp_sum(omega, OrbitKind::C), exp_sum(a, OrbitKind::C)));
    const auto full = weyl_group_order(a.rank);
    bool generic = rhs.terms.size() + 1 == generic_term_count(a.rank, j);
    for (const auto& [nu, mult] : rhs.terms) generic = generic && orbit_size(Weight(a.rank, nu)) == full;
    return {j, a, std::move(rhs), generic};
}

std::optional<int> generic_threshold(Rank n, int j, int max_k) {
    for (int k = 1; k <= max_k; ++k) {
        const Weight a(n, std::vector<std::int64_t>(n.value(), k));
        if (recursion_relation(j, a).generic) return k;
    }
    return std::nullopt;
}

}  // namespace weylcheb
