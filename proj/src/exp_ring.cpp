#include "weylcheb/exp_ring.hpp"

#include <algorithm>

#include "weylcheb/weyl.hpp"

namespace weylcheb {

namespace {

std::string key_string(const WeightKey& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(k[i]);
    }
    return s + ")";
}

WeightKey add_keys(const WeightKey& a, const WeightKey& b) {
    WeightKey out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

WeightKey sub_keys(const WeightKey& a, const WeightKey& b) {
    WeightKey out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace

std::int64_t weight_height(const WeightKey& mu) {
    const auto dim = static_cast<std::int64_t>(mu.size()) + 1;
    std::int64_t h = 0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const auto idx = static_cast<std::int64_t>(k) + 1;
        h += idx * (dim - idx) * mu[k];
    }
    return h;
}

bool HeightLess::operator()(const WeightKey& a, const WeightKey& b) const {
    const auto ha = weight_height(a);
    const auto hb = weight_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

ExpSum ExpSum::monomial(const Weight& mu, const BigInt& coeff) {
    ExpSum s(mu.rank);
    s.add_term(mu.coords, coeff);
    return s;
}

BigInt ExpSum::coefficient(const WeightKey& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void ExpSum::add_term(const WeightKey& mu, const BigInt& c) {
    if (mu.size() != static_cast<std::size_t>(rank_.value())) {
        throw PreconditionError("exponent " + key_string(mu) + " has wrong length for rank " +
                                std::to_string(rank_.value()));
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::pair<WeightKey, BigInt> ExpSum::leading() const {
    if (terms_.empty()) throw PreconditionError("leading term of an empty sum");
    return *terms_.rbegin();
}

std::pair<WeightKey, BigInt> ExpSum::trailing() const {
    if (terms_.empty()) throw PreconditionError("trailing term of an empty sum");
    return *terms_.begin();
}

BigInt ExpSum::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

Complex ExpSum::evaluate(const AlphaPoint& x) const {
    if (!(x.rank == rank_)) throw PreconditionError("rank mismatch in evaluation");
    std::vector<Complex> terms;
    terms.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
        double t = 0.0;
        for (std::size_t j = 0; j < k.size(); ++j) t += static_cast<double>(k[j]) * x.coords[j];
        terms.push_back(c.convert_to<double>() * unit_phase(t));
    }
    return pairwise_sum(terms);
}

void ExpSum::check_rank(const ExpSum& other) const {
    if (!(rank_ == other.rank_)) throw PreconditionError("rank mismatch between exponential sums");
}

ExpSum& ExpSum::operator+=(const ExpSum& other) {
    check_rank(other);
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& other) {
    check_rank(other);
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
}

ExpSum ExpSum::operator+(const ExpSum& other) const {
    ExpSum out = *this;
    out += other;
    return out;
}

ExpSum ExpSum::operator-(const ExpSum& other) const {
    ExpSum out = *this;
    out -= other;
    return out;
}

ExpSum ExpSum::operator*(const BigInt& scalar) const {
    ExpSum out(rank_);
    if (scalar == 0) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, c * scalar);
    return out;
}

bool ExpSum::operator==(const ExpSum& other) const {
    return rank_ == other.rank_ && terms_ == other.terms_;
}

BigInt OrbitDecomposition::multiplicity(const WeightKey& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? BigInt(0) : it->second;
}

ExpSum OrbitDecomposition::expand() const {
    ExpSum out(rank);
    for (const auto& [k, m] : terms) out += exp_sum(Weight(rank, k), OrbitKind::C) * m;
    return out;
}

BigInt OrbitDecomposition::total_points() const {
    BigInt total = 0;
    for (const auto& [k, m] : terms) total += m * orbit_size(Weight(rank, k));
    return total;
}

ExpSum exp_sum(const Weight& lambda, OrbitKind kind) {
    ExpSum out(lambda.rank);
    switch (kind) {
        case OrbitKind::C: {
            if (!lambda.is_dominant()) {
                throw PreconditionError("C orbit sum requires a dominant weight, got " +
                                        lambda.to_string());
            }
            for (const auto& p : orbit(lambda).points) out.add_term(p.weight.coords, 1);
            break;
        }
        case OrbitKind::S: {
            if (!lambda.is_strictly_dominant()) {
                throw PreconditionError("S orbit sum requires a strictly dominant weight, got " +
                                        lambda.to_string());
            }
            for (const auto& p : orbit(lambda).points) out.add_term(p.weight.coords, p.sign);
            break;
        }
        case OrbitKind::E: {
            if (!in_even_domain(lambda)) {
                throw PreconditionError("E orbit sum requires lambda in P+ or r_i P+, got " +
                                        lambda.to_string());
            }
            for (const auto& w : even_orbit(lambda)) out.add_term(w.coords, 1);
            break;
        }
    }
    return out;
}

ExpSum multiply(const ExpSum& a, const ExpSum& b) {
    if (!(a.rank() == b.rank())) throw PreconditionError("rank mismatch in multiply");
    ExpSum out(a.rank());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term(add_keys(ka, kb), ca * cb);
    return out;
}

OrbitDecomposition decompose_into_C(const ExpSum& s) {
    OrbitDecomposition result(s.rank());
    ExpSum rem = s;
    while (!rem.empty()) {
        auto [key, coeff] = rem.leading();
        Weight w(s.rank(), key);
        if (!w.is_dominant()) {
            throw DecompositionError("sum is not Weyl-invariant: leading remainder term " +
                                         key_string(key) + " is not dominant",
                                     key);
        }
        if (coeff <= 0) {
            throw DecompositionError("non-positive multiplicity " + coeff.str() + " at " +
                                         key_string(key),
                                     key);
        }
        rem -= exp_sum(w, OrbitKind::C) * coeff;
        result.terms.emplace(std::move(key), std::move(coeff));
    }
    return result;
}

ExpSum exact_divide(const ExpSum& num, const ExpSum& den) {
    if (!(num.rank() == den.rank())) throw PreconditionError("rank mismatch in exact_divide");
    if (den.empty()) throw PreconditionError("division by the zero sum");
    ExpSum quotient(num.rank());
    if (num.empty()) return quotient;

    const auto n = static_cast<std::size_t>(num.rank().value());
    // Coordinatewise extremes of an exact quotient: max_k(num) = max_k(q) + max_k(den).
    WeightKey lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto cmp = [k](const auto& a, const auto& b) { return a.first[k] < b.first[k]; };
        auto [nmin, nmax] = std::minmax_element(num.terms().begin(), num.terms().end(), cmp);
        auto [dmin, dmax] = std::minmax_element(den.terms().begin(), den.terms().end(), cmp);
        lo[k] = nmin->first[k] - dmin->first[k];
        hi[k] = nmax->first[k] - dmax->first[k];
    }

    const auto [dkey, dcoeff] = den.leading();
    ExpSum rem = num;
    while (!rem.empty()) {
        auto [rkey, rcoeff] = rem.leading();
        WeightKey qkey = sub_keys(rkey, dkey);
        bool in_box = true;
        for (std::size_t k = 0; k < n; ++k) in_box = in_box && qkey[k] >= lo[k] && qkey[k] <= hi[k];
        if (!in_box || rcoeff % dcoeff != 0) {
            throw DivisionError("inexact division: irreducible remainder term " + rcoeff.str() +
                                    "*e^" + key_string(rkey),
                                rkey);
        }
        ExpSum step = ExpSum::monomial(Weight(num.rank(), qkey), rcoeff / dcoeff);
        rem -= multiply(step, den);
        quotient += step;
    }
    if (!(multiply(quotient, den) == num)) {
        throw DivisionError("inexact division: re-multiplication mismatch", {});
    }
    return quotient;
}

ExpSum character_exp_sum(const Weight& lambda) {
    if (!lambda.is_dominant()) {
        throw PreconditionError("character requires a dominant weight, got " + lambda.to_string());
    }
    const Weight rho = Weight::rho(lambda.rank);
    return exact_divide(exp_sum(lambda + rho, OrbitKind::S), exp_sum(rho, OrbitKind::S));
}

OrbitDecomposition character(const Weight& lambda) {
    return decompose_into_C(character_exp_sum(lambda));
}

}  // namespace weylcheb
