#include "weylcheb/io.hpp"

#include <limits>
#include <sstream>

namespace weylcheb {

using nlohmann::json;

json coeff_to_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return c.convert_to<std::int64_t>();
    }
    return c.str();
}

BigInt coeff_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw PreconditionError("coefficient must be an integer or a decimal string");
}

namespace {

template <class Map>
json terms_array(const Map& terms, const char* key) {
    json arr = json::array();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        arr.push_back({{key, it->first}, {"coeff", coeff_to_json(it->second)}});
    }
    return arr;
}

Rank rank_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j["rank"].is_number_integer()) {
        throw PreconditionError("JSON object needs an integer \"rank\"");
    }
    if (!j.contains("terms") || !j["terms"].is_array()) throw PreconditionError("JSON object needs a \"terms\" array");
    return Rank(j["rank"].get<int>());
}

WeightKey key_from_json(const json& t, Rank r) {
    if (!t.is_object() || !t.contains("weight") || !t["weight"].is_array()) {
        throw PreconditionError("term needs a \"weight\" array");
    }
    WeightKey k;
    for (const auto& v : t["weight"]) {
        if (!v.is_number_integer()) throw PreconditionError("weight entries must be integers");
        k.push_back(v.get<std::int64_t>());
    }
    if (k.size() != static_cast<std::size_t>(r.value())) throw PreconditionError("weight length differs from rank");
    if (!t.contains("coeff")) throw PreconditionError("term needs a \"coeff\"");
    return k;
}

std::string algebra_name(Rank r) { return "A" + std::to_string(r.value()); }

template <class Map>
std::string csv_of(const Map& terms, int n) {
    std::ostringstream os;
    for (int j = 1; j <= n; ++j) os << "deg_" << j << ',';
    os << "coeff\n";
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        for (auto d : it->first) os << d << ',';
        os << it->second << '\n';
    }
    return os.str();
}

}  // namespace

json to_json(const ExpSum& s) { return {{"rank", s.rank().value()}, {"terms", terms_array(s.terms(), "weight")}}; }

json to_json(const OrbitDecomposition& d) {
    return {{"rank", d.rank.value()}, {"terms", terms_array(d.terms, "weight")}};
}

ExpSum exp_sum_from_json(const json& j) {
    const Rank r = rank_from_json(j);
    ExpSum s(r);
    for (const auto& t : j["terms"]) {
        auto k = key_from_json(t, r);
        s.add_term(k, coeff_from_json(t["coeff"]));
    }
    return s;
}

OrbitDecomposition decomposition_from_json(const json& j) {
    const Rank r = rank_from_json(j);
    OrbitDecomposition d(r);
    for (const auto& t : j["terms"]) {
        auto k = key_from_json(t, r);
        if (!Weight(r, k).is_dominant()) throw PreconditionError("decomposition keys must be dominant");
        BigInt c = coeff_from_json(t["coeff"]);
        if (c < 1) throw PreconditionError("multiplicities must be positive");
        d.terms[k] += c;
    }
    return d;
}

const char* to_string(PolyKind kind) {
    switch (kind) {
        case PolyKind::T: return "T";
        case PolyKind::U: return "U";
        case PolyKind::PC: return "PC";
        case PolyKind::PS: return "PS";
        case PolyKind::PE: return "PE";
    }
    return "?";
}

PolyKind poly_kind_from_string(const std::string& s) {
    if (s == "T") return PolyKind::T;
    if (s == "U") return PolyKind::U;
    if (s == "PC") return PolyKind::PC;
    if (s == "PS") return PolyKind::PS;
    if (s == "PE") return PolyKind::PE;
    throw PreconditionError("unknown polynomial kind '" + s + "' (expected T, U, PC, PS or PE)");
}

json to_json(const XPolynomial& p, const Weight& lambda, PolyKind kind) {
    return {{"algebra", algebra_name(p.rank())},
            {"lambda", lambda.coords},
            {"kind", to_string(kind)},
            {"terms", terms_array(p.terms(), "deg")}};
}

json to_json(const YLaurent& p, const Weight& lambda, PolyKind kind) {
    return {{"algebra", algebra_name(p.rank())},
            {"lambda", lambda.coords},
            {"kind", to_string(kind)},
            {"terms", terms_array(p.terms(), "deg")}};
}

std::string to_csv(const XPolynomial& p) { return csv_of(p.terms(), p.rank().value()); }

std::string to_csv(const YLaurent& p) { return csv_of(p.terms(), p.rank().value()); }

json to_json(const OrthogonalityReport& r) {
    return {{"kind", to_string(r.kind)},
            {"rank", r.rank},
            {"coord_bound", r.coord_bound},
            {"quadrature_points", r.quadrature_points},
            {"pairs_tested", r.pairs_tested},
            {"max_deviation", r.max_deviation},
            {"max_quadrature_deviation", r.max_quadrature_deviation},
            {"aliasing_pairs", r.aliasing_pairs},
            {"failures", r.failures},
            {"passed", r.passed}};
}

json to_json(const SymmetryReport& r) {
    return {{"lambda", r.lambda.coords},
            {"rank", r.lambda.rank.value()},
            {"trials", r.trials},
            {"seed", r.seed},
            {"scale", r.scale},
            {"tolerance", r.tolerance},
            {"max_c_deviation", r.max_c_deviation},
            {"max_s_deviation", r.max_s_deviation},
            {"max_e_deviation", r.max_e_deviation},
            {"max_conjugation_deviation", r.max_conjugation_deviation},
            {"passed", r.passed}};
}

json to_json(const DetFormsReport& r) {
    return {{"rank", r.rank},
            {"samples", r.samples},
            {"seed", r.seed},
            {"tolerance", r.tolerance},
            {"max_plus_deviation", r.max_plus_deviation},
            {"max_minus_deviation", r.max_minus_deviation},
            {"max_alt_deviation", r.max_alt_deviation},
            {"max_alt_half_deviation", r.max_alt_half_deviation},
            {"max_ryser_deviation", r.max_ryser_deviation},
            {"max_wall_deviation", r.max_wall_deviation},
            {"passed", r.passed}};
}

}  // namespace weylcheb
