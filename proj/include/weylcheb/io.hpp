// JSON and CSV forms of ring elements, polynomials and reports.
//
//   ExpSum / OrbitDecomposition:
//     {"rank": n, "terms": [{"weight": [...], "coeff": c}, ...]}
//   XPolynomial / YLaurent:
//     {"algebra": "A<n>", "lambda": [...], "kind": "T|U|PC|PS|PE",
//      "terms": [{"deg": [...], "coeff": c}, ...]}
//
// Terms are written in descending order (height order for weights, grlex for
// X-degrees). Coefficients that do not fit in 64 bits are written as decimal
// strings.
#pragma once

#include <string>

#include <json.hpp>

#include "weylcheb/analysis.hpp"
#include "weylcheb/chebyshev.hpp"
#include "weylcheb/exp_ring.hpp"

namespace weylcheb {

nlohmann::json coeff_to_json(const BigInt& c);
BigInt coeff_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExpSum& s);
nlohmann::json to_json(const OrbitDecomposition& d);
/// Throws PreconditionError on malformed input.
ExpSum exp_sum_from_json(const nlohmann::json& j);
OrbitDecomposition decomposition_from_json(const nlohmann::json& j);

enum class PolyKind { T, U, PC, PS, PE };

const char* to_string(PolyKind kind);
PolyKind poly_kind_from_string(const std::string& s);

nlohmann::json to_json(const XPolynomial& p, const Weight& lambda, PolyKind kind);
nlohmann::json to_json(const YLaurent& p, const Weight& lambda, PolyKind kind);

/// Header "deg_1,...,deg_n,coeff", then one term per row in the same order
/// as the JSON form.
std::string to_csv(const XPolynomial& p);
std::string to_csv(const YLaurent& p);

nlohmann::json to_json(const OrthogonalityReport& r);
nlohmann::json to_json(const SymmetryReport& r);
nlohmann::json to_json(const DetFormsReport& r);

}  // namespace weylcheb
