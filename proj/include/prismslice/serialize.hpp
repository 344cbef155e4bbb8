#pragma once

/**
 * @file serialize.hpp
 * @brief JSON wire formats: rationals as "p/q" strings in lowest terms with a
 *        positive denominator, polynomials as arrays of such strings indexed
 *        by degree, weighted permutations as {"cycles": ..., "weights": ...}
 *        in canonical cycle order.
 */

#include <json.hpp>

#include "prismslice/counting.hpp"
#include "prismslice/polynomial.hpp"
#include "prismslice/weighted_perms.hpp"

namespace prismslice {

using json = nlohmann::ordered_json;

inline json to_json(const RatPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

inline json to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

inline RatPoly rat_poly_from_json(const json& arr) {
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& v : arr) coeffs.push_back(Rational::from_string(v.get<std::string>()));
    return RatPoly(std::move(coeffs));
}

inline json to_json(const WeightedPermutation& p) {
    json cycles = json::array();
    for (const auto& cyc : p.cycles) cycles.push_back(cyc);
    return json{{"cycles", cycles}, {"weights", p.weights}};
}

inline json to_json(const CapVector& c) { return json(c.entries()); }

} // namespace prismslice
