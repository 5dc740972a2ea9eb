#pragma once

// Canonical text and JSON encodings of rings and polynomials.
//
// Text: terms in decreasing ring order joined by " + " / " - ", each term a
// coefficient followed by "*"-joined factors such as "e3^2"; unit coefficients
// are omitted and the zero polynomial prints as "0".
//
// JSON: {"ring": {"vars": [...], "field": "Q", "order": "grevlex"},
//        "terms": [[[exponents...], "coeff"], ...]}

#include <string>
#include <string_view>

#include "til/third_party/json.hpp"

#include "til/polynomial.hpp"

namespace til {

template <class K>
std::string to_string(const Polynomial<K>& f);

std::string monomial_to_string(const Ring& r, const ExponentVector& m);

/// Parses sums of products of integers, rationals, variables, powers and
/// parenthesised subexpressions. Throws std::invalid_argument on bad input.
template <class K>
Polynomial<K> parse_polynomial(const Ring& r, std::string_view text);

nlohmann::json ring_to_json(const Ring& r);
Ring ring_from_json(const nlohmann::json& j);

template <class K>
nlohmann::json to_json(const Polynomial<K>& f);
/// Decodes into the given ring, or into the embedded one when omitted.
template <class K>
Polynomial<K> polynomial_from_json(const nlohmann::json& j, const Ring& r);
template <class K>
Polynomial<K> polynomial_from_json(const nlohmann::json& j);

}  // namespace til
