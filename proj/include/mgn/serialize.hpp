#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mgn/characters.hpp"
#include "mgn/confspace.hpp"
#include "mgn/moduli.hpp"
#include "mgn/ppolynomial.hpp"
#include "mgn/series.hpp"

// Canonical JSON and LaTeX forms. Rationals are always "num/den" strings and
// containers are emitted in their canonical order, so the same value always
// produces the same bytes.

namespace mgn::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"1": 2, "3": 1} for p1^2*p3.
Json to_json(const PMonomial& m);
PMonomial monomial_from_json(const Json& j);

/// [{"monomial": {...}, "coefficient": "num/den"}, ...]
Json to_json(const PPolynomial& p);
PPolynomial ppolynomial_from_json(const Json& j);

/// [{"partition": [2,1], "multiplicity": "num/den"}, ...]
Json to_json(const SchurExpansion& s);

/// [{"n": 0, "coefficient": <PPolynomial>}, ...]
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json to_json(const moduli::Signature& sig);
Json to_json(const moduli::CoefficientRecord& rec);

/// {"group_order": int, "elements": [{"label": str, "chi_by_orbit_length": {"1": int, ...}}]}
confspace::GroupActionData group_action_from_json(const Json& j);
Json to_json(const confspace::GroupActionData& data);

/// {"strata": [{"weight": "num/den", "exponents": {"1": int, ...}}]}
std::vector<confspace::Stratum> strata_from_json(const Json& j);
Json strata_to_json(const std::vector<confspace::Stratum>& strata);

/// (1+p_1t)^6(1+p_2t^2)^{-4}; exponent 1 omitted, braces only when needed.
std::string latex_factors(const std::map<int, long>& exponents);
/// One summand, e.g. "-\frac{1}{240}(1+p_1t)^{-2}"; `leading` drops a "+" sign.
std::string latex_term(const Rational& weight, const std::map<int, long>& exponents, bool leading);
/// \frac{1}{2}p_2+\frac{1}{2}p_1^2
std::string latex_polynomial(const PPolynomial& p);
std::string latex_rational(const Rational& r);

}  // namespace mgn::io
