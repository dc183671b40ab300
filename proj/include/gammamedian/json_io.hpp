#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "asymptotics.hpp"
#include "qsqrt2.hpp"
#include "rational.hpp"

namespace gammamedian {

inline void to_json(nlohmann::json& j, const Rational& r) { j = r.to_string(); }

inline void from_json(const nlohmann::json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const QSqrt2& q) {
    j = nlohmann::json{{"rat", q.rat_part().to_string()}, {"sqrt2", q.sqrt2_part().to_string()}};
}

inline void from_json(const nlohmann::json& j, QSqrt2& q) {
    q = QSqrt2(Rational::parse(j.at("rat").get<std::string>()), Rational::parse(j.at("sqrt2").get<std::string>()));
}

/// {"linear": "p/q", "constant": "p/q", "inverse": ["p/q", ...], "order": n}
inline void to_json(nlohmann::json& j, const AsymptoticExpansion& e) {
    j = nlohmann::json{{"linear", e.linear_coeff()},
                       {"constant", e.const_coeff()},
                       {"inverse", e.inverse_coeffs()},
                       {"order", e.order()}};
}

} // namespace gammamedian
