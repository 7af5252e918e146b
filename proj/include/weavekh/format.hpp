#pragma once

// Text and JSON renderings shared by the CLI and the tests.

#include <json.hpp>

#include <string>

#include "weavekh/laurent.hpp"

namespace weavekh {

/// Ascending-exponent text form, e.g. "t^-2 - t^-1 + 1 - t + t^2".
std::string to_string(const LaurentPoly& p);
/// Ascending in t, then Q, e.g. "t^-2*Q^-5 + t^-1*Q^-1 + Q^-1 + Q".
std::string to_string(const BiLaurentPoly& p);

/// {"var":"t","terms":[[exp,"coeff"],...]}, coefficients as decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);
/// {"vars":["t","Q"],"terms":[[t_exp,Q_exp,"coeff"],...]}
nlohmann::json to_json(const BiLaurentPoly& p);

/// Round-half-up scientific form with `digits` significant digits, e.g. "1.51272e20".
std::string scientific(const BigInt& value, int digits = 6);
/// printf %.{digits}g
std::string significant(double value, int digits = 6);

}  // namespace weavekh
