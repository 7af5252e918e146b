#include "weavekh/format.hpp"

#include <cstdio>

#include "weavekh/error.hpp"

namespace weavekh {
namespace {

std::string power(const std::string& var, int e) {
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

// Appends one signed term given its monomial text ("" for the constant monomial).
void append_term(std::string& out, const BigInt& c, const std::string& mono) {
  const bool negative = c < 0;
  const BigInt mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += mono;
  } else {
    out += mag.get_str() + "*" + mono;
  }
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) append_term(out, c, e == 0 ? "" : power(p.var(), e));
  return out;
}

std::string to_string(const BiLaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : p.terms()) {
    std::string mono;
    if (key.first != 0) mono = power("t", key.first);
    if (key.second != 0) mono += (mono.empty() ? "" : "*") + power("Q", key.second);
    append_term(out, c, mono);
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
  return {{"var", p.var()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  try {
    LaurentPoly::TermMap terms;
    for (const auto& term : j.at("terms")) {
      const int e = term.at(0).get<int>();
      BigInt c(term.at(1).get<std::string>());
      if (!terms.emplace(e, std::move(c)).second) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate exponent " + std::to_string(e));
      }
    }
    return LaurentPoly(j.at("var").get<std::string>(), std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed polynomial JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed coefficient: ") + ex.what());
  }
}

nlohmann::json to_json(const BiLaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : p.terms()) terms.push_back({key.first, key.second, c.get_str()});
  return {{"vars", {"t", "Q"}}, {"terms", std::move(terms)}};
}

std::string scientific(const BigInt& value, int digits) {
  if (digits < 1) throw Error(ErrorCode::kInvalidArgument, "digits must be positive");
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string s = BigInt(abs(value)).get_str();
  int exponent = static_cast<int>(s.size()) - 1;

  std::string mantissa;
  if (static_cast<int>(s.size()) <= digits) {
    mantissa = s + std::string(digits - s.size(), '0');
  } else {
    BigInt head(s.substr(0, digits));
    if (s[digits] >= '5') head += 1;
    mantissa = head.get_str();
    if (static_cast<int>(mantissa.size()) > digits) {  // 9.99999|5 rounds up to 10.0000
      mantissa.pop_back();
      ++exponent;
    }
  }
  std::string out = negative ? "-" : "";
  out += mantissa.substr(0, 1);
  if (digits > 1) out += "." + mantissa.substr(1);
  return out + "e" + std::to_string(exponent);
}

std::string significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

}  // namespace weavekh
