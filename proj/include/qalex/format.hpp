#pragma once

#include <string>

#include "json.hpp"

#include "qalex/laurent.hpp"

namespace qalex {

enum class Format { json, csv, text };

Format parse_format(const std::string& s);
Var parse_var(const std::string& s);

/// Exponent key for the requested display variable. q-exponents are halved
/// for t; odd halves render as exact fractions like "-1/2".
std::string exponent_key(int qexp, Var var);
/// Inverse of exponent_key; returns the q-exponent.
int parse_exponent_key(const std::string& key, Var var);

/// {"exponent": "coefficient"} with decimal-string coefficients, so
/// arbitrary precision survives JSON. The zero polynomial is {}.
nlohmann::json poly_to_json(const LaurentPoly& p, Var var);
LaurentPoly poly_from_json(const nlohmann::json& obj, Var var);

/// exponent,coefficient rows sorted by ascending exponent.
std::string poly_to_csv(const LaurentPoly& p, Var var);

/// Classical polynomial notation, terms in ascending exponent order.
std::string poly_to_text(const LaurentPoly& p, Var var);

nlohmann::json series_to_json(const LaurentSeries& s, Var var);

} // namespace qalex
