#include "qalex/format.hpp"

#include <sstream>

namespace qalex {

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw InvalidInput("unknown format '" + s + "' (expected json, csv or text)");
}

Var parse_var(const std::string& s) {
    if (s == "q") return Var::q;
    if (s == "t") return Var::t;
    throw InvalidInput("unknown variable '" + s + "' (expected q or t)");
}

std::string exponent_key(int qexp, Var var) {
    if (var == Var::q) return std::to_string(qexp);
    if (qexp % 2 == 0) return std::to_string(qexp / 2);
    return std::to_string(qexp) + "/2";
}

int parse_exponent_key(const std::string& key, Var var) {
    const auto slash = key.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            const int v = std::stoi(key, &used);
            if (used != key.size()) throw InvalidInput("");
            return var == Var::t ? 2 * v : v;
        }
        if (var != Var::t || key.substr(slash + 1) != "2")
            throw InvalidInput("");
        std::size_t used = 0;
        const int num = std::stoi(key.substr(0, slash), &used);
        if (used != slash) throw InvalidInput("");
        return num; // t-exponent num/2 is q-exponent num
    } catch (const std::exception&) {
        throw InvalidInput("malformed exponent key '" + key + "'");
    }
}

nlohmann::json poly_to_json(const LaurentPoly& p, Var var) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) obj[exponent_key(e, var)] = c.get_str();
    return obj;
}

LaurentPoly poly_from_json(const nlohmann::json& obj, Var var) {
    if (!obj.is_object()) throw InvalidInput("polynomial JSON must be an object");
    LaurentPoly p;
    for (const auto& [key, value] : obj.items()) {
        if (!value.is_string()) throw InvalidInput("polynomial coefficients must be strings");
        Int c;
        try {
            c = Int(value.get<std::string>());
        } catch (const std::exception&) {
            throw InvalidInput("malformed coefficient '" + value.get<std::string>() + "'");
        }
        p.add_to_coeff(parse_exponent_key(key, var), c);
    }
    return p;
}

std::string poly_to_csv(const LaurentPoly& p, Var var) {
    std::ostringstream out;
    for (const auto& [e, c] : p.terms())
        out << exponent_key(e, var) << "," << c.get_str() << "\n";
    return out.str();
}

std::string poly_to_text(const LaurentPoly& p, Var var) { return p.str(var); }

nlohmann::json series_to_json(const LaurentSeries& s, Var var) {
    nlohmann::json obj;
    obj["zero"] = s.is_zero();
    obj["precision"] = s.precision();
    if (!s.is_zero()) {
        obj["lowest"] = exponent_key(s.lowest(), var);
        nlohmann::json window = nlohmann::json::object();
        for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
            if (s.coeffs()[i] == 0) continue;
            window[exponent_key(s.lowest() + static_cast<int>(i), var)] = s.coeffs()[i].get_str();
        }
        obj["window"] = window;
    }
    return obj;
}

} // namespace qalex
