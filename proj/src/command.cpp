#include "qalex/command.hpp"

#include <sstream>

namespace qalex::cli {

namespace {

nlohmann::json braid_json(const BraidWord& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (int g : w.letters) arr.push_back(g);
    return arr;
}

std::string var_name(Var var) { return var == Var::q ? "q" : "t"; }

std::string shift_rule_str(int qexp_per_m) {
    // the t-exponent per added twist is qexp_per_m / 2
    std::ostringstream out;
    out << "t^(";
    if (qexp_per_m % 2 == 0) {
        const int c = qexp_per_m / 2;
        if (c == 1)
            out << "m";
        else if (c == -1)
            out << "-m";
        else
            out << c << "*m";
    } else {
        out << qexp_per_m << "*m/2";
    }
    out << ")";
    return out.str();
}

nlohmann::json rf_json(const RationalFunc& f, Var var) {
    nlohmann::json obj;
    obj["num"] = poly_to_json(f.num(), var);
    obj["den"] = poly_to_json(f.den(), var);
    return obj;
}

} // namespace

Command parse_command(const std::string& name) {
    if (name == "alex") return Command::alex;
    if (name == "family") return Command::family;
    if (name == "formula") return Command::formula;
    if (name == "coeffs") return Command::coeffs;
    if (name == "stabilize") return Command::stabilize;
    if (name == "torus") return Command::torus;
    if (name == "verify") return Command::verify;
    throw InvalidInput("unknown command '" + name + "'");
}

CommandResult run_command(const CommandRequest& req) {
    switch (req.command) {
    case Command::alex: {
        if (req.n < 1) throw InvalidInput("alex requires --n >= 1");
        const BraidWord w = parse_braid(req.braid_text, req.n);
        const AlexanderValue value = closure_scalar(w);
        return PolyResult{req.n, w, value.poly};
    }
    case Command::torus: {
        if (!req.m.has_value()) throw InvalidInput("torus requires --m (the power l of T(n,l))");
        const AlexanderValue value = torus_oracle(req.n, *req.m);
        return PolyResult{req.n, value.source, value.poly};
    }
    case Command::family:
    case Command::formula: {
        if (req.n < 2) throw InvalidInput("family/formula require --n >= 2");
        const BraidWord base = parse_braid(req.braid_text, req.n);
        int lo = 0, hi = 0;
        if (req.m_range.has_value()) {
            lo = req.m_range->first;
            hi = req.m_range->second;
        } else if (req.m.has_value()) {
            lo = hi = *req.m;
        } else {
            throw InvalidInput("family/formula require --m or --m-range");
        }
        if (lo < 0 || hi < lo) throw InvalidInput("bad twist range");
        TableResult table{req.n, base, {}};
        for (int m = lo; m <= hi; ++m) {
            TableRow row;
            row.m = m;
            const LaurentPoly direct =
                closure_scalar(base.concat(full_twist_word(req.n, m))).poly;
            if (req.command == Command::formula) {
                row.poly = alexander_twist_formula(base, m).poly;
                row.matches_direct = row.poly == direct;
            } else {
                row.poly = direct;
            }
            table.rows.push_back(std::move(row));
        }
        return table;
    }
    case Command::coeffs: {
        if (req.n < 2) throw InvalidInput("coeffs requires --n >= 2");
        if (!req.m.has_value()) throw InvalidInput("coeffs requires --m");
        CoeffsResult out{req.n, *req.m, {}};
        for (int j = 0; j <= req.n - 1; ++j) out.f.push_back(twist_coeff_f(*req.m, j, req.n));
        return out;
    }
    case Command::stabilize: {
        if (req.n < 2) throw InvalidInput("stabilize requires --n >= 2");
        const BraidWord base = parse_braid(req.braid_text, req.n);
        return StabilizeResult{req.n, base, stabilization_series(base, req.precision)};
    }
    case Command::verify: {
        if (req.depth < 2) throw InvalidInput("verify requires --depth >= 2");
        VerifyResult out;
        out.checks = verify::verify_all(req.depth, req.seed);
        for (const auto& c : out.checks) out.all_ok = out.all_ok && c.ok;
        return out;
    }
    }
    throw InvalidInput("unhandled command");
}

namespace {

std::string format_poly_result(const PolyResult& r, Format format, Var var) {
    switch (format) {
    case Format::json: {
        nlohmann::json obj;
        obj["n"] = r.n;
        obj["braid"] = braid_json(r.word);
        obj["variable"] = var_name(var);
        obj["poly"] = poly_to_json(r.poly, var);
        return obj.dump();
    }
    case Format::csv:
        return poly_to_csv(r.poly, var);
    case Format::text:
        return poly_to_text(r.poly, var) + "\n";
    }
    return "";
}

std::string format_table_result(const TableResult& r, Format format, Var var) {
    switch (format) {
    case Format::json: {
        nlohmann::json obj;
        obj["n"] = r.n;
        obj["braid"] = braid_json(r.base);
        obj["variable"] = var_name(var);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : r.rows) {
            nlohmann::json jrow;
            jrow["m"] = row.m;
            jrow["poly"] = poly_to_json(row.poly, var);
            if (row.matches_direct.has_value()) jrow["matches_direct"] = *row.matches_direct;
            rows.push_back(std::move(jrow));
        }
        obj["rows"] = std::move(rows);
        return obj.dump();
    }
    case Format::csv: {
        std::ostringstream out;
        for (const auto& row : r.rows)
            for (const auto& [e, c] : row.poly.terms())
                out << row.m << "," << exponent_key(e, var) << "," << c.get_str() << "\n";
        return out.str();
    }
    case Format::text: {
        std::ostringstream out;
        for (const auto& row : r.rows) {
            out << "m=" << row.m << ": " << poly_to_text(row.poly, var);
            if (row.matches_direct.has_value())
                out << (*row.matches_direct ? "  [matches direct]" : "  [MISMATCH]");
            out << "\n";
        }
        return out.str();
    }
    }
    return "";
}

std::string format_coeffs_result(const CoeffsResult& r, Format format, Var var) {
    switch (format) {
    case Format::json: {
        nlohmann::json obj;
        obj["n"] = r.n;
        obj["m"] = r.m;
        obj["variable"] = var_name(var);
        nlohmann::json coeffs = nlohmann::json::array();
        for (std::size_t j = 0; j < r.f.size(); ++j) {
            nlohmann::json jc;
            jc["j"] = j;
            jc["poly"] = poly_to_json(r.f[j], var);
            coeffs.push_back(std::move(jc));
        }
        obj["coeffs"] = std::move(coeffs);
        return obj.dump();
    }
    case Format::csv: {
        std::ostringstream out;
        for (std::size_t j = 0; j < r.f.size(); ++j)
            for (const auto& [e, c] : r.f[j].terms())
                out << j << "," << exponent_key(e, var) << "," << c.get_str() << "\n";
        return out.str();
    }
    case Format::text: {
        std::ostringstream out;
        for (std::size_t j = 0; j < r.f.size(); ++j)
            out << "f[m=" << r.m << ",j=" << j << "] = " << poly_to_text(r.f[j], var) << "\n";
        return out.str();
    }
    }
    return "";
}

std::string format_stabilize_result(const StabilizeResult& r, Format format, Var var) {
    switch (format) {
    case Format::json: {
        nlohmann::json obj;
        obj["n"] = r.n;
        obj["braid"] = braid_json(r.base);
        obj["variable"] = var_name(var);
        if (r.stab.r.has_value())
            obj["r"] = *r.stab.r;
        else
            obj["r"] = nullptr;
        obj["shift_qexp_per_m"] = r.stab.shift_qexp_per_m;
        obj["shift_rule"] = shift_rule_str(r.stab.shift_qexp_per_m);
        obj["series"] = series_to_json(r.stab.series, var);
        nlohmann::json hs = nlohmann::json::array();
        for (std::size_t rr = 0; rr < r.stab.h_all.size(); ++rr) {
            nlohmann::json h = rf_json(r.stab.h_all[rr], var);
            h["r"] = rr;
            hs.push_back(std::move(h));
        }
        obj["h_all"] = std::move(hs);
        return obj.dump();
    }
    case Format::csv: {
        std::ostringstream out;
        const LaurentSeries& s = r.stab.series;
        for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
            if (s.coeffs()[i] == 0) continue;
            out << exponent_key(s.lowest() + static_cast<int>(i), var) << ","
                << s.coeffs()[i].get_str() << "\n";
        }
        return out.str();
    }
    case Format::text: {
        std::ostringstream out;
        if (r.stab.r.has_value()) {
            out << "r = " << *r.stab.r << "\n";
            out << "shift per twist: " << shift_rule_str(r.stab.shift_qexp_per_m) << "\n";
            out << "h = " << r.stab.series.str(var) << "\n";
        } else {
            out << "all h_r vanish; the twisted family has zero Alexander polynomial\n";
        }
        for (std::size_t rr = 0; rr < r.stab.h_all.size(); ++rr)
            out << "h_" << rr << " = " << r.stab.h_all[rr].str(var) << "\n";
        return out.str();
    }
    }
    return "";
}

std::string format_verify_result(const VerifyResult& r, Format format, Var) {
    switch (format) {
    case Format::json: {
        nlohmann::json obj;
        obj["ok"] = r.all_ok;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            nlohmann::json jc;
            jc["name"] = c.name;
            jc["ok"] = c.ok;
            jc["detail"] = c.detail;
            checks.push_back(std::move(jc));
        }
        obj["checks"] = std::move(checks);
        return obj.dump();
    }
    case Format::csv: {
        std::ostringstream out;
        for (const auto& c : r.checks)
            out << "\"" << c.name << "\"," << (c.ok ? "ok" : "FAIL") << "\n";
        return out.str();
    }
    case Format::text: {
        std::ostringstream out;
        for (const auto& c : r.checks) {
            out << (c.ok ? "[ok]   " : "[FAIL] ") << c.name;
            if (!c.ok) out << ": " << c.detail;
            out << "\n";
        }
        out << (r.all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
        return out.str();
    }
    }
    return "";
}

} // namespace

std::string format_output(const CommandResult& result, Format format, Var var) {
    return std::visit(
        [&](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, PolyResult>) return format_poly_result(r, format, var);
            if constexpr (std::is_same_v<T, TableResult>)
                return format_table_result(r, format, var);
            if constexpr (std::is_same_v<T, CoeffsResult>)
                return format_coeffs_result(r, format, var);
            if constexpr (std::is_same_v<T, StabilizeResult>)
                return format_stabilize_result(r, format, var);
            if constexpr (std::is_same_v<T, VerifyResult>)
                return format_verify_result(r, format, var);
            return std::string();
        },
        result);
}

} // namespace qalex::cli
