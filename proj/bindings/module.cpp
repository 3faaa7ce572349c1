#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qalex/command.hpp"
#include "qalex/highwt.hpp"

namespace py = pybind11;
using namespace qalex;

namespace {

Var var_of(const std::string& v) { return parse_var(v); }

py::dict poly_dict(const LaurentPoly& p, const std::string& var) {
    py::dict out;
    for (const auto& [e, c] : p.terms())
        out[py::str(exponent_key(e, var_of(var)))] = c.get_str();
    return out;
}

LaurentPoly poly_from_dict(const py::dict& d, const std::string& var) {
    LaurentPoly p;
    for (const auto& item : d)
        p.add_to_coeff(parse_exponent_key(py::cast<std::string>(item.first), var_of(var)),
                       Int(py::cast<std::string>(item.second)));
    return p;
}

py::dict stab_dict(const StabilizationResult& res, const std::string& var) {
    py::dict out;
    if (res.r.has_value())
        out["r"] = *res.r;
    else
        out["r"] = py::none();
    out["shift_qexp_per_m"] = res.shift_qexp_per_m;
    py::dict series;
    series["zero"] = res.series.is_zero();
    series["precision"] = res.series.precision();
    if (!res.series.is_zero()) {
        series["lowest"] = exponent_key(res.series.lowest(), var_of(var));
        py::dict window;
        for (std::size_t i = 0; i < res.series.coeffs().size(); ++i)
            if (res.series.coeffs()[i] != 0)
                window[py::str(exponent_key(res.series.lowest() + static_cast<int>(i),
                                            var_of(var)))] = res.series.coeffs()[i].get_str();
        series["window"] = window;
    }
    out["series"] = series;
    py::list hs;
    for (const auto& h : res.h_all) {
        py::dict hd;
        hd["num"] = poly_dict(h.num(), var);
        hd["den"] = poly_dict(h.den(), var);
        hs.append(hd);
    }
    out["h_all"] = hs;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Alexander polynomials of braid closures through the quantum gl(1|1) "
              "R-matrix, with exact twist formulas and stabilization series";

    py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<ExactnessError>(m, "ExactnessError", PyExc_ArithmeticError);

    m.def(
        "alexander",
        [](int n, const std::string& braid, const std::string& var) {
            return poly_dict(closure_scalar(parse_braid(braid, n)).poly, var);
        },
        py::arg("n"), py::arg("braid"), py::arg("var") = "t",
        "Alexander polynomial of the closure of a braid word, as an exponent -> "
        "coefficient dict of decimal strings.");

    m.def(
        "alexander_text",
        [](int n, const std::string& braid, const std::string& var) {
            return closure_scalar(parse_braid(braid, n)).poly.str(var_of(var));
        },
        py::arg("n"), py::arg("braid"), py::arg("var") = "t");

    m.def(
        "twisted_family",
        [](int n, const std::string& braid, int m_lo, int m_hi, const std::string& var) {
            const BraidWord base = parse_braid(braid, n);
            py::list rows;
            for (int m = m_lo; m <= m_hi; ++m) {
                py::dict row;
                row["m"] = m;
                row["poly"] = poly_dict(
                    closure_scalar(base.concat(full_twist_word(n, m))).poly, var);
                rows.append(row);
            }
            return rows;
        },
        py::arg("n"), py::arg("braid"), py::arg("m_lo"), py::arg("m_hi"),
        py::arg("var") = "t", "Direct computation of the twisted closures.");

    m.def(
        "twist_formula",
        [](int n, const std::string& braid, int m, const std::string& var) {
            const BraidWord base = parse_braid(braid, n);
            const LaurentPoly via = alexander_twist_formula(base, m).poly;
            const LaurentPoly direct =
                closure_scalar(base.concat(full_twist_word(n, m))).poly;
            py::dict out;
            out["poly"] = poly_dict(via, var);
            out["matches_direct"] = via == direct;
            return out;
        },
        py::arg("n"), py::arg("braid"), py::arg("m"), py::arg("var") = "t",
        "Delta(L_m) through the full-twist formula, with an equality flag "
        "against the direct computation.");

    m.def(
        "twist_coeffs",
        [](int n, int m, const std::string& var) {
            py::list out;
            for (int j = 0; j <= n - 1; ++j) out.append(poly_dict(twist_coeff_f(m, j, n), var));
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("var") = "t",
        "The Laurent-polynomial coefficients f_{m,j,n} for j = 0..n-1.");

    m.def(
        "stabilization",
        [](int n, const std::string& braid, int precision, const std::string& var) {
            return stab_dict(stabilization_series(parse_braid(braid, n), precision), var);
        },
        py::arg("n"), py::arg("braid"), py::arg("precision") = 16, py::arg("var") = "t");

    m.def(
        "torus",
        [](int n, int l, const std::string& var) {
            return poly_dict(torus_oracle(n, l).poly, var);
        },
        py::arg("n"), py::arg("l"), py::arg("var") = "t",
        "Closed form for torus knots (gcd(n,l)=1) and torus links (n | l).");

    m.def(
        "verify",
        [](int depth, unsigned seed) {
            py::list out;
            for (const auto& c : verify::verify_all(depth, seed)) {
                py::dict d;
                d["name"] = c.name;
                d["ok"] = c.ok;
                d["detail"] = c.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("depth") = 4, py::arg("seed") = 20240915u,
        "Run the property suites up to the given strand count.");

    m.def(
        "poly_from_dict",
        [](const py::dict& d, const std::string& var_in, const std::string& var_out) {
            return poly_dict(poly_from_dict(d, var_in), var_out);
        },
        py::arg("poly"), py::arg("var_in") = "t", py::arg("var_out") = "t",
        "Re-key a polynomial dict between the q and t displays.");
}
