#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalex/errors.hpp"

namespace qalex {

/// Arbitrary-precision integer coefficient type.
using Int = mpz_class;

/// Display variable. Internally every exponent is a q-exponent; t = q^2,
/// so a t-exponent is half the q-exponent and may be a half-integer.
enum class Var { q, t };

/// Laurent polynomial over Z in the single variable q.
///
/// Canonical form: the exponent->coefficient map never stores a zero
/// coefficient, so two values are equal iff their maps are equal. The zero
/// polynomial is the empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(Int c, int exp);
    /// q^exp
    static LaurentPoly q_power(int exp);
    static LaurentPoly one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Single term c*q^e?
    bool is_monomial() const { return terms_.size() == 1; }

    /// Lowest/highest exponent with nonzero coefficient. Pre: !is_zero().
    int lowest() const;
    int highest() const;

    /// Coefficient of q^exp (zero if absent).
    Int coeff(int exp) const;
    const std::map<int, Int>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return terms_ != rhs.terms_; }

    /// * q^exp
    LaurentPoly shifted(int exp) const;
    /// q -> q^{-1}
    LaurentPoly mirrored() const;
    LaurentPoly scaled(const Int& c) const;

    /// Value at q = 1 (sum of coefficients).
    Int eval_at_one() const;
    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;

    /// Exact division of every coefficient by c. Pre: c | every coefficient.
    LaurentPoly divided_coeffs(const Int& c) const;

    std::string str(Var var = Var::q) const;

    /// Internal: set a coefficient, erasing on zero. Keeps canonical form.
    void set_coeff(int exp, Int c);
    void add_to_coeff(int exp, const Int& c);

private:
    std::map<int, Int> terms_;
};

LaurentPoly operator*(const Int& c, const LaurentPoly& p);

/// Exact product (alias kept for symmetry with lp_exact_div).
inline LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// Quotient and remainder of Laurent division by b != 0. The quotient is the
/// largest integral partial quotient produced by long division from the top
/// degree; rem holds whatever could not be divided exactly over Z[q,q^-1].
/// a == quot * b + rem always holds, and rem == 0 iff the division is exact.
std::pair<LaurentPoly, LaurentPoly> lp_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b over Z[q,q^-1]. Throws ExactnessError when the
/// division leaves a remainder; a failed exact division is how a violated
/// divisibility claim is surfaced, never by truncation.
LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b);

std::optional<LaurentPoly> lp_try_exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// gcd in Z[q,q^-1], normalized to an ordinary polynomial with nonzero
/// constant term and positive leading coefficient. lp_gcd(0,0) = 0.
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Reduced fraction of Laurent polynomials: the scalar field C(q) with exact
/// integer representatives.
///
/// Canonical form: num/den in lowest terms (no common polynomial factor, no
/// common integer content), den an ordinary polynomial whose constant term is
/// nonzero and positive. The q-power unit is absorbed into num, so equality
/// is structural.
class RationalFunc {
public:
    RationalFunc() : den_(LaurentPoly::one()) {}
    /// Embeds a polynomial (denominator 1).
    RationalFunc(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
    RationalFunc(int c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::one()) {}
    /// Reduces num/den to canonical form. Throws InvalidInput on den == 0.
    RationalFunc(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    /// The polynomial value when den == 1; throws ExactnessError otherwise.
    const LaurentPoly& as_poly() const;

    RationalFunc operator-() const;
    RationalFunc operator+(const RationalFunc& rhs) const;
    RationalFunc operator-(const RationalFunc& rhs) const;
    RationalFunc operator*(const RationalFunc& rhs) const;
    RationalFunc operator/(const RationalFunc& rhs) const;
    RationalFunc& operator+=(const RationalFunc& rhs) { return *this = *this + rhs; }
    RationalFunc& operator-=(const RationalFunc& rhs) { return *this = *this - rhs; }
    RationalFunc& operator*=(const RationalFunc& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse. Throws InvalidInput on zero.
    RationalFunc inverse() const;

    bool operator==(const RationalFunc& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const RationalFunc& rhs) const { return !(*this == rhs); }

    std::string str(Var var = Var::q) const;

private:
    LaurentPoly num_;
    LaurentPoly den_; // normalized, nonzero
};

/// rf_reduce of the build contract: canonical reduced fraction.
inline RationalFunc rf_reduce(LaurentPoly num, LaurentPoly den) {
    return RationalFunc(std::move(num), std::move(den));
}

/// If a == (sign * q^shift) * b for nonzero a, b, returns {sign, shift}.
std::optional<std::pair<int, int>> monomial_ratio(const RationalFunc& a, const RationalFunc& b);

/// Truncated Laurent series in q: `precision` consecutive exact coefficients
/// starting at the lowest nonzero exponent. The leading stored coefficient is
/// nonzero unless the series is identically zero to the stated precision, in
/// which case no coefficients are stored.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(int lowest, std::vector<Int> coeffs, int precision);

    static LaurentSeries zero(int precision) { return LaurentSeries(0, {}, precision); }

    bool is_zero() const { return coeffs_.empty(); }
    int lowest() const { return lowest_; }
    int precision() const { return precision_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Coefficient of q^exp; only meaningful inside the retained window.
    Int coeff(int exp) const;
    /// Window [lowest, lowest+precision) for nonzero series.
    bool in_window(int exp) const;

    LaurentSeries shifted(int exp) const;

    /// Exact agreement of the two retained windows on their overlap.
    bool agrees_with(const LaurentSeries& rhs) const;

    /// Does the polynomial, shifted by q^shift, match this series on the
    /// first `count` window coefficients?
    bool matches_poly_prefix(const LaurentPoly& p, int shift, int count) const;

    bool operator==(const LaurentSeries& rhs) const {
        return lowest_ == rhs.lowest_ && coeffs_ == rhs.coeffs_ && precision_ == rhs.precision_;
    }

    std::string str(Var var = Var::q) const;

private:
    int lowest_ = 0;
    std::vector<Int> coeffs_;
    int precision_ = 0;
};

/// Formal expansion of f in increasing powers of q, exact on the first
/// `precision` window coefficients. Requires the (normalized) denominator to
/// have a unit +-1 constant term whenever a division would otherwise leave
/// the integers; a violation throws ExactnessError.
LaurentSeries series_of_rf(const RationalFunc& f, int precision);

/// Product of the retained window with a polynomial agrees with `expected`
/// on every exponent the window fully determines. Used to validate series
/// expansions independently of how they were produced.
bool series_times_poly_matches(const LaurentSeries& s, const LaurentPoly& den,
                               const LaurentPoly& expected);

} // namespace qalex
