#include "qalex/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qalex {

namespace {

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int exact_quot(const Int& n, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Exponent rendering: q-exponents are halved for t display.
std::string var_power_str(int qexp, Var var) {
    const char* name = var == Var::q ? "q" : "t";
    if (qexp == 0) return "1";
    if (var == Var::q) {
        if (qexp == 1) return name;
        return std::string(name) + "^" + std::to_string(qexp);
    }
    if (qexp == 2) return name;
    if (qexp % 2 == 0) return std::string(name) + "^" + std::to_string(qexp / 2);
    return std::string(name) + "^(" + std::to_string(qexp) + "/2)";
}

} // namespace

LaurentPoly LaurentPoly::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Int c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exp, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::q_power(int exp) { return monomial(1, exp); }

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::lowest() const {
    if (is_zero()) throw ExactnessError("lowest(): zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::highest() const {
    if (is_zero()) throw ExactnessError("highest(): zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, Int c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(c);
}

void LaurentPoly::add_to_coeff(int exp, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_to_coeff(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_to_coeff(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    r += rhs;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly r = *this;
    r -= rhs;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) r.add_to_coeff(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator*(const Int& c, const LaurentPoly& p) { return p.scaled(c); }

LaurentPoly LaurentPoly::shifted(int exp) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + exp, c);
    return r;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::divided_coeffs(const Int& c) const {
    if (c == 1) return *this;
    LaurentPoly r;
    for (const auto& [e, k] : terms_) {
        if (!divides(c, k)) throw ExactnessError("divided_coeffs: non-exact coefficient division");
        r.terms_.emplace(e, exact_quot(k, c));
    }
    return r;
}

std::string LaurentPoly::str(Var var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (e == 0) {
            out << a.get_str();
        } else if (a == 1) {
            out << var_power_str(e, var);
        } else {
            out << a.get_str() << "*" << var_power_str(e, var);
        }
    }
    return out.str();
}

std::pair<LaurentPoly, LaurentPoly> lp_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw InvalidInput("lp_divmod: division by zero polynomial");
    LaurentPoly quot, rem = a;
    if (a.is_zero()) return {quot, rem};
    const int min_exp = a.lowest() - b.lowest();
    const Int lead_b = b.coeff(b.highest());
    while (!rem.is_zero()) {
        const int e = rem.highest() - b.highest();
        if (e < min_exp) break; // quotient exponent below any exact quotient's range
        const Int lead_r = rem.coeff(rem.highest());
        if (!divides(lead_b, lead_r)) break;
        const Int k = exact_quot(lead_r, lead_b);
        quot.add_to_coeff(e, k);
        rem -= LaurentPoly::monomial(k, e) * b;
    }
    return {quot, rem};
}

LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto [quot, rem] = lp_divmod(a, b);
    if (!rem.is_zero())
        throw ExactnessError("lp_exact_div: non-exact division, remainder " + rem.str());
    return quot;
}

std::optional<LaurentPoly> lp_try_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto [quot, rem] = lp_divmod(a, b);
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

namespace {

// Normalize up to units of Z[q,q^-1]: lowest exponent 0, positive constant term.
LaurentPoly unit_normalized(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly r = p.shifted(-p.lowest());
    if (r.coeff(0) < 0) r = -r;
    return r;
}

int ordinary_degree(const LaurentPoly& p) { return p.highest(); } // pre: lowest() == 0 shape

// One pseudo-remainder round: reduces deg(a) below deg(b) by multiplying with
// powers of lead(b). Inputs are ordinary (lowest exponent >= 0).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const Int lead_b = b.coeff(b.highest());
    const int deg_b = ordinary_degree(b);
    while (!a.is_zero() && ordinary_degree(a) >= deg_b) {
        const int e = a.highest() - deg_b;
        const Int lead_a = a.coeff(a.highest());
        a = a.scaled(lead_b) - LaurentPoly::monomial(lead_a, e) * b;
    }
    return a;
}

} // namespace

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return unit_normalized(b);
    if (b.is_zero()) return unit_normalized(a);
    LaurentPoly pa = a.shifted(-a.lowest());
    LaurentPoly pb = b.shifted(-b.lowest());
    const Int c = int_gcd(pa.content(), pb.content());
    pa = pa.divided_coeffs(pa.content());
    pb = pb.divided_coeffs(pb.content());
    if (ordinary_degree(pa) < ordinary_degree(pb)) std::swap(pa, pb);
    // primitive PRS
    while (!pb.is_zero()) {
        LaurentPoly r = pseudo_rem(pa, pb);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = LaurentPoly();
        } else {
            r = r.shifted(-r.lowest());
            pb = r.divided_coeffs(r.content());
        }
    }
    return unit_normalized(pa).scaled(c);
}

RationalFunc::RationalFunc(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw InvalidInput("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly::one();
        return;
    }
    const LaurentPoly g = lp_gcd(num, den);
    num = lp_exact_div(num, g);
    den = lp_exact_div(den, g);
    const int shift = -den.lowest();
    num_ = num.shifted(shift);
    den_ = den.shifted(shift);
    if (den_.coeff(0) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

const LaurentPoly& RationalFunc::as_poly() const {
    if (!is_poly())
        throw ExactnessError("rational function is not a Laurent polynomial: " + str());
    return num_;
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunc RationalFunc::operator+(const RationalFunc& rhs) const {
    if (den_ == rhs.den_) return RationalFunc(num_ + rhs.num_, den_);
    return RationalFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& rhs) const { return *this + (-rhs); }

RationalFunc RationalFunc::operator*(const RationalFunc& rhs) const {
    if (is_zero() || rhs.is_zero()) return RationalFunc();
    if (den_.is_one() && rhs.den_.is_one()) {
        RationalFunc r;
        r.num_ = num_ * rhs.num_;
        r.den_ = den_;
        return r;
    }
    return RationalFunc(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& rhs) const {
    return *this * rhs.inverse();
}

RationalFunc RationalFunc::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero rational function");
    return RationalFunc(den_, num_);
}

std::string RationalFunc::str(Var var) const {
    if (den_.is_one()) return num_.str(var);
    std::string n = num_.str(var);
    if (num_.term_count() > 1) n = "(" + n + ")";
    return n + " / (" + den_.str(var) + ")";
}

std::optional<std::pair<int, int>> monomial_ratio(const RationalFunc& a, const RationalFunc& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const RationalFunc r = a / b;
    if (!r.is_poly() || !r.num().is_monomial()) return std::nullopt;
    const int e = r.num().lowest();
    const Int c = r.num().coeff(e);
    if (c == 1) return std::make_pair(1, e);
    if (c == -1) return std::make_pair(-1, e);
    return std::nullopt;
}

LaurentSeries::LaurentSeries(int lowest, std::vector<Int> coeffs, int precision)
    : lowest_(lowest), coeffs_(std::move(coeffs)), precision_(precision) {
    if (precision_ < static_cast<int>(coeffs_.size()))
        throw InvalidInput("LaurentSeries: more coefficients than stated precision");
    if (!coeffs_.empty() && coeffs_.front() == 0)
        throw InvalidInput("LaurentSeries: leading stored coefficient must be nonzero");
}

Int LaurentSeries::coeff(int exp) const {
    const long i = static_cast<long>(exp) - lowest_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool LaurentSeries::in_window(int exp) const {
    return !is_zero() && exp >= lowest_ && exp < lowest_ + precision_;
}

LaurentSeries LaurentSeries::shifted(int exp) const {
    if (is_zero()) return *this;
    return LaurentSeries(lowest_ + exp, coeffs_, precision_);
}

bool LaurentSeries::agrees_with(const LaurentSeries& rhs) const {
    if (is_zero() || rhs.is_zero()) return is_zero() == rhs.is_zero();
    if (lowest_ != rhs.lowest_) return false;
    const std::size_t overlap = std::min(coeffs_.size(), rhs.coeffs_.size());
    for (std::size_t i = 0; i < overlap; ++i)
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    return true;
}

bool LaurentSeries::matches_poly_prefix(const LaurentPoly& p, int shift, int count) const {
    if (count > precision_)
        throw InvalidInput("matches_poly_prefix: count exceeds retained precision");
    const LaurentPoly sp = p.shifted(shift);
    if (is_zero()) return sp.is_zero();
    if (sp.is_zero()) return false;
    if (sp.lowest() < lowest_) return false;
    for (int i = 0; i < count; ++i)
        if (sp.coeff(lowest_ + i) != coeff(lowest_ + i)) return false;
    return true;
}

std::string LaurentSeries::str(Var var) const {
    std::ostringstream out;
    if (is_zero()) {
        out << "0";
    } else {
        LaurentPoly window;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            window.add_to_coeff(lowest_ + static_cast<int>(i), coeffs_[i]);
        out << window.str(var);
    }
    out << " + O(" << var_power_str(lowest_ + precision_, var) << ")";
    return out.str();
}

LaurentSeries series_of_rf(const RationalFunc& f, int precision) {
    if (precision < 1) throw InvalidInput("series_of_rf: precision must be >= 1");
    if (f.is_zero()) return LaurentSeries::zero(precision);
    const LaurentPoly& num = f.num();
    const LaurentPoly& den = f.den(); // ordinary, nonzero constant term
    const int low = num.lowest();
    const Int d0 = den.coeff(0);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(precision));
    for (int k = 0; k < precision; ++k) {
        Int acc = num.coeff(low + k);
        for (int i = 1; i <= k && i <= den.highest(); ++i)
            acc -= den.coeff(i) * out[static_cast<std::size_t>(k - i)];
        if (!divides(d0, acc))
            throw ExactnessError("series_of_rf: expansion leaves the integers at q^" +
                                 std::to_string(low + k));
        out.push_back(exact_quot(acc, d0));
    }
    return LaurentSeries(low, std::move(out), precision);
}

bool series_times_poly_matches(const LaurentSeries& s, const LaurentPoly& den,
                               const LaurentPoly& expected) {
    if (den.is_zero()) return expected.is_zero();
    if (s.is_zero()) return expected.is_zero();
    LaurentPoly window;
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
        window.add_to_coeff(s.lowest() + static_cast<int>(i), s.coeffs()[i]);
    const LaurentPoly prod = window * den;
    // product coefficients are fully determined only where every contributing
    // series exponent lies inside the retained window
    const int first = s.lowest() + den.lowest();
    const int last = s.lowest() + s.precision() + den.lowest(); // exclusive
    for (int e = first; e < last; ++e)
        if (prod.coeff(e) != expected.coeff(e)) return false;
    // expected must not have support below everything the window can see
    if (!expected.is_zero() && expected.lowest() < first) return false;
    return true;
}

} // namespace qalex
