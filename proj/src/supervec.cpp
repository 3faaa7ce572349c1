#include "qalex/supervec.hpp"

#include <bit>
#include <sstream>

namespace qalex {

BasisState BasisState::from_string(const std::string& s) {
    BasisState b(0, static_cast<int>(s.size()));
    for (char c : s) {
        if (c != '0' && c != '1') throw InvalidInput("basis state string must be over {0,1}");
        b.bits = (b.bits << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return b;
}

BasisState BasisState::with_bit(int p, int value) const {
    BasisState b = *this;
    const std::uint32_t mask = 1u << (n - p);
    b.bits = value ? (b.bits | mask) : (b.bits & ~mask);
    return b;
}

int BasisState::ones() const { return std::popcount(bits); }

int BasisState::ones_before(int p) const {
    if (p <= 1) return 0;
    return std::popcount(bits >> (n - p + 1));
}

std::string BasisState::str() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int p = 1; p <= n; ++p)
        if (bit(p)) s[static_cast<std::size_t>(p - 1)] = '1';
    return s;
}

SuperVector SuperVector::basis(const BasisState& b, RationalFunc coeff) {
    SuperVector v(b.n);
    v.add_term(b, coeff);
    return v;
}

RationalFunc SuperVector::coeff(const BasisState& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? RationalFunc() : it->second;
}

void SuperVector::add_term(const BasisState& b, const RationalFunc& c) {
    if (c.is_zero()) return;
    if (n_ == 0 && terms_.empty()) n_ = b.n;
    if (b.n != n_) throw InvalidInput("SuperVector: mixed strand counts");
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperVector SuperVector::operator+(const SuperVector& rhs) const {
    SuperVector r = *this;
    r += rhs;
    return r;
}

SuperVector& SuperVector::operator+=(const SuperVector& rhs) {
    if (terms_.empty() && n_ == 0) n_ = rhs.n_;
    for (const auto& [b, c] : rhs.terms_) add_term(b, c);
    return *this;
}

SuperVector SuperVector::operator-(const SuperVector& rhs) const { return *this + (-rhs); }

SuperVector SuperVector::operator-() const {
    SuperVector r(n_);
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
}

SuperVector SuperVector::scaled(const RationalFunc& c) const {
    SuperVector r(n_);
    if (c.is_zero()) return r;
    for (const auto& [b, k] : terms_) {
        RationalFunc v = k * c;
        if (!v.is_zero()) r.terms_.emplace(b, std::move(v));
    }
    return r;
}

std::string SuperVector::str(Var var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str(var) << ")|" << b.str() << ">";
    }
    return out.str();
}

SuperVector apply_E(const SuperVector& v) {
    SuperVector out(v.strands());
    const int n = v.strands();
    for (const auto& [b, c] : v.terms()) {
        for (int p = 1; p <= n; ++p) {
            if (!b.bit(p)) continue;
            const int sign = (b.ones_before(p) & 1) ? -1 : 1;
            RationalFunc w = c * RationalFunc(LaurentPoly::monomial(sign, -(n - p)));
            out.add_term(b.with_bit(p, 0), w);
        }
    }
    return out;
}

SuperVector apply_F(const SuperVector& v) {
    SuperVector out(v.strands());
    const int n = v.strands();
    for (const auto& [b, c] : v.terms()) {
        for (int p = 1; p <= n; ++p) {
            if (b.bit(p)) continue;
            const int sign = (b.ones_before(p) & 1) ? -1 : 1;
            RationalFunc w = c * RationalFunc(LaurentPoly::monomial(sign, p - 1));
            out.add_term(b.with_bit(p, 1), w);
        }
    }
    return out;
}

SuperVector apply_cartan(const SuperVector& v, int a1, int a2) {
    SuperVector out(v.strands());
    for (const auto& [b, c] : v.terms()) {
        const Weight w = b.weight();
        out.add_term(b, c * RationalFunc(LaurentPoly::q_power(a1 * w.c1 + a2 * w.c2)));
    }
    return out;
}

HighestWeightCheck is_highest_weight(const SuperVector& v) {
    if (v.is_zero()) return {true, std::nullopt};
    const Weight w = v.terms().begin()->first.weight();
    for (const auto& [b, c] : v.terms())
        if (!(b.weight() == w)) return {false, std::nullopt};
    if (!apply_E(v).is_zero()) return {false, std::nullopt};
    return {true, w};
}

} // namespace qalex
