#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qalex/laurent.hpp"

namespace qalex {

/// Integral weight c1*eps1 + c2*eps2 of gl(1|1).
struct Weight {
    int c1 = 0;
    int c2 = 0;
    bool operator==(const Weight&) const = default;
};

/// A basis state of V^{tensor n}: a length-n bitstring, bit p = 1 meaning
/// tensor factor p is v_1. Factor 1 is the most significant bit, so states
/// serialize left-to-right as written.
struct BasisState {
    std::uint32_t bits = 0;
    int n = 0;

    BasisState() = default;
    BasisState(std::uint32_t b, int strands) : bits(b), n(strands) {}
    static BasisState from_string(const std::string& s);

    /// Bit of tensor factor p, 1-indexed from the left.
    int bit(int p) const { return static_cast<int>((bits >> (n - p)) & 1u); }
    BasisState with_bit(int p, int value) const;

    /// Number of v_1 factors.
    int ones() const;
    /// Number of v_1 factors strictly left of position p.
    int ones_before(int p) const;
    /// Total parity (ones mod 2).
    int parity() const { return ones() & 1; }
    /// (n-k) eps1 + k eps2 where k = ones().
    Weight weight() const { return {n - ones(), ones()}; }

    std::string str() const;

    auto operator<=>(const BasisState&) const = default;
};

/// Sparse vector in V^{tensor n} with C(q) coefficients. No zero coefficient
/// is ever stored; all states share the same strand count.
class SuperVector {
public:
    SuperVector() = default;
    explicit SuperVector(int n) : n_(n) {}
    static SuperVector basis(const BasisState& b) { return basis(b, RationalFunc(1)); }
    static SuperVector basis(const BasisState& b, RationalFunc coeff);

    int strands() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<BasisState, RationalFunc>& terms() const { return terms_; }

    RationalFunc coeff(const BasisState& b) const;
    void add_term(const BasisState& b, const RationalFunc& c);

    SuperVector operator+(const SuperVector& rhs) const;
    SuperVector operator-(const SuperVector& rhs) const;
    SuperVector operator-() const;
    SuperVector scaled(const RationalFunc& c) const;
    SuperVector& operator+=(const SuperVector& rhs);

    bool operator==(const SuperVector& rhs) const {
        return n_ == rhs.n_ && terms_ == rhs.terms_;
    }

    std::string str(Var var = Var::q) const;

private:
    int n_ = 0;
    std::map<BasisState, RationalFunc> terms_;
};

/// Action of E through Delta^{n-1}(E) = sum_i id^{(n-1-i)} x E x (K^-1)^i.
/// Each 1-bit at position p contributes the state with that bit cleared,
/// weighted by the Koszul sign (-1)^{ones_before(p)} and the K^-1 tail
/// q^{-(n-p)}.
SuperVector apply_E(const SuperVector& v);

/// Action of F through Delta^{n-1}(F) = sum_i K^i x F x id^{(n-1-i)}.
/// Each 0-bit at position p contributes the state with that bit set,
/// weighted by (-1)^{ones_before(p)} and the K head q^{p-1}.
SuperVector apply_F(const SuperVector& v);

/// Action of q^h for h = a1*h1 + a2*h2: scales a state of weight w by
/// q^{<h,w>} = q^{a1*(n-k) + a2*k}.
SuperVector apply_cartan(const SuperVector& v, int a1, int a2);

struct HighestWeightCheck {
    bool is_highest = false;
    std::optional<Weight> weight;
};

/// True iff apply_E(v) == 0 and every state of v has the same weight (a
/// mixed-weight vector is reported as not highest weight, with no weight).
HighestWeightCheck is_highest_weight(const SuperVector& v);

} // namespace qalex
