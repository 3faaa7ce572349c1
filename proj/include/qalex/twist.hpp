#pragma once

#include <optional>

#include "qalex/braid.hpp"
#include "qalex/matrix.hpp"

namespace qalex {

/// The closure scalar Q-hat of a braid word, an exact Laurent polynomial in
/// q; the Alexander polynomial is its t-display (t = q^2).
struct AlexanderValue {
    LaurentPoly poly;
    BraidWord source;

    int components() const { return source.closure_components(); }
    bool is_knot() const { return components() == 1; }
};

/// The Vandermonde system of the twist eigenvalues: B(n)_{ij} =
/// q^{(i-1) n (n-1-2(j-1))} and its exact inverse C(n).
struct TwistCoeffMatrix {
    int n = 0;
    std::vector<std::vector<LaurentPoly>> B;
    RFMatrix C;
};

/// Cached per n (n >= 2). B*C = I holds exactly.
const TwistCoeffMatrix& vandermonde_and_inverse(int n);

/// Scalar of the 1-1 tangle obtained by leaving strand 1 open and closing
/// strands 2..n with the weights mu_0 = q, mu_1 = -q:
///   sum over states b with b_1 = 0 of (prod_p mu_{b_p}) <b|Phi(w)|b>.
AlexanderValue closure_scalar(const BraidWord& w);

/// The same partial trace read off the b_1 = `b1` row; both rows give the
/// same scalar (Schur's lemma), which the tests exercise.
LaurentPoly closure_partial_trace(const BraidWord& w, int b1);

/// f_{m,j,n}(t) = sum_i t^{m n (n-1-2i)/2} C(n)_{i+1,j+1}, assembled over the
/// common denominator and cleared by exact division. A non-exact division is
/// surfaced as ExactnessError, never truncated.
LaurentPoly twist_coeff_f(int m, int j, int n);

/// Delta of the m-fold twisted closure via the twist formula:
/// sum_j f_{m,j,n} * Delta(closure(base tau^j)). Equals the direct
/// computation closure_scalar(base tau^m) exactly.
AlexanderValue alexander_twist_formula(const BraidWord& base, int m);

/// Stabilization data of the family m -> closure(base tau^m).
struct StabilizationResult {
    /// Largest r in [ceil((n-1)/2), n-1] with h_r != 0; empty when the whole
    /// family of Alexander polynomials vanishes identically.
    std::optional<int> r;
    /// h_{r} expanded in increasing powers of q.
    LaurentSeries series;
    /// The shift rule: Delta(L_m) opens with t^{m n (n-1-2r)/2}, i.e.
    /// q^{m * shift_qexp_per_m}.
    int shift_qexp_per_m = 0;
    /// All h_{r'} for r' = 0..n-1 (h_{r'} = sum_j C(n)_{r'+1,j+1} Delta_j).
    std::vector<RationalFunc> h_all;
};

StabilizationResult stabilization_series(const BraidWord& base, int precision);

/// g_{j,n} = C(n)_{n,j+1}, the bottom-row coefficients whose series govern
/// f_{m,j,n} for large m (the first terms of f agree with
/// t^{-m n (n-1)/2} g_{j,n}).
RationalFunc stab_coeff_g(int n, int j);

/// Closed form for torus knots T_{n,l} with gcd(n,l) = 1 and torus links
/// T_{n,l} with n | l; anything else is out of scope and rejected.
AlexanderValue torus_oracle(int n, int l);

/// The word (sigma_{n-1} ... sigma_1)^l whose closure is T_{n,l}.
BraidWord torus_word(int n, int l);

} // namespace qalex
