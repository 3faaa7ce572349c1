#include "qalex/twist.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace qalex {

const TwistCoeffMatrix& vandermonde_and_inverse(int n) {
    if (n < 2) throw InvalidInput("twist coefficient matrix needs n >= 2");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<TwistCoeffMatrix>> caches;
    std::lock_guard<std::mutex> lock(mu);
    auto it = caches.find(n);
    if (it != caches.end()) return *it->second;

    auto tc = std::make_unique<TwistCoeffMatrix>();
    tc->n = n;
    tc->B.assign(static_cast<std::size_t>(n), {});
    RFMatrix b(n, n);
    for (int i = 0; i < n; ++i) {
        tc->B[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            LaurentPoly entry = LaurentPoly::q_power(i * n * (n - 1 - 2 * j));
            b.at(i, j) = RationalFunc(entry);
            tc->B[static_cast<std::size_t>(i)].push_back(std::move(entry));
        }
    }
    tc->C = b.inverse();
    return *caches.emplace(n, std::move(tc)).first->second;
}

LaurentPoly closure_partial_trace(const BraidWord& w, int b1) {
    const int n = w.n;
    RationalFunc acc;
    const std::uint32_t lower = n > 1 ? (1u << (n - 1)) : 1u;
    for (std::uint32_t low = 0; low < lower; ++low) {
        const std::uint32_t bits =
            n > 1 ? ((static_cast<std::uint32_t>(b1) << (n - 1)) | low)
                  : static_cast<std::uint32_t>(b1);
        const BasisState state(bits, n);
        const SuperVector image = apply_braid(SuperVector::basis(state), w);
        const RationalFunc diag = image.coeff(state);
        if (diag.is_zero()) continue;
        // closure weights mu_0 = q, mu_1 = -q over strands 2..n
        const int ones = BasisState(low, n > 1 ? n - 1 : 1).ones();
        const int sign = (ones & 1) ? -1 : 1;
        acc += diag * RationalFunc(LaurentPoly::monomial(sign, n - 1));
    }
    return acc.as_poly();
}

AlexanderValue closure_scalar(const BraidWord& w) {
    return {closure_partial_trace(w, 0), w};
}

LaurentPoly twist_coeff_f(int m, int j, int n) {
    if (m < 0) throw InvalidInput("twist count must be >= 0");
    if (j < 0 || j > n - 1) throw InvalidInput("twist coefficient index out of range");
    const TwistCoeffMatrix& tc = vandermonde_and_inverse(n);
    RationalFunc sum;
    for (int i = 0; i < n; ++i)
        sum += RationalFunc(LaurentPoly::q_power(m * n * (n - 1 - 2 * i))) * tc.C.at(i, j);
    // the coefficients are Laurent polynomials (the twist powers satisfy a
    // monic recurrence); a failed division is surfaced, never truncated
    return lp_exact_div(sum.num(), sum.den());
}

AlexanderValue alexander_twist_formula(const BraidWord& base, int m) {
    if (m < 0) throw InvalidInput("twist count must be >= 0");
    const int n = base.n;
    if (n < 2) throw InvalidInput("twist formula needs n >= 2");
    LaurentPoly total;
    for (int j = 0; j <= n - 1; ++j) {
        const AlexanderValue delta_j = closure_scalar(base.concat(full_twist_word(n, j)));
        total += twist_coeff_f(m, j, n) * delta_j.poly;
    }
    return {total, base.concat(full_twist_word(n, m))};
}

StabilizationResult stabilization_series(const BraidWord& base, int precision) {
    if (precision < 1) throw InvalidInput("precision must be >= 1");
    const int n = base.n;
    if (n < 2) throw InvalidInput("stabilization needs n >= 2");
    const TwistCoeffMatrix& tc = vandermonde_and_inverse(n);
    std::vector<RationalFunc> deltas;
    deltas.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j <= n - 1; ++j)
        deltas.emplace_back(closure_scalar(base.concat(full_twist_word(n, j))).poly);

    StabilizationResult out;
    out.h_all.resize(static_cast<std::size_t>(n));
    for (int r = 0; r <= n - 1; ++r) {
        RationalFunc h;
        for (int j = 0; j <= n - 1; ++j) h += tc.C.at(r, j) * deltas[static_cast<std::size_t>(j)];
        out.h_all[static_cast<std::size_t>(r)] = std::move(h);
    }
    // scan downward; below ceil((n-1)/2) the values mirror these by the
    // symmetry of the Alexander polynomial
    for (int r = n - 1; r >= n / 2; --r) {
        if (out.h_all[static_cast<std::size_t>(r)].is_zero()) continue;
        out.r = r;
        out.series = series_of_rf(out.h_all[static_cast<std::size_t>(r)], precision);
        out.shift_qexp_per_m = n * (n - 1 - 2 * r);
        return out;
    }
    out.series = LaurentSeries::zero(precision);
    return out;
}

RationalFunc stab_coeff_g(int n, int j) {
    if (j < 0 || j > n - 1) throw InvalidInput("stabilization coefficient index out of range");
    return vandermonde_and_inverse(n).C.at(n - 1, j);
}

BraidWord torus_word(int n, int l) {
    BraidWord w(n, {});
    w.letters.reserve(static_cast<std::size_t>(l) * (n - 1));
    for (int rep = 0; rep < l; ++rep)
        for (int t = n - 1; t >= 1; --t) w.letters.push_back(t);
    return w;
}

AlexanderValue torus_oracle(int n, int l) {
    if (n < 2 || l < 1) throw InvalidInput("torus oracle needs n >= 2 and l >= 1");
    const LaurentPoly one = LaurentPoly::one();
    LaurentPoly poly;
    if (std::gcd(n, l) == 1) {
        // t^{-(l-1)(n-1)/2} (1-t^{ln})(1-t) / ((1-t^l)(1-t^n))
        const LaurentPoly num =
            (one - LaurentPoly::q_power(2 * l * n)) * (one - LaurentPoly::q_power(2));
        const LaurentPoly den =
            (one - LaurentPoly::q_power(2 * l)) * (one - LaurentPoly::q_power(2 * n));
        poly = lp_exact_div(num, den).shifted(-(l - 1) * (n - 1));
    } else if (l % n == 0) {
        // t^{-(mn-1)(n-1)/2} (1-t)/(1-t^n) (1-t^{mn})^{n-1} with l = mn
        LaurentPoly num = one - LaurentPoly::q_power(2);
        for (int i = 0; i < n - 1; ++i) num *= one - LaurentPoly::q_power(2 * l);
        poly = lp_exact_div(num, one - LaurentPoly::q_power(2 * n)).shifted(-(l - 1) * (n - 1));
    } else {
        throw InvalidInput("torus oracle covers T(n,l) with gcd(n,l)=1 or n | l only");
    }
    return {poly, torus_word(n, l)};
}

} // namespace qalex
