#include "qalex/verify.hpp"

#include <sstream>

#include "qalex/highwt.hpp"

namespace qalex::verify {

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name) { return {std::move(name), true, ""}; }

RationalFunc q_power_rf(int e) { return RationalFunc(LaurentPoly::q_power(e)); }

} // namespace

BraidWord random_word(Rng& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    BraidWord w(n, {});
    const int l = len(rng);
    for (int i = 0; i < l; ++i) w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return w;
}

SuperVector random_vector(Rng& rng, int n, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> state(0, (1u << n) - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(-3, 3);
    SuperVector v(n);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        v.add_term(BasisState(state(rng), n),
                   RationalFunc(LaurentPoly::monomial(coeff(rng), exp(rng))));
    return v;
}

CheckResult check_braid_relations(int n) {
    const std::string name = "braid relations n=" + std::to_string(n);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        const SuperVector v = SuperVector::basis(BasisState(bits, n));
        for (int t = 1; t + 1 <= n - 1; ++t) {
            const BraidWord lhs(n, {t, t + 1, t});
            const BraidWord rhs(n, {t + 1, t, t + 1});
            if (!(apply_braid(v, lhs) == apply_braid(v, rhs)))
                return fail(name, "Yang-Baxter failed at t=" + std::to_string(t) + " on |" +
                                      BasisState(bits, n).str() + ">");
        }
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j)
                if (!(apply_braid(v, BraidWord(n, {i, j})) ==
                      apply_braid(v, BraidWord(n, {j, i}))))
                    return fail(name, "far commutation failed at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
    }
    return pass(name);
}

CheckResult check_equivariance(int n, int trials, Rng& rng) {
    const std::string name = "equivariance n=" + std::to_string(n);
    for (int trial = 0; trial < trials; ++trial) {
        const SuperVector v = random_vector(rng, n, 4);
        const BraidWord w = random_word(rng, n, 8);
        const SuperVector wv = apply_braid(v, w);
        if (!(apply_E(wv) == apply_braid(apply_E(v), w)))
            return fail(name, "Phi(w) does not commute with E (trial " +
                                  std::to_string(trial) + ")");
        if (!(apply_F(wv) == apply_braid(apply_F(v), w)))
            return fail(name, "Phi(w) does not commute with F (trial " +
                                  std::to_string(trial) + ")");
        if (!(apply_cartan(wv, 1, 0) == apply_braid(apply_cartan(v, 1, 0), w)))
            return fail(name, "Phi(w) does not commute with q^{h1} (trial " +
                                  std::to_string(trial) + ")");
    }
    return pass(name);
}

CheckResult check_basis(int n) {
    const std::string name = "basis of H_k n=" + std::to_string(n);
    for (int k = 0; k <= n - 1; ++k) {
        const auto strings = enumerate_strings(n, k);
        if (static_cast<long long>(strings.size()) != binom(n - 1, k))
            return fail(name, "|S_k| != C(n-1,k) at k=" + std::to_string(k));
        RFMatrix a(1 << n, static_cast<int>(strings.size()));
        for (std::size_t c = 0; c < strings.size(); ++c) {
            const SuperVector phi = phi_of_string(strings[c]);
            const auto hw = is_highest_weight(phi);
            if (!hw.is_highest || !hw.weight.has_value())
                return fail(name, "phi" + strings[c].str() + " is not highest weight");
            if (!(*hw.weight == Weight{n - k, k}))
                return fail(name, "phi" + strings[c].str() + " has wrong weight");
            for (const auto& [b, coeff] : phi.terms())
                a.at(static_cast<int>(b.bits), static_cast<int>(c)) = coeff;
        }
        if (a.rank() != static_cast<int>(strings.size()))
            return fail(name, "phi(S_k) is linearly dependent at k=" + std::to_string(k));
    }
    return pass(name);
}

CheckResult check_intertwining(int n) {
    const std::string name = "wedge intertwining n=" + std::to_string(n);
    for (int k = 0; k <= n - 1; ++k) {
        const auto strings = enumerate_strings(n, k);
        for (int t = 1; t <= n - 1; ++t) {
            for (int sign : {1, -1}) {
                const RFMatrix expect = hk_braid_matrix(BraidWord(n, {sign * t}), k);
                for (std::size_t c = 0; c < strings.size(); ++c) {
                    const SuperVector image =
                        apply_crossing(phi_of_string(strings[c]), t, sign);
                    const auto coords = phi_coordinates(image, k);
                    for (std::size_t r = 0; r < coords.size(); ++r)
                        if (!(coords[r] == expect.at(static_cast<int>(r), static_cast<int>(c))))
                            return fail(name, "psi_k(sigma.v) != q^{k-1} sigma.psi_k(v) at k=" +
                                                  std::to_string(k) + " t=" +
                                                  std::to_string(sign * t) + " s=" +
                                                  strings[c].str());
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_full_twist(int n) {
    const std::string name = "full twist n=" + std::to_string(n);
    const BraidWord tau = full_twist_word(n, 1);
    for (int k = 0; k <= n - 1; ++k) {
        const RationalFunc eig = q_power_rf(n * (n - 1 - 2 * k));
        for (const auto& s : enumerate_strings(n, k)) {
            const SuperVector phi = phi_of_string(s);
            if (!(apply_braid(phi, tau) == phi.scaled(eig)))
                return fail(name, "Phi(tau) phi(s) != q^{n(n-1-2k)} phi(s) at s=" + s.str());
        }
    }
    // lambda on H_1: e_1 -> sum_j -q^{n-2-j} e_j, e_i -> q^{n-2} e_{i-1}
    const RFMatrix lam = h1_word_matrix(lambda_word(n));
    for (int j = 1; j <= n - 1; ++j)
        if (!(lam.at(j - 1, 0) == -q_power_rf(n - 2 - j)))
            return fail(name, "lambda column 1 mismatch at row " + std::to_string(j));
    for (int i = 2; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            const RationalFunc expect =
                (j == i - 1) ? q_power_rf(n - 2) : RationalFunc();
            if (!(lam.at(j - 1, i - 1) == expect))
                return fail(name, "lambda column " + std::to_string(i) + " mismatch");
        }
    // eigenvalues are the n-th roots of q^{n(n-3)} times unity: lambda^n scalar
    if (!(lam.pow(n) == RFMatrix::identity(n - 1).scaled(q_power_rf(n * (n - 3)))))
        return fail(name, "lambda^n != q^{n(n-3)} I");
    return pass(name);
}

CheckResult check_projections(int n, int trials, Rng& rng) {
    const std::string name = "projections n=" + std::to_string(n);
    for (int k = 0; k <= n - 1; ++k)
        for (int kp = 0; kp <= n - 1; ++kp)
            for (const auto& s : enumerate_strings(n, kp)) {
                const SuperVector phi = phi_of_string(s);
                const SuperVector proj = project_pik(phi, k);
                if (k == kp && !(proj == phi))
                    return fail(name, "pi_k phi(s) != phi(s) at s=" + s.str());
                if (k != kp && !proj.is_zero())
                    return fail(name, "pi_k phi(s) != 0 for k' != k at s=" + s.str());
            }
    const BraidWord tau = full_twist_word(n, 1);
    for (int trial = 0; trial < trials; ++trial) {
        const SuperVector v = random_vector(rng, n, 4);
        SuperVector sum(n);
        SuperVector twisted(n);
        for (int k = 0; k <= n - 1; ++k) {
            const SuperVector pk = project_pik(v, k);
            if (!(project_pik(pk, k) == pk)) return fail(name, "pi_k not idempotent");
            sum += pk;
            twisted += pk.scaled(q_power_rf(n * (n - 1 - 2 * k)));
        }
        if (!(sum == v)) return fail(name, "sum_k pi_k != id");
        if (!(apply_braid(v, tau) == twisted))
            return fail(name, "Phi(tau) != sum_k q^{n(n-1-2k)} pi_k");
        const BraidWord w = random_word(rng, n, 6);
        const int k = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (!(project_pik(apply_braid(v, w), k) == apply_braid(project_pik(v, k), w)))
            return fail(name, "pi_k does not commute with the braid action");
    }
    return pass(name);
}

CheckResult check_vandermonde(int n) {
    const std::string name = "Vandermonde inverse n=" + std::to_string(n);
    const TwistCoeffMatrix& tc = vandermonde_and_inverse(n);
    RFMatrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = RationalFunc(tc.B[i][j]);
    if (!(b * tc.C == RFMatrix::identity(n))) return fail(name, "B C != I");
    return pass(name);
}

CheckResult check_coeff_exactness(int n, int mmax) {
    const std::string name = "twist coefficients n=" + std::to_string(n);
    for (int m = 0; m <= mmax; ++m)
        for (int j = 0; j <= n - 1; ++j) {
            LaurentPoly f;
            try {
                f = twist_coeff_f(m, j, n);
            } catch (const ExactnessError& e) {
                return fail(name, "f_{" + std::to_string(m) + "," + std::to_string(j) +
                                      "} not a Laurent polynomial: " + e.what());
            }
            if (m < n) {
                const LaurentPoly expect =
                    m == j ? LaurentPoly::one() : LaurentPoly();
                if (!(f == expect))
                    return fail(name, "indicator f_{m,j} != delta at m=" + std::to_string(m) +
                                          " j=" + std::to_string(j));
            }
        }
    return pass(name);
}

CheckResult check_operator_identity(int n, int mmax, Rng& rng) {
    const std::string name = "twist operator identity n=" + std::to_string(n);
    const TwistCoeffMatrix& tc = vandermonde_and_inverse(n);
    for (int m = 0; m <= mmax; ++m) {
        const SuperVector v = random_vector(rng, n, 4);
        std::vector<SuperVector> tau_j;
        tau_j.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j <= n - 1; ++j)
            tau_j.push_back(apply_braid(v, full_twist_word(n, j)));
        SuperVector rhs(n);
        for (int j = 0; j <= n - 1; ++j) {
            RationalFunc coeff;
            for (int i = 0; i <= n - 1; ++i)
                coeff += q_power_rf(m * n * (n - 1 - 2 * i)) * tc.C.at(i, j);
            rhs += tau_j[static_cast<std::size_t>(j)].scaled(coeff);
        }
        if (!(apply_braid(v, full_twist_word(n, m)) == rhs))
            return fail(name, "Phi(tau^m) identity failed at m=" + std::to_string(m));
    }
    return pass(name);
}

CheckResult check_twist_formula(int n, int words, int max_len, int mmax, Rng& rng) {
    const std::string name = "twist formula n=" + std::to_string(n);
    for (int i = 0; i < words; ++i) {
        const BraidWord base = random_word(rng, n, max_len);
        for (int m = 0; m <= mmax; ++m) {
            const AlexanderValue direct =
                closure_scalar(base.concat(full_twist_word(n, m)));
            const AlexanderValue via = alexander_twist_formula(base, m);
            if (!(direct.poly == via.poly))
                return fail(name, "formula != direct at base '" + base.str() + "', m=" +
                                      std::to_string(m));
        }
    }
    return pass(name);
}

CheckResult check_markov(int n, int trials, Rng& rng) {
    const std::string name = "Markov moves n=" + std::to_string(n);
    for (int trial = 0; trial < trials; ++trial) {
        const BraidWord w = random_word(rng, n, 8);
        const LaurentPoly base = closure_scalar(w).poly;
        // Schur: both partial-trace rows agree
        if (!(closure_partial_trace(w, 1) == base))
            return fail(name, "b1=1 partial trace row differs on '" + w.str() + "'");
        // conjugation
        const BraidWord g = random_word(rng, n, 4);
        const BraidWord conj = g.concat(w).concat(g.inverse());
        if (!(closure_scalar(conj).poly == base))
            return fail(name, "conjugation changed the scalar on '" + w.str() + "'");
        // stabilization with both signs
        for (int sign : {1, -1}) {
            BraidWord stab(n + 1, w.letters);
            stab.letters.push_back(sign * n);
            if (!(closure_scalar(stab).poly == base))
                return fail(name, std::string("stabilization sign ") +
                                      (sign > 0 ? "+" : "-") + " changed the scalar");
        }
    }
    return pass(name);
}

std::vector<CheckResult> verify_all(int depth, unsigned seed) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    for (int n = 2; n <= depth; ++n) {
        out.push_back(check_braid_relations(n));
        out.push_back(check_equivariance(n, 25, rng));
        out.push_back(check_basis(n));
        out.push_back(check_intertwining(n));
        out.push_back(check_full_twist(n));
        if (n <= 4) out.push_back(check_projections(n, 5, rng));
        out.push_back(check_vandermonde(n));
        out.push_back(check_coeff_exactness(n, 6));
        out.push_back(check_operator_identity(n, 3, rng));
        out.push_back(check_twist_formula(n, 3, 8, 3, rng));
        out.push_back(check_markov(n, 8, rng));
    }
    return out;
}

} // namespace qalex::verify
