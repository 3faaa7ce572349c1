#pragma once

#include <random>
#include <string>
#include <vector>

#include "qalex/twist.hpp"

namespace qalex::verify {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

using Rng = std::mt19937;

/// Deterministic generators used by the randomized checks.
BraidWord random_word(Rng& rng, int n, int max_len);
SuperVector random_vector(Rng& rng, int n, int max_terms);

// Each check returns ok=false with a human-readable detail on the first
// failing instance; they never throw for a falsified identity.

/// sigma_t sigma_{t+1} sigma_t = sigma_{t+1} sigma_t sigma_{t+1} and far
/// commutation, on every basis state of V^{tensor n}.
CheckResult check_braid_relations(int n);

/// Phi(w) commutes with E, F and q^{h1} on random vectors.
CheckResult check_equivariance(int n, int trials, Rng& rng);

/// |S_k| = C(n-1,k); every phi(s) is E-killed with weight (n-k)e1 + k e2;
/// the phi(S_k) coefficient matrix has full rank C(n-1,k).
CheckResult check_basis(int n);

/// The wedge identification: for every generator (both signs), every k and
/// every basis string, the H_k matrix action of sigma_t equals
/// q^{k-1} times the action through V^{tensor n}.
CheckResult check_intertwining(int n);

/// Full twist: Phi(tau) phi(s) = q^{n(n-1-2k)} phi(s); the lambda matrix on
/// H_1 has the shift form with first column -q^{n-2-j}, and its n-th power
/// is q^{n(n-3)} I.
CheckResult check_full_twist(int n);

/// Projections: sum_k pi_k = id, idempotence, pi_k phi(s) = delta, the
/// corollary Phi(tau) = sum_k q^{n(n-1-2k)} pi_k, and commutation with the
/// braid action, on random vectors.
CheckResult check_projections(int n, int trials, Rng& rng);

/// B(n) C(n) = I exactly.
CheckResult check_vandermonde(int n);

/// f_{m,j,n} passes exact division for all m <= mmax, and equals the
/// indicator delta_{m,j} for m < n.
CheckResult check_coeff_exactness(int n, int mmax);

/// Operator identity behind the twist formula, on random vectors:
/// Phi(tau^m) = sum_{i,j} q^{mn(n-1-2i)} C_{i+1,j+1} Phi(tau^j).
CheckResult check_operator_identity(int n, int mmax, Rng& rng);

/// alexander_twist_formula equals the direct closure computation for random
/// base words of bounded length.
CheckResult check_twist_formula(int n, int words, int max_len, int mmax, Rng& rng);

/// Markov moves: closure scalar invariant under conjugation and both
/// stabilization signs; the b1 = 1 partial-trace row gives the same scalar.
CheckResult check_markov(int n, int trials, Rng& rng);

/// The standard suite at depth = maximal strand count (the CLI `verify`
/// command). Runs in seconds at depth 4.
std::vector<CheckResult> verify_all(int depth, unsigned seed);

} // namespace qalex::verify
