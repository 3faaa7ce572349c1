#pragma once

#include <string>
#include <vector>

#include "qalex/supervec.hpp"

namespace qalex {

/// A braid word in B_n: signed generator indices applied left-to-right (the
/// first letter acts first). Letter g means sigma_{|g|} with crossing sign
/// sign(g).
struct BraidWord {
    int n = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<int> ls) : n(strands), letters(std::move(ls)) {}

    int exponent_sum() const;
    std::size_t length() const { return letters.size(); }

    /// Word-level inverse: reversed letters with flipped signs.
    BraidWord inverse() const;
    /// this followed by rhs (same strand count).
    BraidWord concat(const BraidWord& rhs) const;

    /// Permutation of strand start -> end positions (1-indexed).
    std::vector<int> permutation() const;
    /// Number of components of the closure (cycles of the permutation).
    int closure_components() const;

    std::string str() const;

    bool operator==(const BraidWord&) const = default;
};

/// Parses whitespace/comma-separated signed generator indices. Reports the
/// offending token position for out-of-range, zero, or malformed letters.
BraidWord parse_braid(const std::string& text, int n);

/// One crossing on tensor factors (t, t+1): the R-matrix for sign=+1, its
/// inverse for sign=-1. R is parity-even, so no Koszul signs arise.
SuperVector apply_crossing(const SuperVector& v, int t, int sign);

/// Left-to-right fold of apply_crossing; the empty word is the identity.
SuperVector apply_braid(const SuperVector& v, const BraidWord& w);

/// The full twist word tau^m = (sigma_{n-1} ... sigma_1)^{n*m}. Requires
/// n >= 2; exponent sum is m*n*(n-1).
BraidWord full_twist_word(int n, int m);

/// The word sigma_1 sigma_2 ... sigma_{n-1} read first-letter-first, i.e. the
/// operator lambda = sigma_{n-1} o ... o sigma_1 acting with sigma_1 first.
BraidWord lambda_word(int n);

} // namespace qalex
