#pragma once

#include <vector>

#include "qalex/braid.hpp"
#include "qalex/matrix.hpp"
#include "qalex/supervec.hpp"

namespace qalex {

/// A string (a_1, b_1, a_2, ..., b_l, a_{l+1}) indexing the basis phi(S_k)
/// of H_k: a_i >= 0, b_i >= 2, sum(b_i - 1) = k, sum of all entries = n.
struct TwistString {
    std::vector<int> entries; // odd length: a,b,a,b,...,a
    int n = 0;
    int k = 0;

    TwistString() = default;
    TwistString(std::vector<int> es, int strands);

    int blocks() const { return static_cast<int>(entries.size() / 2); }
    int a(int i) const { return entries[static_cast<std::size_t>(2 * (i - 1))]; } // 1..l+1
    int b(int i) const { return entries[static_cast<std::size_t>(2 * i - 1)]; }   // 1..l

    /// c_j = a_1 + sum_{i<j} (b_i + a_{i+1}): entries before b_j.
    std::vector<int> c_values() const;

    std::string str() const;
    bool operator==(const TwistString&) const = default;
};

/// Strictly increasing subset {i_1 < ... < i_k} of {1, ..., n-1}, the wedge
/// index e_{i_1} ^ ... ^ e_{i_k}.
struct WedgeIndex {
    std::vector<int> indices;
    bool operator==(const WedgeIndex&) const = default;
};

/// All k-subsets of {1..m} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int m, int k);

/// All of S_k in the lexicographic order of their wedge-index images.
/// Count is C(n-1, k). Throws InvalidInput for k outside [0, n-1].
std::vector<TwistString> enumerate_strings(int n, int k);

/// Each b_j corresponds to the consecutive run {c_j+1, ..., c_j+b_j-1}.
WedgeIndex string_to_index(const TwistString& s);
/// Inverse: group indices into maximal consecutive runs.
TwistString index_to_string(const WedgeIndex& w, int n);

/// phi(s): the tensor of v_0 blocks and expanded E(v_1^{b}) blocks. The
/// result is E-killed with weight (n-k) eps1 + k eps2.
SuperVector phi_of_string(const TwistString& s);

/// e_i = phi((i-1, 2, n-1-i)), the standard basis of H_1.
SuperVector h1_basis_vector(int n, int i);

/// Matrix of sigma_t^{sign} on H_1 in the basis {e_1, ..., e_{n-1}}; columns
/// are images of basis vectors. sign = -1 gives the exact inverse matrix.
RFMatrix h1_generator_matrix(int n, int t, int sign);

/// Matrix of Phi(w) on H_1 (letters act first-to-last).
RFMatrix h1_word_matrix(const BraidWord& w);

/// k-th compound: the matrix of k x k minors, rows and columns indexed by
/// k_subsets in lexicographic order. Minors are evaluated by Laplace
/// expansion with memoized cofactors.
RFMatrix compound_matrix(const RFMatrix& m, int k);

/// Matrix of Phi(w) on H_k in the phi(S_k) basis:
/// q^{-(k-1)*exponent_sum(w)} times the k-th compound of the H_1 word matrix.
RFMatrix hk_braid_matrix(const BraidWord& w, int k);

/// Coordinates of v in the phi(S_k) basis. Throws ExactnessError when v does
/// not lie in the span.
std::vector<RationalFunc> phi_coordinates(const SuperVector& v, int k);

/// Equivariant projection onto W_k = H_k + F(H_k), computed through the
/// cached exact change of basis {phi(s)} u {F phi(s)} over all k.
SuperVector project_pik(const SuperVector& v, int k);

/// Coordinate vector of v in the standard state basis, indexed by bits.
std::vector<RationalFunc> state_coordinates(const SuperVector& v);

} // namespace qalex
