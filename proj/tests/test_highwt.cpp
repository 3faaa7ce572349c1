#include "doctest.h"

#include <algorithm>
#include <functional>

#include "qalex/highwt.hpp"
#include "qalex/verify.hpp"

using namespace qalex;
using verify::Rng;

namespace {

LaurentPoly qp(int e) { return LaurentPoly::q_power(e); }
RationalFunc qr(int e) { return RationalFunc(qp(e)); }

// Independent oracle: enumerate S_k by brute force over all odd-length
// nonnegative compositions with b_i >= 2.
std::vector<std::vector<int>> brute_force_strings(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int got_k) {
        // next entry is an a (even position)
        for (int a = 0; a <= remaining; ++a) {
            if (a == remaining && got_k == k) { // close with the final a
                cur.push_back(a);
                out.push_back(cur);
                cur.pop_back();
            }
            // or an a followed by some b >= 2
            for (int b = 2; a + b <= remaining; ++b) {
                if (got_k + b - 1 > k) break;
                cur.push_back(a);
                cur.push_back(b);
                rec(remaining - a - b, got_k + b - 1);
                cur.pop_back();
                cur.pop_back();
            }
        }
    };
    rec(n, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("enumerate_strings examples") {
    const auto s31 = enumerate_strings(3, 1);
    REQUIRE(s31.size() == 2);
    CHECK(s31[0].entries == std::vector<int>{0, 2, 1});
    CHECK(s31[1].entries == std::vector<int>{1, 2, 0});

    const auto s50 = enumerate_strings(5, 0);
    REQUIRE(s50.size() == 1);
    CHECK(s50[0].entries == std::vector<int>{5});

    const auto s43 = enumerate_strings(4, 3);
    REQUIRE(s43.size() == 1);
    CHECK(s43[0].entries == std::vector<int>{0, 4, 0});

    CHECK_THROWS_AS(enumerate_strings(3, 3), InvalidInput);
    CHECK_THROWS_AS(enumerate_strings(3, -1), InvalidInput);
}

TEST_CASE("enumerate_strings against the brute-force oracle") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            const auto fast = enumerate_strings(n, k);
            std::vector<std::vector<int>> got;
            for (const auto& s : fast) got.push_back(s.entries);
            std::sort(got.begin(), got.end());
            CHECK(got == brute_force_strings(n, k));
        }
}

TEST_CASE("string and wedge index bijection") {
    // (1,2,0) for n=3 corresponds to {2}
    CHECK(string_to_index(TwistString({1, 2, 0}, 3)).indices == std::vector<int>{2});
    // {1,2} for n=3 corresponds to (0,3,0)
    CHECK(index_to_string(WedgeIndex{{1, 2}}, 3).entries == std::vector<int>{0, 3, 0});
    // round trip over all of S_k for n <= 7
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k <= n - 1; ++k)
            for (const auto& s : enumerate_strings(n, k)) {
                CHECK(index_to_string(string_to_index(s), n) == s);
                CHECK(static_cast<int>(string_to_index(s).indices.size()) == k);
            }
    CHECK_THROWS_AS(index_to_string(WedgeIndex{{2, 1}}, 4), InvalidInput);
    CHECK_THROWS_AS(index_to_string(WedgeIndex{{4}}, 4), InvalidInput);
}

TEST_CASE("TwistString validation and c-values") {
    CHECK_THROWS_AS(TwistString({1, 1, 1}, 3), InvalidInput);  // b < 2
    CHECK_THROWS_AS(TwistString({0, 2}, 2), InvalidInput);     // even length
    CHECK_THROWS_AS(TwistString({1, 2, 1}, 3), InvalidInput);  // sum != n
    const TwistString s({1, 2, 0, 3, 1}, 7);
    CHECK(s.k == 3);
    CHECK(s.c_values() == std::vector<int>{1, 3});
}

TEST_CASE("phi of strings") {
    // (0,2,n-2) is e_1 = q^-1 |010...0> - |100...0>
    const SuperVector e1 = phi_of_string(TwistString({0, 2, 2}, 4));
    SuperVector expect(4);
    expect.add_term(BasisState::from_string("0100"), qr(-1));
    expect.add_term(BasisState::from_string("1000"), RationalFunc(-1));
    CHECK(e1 == expect);
    CHECK(e1 == h1_basis_vector(4, 1));

    // (n) is pure v_0^n
    CHECK(phi_of_string(TwistString({3}, 3)) ==
          SuperVector::basis(BasisState::from_string("000")));

    // (0,3,0) has coefficients q^-2, -q^-1, 1
    SuperVector expect3(3);
    expect3.add_term(BasisState::from_string("011"), qr(-2));
    expect3.add_term(BasisState::from_string("101"), -qr(-1));
    expect3.add_term(BasisState::from_string("110"), RationalFunc(1));
    CHECK(phi_of_string(TwistString({0, 3, 0}, 3)) == expect3);
}

TEST_CASE("every phi(s) is highest weight of the right weight") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n - 1; ++k)
            for (const auto& s : enumerate_strings(n, k)) {
                const auto hw = is_highest_weight(phi_of_string(s));
                CHECK(hw.is_highest);
                CHECK(hw.weight == Weight{n - k, k});
            }
}

TEST_CASE("h1 generator matrix examples") {
    // n=3, t=1: e_1 -> -q^-1 e_1, e_2 -> e_1 + q e_2
    const RFMatrix m = h1_generator_matrix(3, 1, 1);
    CHECK(m.at(0, 0) == -qr(-1));
    CHECK(m.at(1, 0) == RationalFunc());
    CHECK(m.at(0, 1) == RationalFunc(1));
    CHECK(m.at(1, 1) == qr(1));
    CHECK_THROWS_AS(h1_generator_matrix(3, 3, 1), InvalidInput);
    // sign -1 is the exact inverse
    for (int n = 2; n <= 5; ++n)
        for (int t = 1; t <= n - 1; ++t)
            CHECK(h1_generator_matrix(n, t, 1) * h1_generator_matrix(n, t, -1) ==
                  RFMatrix::identity(n - 1));
}

TEST_CASE("h1 matrices agree with the braid action through phi coordinates") {
    for (int n = 2; n <= 5; ++n)
        for (int t = 1; t <= n - 1; ++t)
            for (int sign : {1, -1}) {
                const RFMatrix m = h1_generator_matrix(n, t, sign);
                for (int j = 1; j <= n - 1; ++j) {
                    const auto coords =
                        phi_coordinates(apply_crossing(h1_basis_vector(n, j), t, sign), 1);
                    for (int i = 1; i <= n - 1; ++i)
                        CHECK(coords[static_cast<std::size_t>(i - 1)] == m.at(i - 1, j - 1));
                }
            }
}

TEST_CASE("lambda word acts by the shift matrix on H_1") {
    for (int n = 3; n <= 5; ++n) {
        const RFMatrix lam = h1_word_matrix(lambda_word(n));
        for (int j = 1; j <= n - 1; ++j) CHECK(lam.at(j - 1, 0) == -qr(n - 2 - j));
        for (int i = 2; i <= n - 1; ++i)
            for (int j = 1; j <= n - 1; ++j)
                CHECK(lam.at(j - 1, i - 1) == (j == i - 1 ? qr(n - 2) : RationalFunc()));
        CHECK(lam.pow(n) == RFMatrix::identity(n - 1).scaled(qr(n * (n - 3))));
    }
}

TEST_CASE("compound matrices") {
    Rng rng(500);
    // functoriality: compound of a product is the product of compounds
    for (int dim = 2; dim <= 4; ++dim)
        for (int k = 0; k <= dim; ++k) {
            RFMatrix a(dim, dim), b(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    a.at(i, j) = RationalFunc(
                        LaurentPoly::monomial(static_cast<int>(rng() % 5) - 2,
                                              static_cast<int>(rng() % 3) - 1));
                    b.at(i, j) = RationalFunc(
                        LaurentPoly::monomial(static_cast<int>(rng() % 5) - 2,
                                              static_cast<int>(rng() % 3) - 1));
                }
            CHECK(compound_matrix(a * b, k) == compound_matrix(a, k) * compound_matrix(b, k));
        }
    // order-1 compound is the matrix itself; top compound is the determinant
    RFMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = qr(i - j);
    CHECK(compound_matrix(a, 1) == a);
    CHECK(compound_matrix(a, 3).at(0, 0) == a.det());
}

TEST_CASE("hk_braid_matrix") {
    Rng rng(501);
    // k=1 is the H_1 word matrix itself
    for (int trial = 0; trial < 5; ++trial) {
        const BraidWord w = verify::random_word(rng, 4, 6);
        CHECK(hk_braid_matrix(w, 1) == h1_word_matrix(w));
    }
    // k=0 gives q^{exponent sum}
    const BraidWord pos(4, {1, 2, 3, 2});
    CHECK(hk_braid_matrix(pos, 0).at(0, 0) == qr(4));
    const BraidWord mixed(4, {1, -2, 3, -2, -1});
    CHECK(hk_braid_matrix(mixed, 0).at(0, 0) == qr(-1));
    // full twist is q^{n(n-1-2k)} I on H_k
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            const RFMatrix m = hk_braid_matrix(full_twist_word(n, 1), k);
            CHECK(m == RFMatrix::identity(m.rows()).scaled(qr(n * (n - 1 - 2 * k))));
        }
}

TEST_CASE("intertwining of the wedge identification") {
    CHECK(verify::check_intertwining(2).ok);
    CHECK(verify::check_intertwining(3).ok);
    CHECK(verify::check_intertwining(4).ok);
}

TEST_CASE("projections") {
    Rng rng(502);
    for (int n = 2; n <= 4; ++n) {
        const auto res = verify::check_projections(n, 4, rng);
        INFO(res.detail);
        CHECK(res.ok);
    }
    CHECK_THROWS_AS(project_pik(SuperVector(3), 3), InvalidInput);
}

TEST_CASE("projections resolve the identity at n=5") {
    Rng rng(503);
    for (int trial = 0; trial < 3; ++trial) {
        const SuperVector v = verify::random_vector(rng, 5, 4);
        SuperVector sum(5);
        for (int k = 0; k <= 4; ++k) sum += project_pik(v, k);
        CHECK(sum == v);
    }
}
