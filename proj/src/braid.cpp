#include "qalex/braid.hpp"

#include <numeric>
#include <sstream>

namespace qalex {

int BraidWord::exponent_sum() const {
    int s = 0;
    for (int g : letters) s += g > 0 ? 1 : -1;
    return s;
}

BraidWord BraidWord::inverse() const {
    BraidWord w(n, {});
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

BraidWord BraidWord::concat(const BraidWord& rhs) const {
    if (rhs.n != n) throw InvalidInput("concat: strand count mismatch");
    BraidWord w = *this;
    w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return w;
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int g : letters) {
        const int t = g > 0 ? g : -g;
        std::swap(perm[static_cast<std::size_t>(t - 1)], perm[static_cast<std::size_t>(t)]);
    }
    return perm;
}

int BraidWord::closure_components() const {
    const std::vector<int> perm = permutation();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = perm[static_cast<std::size_t>(j)] - 1;
        }
    }
    return cycles;
}

std::string BraidWord::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out << " ";
        out << letters[i];
    }
    return out.str();
}

BraidWord parse_braid(const std::string& text, int n) {
    if (n < 1) throw InvalidInput("strand count must be >= 1");
    if (n > 24) throw InvalidInput("strand count above the supported bound of 24");
    BraidWord w(n, {});
    std::string token;
    int pos = 0;
    auto flush = [&]() {
        if (token.empty()) return;
        ++pos;
        std::size_t idx = 0;
        int value = 0;
        try {
            value = std::stoi(token, &idx);
        } catch (const std::exception&) {
            throw InvalidInput("braid token " + std::to_string(pos) + " ('" + token +
                               "') is not an integer");
        }
        if (idx != token.size())
            throw InvalidInput("braid token " + std::to_string(pos) + " ('" + token +
                               "') is not an integer");
        if (value == 0)
            throw InvalidInput("braid token " + std::to_string(pos) + " is zero");
        const int t = value > 0 ? value : -value;
        if (t > n - 1)
            throw InvalidInput("braid token " + std::to_string(pos) + " (" + token +
                               ") out of range for n=" + std::to_string(n));
        w.letters.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return w;
}

SuperVector apply_crossing(const SuperVector& v, int t, int sign) {
    const int n = v.strands();
    if (t < 1 || t > n - 1) throw InvalidInput("crossing position out of range");
    const RationalFunc q(LaurentPoly::q_power(1));
    const RationalFunc qinv(LaurentPoly::q_power(-1));
    // q - q^-1
    LaurentPoly skein_poly = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
    const RationalFunc skein{std::move(skein_poly)};

    SuperVector out(n);
    for (const auto& [b, c] : v.terms()) {
        const int x = b.bit(t);
        const int y = b.bit(t + 1);
        const BasisState swapped = b.with_bit(t, y).with_bit(t + 1, x);
        if (sign > 0) {
            if (x == 0 && y == 0) {
                out.add_term(b, c * q);
            } else if (x == 1 && y == 0) {
                out.add_term(swapped, c);
            } else if (x == 0 && y == 1) {
                out.add_term(swapped, c);
                out.add_term(b, c * skein);
            } else {
                out.add_term(b, -(c * qinv));
            }
        } else {
            if (x == 0 && y == 0) {
                out.add_term(b, c * qinv);
            } else if (x == 0 && y == 1) {
                out.add_term(swapped, c);
            } else if (x == 1 && y == 0) {
                out.add_term(swapped, c);
                out.add_term(b, -(c * skein));
            } else {
                out.add_term(b, -(c * q));
            }
        }
    }
    return out;
}

SuperVector apply_braid(const SuperVector& v, const BraidWord& w) {
    if (v.strands() != w.n) throw InvalidInput("apply_braid: strand count mismatch");
    SuperVector cur = v;
    for (int g : w.letters) cur = apply_crossing(cur, g > 0 ? g : -g, g > 0 ? 1 : -1);
    return cur;
}

BraidWord full_twist_word(int n, int m) {
    if (n < 2) throw InvalidInput("full twist needs n >= 2");
    if (m < 0) throw InvalidInput("twist count must be >= 0");
    BraidWord w(n, {});
    w.letters.reserve(static_cast<std::size_t>(m) * n * (n - 1));
    for (int rep = 0; rep < n * m; ++rep)
        for (int t = n - 1; t >= 1; --t) w.letters.push_back(t);
    return w;
}

BraidWord lambda_word(int n) {
    BraidWord w(n, {});
    for (int t = 1; t <= n - 1; ++t) w.letters.push_back(t);
    return w;
}

} // namespace qalex
