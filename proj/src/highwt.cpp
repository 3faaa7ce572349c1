#include "qalex/highwt.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qalex {

TwistString::TwistString(std::vector<int> es, int strands) : entries(std::move(es)), n(strands) {
    if (entries.size() % 2 != 1) throw InvalidInput("string must have odd length (a,b,...,a)");
    int total = 0;
    k = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const int e = entries[i];
        total += e;
        if (i % 2 == 1) {
            if (e < 2) throw InvalidInput("string entries b_i must be >= 2");
            k += e - 1;
        } else if (e < 0) {
            throw InvalidInput("string entries a_i must be >= 0");
        }
    }
    if (total != n) throw InvalidInput("string entries must sum to n");
    if (k > n - 1) throw InvalidInput("string has k > n-1");
}

std::vector<int> TwistString::c_values() const {
    std::vector<int> cs;
    int c = a(1);
    for (int j = 1; j <= blocks(); ++j) {
        cs.push_back(c);
        c += b(j) + a(j + 1);
    }
    return cs;
}

std::string TwistString::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ",";
        out << entries[i];
    }
    out << ")";
    return out.str();
}

std::vector<std::vector<int>> k_subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= m - (k - depth) + 1; ++v) {
            cur[static_cast<std::size_t>(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
    return out;
}

std::vector<TwistString> enumerate_strings(int n, int k) {
    if (k < 0 || k > n - 1)
        throw InvalidInput("k must lie in [0, n-1], got " + std::to_string(k));
    std::vector<TwistString> out;
    for (const auto& subset : k_subsets(n - 1, k))
        out.push_back(index_to_string(WedgeIndex{subset}, n));
    return out;
}

WedgeIndex string_to_index(const TwistString& s) {
    WedgeIndex w;
    const std::vector<int> cs = s.c_values();
    for (int j = 1; j <= s.blocks(); ++j)
        for (int i = 1; i <= s.b(j) - 1; ++i)
            w.indices.push_back(cs[static_cast<std::size_t>(j - 1)] + i);
    return w;
}

TwistString index_to_string(const WedgeIndex& w, int n) {
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
        const int v = w.indices[i];
        if (v < 1 || v > n - 1) throw InvalidInput("wedge index out of range");
        if (i > 0 && w.indices[i - 1] >= v)
            throw InvalidInput("wedge indices must be strictly increasing");
    }
    std::vector<int> entries;
    int covered = 0; // c_j + b_j of the block just closed
    std::size_t i = 0;
    while (i < w.indices.size()) {
        const int start = w.indices[i];
        std::size_t j = i;
        while (j + 1 < w.indices.size() && w.indices[j + 1] == w.indices[j] + 1) ++j;
        const int run = static_cast<int>(j - i + 1);
        entries.push_back(start - 1 - covered); // a before this block
        entries.push_back(run + 1);             // b
        covered = start + run;
        i = j + 1;
    }
    entries.push_back(n - covered);
    return TwistString(std::move(entries), n);
}

SuperVector phi_of_string(const TwistString& s) {
    const int n = s.n;
    // expand block by block: (bits-so-far, position, coefficient)
    struct Partial {
        std::uint32_t bits;
        LaurentPoly coeff;
    };
    std::vector<Partial> acc{{0u, LaurentPoly::one()}};
    for (std::size_t idx = 0; idx < s.entries.size(); ++idx) {
        const int e = s.entries[idx];
        if (idx % 2 == 0) {
            // a-block of v_0's: shift everything left by e zero bits
            for (auto& p : acc) p.bits <<= e;
        } else {
            // E(v_1^{b}) block: sum_i (-1)^i q^{-(b-1-i)} v_1^i v_0 v_1^{b-1-i}
            std::vector<Partial> next;
            next.reserve(acc.size() * static_cast<std::size_t>(e));
            for (int i = 0; i < e; ++i) {
                const std::uint32_t block =
                    ((1u << e) - 1u) & ~(1u << (e - 1 - i)); // ones with a zero at slot i
                LaurentPoly c = LaurentPoly::monomial((i % 2 == 0) ? 1 : -1, -(e - 1 - i));
                for (const auto& p : acc)
                    next.push_back({(p.bits << e) | block, p.coeff * c});
            }
            acc = std::move(next);
        }
    }
    SuperVector out(n);
    for (const auto& p : acc) out.add_term(BasisState(p.bits, n), RationalFunc(p.coeff));
    return out;
}

SuperVector h1_basis_vector(int n, int i) {
    if (i < 1 || i > n - 1) throw InvalidInput("e_i index out of range");
    return phi_of_string(TwistString({i - 1, 2, n - 1 - i}, n));
}

RFMatrix h1_generator_matrix(int n, int t, int sign) {
    if (t < 1 || t > n - 1) throw InvalidInput("generator index out of range");
    const RationalFunc q{LaurentPoly::q_power(1)};
    const RationalFunc qinv{LaurentPoly::q_power(-1)};
    RFMatrix m(n - 1, n - 1);
    for (int j = 1; j <= n - 1; ++j) {
        if (j == t - 1) {
            m.at(j - 1, j - 1) = q;
            m.at(j, j - 1) = RationalFunc(1);
        } else if (j == t) {
            m.at(j - 1, j - 1) = -qinv;
        } else if (j == t + 1) {
            m.at(j - 2, j - 1) = RationalFunc(1);
            m.at(j - 1, j - 1) = q;
        } else {
            m.at(j - 1, j - 1) = q;
        }
    }
    if (sign < 0) return m.inverse();
    return m;
}

RFMatrix h1_word_matrix(const BraidWord& w) {
    RFMatrix acc = RFMatrix::identity(w.n - 1);
    for (int g : w.letters)
        acc = h1_generator_matrix(w.n, g > 0 ? g : -g, g > 0 ? 1 : -1) * acc;
    return acc;
}

RFMatrix compound_matrix(const RFMatrix& m, int k) {
    if (m.rows() != m.cols()) throw InvalidInput("compound of non-square matrix");
    const int dim = m.rows();
    if (k < 0 || k > dim) throw InvalidInput("compound order out of range");
    const auto subsets = k_subsets(dim, k);
    const int cnk = static_cast<int>(subsets.size());

    std::map<std::pair<std::uint32_t, std::uint32_t>, RationalFunc> memo;
    std::function<RationalFunc(std::uint32_t, std::uint32_t)> minor_det =
        [&](std::uint32_t rows, std::uint32_t cols) -> RationalFunc {
        if (cols == 0) return RationalFunc(1);
        const auto key = std::make_pair(rows, cols);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int j = std::countr_zero(cols); // expand along the first column
        RationalFunc acc;
        int sign = 1;
        for (int r = 0; r < dim; ++r) {
            if (!(rows & (1u << r))) continue;
            const RationalFunc& a = m.at(r, j);
            if (!a.is_zero()) {
                RationalFunc term = a * minor_det(rows & ~(1u << r), cols & ~(1u << j));
                acc += sign > 0 ? term : -term;
            }
            sign = -sign;
        }
        memo.emplace(key, acc);
        return acc;
    };

    auto mask_of = [](const std::vector<int>& subset) {
        std::uint32_t bits = 0;
        for (int v : subset) bits |= 1u << (v - 1);
        return bits;
    };

    RFMatrix out(cnk, cnk);
    for (int i = 0; i < cnk; ++i)
        for (int j = 0; j < cnk; ++j)
            out.at(i, j) = minor_det(mask_of(subsets[static_cast<std::size_t>(i)]),
                                     mask_of(subsets[static_cast<std::size_t>(j)]));
    return out;
}

RFMatrix hk_braid_matrix(const BraidWord& w, int k) {
    const int n = w.n;
    if (k < 0 || k > n - 1) throw InvalidInput("k must lie in [0, n-1]");
    const RFMatrix word = h1_word_matrix(w);
    const RFMatrix comp = compound_matrix(word, k);
    const int shift = -(k - 1) * w.exponent_sum();
    return comp.scaled(RationalFunc(LaurentPoly::q_power(shift)));
}

std::vector<RationalFunc> state_coordinates(const SuperVector& v) {
    std::vector<RationalFunc> x(static_cast<std::size_t>(1) << v.strands());
    for (const auto& [b, c] : v.terms()) x[b.bits] = c;
    return x;
}

std::vector<RationalFunc> phi_coordinates(const SuperVector& v, int k) {
    const int n = v.strands();
    const auto strings = enumerate_strings(n, k);
    const int dim = 1 << n;
    RFMatrix a(dim, static_cast<int>(strings.size()));
    for (std::size_t j = 0; j < strings.size(); ++j) {
        const SuperVector phi = phi_of_string(strings[j]);
        for (const auto& [b, c] : phi.terms()) a.at(static_cast<int>(b.bits), static_cast<int>(j)) = c;
    }
    return a.solve(state_coordinates(v));
}

namespace {

// Change of basis between the states of V^{tensor n} and the highest-weight
// basis {phi(s)} u {F phi(s)}. Built once per n; read-only afterwards.
struct ProjCache {
    std::vector<SuperVector> columns;
    std::vector<int> block_k;
    RFMatrix inv;
};

const ProjCache& proj_cache(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ProjCache>> caches;
    std::lock_guard<std::mutex> lock(mu);
    auto it = caches.find(n);
    if (it != caches.end()) return *it->second;

    auto cache = std::make_unique<ProjCache>();
    for (int pass = 0; pass < 2; ++pass)
        for (int k = 0; k <= n - 1; ++k)
            for (const auto& s : enumerate_strings(n, k)) {
                SuperVector col = phi_of_string(s);
                if (pass == 1) col = apply_F(col);
                cache->columns.push_back(std::move(col));
                cache->block_k.push_back(k);
            }
    const int dim = 1 << n;
    if (static_cast<int>(cache->columns.size()) != dim)
        throw ExactnessError("highest-weight basis has wrong size");
    RFMatrix p(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (const auto& [b, c] : cache->columns[static_cast<std::size_t>(j)].terms())
            p.at(static_cast<int>(b.bits), j) = c;
    cache->inv = p.inverse(); // singular would falsify the basis property
    return *caches.emplace(n, std::move(cache)).first->second;
}

} // namespace

SuperVector project_pik(const SuperVector& v, int k) {
    const int n = v.strands();
    if (k < 0 || k > n - 1) throw InvalidInput("k must lie in [0, n-1]");
    const ProjCache& cache = proj_cache(n);
    const std::vector<RationalFunc> state = state_coordinates(v);
    SuperVector out(n);
    const int dim = 1 << n;
    for (int j = 0; j < dim; ++j) {
        if (cache.block_k[static_cast<std::size_t>(j)] != k) continue;
        RationalFunc coord;
        for (int i = 0; i < dim; ++i) {
            if (state[static_cast<std::size_t>(i)].is_zero()) continue;
            const RationalFunc& m = cache.inv.at(j, i);
            if (!m.is_zero()) coord += m * state[static_cast<std::size_t>(i)];
        }
        if (!coord.is_zero())
            out += cache.columns[static_cast<std::size_t>(j)].scaled(coord);
    }
    return out;
}

} // namespace qalex
