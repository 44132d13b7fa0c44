#pragma once

// Independent oracles. Nothing here calls the library's elimination,
// differential or echelon code: ranks come from fraction-free Bareiss
// elimination over Z and from elimination mod p, and the classical Loday
// differential is assembled by evaluating cochains on basis tuples.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace homdef::oracle {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Rank over Q of an integer matrix by Bareiss fraction-free elimination.
inline std::size_t bareiss_rank(IntMatrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

/// Rank over Z/p.
inline std::size_t modular_rank(const IntMatrix& src, std::uint64_t p) {
    const std::size_t rows = src.size();
    if (rows == 0) return 0;
    const std::size_t cols = src[0].size();
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class v = src[i][j] % static_cast<unsigned long>(p);
            if (v < 0) v += static_cast<unsigned long>(p);
            m[i][j] = v.get_ui();
        }
    auto inv = [p](std::uint64_t a) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const auto iv = inv(m[r][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const auto f = m[i][c] * iv % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        ++r;
    }
    return r;
}

/// Integer structure constants: bracket[i][j][k] = e_k coefficient of [e_i, e_j].
struct IntLeibniz {
    std::size_t n = 0;
    std::vector<std::vector<std::vector<long>>> bracket;

    std::vector<long> br(const std::vector<long>& x, const std::vector<long>& y) const {
        std::vector<long> out(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (x[i] && y[j])
                    for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * bracket[i][j][k];
        return out;
    }
};

/// A cochain as a function on basis tuples, extended multilinearly on demand.
using Tuple = std::vector<std::size_t>;

/// Classical Loday coboundary (alpha = id) of the elementary cochain
/// phi(e_t) = e_out for one tuple t, evaluated on every basis (n+1)-tuple.
/// Column index of the returned matrix: lex(t) * n + out.
inline IntMatrix loday_differential(const IntLeibniz& L, std::size_t degree) {
    const std::size_t n = L.n;
    std::size_t src = 1, dst = 1;
    for (std::size_t i = 0; i < degree; ++i) src *= n;
    dst = src * n;
    IntMatrix D(dst * n, std::vector<mpz_class>(src * n, 0));

    auto lex = [n](const Tuple& t) {
        std::size_t v = 0;
        for (auto x : t) v = v * n + x;
        return v;
    };
    auto unit = [n](std::size_t i) {
        std::vector<long> v(n, 0);
        v[i] = 1;
        return v;
    };
    std::function<void(std::size_t, Tuple&, const std::function<void(const Tuple&)>&)> each;
    each = [&](std::size_t len, Tuple& t, const std::function<void(const Tuple&)>& f) {
        if (t.size() == len) {
            f(t);
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            t.push_back(i);
            each(len, t, f);
            t.pop_back();
        }
    };

    Tuple s;
    each(degree, s, [&](const Tuple& support) {
        for (std::size_t out = 0; out < n; ++out) {
            const std::size_t col = lex(support) * n + out;
            // phi(v_1..v_d) for vectors = prod of support coefficients times e_out.
            auto phi = [&](const std::vector<std::vector<long>>& args) {
                long c = 1;
                for (std::size_t p = 0; p < degree; ++p) c *= args[p][support[p]];
                std::vector<long> v(n, 0);
                v[out] = c;
                return v;
            };
            Tuple x;
            each(degree + 1, x, [&](const Tuple& xs) {
                std::vector<long> acc(n, 0);
                auto add = [&](const std::vector<long>& v, long sgn) {
                    for (std::size_t k = 0; k < n; ++k) acc[k] += sgn * v[k];
                };
                std::vector<std::vector<long>> args;
                for (std::size_t p = 1; p <= degree; ++p) args.push_back(unit(xs[p]));
                add(L.br(unit(xs[0]), phi(args)), 1);
                for (std::size_t i = 1; i <= degree; ++i) {  // 0-based i is the paper's i+1
                    std::vector<std::vector<long>> a;
                    for (std::size_t p = 0; p <= degree; ++p)
                        if (p != i) a.push_back(unit(xs[p]));
                    add(L.br(phi(a), unit(xs[i])), (i + 1) % 2 == 0 ? 1 : -1);
                }
                for (std::size_t i = 0; i <= degree; ++i)
                    for (std::size_t j = i + 1; j <= degree; ++j) {
                        std::vector<std::vector<long>> a;
                        for (std::size_t p = 0; p <= degree; ++p) {
                            if (p == j) continue;
                            a.push_back(p == i ? L.br(unit(xs[i]), unit(xs[j])) : unit(xs[p]));
                        }
                        add(phi(a), (j + 1 + 1) % 2 == 0 ? 1 : -1);
                    }
                const std::size_t row0 = lex(xs) * n;
                for (std::size_t k = 0; k < n; ++k) D[row0 + k][col] = acc[k];
            });
        }
    });
    return D;
}

/// Columns of [D | v] for a membership test by rank.
inline IntMatrix append_column(IntMatrix m, const std::vector<mpz_class>& v) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(v[i]);
    return m;
}

} // namespace homdef::oracle
