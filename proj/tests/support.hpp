#pragma once

// Test corpus: random multiplicative Hom-Leibniz algebras of dimension <= 4
// drawn from parametric and twisted families, plus small helpers.

#include <random>
#include <string>
#include <vector>

#include "homdef/homdef.hpp"

namespace homdef::corpus {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// Small nonzero-denominator rationals, biased toward integers.
    Rational rational(long span = 3) {
        long num = integer(-span, span);
        long den = coin() ? 1 : integer(1, 3);
        return Rational(num, den);
    }
    Rational nonzero(long span = 3) {
        for (;;) {
            auto r = rational(span);
            if (!r.is_zero()) return r;
        }
    }
    Vector vector(std::size_t n, long span = 3) {
        Vector v(n);
        for (auto& x : v) x = rational(span);
        return v;
    }
    Matrix matrix(std::size_t r, std::size_t c, long span = 3) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(span);
        return m;
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

struct NamedAlgebra {
    std::string family;
    HomLeibnizAlgebra alg;
};

inline HomLeibnizAlgebra heisenberg(const Rational& s, const Rational& t) {
    auto table = HomLeibnizAlgebra::zero_table(3);
    table[0 * 3 + 1] = {0, 0, 1};
    table[1 * 3 + 0] = {0, 0, -1};
    Matrix alpha(3, 3);
    alpha(0, 0) = s;
    alpha(1, 1) = t;
    alpha(2, 2) = s * t;
    return HomLeibnizAlgebra::create(3, std::move(table), std::move(alpha));
}

/// [e1, e1] = e2, alpha(e1) = s e1 + u e2, alpha(e2) = s^2 e2.
inline HomLeibnizAlgebra square_zero_2d(const Rational& s, const Rational& u) {
    auto table = HomLeibnizAlgebra::zero_table(2);
    table[0] = {0, 1};
    Matrix alpha = Matrix::from_columns(2, {{s, u}, {0, s * s}});
    return HomLeibnizAlgebra::create(2, std::move(table), std::move(alpha));
}

/// l0 (+) K e4 with e4 central and alpha(e4) = d e4.
inline HomLeibnizAlgebra l0_plus_line(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    auto base = catalog::l0(a, b, c);
    auto table = HomLeibnizAlgebra::zero_table(4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const auto& v = base.basis_bracket(i, j);
            table[i * 4 + j] = {v[0], v[1], v[2], 0};
        }
    Matrix alpha(4, 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) alpha(i, j) = base.alpha()(i, j);
    alpha(3, 3) = d;
    return HomLeibnizAlgebra::create(4, std::move(table), std::move(alpha));
}

inline NamedAlgebra random_algebra(Gen& g) {
    switch (g.integer(0, 5)) {
    case 0: return {"l0", catalog::l0(g.rational(), g.rational(), g.rational())};
    case 1: return {"l0-twist", yau_twist(catalog::l0(g.rational(), g.rational(), g.rational()))};
    case 2: return {"l0+line", l0_plus_line(g.rational(), g.rational(), g.rational(), g.rational())};
    case 3: return {"heisenberg", heisenberg(g.rational(), g.rational())};
    case 4: return {"heisenberg-twist", yau_twist(heisenberg(g.rational(), g.rational()))};
    default: return {"square-zero-2d", square_zero_2d(g.rational(), g.rational())};
    }
}

inline Cochain random_cochain(Gen& g, std::size_t degree, std::size_t n, std::size_t m) {
    return Cochain::from_flat(degree, n, m, g.vector(cochain_space_dim(degree, n, m)));
}

/// A random element of the equivariant subspace of degree-n cochains.
inline Cochain random_equivariant(Gen& g, const HomLeibnizAlgebra& alg, std::size_t degree) {
    auto rep = adjoint_representation(alg);
    auto sp = equivariant_cochain_basis(alg, rep, degree);
    Vector v(cochain_space_dim(degree, alg.dim(), alg.dim()));
    for (const auto& b : sp.basis.basis_vectors()) axpy(v, g.rational(), b);
    return Cochain::from_flat(degree, alg.dim(), alg.dim(), std::move(v));
}

inline Cochain random_in(Gen& g, const Subspace& s, std::size_t degree, std::size_t n) {
    Vector v(s.ambient_dim());
    for (const auto& b : s.basis_vectors()) axpy(v, g.rational(), b);
    return Cochain::from_flat(degree, n, n, std::move(v));
}

/// deformation_residual vanishes on every dual-basis functional.
inline bool residuals_vanish(const Deformation& d) {
    for (std::size_t p = 0; p < d.base.m_dim(); ++p)
        if (!is_zero(deformation_residual(d, unit_vector(d.base.m_dim(), p)).coeffs)) return false;
    return true;
}

/// Valid deformations of three shapes by kind % 3: infinitesimal over C_1 of dim 2,
/// second order over K[t]/(t^3), and the output of one versal step.
inline Deformation valid_deformation(Gen& g, int kind) {
    for (;;) {
        auto [family, alg] = random_algebra(g);
        const auto n = alg.dim();
        auto rep = adjoint_representation(alg);
        auto h2 = cohomology_report(alg, rep, 2, CoboundaryMode::strict);
        switch (kind % 3) {
        case 0: {
            std::vector<Cochain> psi;
            for (int p = 0; p < 2; ++p) psi.push_back(random_in(g, h2.Z, 2, n));
            return {alg, c1_base(2), psi};
        }
        case 1: {
            auto h3 = cohomology_report(alg, rep, 3, CoboundaryMode::strict);
            auto psi1 = random_in(g, h2.Z, 2, n);
            auto next = extend_one_parameter(alg, h3, {psi1});
            if (auto* chi = std::get_if<Cochain>(&next)) return {alg, truncated_polynomial_base(2), {psi1, *chi}};
            break;
        }
        default: {
            if (h2.h_dim() == 0 || h2.h_dim() > 3) break;  // keeps the Harrison table small
            auto h3 = cohomology_report(alg, rep, 3, CoboundaryMode::strict);
            auto eta = universal_infinitesimal(alg, h2);
            auto res = versal_step(alg, h3, eta);
            if (res.next_base.m_dim() > eta.base.m_dim()) return res.next_deformation;
            break;
        }
        }
    }
}

inline Matrix random_base_morphism_matrix(Gen& g, std::size_t rows, std::size_t cols) { return g.matrix(rows, cols); }

} // namespace homdef::corpus
