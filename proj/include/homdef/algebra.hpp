#pragma once

// Hom-Leibniz algebras given by structure constants and a twisting map,
// their representations, and the Yau twist.
//
// Conventions (0-based in the API, 1-based in files and reports):
//   bracket(i, j)[k] = coefficient of e_k in [e_i, e_j]
//   alpha(r, c)      = coefficient of e_r in alpha(e_c)   (column c = alpha(e_c))
//
// The twisted identity checked everywhere is the right Leibniz form
//   [alpha(x), [y, z]] = [[x, y], alpha(z)] - [[x, z], alpha(y)].

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exactla.hpp"

namespace homdef {

class HomLeibnizAlgebra {
public:
    HomLeibnizAlgebra() = default;

    /// Validating constructor: throws InvalidAlgebra unless the Hom-Jacobi
    /// identity holds on all basis triples and alpha is multiplicative.
    static HomLeibnizAlgebra create(std::size_t dim, std::vector<Vector> table, Matrix alpha);

    /// Skips validation. For candidate brackets that are expected to fail.
    static HomLeibnizAlgebra unchecked(std::size_t dim, std::vector<Vector> table, Matrix alpha) {
        if (table.size() != dim * dim) throw DimensionMismatch("bracket table must have dim^2 entries");
        for (const auto& v : table)
            if (v.size() != dim) throw DimensionMismatch("bracket value length");
        if (alpha.rows() != dim || alpha.cols() != dim) throw DimensionMismatch("alpha must be dim x dim");
        HomLeibnizAlgebra a;
        a.dim_ = dim;
        a.table_ = std::move(table);
        a.alpha_ = std::move(alpha);
        return a;
    }

    /// Zero bracket table of the given dimension.
    static std::vector<Vector> zero_table(std::size_t dim) {
        return std::vector<Vector>(dim * dim, Vector(dim));
    }

    std::size_t dim() const { return dim_; }
    const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    const std::vector<Vector>& table() const { return table_; }
    const Matrix& alpha() const { return alpha_; }

    Vector apply_alpha(std::span<const Rational> x) const { return alpha_ * x; }

    Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const {
        if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket argument length");
        Vector out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                axpy(out, x[i] * y[j], basis_bracket(i, j));
            }
        }
        return out;
    }

    friend bool operator==(const HomLeibnizAlgebra&, const HomLeibnizAlgebra&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Vector> table_;
    Matrix alpha_;
};

inline Vector evaluate_bracket(const HomLeibnizAlgebra& alg, std::span<const Rational> x,
                               std::span<const Rational> y) {
    return alg.bracket(x, y);
}

/// A basis triple (i, j, k) on which an identity fails, with the defect vector.
struct TripleDefect {
    std::size_t i = 0, j = 0, k = 0;
    Vector defect;
};

/// [alpha(x),[y,z]] - [[x,y],alpha(z)] + [[x,z],alpha(y)]
inline Vector hom_jacobi_expression(const HomLeibnizAlgebra& alg, std::span<const Rational> x,
                                    std::span<const Rational> y, std::span<const Rational> z) {
    Vector out = alg.bracket(alg.apply_alpha(x), alg.bracket(y, z));
    out = out - alg.bracket(alg.bracket(x, y), alg.apply_alpha(z));
    out = out + alg.bracket(alg.bracket(x, z), alg.apply_alpha(y));
    return out;
}

/// All basis triples violating the Hom-Jacobi identity. Never throws.
inline std::vector<TripleDefect> check_hom_jacobi(const HomLeibnizAlgebra& alg) {
    std::vector<TripleDefect> out;
    const auto n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto d = hom_jacobi_expression(alg, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
                if (!is_zero(d)) out.push_back({i, j, k, std::move(d)});
            }
    return out;
}

/// Pairs (i, j) with alpha[e_i,e_j] != [alpha e_i, alpha e_j]; k is unused.
inline std::vector<TripleDefect> multiplicativity_defects(const HomLeibnizAlgebra& alg) {
    std::vector<TripleDefect> out;
    const auto n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto lhs = alg.apply_alpha(alg.basis_bracket(i, j));
            auto rhs = alg.bracket(alg.alpha().column(i), alg.alpha().column(j));
            auto d = lhs - rhs;
            if (!is_zero(d)) out.push_back({i, j, 0, std::move(d)});
        }
    return out;
}

inline bool check_multiplicative(const HomLeibnizAlgebra& alg) {
    return multiplicativity_defects(alg).empty();
}

inline HomLeibnizAlgebra HomLeibnizAlgebra::create(std::size_t dim, std::vector<Vector> table, Matrix alpha) {
    auto a = unchecked(dim, std::move(table), std::move(alpha));
    auto jac = check_hom_jacobi(a);
    if (!jac.empty()) {
        const auto& d = jac.front();
        throw InvalidAlgebra("Hom-Jacobi identity fails on (e" + std::to_string(d.i + 1) + ", e" +
                             std::to_string(d.j + 1) + ", e" + std::to_string(d.k + 1) + ")");
    }
    auto mult = multiplicativity_defects(a);
    if (!mult.empty()) {
        const auto& d = mult.front();
        throw InvalidAlgebra("alpha is not multiplicative on (e" + std::to_string(d.i + 1) + ", e" +
                             std::to_string(d.j + 1) + ")");
    }
    return a;
}

inline bool is_valid(const HomLeibnizAlgebra& alg) {
    return check_hom_jacobi(alg).empty() && check_multiplicative(alg);
}

/// f : L -> L' (dim' x dim) preserves brackets.
inline bool is_weak_morphism(const Matrix& f, const HomLeibnizAlgebra& src, const HomLeibnizAlgebra& dst) {
    if (f.rows() != dst.dim() || f.cols() != src.dim()) throw DimensionMismatch("morphism shape");
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
            if (f * src.basis_bracket(i, j) != dst.bracket(f.column(i), f.column(j))) return false;
    return true;
}

/// Weak morphism that also intertwines the twisting maps.
inline bool is_morphism(const Matrix& f, const HomLeibnizAlgebra& src, const HomLeibnizAlgebra& dst) {
    return is_weak_morphism(f, src, dst) && f * src.alpha() == dst.alpha() * f;
}

/// Representation M of a Hom-Leibniz algebra with twisting map A on M.
///   left[i * m + a]  = [e_i, m_a] in M
///   right[a * n + i] = [m_a, e_i] in M
struct Representation {
    std::size_t module_dim = 0;
    Matrix A;
    std::vector<Vector> left;
    std::vector<Vector> right;

    /// [x, u] for x in L, u in M.
    Vector act_left(std::span<const Rational> x, std::span<const Rational> u) const {
        Vector out(module_dim);
        const std::size_t n = x.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t a = 0; a < module_dim; ++a)
                if (!u[a].is_zero()) axpy(out, x[i] * u[a], left[i * module_dim + a]);
        }
        return out;
    }

    /// [u, x] for u in M, x in L.
    Vector act_right(std::span<const Rational> u, std::span<const Rational> x) const {
        Vector out(module_dim);
        const std::size_t n = x.size();
        for (std::size_t a = 0; a < module_dim; ++a) {
            if (u[a].is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                if (!x[i].is_zero()) axpy(out, u[a] * x[i], right[a * n + i]);
        }
        return out;
    }

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Human-readable descriptions of every failed representation axiom on basis elements.
inline std::vector<std::string> representation_defects(const HomLeibnizAlgebra& alg, const Representation& rep) {
    std::vector<std::string> out;
    const auto n = alg.dim();
    const auto m = rep.module_dim;
    if (rep.A.rows() != m || rep.A.cols() != m || rep.left.size() != n * m || rep.right.size() != n * m) {
        out.emplace_back("shape mismatch");
        return out;
    }
    auto e = [&](std::size_t i) { return unit_vector(n, i); };
    auto u = [&](std::size_t a) { return unit_vector(m, a); };
    auto tag = [](const char* what, std::size_t a, std::size_t b, std::size_t c) {
        return std::string(what) + " (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
               std::to_string(c + 1) + ")";
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a) {
            auto ai = alg.apply_alpha(e(i));
            auto Au = rep.A * u(a);
            if (rep.act_left(ai, Au) != rep.A * rep.act_left(e(i), u(a)))
                out.push_back(tag("left equivariance", i, a, 0));
            if (rep.act_right(Au, ai) != rep.A * rep.act_right(u(a), e(i)))
                out.push_back(tag("right equivariance", a, i, 0));
        }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // module element first: [A m,[y,z]] = [[m,y],a z] - [[m,z],a y]
                auto lhs = rep.act_right(rep.A * u(a), alg.basis_bracket(j, k));
                auto rhs = rep.act_right(rep.act_right(u(a), e(j)), alg.apply_alpha(e(k))) -
                           rep.act_right(rep.act_right(u(a), e(k)), alg.apply_alpha(e(j)));
                if (lhs != rhs) out.push_back(tag("Hom-Jacobi (M,L,L)", a, j, k));
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t k = 0; k < n; ++k) {
                // middle: [a x,[m,z]] = [[x,m],a z] - [[x,z],A m]
                auto lhs = rep.act_left(alg.apply_alpha(e(i)), rep.act_right(u(a), e(k)));
                auto rhs = rep.act_right(rep.act_left(e(i), u(a)), alg.apply_alpha(e(k))) -
                           rep.act_left(alg.basis_bracket(i, k), rep.A * u(a));
                if (lhs != rhs) out.push_back(tag("Hom-Jacobi (L,M,L)", i, a, k));
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < m; ++a) {
                // last: [a x,[y,m]] = [[x,y],A m] - [[x,m],a y]
                auto lhs = rep.act_left(alg.apply_alpha(e(i)), rep.act_left(e(j), u(a)));
                auto rhs = rep.act_left(alg.basis_bracket(i, j), rep.A * u(a)) -
                           rep.act_right(rep.act_left(e(i), u(a)), alg.apply_alpha(e(j)));
                if (lhs != rhs) out.push_back(tag("Hom-Jacobi (L,L,M)", i, j, a));
            }
    return out;
}

inline bool check_representation(const HomLeibnizAlgebra& alg, const Representation& rep) {
    return representation_defects(alg, rep).empty();
}

/// M = L, A = alpha, both actions the bracket. The result is verified, not
/// assumed: a valid algebra whose adjoint fails the axioms is a hard error.
inline Representation adjoint_representation(const HomLeibnizAlgebra& alg) {
    if (!is_valid(alg)) throw InvalidAlgebra("adjoint representation needs a multiplicative Hom-Leibniz algebra");
    Representation rep;
    rep.module_dim = alg.dim();
    rep.A = alg.alpha();
    rep.left = alg.table();
    rep.right = alg.table();
    auto defects = representation_defects(alg, rep);
    if (!defects.empty()) throw InvalidAlgebra("adjoint action is not a representation: " + defects.front());
    return rep;
}

/// Same alpha, bracket composed with alpha.
inline HomLeibnizAlgebra yau_twist(const HomLeibnizAlgebra& alg) {
    if (!is_valid(alg)) throw InvalidAlgebra("yau_twist needs a multiplicative Hom-Leibniz algebra");
    std::vector<Vector> table;
    table.reserve(alg.table().size());
    for (const auto& v : alg.table()) table.push_back(alg.apply_alpha(v));
    return HomLeibnizAlgebra::create(alg.dim(), std::move(table), alg.alpha());
}

} // namespace homdef
