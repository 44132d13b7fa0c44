#pragma once

// Deformations over a local base A = K.1 + m, stored in normal form:
//   [1(x)x, 1(x)y]_lambda = 1(x)[x,y] + sum_p m_p (x) psi_p(x,y).

#include <string>
#include <vector>

#include "algebra.hpp"
#include "base.hpp"
#include "cohomology.hpp"

namespace homdef {

struct Deformation {
    HomLeibnizAlgebra algebra;
    LocalAlgebraBase base;
    std::vector<Cochain> psi;  // psi[p] pairs with m_p

    std::size_t order_dim() const { return base.m_dim(); }
};

/// Unital augmentation-preserving map A -> A'. matrix is r' x r; column i is phi(m_i).
struct BaseMorphism {
    LocalAlgebraBase source;
    LocalAlgebraBase target;
    Matrix matrix;
};

inline bool is_multiplicative(const BaseMorphism& phi) {
    const auto r = phi.source.m_dim();
    if (phi.matrix.rows() != phi.target.m_dim() || phi.matrix.cols() != r) return false;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (phi.matrix * phi.source.product(i, j) !=
                phi.target.multiply(phi.matrix.column(i), phi.matrix.column(j)))
                return false;
    return true;
}

inline BaseMorphism make_base_morphism(const LocalAlgebraBase& source, const LocalAlgebraBase& target, Matrix m) {
    BaseMorphism phi{source, target, std::move(m)};
    if (phi.matrix.rows() != target.m_dim() || phi.matrix.cols() != source.m_dim())
        throw ShapeMismatch("base morphism matrix must be target.m_dim x source.m_dim");
    if (!is_multiplicative(phi)) throw InvalidBase("base morphism is not multiplicative");
    return phi;
}

inline BaseMorphism identity_morphism(const LocalAlgebraBase& a) {
    return {a, a, Matrix::identity(a.m_dim())};
}

/// second after first.
inline BaseMorphism compose(const BaseMorphism& second, const BaseMorphism& first) {
    if (!(first.target == second.source)) throw IncompatibleBases("composition: bases do not match");
    return {first.source, second.target, second.matrix * first.matrix};
}

struct DeformationDefect {
    enum class Kind { hom_jacobi, equivariance } kind = Kind::hom_jacobi;
    std::size_t i = 0, j = 0, k = 0;  // basis arguments; k unused for equivariance
    std::size_t coefficient = 0;      // 0 = unit, p + 1 = m_p; psi index for equivariance
    Vector value;

    std::string describe(const LocalAlgebraBase& base) const {
        auto e = [](std::size_t x) { return "e" + std::to_string(x + 1); };
        if (kind == Kind::equivariance)
            return "psi_" + std::to_string(coefficient + 1) + " is not equivariant on (" + e(i) + ", " + e(j) + ")";
        std::string c = coefficient == 0 ? "1" : base.labels()[coefficient - 1];
        return "Hom-Jacobi defect at coefficient " + c + " on (" + e(i) + ", " + e(j) + ", " + e(k) + ")";
    }
};

namespace detail {

/// Products of the basis {1, m_1, ..., m_r} of A, as vectors of length r + 1.
inline std::vector<Vector> unital_products(const LocalAlgebraBase& a) {
    const auto r = a.m_dim();
    const auto R = r + 1;
    std::vector<Vector> out(R * R, Vector(R));
    for (std::size_t x = 0; x < R; ++x)
        for (std::size_t y = 0; y < R; ++y) {
            auto& v = out[x * R + y];
            if (x == 0) v[y] = 1;
            else if (y == 0) v[x] = 1;
            else
                for (std::size_t p = 0; p < r; ++p) v[p + 1] = a.product(x - 1, y - 1)[p];
        }
    return out;
}

/// Elements of A (x) L are (r+1) x n matrices; row 0 is the unit component.
class TensorBracket {
public:
    explicit TensorBracket(const Deformation& d)
        : d_(d), R_(d.base.m_dim() + 1), n_(d.algebra.dim()), units_(unital_products(d.base)) {
        for (const auto& psi : d.psi) {
            std::vector<Vector> values(n_ * n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    values[i * n_ + j] = Vector(psi.coeffs.begin() + (i * n_ + j) * n_,
                                                psi.coeffs.begin() + (i * n_ + j + 1) * n_);
            psi_values_.push_back(std::move(values));
        }
    }

    Matrix basis(std::size_t i) const {
        Matrix X(R_, n_);
        X(0, i) = 1;
        return X;
    }

    Matrix alpha(const Matrix& X) const {
        Matrix Y(R_, n_);
        for (std::size_t a = 0; a < R_; ++a) {
            auto v = d_.algebra.apply_alpha(X.row(a));
            std::copy(v.begin(), v.end(), Y.row(a).begin());
        }
        return Y;
    }

    Matrix bracket(const Matrix& X, const Matrix& Y) const {
        Matrix out(R_, n_);
        for (std::size_t a = 0; a < R_; ++a)
            for (std::size_t i = 0; i < n_; ++i) {
                if (X(a, i).is_zero()) continue;
                for (std::size_t b = 0; b < R_; ++b)
                    for (std::size_t j = 0; j < n_; ++j) {
                        if (Y(b, j).is_zero()) continue;
                        const Rational coef = X(a, i) * Y(b, j);
                        const Vector& ab = units_[a * R_ + b];
                        add_term(out, coef, ab, d_.algebra.basis_bracket(i, j));
                        for (std::size_t p = 0; p + 1 < R_; ++p) {
                            const Vector& w = psi_values_[p][i * n_ + j];
                            if (is_zero(w)) continue;
                            for (std::size_t c = 0; c < R_; ++c)
                                if (!ab[c].is_zero()) add_term(out, coef * ab[c], units_[c * R_ + p + 1], w);
                        }
                    }
            }
        return out;
    }

    Matrix hom_jacobi(const Matrix& X, const Matrix& Y, const Matrix& Z) const {
        Matrix out = bracket(alpha(X), bracket(Y, Z));
        out = out - bracket(bracket(X, Y), alpha(Z));
        return out + bracket(bracket(X, Z), alpha(Y));
    }

private:
    void add_term(Matrix& out, const Rational& coef, const Vector& base_elem, const Vector& w) const {
        for (std::size_t c = 0; c < R_; ++c) {
            if (base_elem[c].is_zero()) continue;
            const Rational s = coef * base_elem[c];
            auto row = out.row(c);
            for (std::size_t l = 0; l < n_; ++l)
                if (!w[l].is_zero()) row[l] += s * w[l];
        }
    }

    const Deformation& d_;
    std::size_t R_, n_;
    std::vector<Vector> units_;
    std::vector<std::vector<Vector>> psi_values_;
};

} // namespace detail

inline void validate_shape(const Deformation& d) {
    const auto n = d.algebra.dim();
    if (d.psi.size() != d.base.m_dim())
        throw ShapeMismatch("deformation has " + std::to_string(d.psi.size()) + " cochains for a base with m_dim " +
                            std::to_string(d.base.m_dim()));
    for (const auto& c : d.psi)
        if (c.degree != 2 || c.in_dim != n || c.out_dim != n || c.coeffs.size() != n * n * n)
            throw ShapeMismatch("deformation cochains must be degree-2 maps L x L -> L");
}

/// Jacobi coefficients of the lambda-bracket on 1(x)e_i, 1(x)e_j, 1(x)e_k, by direct
/// expansion in A (x) L. Row c of entry (i,j,k) is the coefficient at 1 (c = 0) or m_{c-1}.
inline std::vector<Matrix> lambda_jacobi_table(const Deformation& d) {
    validate_shape(d);
    detail::TensorBracket tb(d);
    const auto n = d.algebra.dim();
    std::vector<Matrix> out;
    out.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.push_back(tb.hom_jacobi(tb.basis(i), tb.basis(j), tb.basis(k)));
    return out;
}

/// Empty iff every psi_p is equivariant and the lambda-bracket satisfies Hom-Jacobi over A (x) L.
inline std::vector<DeformationDefect> check_deformation(const Deformation& d) {
    validate_shape(d);
    std::vector<DeformationDefect> out;
    const auto n = d.algebra.dim();
    const auto& alpha = d.algebra.alpha();
    for (std::size_t p = 0; p < d.psi.size(); ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto& psi = d.psi[p];
                Vector lhs = alpha * psi.evaluate({unit_vector(n, i), unit_vector(n, j)});
                Vector rhs = psi.evaluate({alpha.column(i), alpha.column(j)});
                if (lhs != rhs) out.push_back({DeformationDefect::Kind::equivariance, i, j, 0, p, lhs - rhs});
            }
    auto table = lambda_jacobi_table(d);
    for (std::size_t t = 0; t < table.size(); ++t) {
        const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
        for (std::size_t c = 0; c < table[t].rows(); ++c)
            if (!is_zero(table[t].row(c)))
                out.push_back({DeformationDefect::Kind::hom_jacobi, i, j, k, c, table[t].row_vector(c)});
    }
    return out;
}

inline bool is_deformation(const Deformation& d) { return check_deformation(d).empty(); }

/// psi_{lambda,xi} = sum_p xi(m_p) psi_p.
inline Cochain deformation_differential(const Deformation& d, std::span<const Rational> xi) {
    validate_shape(d);
    if (xi.size() != d.base.m_dim()) throw DimensionMismatch("functional length must equal m_dim");
    const auto n = d.algebra.dim();
    Cochain out = Cochain::zero(2, n, n);
    for (std::size_t p = 0; p < xi.size(); ++p)
        if (!xi[p].is_zero()) axpy(out.coeffs, xi[p], d.psi[p].coeffs);
    return out;
}

/// eta_1 over C_1 = K + (H^2)' with psi_i the canonical H^2 representatives.
inline Deformation universal_infinitesimal(const HomLeibnizAlgebra& alg, const CohomologyReport& h2) {
    if (h2.degree != 2 || h2.in_dim != alg.dim() || h2.out_dim != alg.dim())
        throw InvalidAlgebra("universal_infinitesimal needs the degree-2 adjoint cohomology report of the algebra");
    Deformation d{alg, c1_base(h2.h_dim()), h2.H_reps};
    auto defects = check_deformation(d);
    if (!defects.empty()) throw InvalidAlgebra("eta_1 fails: " + defects.front().describe(d.base));
    return d;
}

/// psi'_j = sum_i phi[j][i] psi_i over phi.target.
inline Deformation push_out(const Deformation& d, const BaseMorphism& phi) {
    validate_shape(d);
    if (!(phi.source == d.base)) throw IncompatibleBases("push_out: morphism source is not the deformation base");
    if (phi.matrix.rows() != phi.target.m_dim() || phi.matrix.cols() != d.base.m_dim())
        throw IncompatibleBases("push_out: morphism matrix shape");
    const auto n = d.algebra.dim();
    Deformation out{d.algebra, phi.target, {}};
    for (std::size_t j = 0; j < phi.target.m_dim(); ++j) {
        Cochain c = Cochain::zero(2, n, n);
        for (std::size_t i = 0; i < d.base.m_dim(); ++i)
            if (!phi.matrix(j, i).is_zero()) axpy(c.coeffs, phi.matrix(j, i), d.psi[i].coeffs);
        out.psi.push_back(std::move(c));
    }
    return out;
}

/// The morphism C_1 -> d.base inducing d from eta_1 up to coboundaries:
/// column c sends g_c to sum_j (coordinate c of [psi_j]) m_j.
inline BaseMorphism classify_infinitesimal(const Deformation& d, const CohomologyReport& h2) {
    validate_shape(d);
    if (!d.base.has_zero_square()) throw NotInfinitesimal("classify_infinitesimal needs m^2 = 0");
    if (h2.degree != 2 || h2.in_dim != d.algebra.dim()) throw InvalidArgument("classify_infinitesimal needs a degree-2 report");
    const auto h = h2.h_dim();
    Matrix m(d.base.m_dim(), h);
    for (std::size_t j = 0; j < d.psi.size(); ++j) {
        if (!h2.is_cocycle(d.psi[j]))
            throw NotADeformation("psi_" + std::to_string(j + 1) + " is not an equivariant 2-cocycle");
        auto coords = h2.class_coordinates(d.psi[j]);
        for (std::size_t c = 0; c < h; ++c) m(j, c) = coords[c];
    }
    return {c1_base(h), d.base, std::move(m)};
}

/// Infinitesimal equivalence: every psi'_j - psi_j is a coboundary in the report's mode.
inline bool infinitesimally_equivalent(const Deformation& a, const Deformation& b, const CohomologyReport& h2) {
    if (!(a.base == b.base) || a.psi.size() != b.psi.size()) return false;
    if (!a.base.has_zero_square()) throw NotInfinitesimal("equivalence is only decided over bases with m^2 = 0");
    for (std::size_t j = 0; j < a.psi.size(); ++j)
        if (!h2.is_coboundary(a.psi[j] - b.psi[j])) return false;
    return true;
}

} // namespace homdef
