#pragma once

// Augmented commutative local base algebras A = K.1 + m, described by the
// multiplication table of the maximal ideal m, plus the low-degree Harrison
// cohomology with trivial coefficients and one-dimensional extensions.

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exactla.hpp"

namespace homdef {

class LocalAlgebraBase {
public:
    LocalAlgebraBase() = default;

    /// table[i * r + j] = m_i * m_j expressed in the m-basis.
    static LocalAlgebraBase unchecked(std::size_t m_dim, std::vector<Vector> table,
                                      std::vector<std::string> labels = {}) {
        if (table.size() != m_dim * m_dim) throw DimensionMismatch("base table must have r^2 entries");
        for (const auto& v : table)
            if (v.size() != m_dim) throw DimensionMismatch("base product length");
        if (labels.empty())
            for (std::size_t i = 0; i < m_dim; ++i) labels.push_back("m" + std::to_string(i + 1));
        if (labels.size() != m_dim) throw DimensionMismatch("label count");
        LocalAlgebraBase b;
        b.r_ = m_dim;
        b.table_ = std::move(table);
        b.labels_ = std::move(labels);
        return b;
    }

    /// Throws InvalidBase unless the table is commutative, associative and nilpotent.
    static LocalAlgebraBase create(std::size_t m_dim, std::vector<Vector> table,
                                   std::vector<std::string> labels = {});

    static std::vector<Vector> zero_table(std::size_t r) { return std::vector<Vector>(r * r, Vector(r)); }

    std::size_t m_dim() const { return r_; }
    const Vector& product(std::size_t i, std::size_t j) const { return table_[i * r_ + j]; }
    const std::vector<Vector>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Vector multiply(std::span<const Rational> u, std::span<const Rational> v) const {
        if (u.size() != r_ || v.size() != r_) throw DimensionMismatch("base product argument");
        Vector out(r_);
        for (std::size_t i = 0; i < r_; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < r_; ++j)
                if (!v[j].is_zero()) axpy(out, u[i] * v[j], product(i, j));
        }
        return out;
    }

    bool has_zero_square() const {
        for (const auto& v : table_)
            if (!is_zero(v)) return false;
        return true;
    }

    /// The ideal m^2 as a subspace of m.
    Subspace square() const { return Subspace::span(r_, table_); }

    friend bool operator==(const LocalAlgebraBase& a, const LocalAlgebraBase& b) {
        return a.r_ == b.r_ && a.table_ == b.table_;
    }

private:
    std::size_t r_ = 0;
    std::vector<Vector> table_;
    std::vector<std::string> labels_;
};

inline bool is_commutative(const LocalAlgebraBase& a) {
    for (std::size_t i = 0; i < a.m_dim(); ++i)
        for (std::size_t j = i + 1; j < a.m_dim(); ++j)
            if (a.product(i, j) != a.product(j, i)) return false;
    return true;
}

inline bool is_associative(const LocalAlgebraBase& a) {
    const auto r = a.m_dim();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                if (a.multiply(a.product(i, j), unit_vector(r, k)) != a.multiply(unit_vector(r, i), a.product(j, k)))
                    return false;
    return true;
}

/// m^{r+1} = 0, computed through the chain of ideal powers m^{p+1} = m^p * m.
inline bool is_nilpotent(const LocalAlgebraBase& a) {
    const auto r = a.m_dim();
    Subspace power = Subspace::full(r);
    for (std::size_t p = 0; p <= r; ++p) {
        if (power.dim() == 0) return true;
        std::vector<Vector> next;
        for (const auto& v : power.basis_vectors())
            for (std::size_t k = 0; k < r; ++k) next.push_back(a.multiply(v, unit_vector(r, k)));
        power = Subspace::span(r, next);
    }
    return power.dim() == 0;
}

inline bool check_base_axioms(const LocalAlgebraBase& a) {
    return is_commutative(a) && is_associative(a) && is_nilpotent(a);
}

inline LocalAlgebraBase LocalAlgebraBase::create(std::size_t m_dim, std::vector<Vector> table,
                                                 std::vector<std::string> labels) {
    auto b = unchecked(m_dim, std::move(table), std::move(labels));
    if (!is_commutative(b)) throw InvalidBase("multiplication on m is not commutative");
    if (!is_associative(b)) throw InvalidBase("multiplication on m is not associative");
    if (!is_nilpotent(b)) throw InvalidBase("m is not nilpotent");
    return b;
}

/// K[t]/(t^{k+1}); m has basis t, t^2, ..., t^k.
inline LocalAlgebraBase truncated_polynomial_base(std::size_t k) {
    if (k < 1) throw InvalidArgument("truncation order must be >= 1");
    auto table = LocalAlgebraBase::zero_table(k);
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= k; ++i) {
        labels.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
        for (std::size_t j = 1; j <= k; ++j)
            if (i + j <= k) table[(i - 1) * k + (j - 1)][i + j - 1] = 1;
    }
    return LocalAlgebraBase::create(k, std::move(table), std::move(labels));
}

/// C_1 = K + H' with H'^2 = 0.
inline LocalAlgebraBase c1_base(std::size_t h_dim) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= h_dim; ++i) labels.push_back("g" + std::to_string(i));
    return LocalAlgebraBase::create(h_dim, LocalAlgebraBase::zero_table(h_dim), std::move(labels));
}

/// (m/m^2)': functionals on m vanishing on m^2, returned as row vectors.
struct HarrisonH1 {
    std::size_t dim = 0;
    std::vector<Vector> functionals;
};

inline HarrisonH1 harrison_h1(const LocalAlgebraBase& a) {
    if (!check_base_axioms(a)) throw InvalidBase("harrison_h1 needs a valid local base");
    const auto r = a.m_dim();
    // xi . (m_i m_j) = 0 for all products
    Matrix sys = Matrix::from_rows(r, a.table());
    auto ker = kernel_basis(sys);
    return {ker.dim(), ker.basis_vectors()};
}

/// Symmetric r x r matrix f(m_i, m_j) with values in K.
using HarrisonTwoCocycle = Matrix;

inline bool is_symmetric(const Matrix& f) {
    if (f.rows() != f.cols()) return false;
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = i + 1; j < f.cols(); ++j)
            if (f(i, j) != f(j, i)) return false;
    return true;
}

/// f(u, v) for u, v in m.
inline Rational harrison_eval(const HarrisonTwoCocycle& f, std::span<const Rational> u, std::span<const Rational> v) {
    return std::inner_product(u.begin(), u.end(), (f * v).begin(), Rational(0));
}

/// Symmetric and f(xy, z) = f(x, yz) on basis triples.
inline bool is_harrison_cocycle(const LocalAlgebraBase& a, const HarrisonTwoCocycle& f) {
    const auto r = a.m_dim();
    if (f.rows() != r || !is_symmetric(f)) return false;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                if (harrison_eval(f, a.product(i, j), unit_vector(r, k)) !=
                    harrison_eval(f, unit_vector(r, i), a.product(j, k)))
                    return false;
    return true;
}

struct HarrisonH2 {
    std::size_t dim = 0;
    Subspace cocycles;     // in the flattened r*r space, f(i,j) at i*r + j
    Subspace coboundaries;
    std::vector<HarrisonTwoCocycle> representatives;
};

/// Reduced Harrison H^2(A, K): symmetric f with f(xy,z) = f(x,yz), modulo
/// the coboundaries (x, y) -> -g(xy).
inline HarrisonH2 harrison_h2(const LocalAlgebraBase& a) {
    if (!check_base_axioms(a)) throw InvalidBase("harrison_h2 needs a valid local base");
    const auto r = a.m_dim();
    const auto N = r * r;
    std::vector<Vector> eqs;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            Vector e(N);
            e[i * r + j] = 1;
            e[j * r + i] = -1;
            eqs.push_back(std::move(e));
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                // f(m_i m_j, m_k) - f(m_i, m_j m_k)
                Vector e(N);
                const auto& ij = a.product(i, j);
                const auto& jk = a.product(j, k);
                for (std::size_t p = 0; p < r; ++p) {
                    if (!ij[p].is_zero()) e[p * r + k] += ij[p];
                    if (!jk[p].is_zero()) e[i * r + p] -= jk[p];
                }
                if (!is_zero(e)) eqs.push_back(std::move(e));
            }
    HarrisonH2 h;
    h.cocycles = eqs.empty() ? Subspace::full(N) : kernel_basis(Matrix::from_rows(N, eqs));
    std::vector<Vector> bnd;
    for (std::size_t g = 0; g < r; ++g) {
        Vector v(N);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) v[i * r + j] = -a.product(i, j)[g];
        bnd.push_back(std::move(v));
    }
    h.coboundaries = Subspace::span(N, bnd);
    auto reps = quotient_complement(h.cocycles, h.coboundaries);
    h.dim = reps.dim();
    for (const auto& v : reps.basis_vectors()) h.representatives.emplace_back(r, r, v);
    return h;
}

/// B = A extended by K^s through the cocycles f_1..f_s:
///   n_i n_j = (m_i m_j lifted) + sum_s f_s(m_i, m_j) n_{r+s},  n_{r+s} * m_B = 0.
/// projection: m_B -> m_A (r x (r+s)), injection: K^s -> m_B ((r+s) x s).
struct BaseExtension {
    LocalAlgebraBase source;
    LocalAlgebraBase base;
    Matrix projection;
    Matrix injection;
    std::vector<HarrisonTwoCocycle> cocycles;
};

inline BaseExtension extend_by_cocycles(const LocalAlgebraBase& a, const std::vector<HarrisonTwoCocycle>& fs,
                                        const std::vector<std::string>& new_labels = {}) {
    const auto r = a.m_dim();
    const auto s = fs.size();
    const auto R = r + s;
    for (const auto& f : fs)
        if (f.rows() != r || f.cols() != r || !is_symmetric(f))
            throw InvalidCocycle("extension cocycle must be a symmetric r x r matrix");
    auto table = LocalAlgebraBase::zero_table(R);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            auto& v = table[i * R + j];
            for (std::size_t p = 0; p < r; ++p) v[p] = a.product(i, j)[p];
            for (std::size_t q = 0; q < s; ++q) v[r + q] = fs[q](i, j);
        }
    auto labels = a.labels();
    for (std::size_t q = 0; q < s; ++q)
        labels.push_back(q < new_labels.size() ? new_labels[q] : "n" + std::to_string(r + q + 1));
    auto b = LocalAlgebraBase::unchecked(R, std::move(table), std::move(labels));
    if (!check_base_axioms(b)) throw InvalidCocycle("extension is not an associative commutative local algebra");
    Matrix proj(r, R);
    for (std::size_t i = 0; i < r; ++i) proj(i, i) = 1;
    Matrix inj(R, s);
    for (std::size_t q = 0; q < s; ++q) inj(r + q, q) = 1;
    return {a, std::move(b), std::move(proj), std::move(inj), fs};
}

inline BaseExtension extend_by_cocycle(const LocalAlgebraBase& a, const HarrisonTwoCocycle& f) {
    return extend_by_cocycles(a, {f});
}

} // namespace homdef
