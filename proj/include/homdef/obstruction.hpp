#pragma once

// Obstruction theory for deformations over local bases.
//
// The Jacobi defect of the lambda-bracket at m_p is
//   delta psi_p + sum_{i,j} d_ij^p Q(psi_i, psi_j),
// so the deformation equation is delta psi + Q-sum = 0 with no factor 1/2.
// All solving happens inside the equivariant cochain space, and obstruction
// classes are read in a strict-mode degree-3 report.

#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "base.hpp"
#include "cohomology.hpp"
#include "deformation.hpp"

namespace homdef {

/// Q(psi_i, psi_j)(l1,l2,l3) = psi_j(a l1, psi_i(l2,l3)) - psi_j(psi_i(l1,l2), a l3) + psi_j(psi_i(l1,l3), a l2).
inline Cochain quadratic_term(const HomLeibnizAlgebra& alg, const Cochain& psi_i, const Cochain& psi_j) {
    const auto n = alg.dim();
    for (const auto* c : {&psi_i, &psi_j})
        if (c->degree != 2 || c->in_dim != n || c->out_dim != n || c->coeffs.size() != n * n * n)
            throw DimensionMismatch("quadratic_term needs degree-2 cochains L x L -> L");
    auto value = [&](const Cochain& c, std::size_t a, std::size_t b) {
        return Vector(c.coeffs.begin() + (a * n + b) * n, c.coeffs.begin() + (a * n + b + 1) * n);
    };
    Cochain out = Cochain::zero(3, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Vector v = psi_j.evaluate({alg.alpha().column(a), value(psi_i, b, c)});
                v = v - psi_j.evaluate({value(psi_i, a, b), alg.alpha().column(c)});
                v = v + psi_j.evaluate({value(psi_i, a, c), alg.alpha().column(b)});
                std::copy(v.begin(), v.end(), out.coeffs.begin() + ((a * n + b) * n + c) * n);
            }
    return out;
}

/// delta psi_phi + sum_{i,j} phi(m_i m_j) Q(psi_i, psi_j).
inline Cochain deformation_residual(const Deformation& d, std::span<const Rational> phi) {
    validate_shape(d);
    const auto r = d.base.m_dim();
    if (phi.size() != r) throw DimensionMismatch("functional length must equal m_dim");
    auto rep = adjoint_representation(d.algebra);
    Cochain out = apply_differential(d.algebra, rep, deformation_differential(d, phi));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const auto& prod = d.base.product(i, j);
            Rational w = std::inner_product(phi.begin(), phi.end(), prod.begin(), Rational(0));
            if (!w.is_zero()) axpy(out.coeffs, w, quadratic_term(d.algebra, d.psi[i], d.psi[j]).coeffs);
        }
    return out;
}

struct ObstructionClass {
    Cochain cocycle;
    Vector class_vector;
    bool is_zero = true;
};

inline void require_strict_h3(const CohomologyReport& h3, std::size_t n) {
    if (h3.degree != 3 || h3.in_dim != n || h3.out_dim != n)
        throw InvalidArgument("obstruction classes need the degree-3 adjoint cohomology report");
    if (h3.mode != CoboundaryMode::strict)
        throw InvalidArgument("obstruction classes are read in strict mode; paper-example H^3 is not used here");
}

inline ObstructionClass make_obstruction_class(const HomLeibnizAlgebra& alg, const CohomologyReport& h3, Cochain phi) {
    auto rep = adjoint_representation(alg);
    if (!is_zero(apply_differential(alg, rep, phi).coeffs))
        throw InvalidCocycle("obstruction cochain is not a 3-cocycle");
    ObstructionClass oc;
    oc.class_vector = h3.class_coordinates(phi);
    oc.is_zero = is_zero(oc.class_vector);
    oc.cocycle = std::move(phi);
    return oc;
}

/// Equivariant chi with delta chi = target, if one exists. Free coordinates are 0.
inline std::optional<Cochain> solve_coboundary(const HomLeibnizAlgebra& alg, const Cochain& target) {
    auto rep = adjoint_representation(alg);
    const auto n = alg.dim();
    auto E = equivariant_cochain_basis(alg, rep, 2).basis;
    Matrix D = differential_matrix(alg, rep, 2);
    std::vector<Vector> cols;
    for (const auto& b : E.basis_vectors()) cols.push_back(D * b);
    Matrix A = Matrix::from_columns(target.coeffs.size(), cols);
    if (cols.empty()) {
        if (is_zero(target.coeffs)) return Cochain::zero(2, n, n);
        return std::nullopt;
    }
    auto y = solve_linear(A, target.coeffs);
    if (!y) return std::nullopt;
    Cochain chi = Cochain::zero(2, n, n);
    const auto basis = E.basis_vectors();
    for (std::size_t s = 0; s < basis.size(); ++s)
        if (!(*y)[s].is_zero()) axpy(chi.coeffs, (*y)[s], basis[s]);
    return chi;
}

/// Given psi_1..psi_k over K[t]/(t^{k+1}), either psi_{k+1} with delta psi_{k+1} = -R,
/// R = sum_{i+j=k+1} Q(psi_i, psi_j), or the nonzero class of R.
inline std::variant<Cochain, ObstructionClass> extend_one_parameter(const HomLeibnizAlgebra& alg,
                                                                    const CohomologyReport& h3,
                                                                    const std::vector<Cochain>& psi) {
    const auto n = alg.dim();
    require_strict_h3(h3, n);
    const auto k = psi.size();
    if (k == 0) throw InvalidArgument("extend_one_parameter needs at least psi_1");
    Deformation d{alg, truncated_polynomial_base(k), psi};
    auto defects = check_deformation(d);
    if (!defects.empty()) throw NotADeformation(defects.front().describe(d.base));
    Cochain R = Cochain::zero(3, n, n);
    for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t j = k + 1 - i;
        if (j >= 1 && j <= k) R = R + quadratic_term(alg, psi[i - 1], psi[j - 1]);
    }
    if (auto chi = solve_coboundary(alg, Rational(-1) * R)) return *chi;
    auto oc = make_obstruction_class(alg, h3, std::move(R));
    if (oc.is_zero) throw ObstructedEverywhere("quadratic term has zero class but no equivariant primitive");
    return oc;
}

/// Lifts d along ext (one new direction n_{r+1}) with psi_{r+1} = chi and returns the
/// class of the n_{r+1} coefficient of the lifted Jacobi defect.
inline ObstructionClass obstruction_class(const Deformation& d, const BaseExtension& ext, const CohomologyReport& h3,
                                          const std::optional<Cochain>& chi = std::nullopt) {
    validate_shape(d);
    const auto n = d.algebra.dim();
    require_strict_h3(h3, n);
    const auto r = d.base.m_dim();
    if (!(ext.source == d.base) || ext.base.m_dim() != r + 1 || ext.injection.cols() != 1)
        throw IncompatibleExtension("extension must add one direction to the deformation base");
    Deformation lifted{d.algebra, ext.base, d.psi};
    lifted.psi.push_back(chi ? *chi : Cochain::zero(2, n, n));
    validate_shape(lifted);
    auto table = lambda_jacobi_table(lifted);
    Cochain phi = Cochain::zero(3, n, n);
    for (std::size_t t = 0; t < table.size(); ++t) {
        auto row = table[t].row(r + 1);
        std::copy(row.begin(), row.end(), phi.coeffs.begin() + t * n);
    }
    return make_obstruction_class(d.algebra, h3, std::move(phi));
}

/// Class of sum_{i,j} f_ij (Q(mu_i, mu_j) + Q(mu_j, mu_i)), built from quadratic_term alone.
inline Vector symmetric_pairing_class(const HomLeibnizAlgebra& alg, const CohomologyReport& h3,
                                      const std::vector<Cochain>& mu, const HarrisonTwoCocycle& f) {
    const auto n = alg.dim();
    require_strict_h3(h3, n);
    Cochain acc = Cochain::zero(3, n, n);
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = 0; j < mu.size(); ++j) {
            if (f(i, j).is_zero()) continue;
            acc = acc + f(i, j) * (quadratic_term(alg, mu[i], mu[j]) + quadratic_term(alg, mu[j], mu[i]));
        }
    return make_obstruction_class(alg, h3, std::move(acc)).class_vector;
}

/// d lambda : (m/m^2)' -> H^2, column c = class of psi_{lambda, xi_c}.
inline Matrix action_differential(const Deformation& d, const CohomologyReport& h2) {
    auto tangent = harrison_h1(d.base);
    Matrix out(h2.h_dim(), tangent.dim);
    for (std::size_t c = 0; c < tangent.dim; ++c) {
        auto coords = h2.class_coordinates(deformation_differential(d, tangent.functionals[c]));
        for (std::size_t h = 0; h < coords.size(); ++h) out(h, c) = coords[h];
    }
    return out;
}

struct VersalStepResult {
    HarrisonH2 harrison;
    std::vector<ObstructionClass> obstruction_table;  // one per Harrison representative
    Matrix obstruction_map;                           // w: H^2_Harr -> H^3, h3.h_dim x harrison.dim
    std::vector<Vector> kernel_classes;               // basis of ker w in Harrison coordinates
    std::vector<HarrisonTwoCocycle> kernel_cocycles;  // F_s = sum_c kernel_classes[s][c] f_c
    BaseExtension extension;                          // C_{k+1} -> C_k with p and i
    LocalAlgebraBase next_base;
    Deformation next_deformation;
};

/// One versal step from a base with m^2 = 0 (the C_1 case).
inline VersalStepResult versal_step(const HomLeibnizAlgebra& alg, const CohomologyReport& h3, const Deformation& d) {
    validate_shape(d);
    const auto n = alg.dim();
    require_strict_h3(h3, n);
    if (!d.base.has_zero_square())
        throw UnsupportedBase("versal_step is implemented only from bases with m^2 = 0");
    auto defects = check_deformation(d);
    if (!defects.empty()) throw NotADeformation(defects.front().describe(d.base));

    VersalStepResult res;
    res.harrison = harrison_h2(d.base);
    const auto hd = res.harrison.dim;
    res.obstruction_map = Matrix(h3.h_dim(), hd);
    for (std::size_t c = 0; c < hd; ++c) {
        auto ext = extend_by_cocycle(d.base, res.harrison.representatives[c]);
        res.obstruction_table.push_back(obstruction_class(d, ext, h3));
        const auto& v = res.obstruction_table.back().class_vector;
        for (std::size_t h = 0; h < v.size(); ++h) res.obstruction_map(h, c) = v[h];
    }
    res.kernel_classes = kernel_basis(res.obstruction_map).basis_vectors();
    const auto r = d.base.m_dim();
    for (const auto& kappa : res.kernel_classes) {
        Matrix F(r, r);
        for (std::size_t c = 0; c < hd; ++c)
            if (!kappa[c].is_zero()) F = F + kappa[c] * res.harrison.representatives[c];
        res.kernel_cocycles.push_back(std::move(F));
    }
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < res.kernel_cocycles.size(); ++s) labels.push_back("h" + std::to_string(s + 1));
    res.extension = extend_by_cocycles(d.base, res.kernel_cocycles, labels);
    res.next_base = res.extension.base;

    res.next_deformation = {alg, res.next_base, d.psi};
    for (const auto& F : res.kernel_cocycles) {
        Cochain target = Cochain::zero(3, n, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (!F(i, j).is_zero()) axpy(target.coeffs, -F(i, j), quadratic_term(alg, d.psi[i], d.psi[j]).coeffs);
        auto chi = solve_coboundary(alg, target);
        if (!chi) throw ObstructedEverywhere("kernel class of w has no equivariant primitive");
        res.next_deformation.psi.push_back(std::move(*chi));
    }
    auto next_defects = check_deformation(res.next_deformation);
    if (!next_defects.empty())
        throw ObstructedEverywhere("extended deformation fails: " + next_defects.front().describe(res.next_base));
    return res;
}

/// p o i = 0, p surjective onto the old base, and push_out along p recovers d exactly.
inline bool versal_step_invariants_hold(const VersalStepResult& res, const Deformation& d) {
    const auto& ext = res.extension;
    if (!(ext.projection * ext.injection).is_zero()) return false;
    if (rank(ext.projection) != d.base.m_dim()) return false;
    if (rank(ext.injection) != res.kernel_cocycles.size()) return false;
    BaseMorphism p{res.next_base, d.base, ext.projection};
    if (!is_multiplicative(p)) return false;
    auto back = push_out(res.next_deformation, p);
    return back.base == d.base && back.psi == d.psi && is_deformation(res.next_deformation);
}

} // namespace homdef
