#include <gtest/gtest.h>

#include "support.hpp"

using namespace homdef;
using homdef::corpus::Gen;

namespace {

CohomologyReport h2_of(const HomLeibnizAlgebra& alg, CoboundaryMode mode = CoboundaryMode::strict) {
    return cohomology_report(alg, adjoint_representation(alg), 2, mode);
}

Cochain random_cocycle(Gen& g, const CohomologyReport& h2) {
    Vector v(h2.Z.ambient_dim());
    for (const auto& b : h2.Z.basis_vectors()) axpy(v, g.rational(), b);
    return Cochain::from_flat(2, h2.in_dim, h2.out_dim, std::move(v));
}

Cochain random_coboundary(Gen& g, const HomLeibnizAlgebra& alg) {
    return apply_differential(alg, adjoint_representation(alg), corpus::random_equivariant(g, alg, 1));
}

} // namespace

TEST(CheckDeformation, TrivialFamilyHasNoDefects) {
    auto alg = catalog::l0(1, 0, 1);
    Deformation d{alg, truncated_polynomial_base(3), std::vector<Cochain>(3, Cochain::zero(2, 3, 3))};
    EXPECT_TRUE(check_deformation(d).empty());
}

TEST(CheckDeformation, InfinitesimalCocyclesPass) {
    Gen g(51);
    for (int trial = 0; trial < 10; ++trial) {
        auto [family, alg] = corpus::random_algebra(g);
        auto h2 = h2_of(alg);
        Deformation d{alg, truncated_polynomial_base(1), {random_cocycle(g, h2)}};
        EXPECT_TRUE(is_deformation(d)) << family;
    }
}

TEST(CheckDeformation, NonCocycleFailsAtUnitOrder) {
    auto alg = catalog::l0(1, 0, 1);
    auto h2 = h2_of(alg);
    Gen g(52);
    Cochain psi = corpus::random_equivariant(g, alg, 2);
    while (h2.is_cocycle(psi)) psi = corpus::random_equivariant(g, alg, 2);
    auto defects = check_deformation({alg, truncated_polynomial_base(1), {psi}});
    ASSERT_FALSE(defects.empty());
    for (const auto& dft : defects) {
        EXPECT_EQ(dft.kind, DeformationDefect::Kind::hom_jacobi);
        EXPECT_EQ(dft.coefficient, 1u);  // the t coefficient
    }
}

TEST(CheckDeformation, NonEquivariantIsReported) {
    auto alg = catalog::l0(1, 0, 1);
    auto psi = elementary_cochain(3, 2, 6);
    EXPECT_FALSE(equivariant_cochain_basis(alg, adjoint_representation(alg), 2).basis.contains(psi.coeffs));
    auto defects = check_deformation({alg, truncated_polynomial_base(1), {psi}});
    ASSERT_FALSE(defects.empty());
    EXPECT_EQ(defects.front().kind, DeformationDefect::Kind::equivariance);
    EXPECT_NE(defects.front().describe(truncated_polynomial_base(1)).find("not equivariant"), std::string::npos);
}

TEST(CheckDeformation, SecondOrderDefectSitsAtTSquared) {
    // A cocycle whose quadratic term is not cancelled by psi_2 = 0.
    auto alg = catalog::l0_twisted(1, 0);
    auto h2 = h2_of(alg);
    bool found = false;
    for (const auto& mu : h2.H_reps) {
        Deformation d{alg, truncated_polynomial_base(2), {mu, Cochain::zero(2, 3, 3)}};
        auto defects = check_deformation(d);
        if (defects.empty()) continue;
        found = true;
        for (const auto& dft : defects) EXPECT_EQ(dft.coefficient, 2u);
        EXPECT_NE(defects.front().describe(d.base).find("t^2"), std::string::npos);
    }
    EXPECT_TRUE(found);
}

TEST(CheckDeformation, ShapeMismatch) {
    auto alg = catalog::l0(1, 0, 1);
    EXPECT_THROW(check_deformation({alg, truncated_polynomial_base(2), {Cochain::zero(2, 3, 3)}}), ShapeMismatch);
    EXPECT_THROW(check_deformation({alg, truncated_polynomial_base(1), {Cochain::zero(1, 3, 3)}}), ShapeMismatch);
}

TEST(DeformationDifferential, LinearAndCocycleValued) {
    Gen g(53);
    auto alg = catalog::l0(1, 0, 0);
    auto h2 = h2_of(alg);
    auto eta = universal_infinitesimal(alg, h2);
    const auto r = eta.base.m_dim();
    EXPECT_TRUE(is_zero(deformation_differential(eta, Vector(r)).coeffs));
    for (std::size_t j = 0; j < r; ++j) EXPECT_EQ(deformation_differential(eta, unit_vector(r, j)), eta.psi[j]);
    for (int trial = 0; trial < 5; ++trial) {
        Vector x = g.vector(r), y = g.vector(r);
        auto a = g.rational();
        EXPECT_EQ(deformation_differential(eta, x + scaled(y, a)),
                  deformation_differential(eta, x) + a * deformation_differential(eta, y));
        EXPECT_TRUE(h2.is_cocycle(deformation_differential(eta, x)));
    }
}

TEST(UniversalInfinitesimal, TrivialWhenH2Vanishes) {
    auto alg = catalog::l0(1, 1, 2);
    auto h2 = h2_of(alg);
    ASSERT_EQ(h2.h_dim(), 0u);
    auto eta = universal_infinitesimal(alg, h2);
    EXPECT_EQ(eta.base.m_dim(), 0u);
    EXPECT_TRUE(eta.psi.empty());
}

TEST(UniversalInfinitesimal, ExampleThreeOneDimensional) {
    // In the literal-coboundary mode the single class is represented off the E26 direction
    // because E26 is not equivariant; see the README notes.
    auto alg = catalog::l0_twisted(1, 0);
    auto h2 = h2_of(alg, CoboundaryMode::paper_example);
    ASSERT_EQ(h2.h_dim(), 1u);
    auto eta = universal_infinitesimal(alg, h2);
    EXPECT_EQ(eta.base, c1_base(1));
    EXPECT_TRUE(is_deformation(eta));
}

TEST(UniversalInfinitesimal, ExampleTwoFamily) {
    auto alg = catalog::l0(1, 0, 0);
    for (auto mode : {CoboundaryMode::strict, CoboundaryMode::paper_example}) {
        auto h2 = h2_of(alg, mode);
        auto eta = universal_infinitesimal(alg, h2);
        EXPECT_EQ(eta.base.m_dim(), h2.h_dim());
        EXPECT_EQ(eta.psi, h2.H_reps);
        EXPECT_TRUE(is_deformation(eta));
    }
    EXPECT_THROW(universal_infinitesimal(alg, cohomology_report(alg, adjoint_representation(alg), 1, CoboundaryMode::strict)),
                 InvalidAlgebra);
}

TEST(PushOut, IdentityZeroAndFunctoriality) {
    Gen g(54);
    auto alg = catalog::l0(1, 0, 0);
    auto eta = universal_infinitesimal(alg, h2_of(alg));
    const auto h = eta.base.m_dim();
    EXPECT_EQ(push_out(eta, identity_morphism(eta.base)).psi, eta.psi);

    auto zero = push_out(eta, {eta.base, c1_base(2), Matrix(2, h)});
    for (const auto& c : zero.psi) EXPECT_TRUE(is_zero(c.coeffs));

    for (int trial = 0; trial < 10; ++trial) {
        auto b1 = c1_base(3), b2 = c1_base(2);
        BaseMorphism f1{eta.base, b1, g.matrix(3, h)}, f2{b1, b2, g.matrix(2, 3)};
        auto lhs = push_out(eta, compose(f2, f1));
        auto rhs = push_out(push_out(eta, f1), f2);
        EXPECT_EQ(lhs.psi, rhs.psi);
        EXPECT_TRUE(is_deformation(lhs));
    }
    EXPECT_THROW(push_out(eta, identity_morphism(c1_base(h + 1))), IncompatibleBases);
}

TEST(PushOut, ExampleThreeToOneParameter) {
    auto alg = catalog::l0_twisted(1, 0);
    auto h2 = h2_of(alg, CoboundaryMode::paper_example);
    auto eta = universal_infinitesimal(alg, h2);
    auto one = push_out(eta, make_base_morphism(eta.base, truncated_polynomial_base(1), Matrix{{1}}));
    EXPECT_EQ(one.psi.front(), h2.H_reps.front());
    EXPECT_TRUE(is_deformation(one));
}

TEST(PushOut, FromPolynomialBase) {
    // t -> t^2 is an algebra map K[t]/(t^3) -> K[t]/(t^5).
    auto src = truncated_polynomial_base(2), tgt = truncated_polynomial_base(4);
    Matrix m(4, 2);
    m(1, 0) = 1;  // t -> t^2
    m(3, 1) = 1;  // t^2 -> t^4
    auto phi = make_base_morphism(src, tgt, m);
    EXPECT_TRUE(is_multiplicative(phi));
    Matrix bad(4, 2);
    bad(0, 0) = 1;  // t -> t but t^2 -> 0
    EXPECT_THROW(make_base_morphism(src, tgt, bad), InvalidBase);
}

TEST(Classify, RoundTripsRandomMorphisms) {
    Gen g(55);
    auto alg = catalog::l0(1, 0, 0);
    auto h2 = h2_of(alg);
    auto eta = universal_infinitesimal(alg, h2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = static_cast<std::size_t>(g.integer(1, 4));
        BaseMorphism phi{eta.base, c1_base(s), g.matrix(s, eta.base.m_dim())};
        auto back = classify_infinitesimal(push_out(eta, phi), h2);
        EXPECT_EQ(back.matrix, phi.matrix);
        EXPECT_EQ(back.source, eta.base);
    }
}

TEST(Classify, TrivialAndCoboundaryInvariance) {
    Gen g(56);
    auto alg = catalog::l0(1, 0, 1);
    auto h2 = h2_of(alg);
    auto eta = universal_infinitesimal(alg, h2);
    Deformation trivial{alg, c1_base(2), std::vector<Cochain>(2, Cochain::zero(2, 3, 3))};
    EXPECT_TRUE(classify_infinitesimal(trivial, h2).matrix.is_zero());
    for (int trial = 0; trial < 5; ++trial) {
        Deformation d{alg, c1_base(1), {eta.psi.front()}};
        Deformation moved{alg, c1_base(1), {eta.psi.front() + random_coboundary(g, alg)}};
        EXPECT_EQ(classify_infinitesimal(d, h2).matrix, classify_infinitesimal(moved, h2).matrix);
        EXPECT_TRUE(infinitesimally_equivalent(d, moved, h2));
    }
}

TEST(Classify, Errors) {
    auto alg = catalog::l0(1, 0, 1);
    auto h2 = h2_of(alg);
    Deformation higher{alg, truncated_polynomial_base(2), std::vector<Cochain>(2, Cochain::zero(2, 3, 3))};
    EXPECT_THROW(classify_infinitesimal(higher, h2), NotInfinitesimal);
    Gen g(57);
    Cochain psi = corpus::random_equivariant(g, alg, 2);
    while (h2.is_cocycle(psi)) psi = corpus::random_equivariant(g, alg, 2);
    EXPECT_THROW(classify_infinitesimal({alg, c1_base(1), {psi}}, h2), NotADeformation);
}
