#pragma once

// Small named algebras used by the bundled manifests and the test corpus.

#include "algebra.hpp"

namespace homdef::catalog {

/// [e1, e3] = e2, [e3, e3] = e1 with the multiplicative twisting family
///   alpha(e1) = c^2 e1 + a c e2,  alpha(e2) = c^3 e2,  alpha(e3) = a e1 + b e2 + c e3.
inline HomLeibnizAlgebra l0(const Rational& a, const Rational& b, const Rational& c) {
    auto table = HomLeibnizAlgebra::zero_table(3);
    table[0 * 3 + 2] = {0, 1, 0};
    table[2 * 3 + 2] = {1, 0, 0};
    Matrix alpha = Matrix::from_columns(3, {
        {c * c, a * c, 0},
        {0, c * c * c, 0},
        {a, b, c},
    });
    return HomLeibnizAlgebra::create(3, std::move(table), std::move(alpha));
}

/// The same bracket with alpha = id: an ordinary (right) Leibniz algebra.
inline HomLeibnizAlgebra l0_classical() { return l0(0, 0, 1); }

/// Yau twist of l0 at c = 1.
inline HomLeibnizAlgebra l0_twisted(const Rational& a, const Rational& b) { return yau_twist(l0(a, b, 1)); }

} // namespace homdef::catalog
