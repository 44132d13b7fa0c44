#pragma once

// The cochain complex C^n(L, M) of a multiplicative Hom-Leibniz algebra with
// coefficients in a representation, its differential, and cohomology reports.
//
// A degree-n cochain is stored as a flat vector of length dim(L)^n * dim(M):
// the coefficient of m_k in phi(e_{i1}, ..., e_{in}) lives at
//   flat = lex(i1, ..., in) * dim(M) + k.
// This order is frozen; golden files depend on it.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "exactla.hpp"

namespace homdef {

struct Cochain {
    std::size_t degree = 0;
    std::size_t in_dim = 0;   // dim L
    std::size_t out_dim = 0;  // dim M
    Vector coeffs;

    static Cochain zero(std::size_t degree, std::size_t in_dim, std::size_t out_dim);
    static Cochain from_flat(std::size_t degree, std::size_t in_dim, std::size_t out_dim, Vector coeffs);

    std::size_t size() const { return coeffs.size(); }

    /// phi(v_1, ..., v_n) by multilinear extension.
    Vector evaluate(const std::vector<Vector>& args) const;

    friend bool operator==(const Cochain&, const Cochain&) = default;
};

inline std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::size_t cochain_space_dim(std::size_t degree, std::size_t in_dim, std::size_t out_dim) {
    return ipow(in_dim, degree) * out_dim;
}

inline Cochain Cochain::zero(std::size_t degree, std::size_t in_dim, std::size_t out_dim) {
    return {degree, in_dim, out_dim, Vector(cochain_space_dim(degree, in_dim, out_dim))};
}

inline Cochain Cochain::from_flat(std::size_t degree, std::size_t in_dim, std::size_t out_dim, Vector coeffs) {
    if (coeffs.size() != cochain_space_dim(degree, in_dim, out_dim))
        throw DimensionMismatch("cochain coefficient count");
    return {degree, in_dim, out_dim, std::move(coeffs)};
}

/// Lexicographic index of a tuple of basis indices.
inline std::size_t tuple_index(std::span<const std::size_t> t, std::size_t n) {
    std::size_t r = 0;
    for (auto i : t) r = r * n + i;
    return r;
}

inline std::vector<std::size_t> tuple_of_index(std::size_t idx, std::size_t len, std::size_t n) {
    std::vector<std::size_t> t(len);
    for (std::size_t p = len; p-- > 0;) {
        t[p] = idx % n;
        idx /= n;
    }
    return t;
}

namespace detail {

/// Calls f(tuple, coefficient) for every index tuple in the support of the
/// tensor product v_1 (x) ... (x) v_n.
template <class F>
void for_each_support(const std::vector<Vector>& args, F&& f) {
    const std::size_t len = args.size();
    std::vector<std::vector<std::size_t>> supp(len);
    for (std::size_t p = 0; p < len; ++p)
        for (std::size_t i = 0; i < args[p].size(); ++i)
            if (!args[p][i].is_zero()) supp[p].push_back(i);
    for (const auto& s : supp)
        if (s.empty()) return;
    std::vector<std::size_t> pos(len, 0), tuple(len);
    while (true) {
        Rational coef(1);
        for (std::size_t p = 0; p < len; ++p) {
            tuple[p] = supp[p][pos[p]];
            coef *= args[p][tuple[p]];
        }
        f(std::span<const std::size_t>(tuple), coef);
        std::size_t p = len;
        while (p > 0) {
            --p;
            if (++pos[p] < supp[p].size()) break;
            pos[p] = 0;
            if (p == 0) return;
        }
        if (len == 0) return;
    }
}

} // namespace detail

inline Vector Cochain::evaluate(const std::vector<Vector>& args) const {
    if (args.size() != degree) throw DimensionMismatch("cochain arity");
    for (const auto& a : args)
        if (a.size() != in_dim) throw DimensionMismatch("cochain argument length");
    Vector out(out_dim);
    if (degree == 0) {
        for (std::size_t k = 0; k < out_dim; ++k) out[k] = coeffs[k];
        return out;
    }
    detail::for_each_support(args, [&](std::span<const std::size_t> t, const Rational& c) {
        std::size_t base = tuple_index(t, in_dim) * out_dim;
        for (std::size_t k = 0; k < out_dim; ++k)
            if (!coeffs[base + k].is_zero()) out[k] += c * coeffs[base + k];
    });
    return out;
}

inline Cochain operator+(Cochain a, const Cochain& b) {
    if (a.size() != b.size() || a.degree != b.degree) throw DimensionMismatch("cochain sum");
    axpy(a.coeffs, Rational(1), b.coeffs);
    return a;
}
inline Cochain operator-(Cochain a, const Cochain& b) {
    if (a.size() != b.size() || a.degree != b.degree) throw DimensionMismatch("cochain difference");
    axpy(a.coeffs, Rational(-1), b.coeffs);
    return a;
}
inline Cochain operator*(const Rational& s, Cochain a) {
    for (auto& x : a.coeffs) x *= s;
    return a;
}

/// Linear operator phi -> A o phi - phi o alpha^{x n} on the flat tensor space.
inline Matrix equivariance_operator(const HomLeibnizAlgebra& alg, const Representation& rep, std::size_t degree) {
    const std::size_t n = alg.dim(), m = rep.module_dim;
    const std::size_t tuples = ipow(n, degree);
    const std::size_t N = tuples * m;
    Matrix op(N, N);
    const Matrix& al = alg.alpha();
    for (std::size_t t = 0; t < tuples; ++t) {
        auto tup = tuple_of_index(t, degree, n);
        // A o phi(e_t)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t a = 0; a < m; ++a)
                if (!rep.A(b, a).is_zero()) op(t * m + b, t * m + a) += rep.A(b, a);
        // phi(alpha e_t1, ..., alpha e_tn)
        std::vector<Vector> args;
        for (auto i : tup) args.push_back(al.column(i));
        detail::for_each_support(args, [&](std::span<const std::size_t> s, const Rational& c) {
            std::size_t si = tuple_index(s, n);
            for (std::size_t b = 0; b < m; ++b) op(t * m + b, si * m + b) -= c;
        });
    }
    return op;
}

struct CochainSpace {
    std::size_t degree = 0;
    Subspace basis;
};

/// Solution space of A o phi = phi o alpha^{x n}.
inline CochainSpace equivariant_cochain_basis(const HomLeibnizAlgebra& alg, const Representation& rep,
                                              std::size_t degree) {
    if (degree == 0) throw InvalidArgument("degree-0 cochains are not part of the complex");
    if (!check_multiplicative(alg)) throw InvalidAlgebra("cohomology requires a multiplicative algebra");
    return {degree, kernel_basis(equivariance_operator(alg, rep, degree))};
}

/// Matrix of delta^n : C^n -> C^{n+1} on the full tensor spaces.
///
///   delta phi(x_1..x_{n+1}) = [alpha^{n-1} x_1, phi(x_2..x_{n+1})]
///     + sum_{i=2}^{n+1} (-1)^i [phi(x_1..^x_i..x_{n+1}), alpha^{n-1} x_i]
///     + sum_{i<j} (-1)^{j+1} phi(alpha x_1, .., [x_i, x_j], .., ^x_j, .., alpha x_{n+1})
///
/// For n = 1 this is [x, f y] + [f x, y] - f[x, y].
inline Matrix differential_matrix(const HomLeibnizAlgebra& alg, const Representation& rep, std::size_t degree) {
    if (degree == 0) throw InvalidArgument("degree-0 cochains are not part of the complex");
    const std::size_t n = alg.dim(), m = rep.module_dim;
    if (rep.left.size() != n * m || rep.right.size() != n * m) throw DimensionMismatch("representation shape");
    const std::size_t out_tuples = ipow(n, degree + 1);
    Matrix D(out_tuples * m, ipow(n, degree) * m);
    const Matrix twist = alg.alpha().power(static_cast<unsigned>(degree - 1));
    const Matrix& al = alg.alpha();

    for (std::size_t t = 0; t < out_tuples; ++t) {
        const auto x = tuple_of_index(t, degree + 1, n);
        const std::size_t row0 = t * m;

        // [alpha^{n-1} x_1, phi(x_2..)]
        {
            std::vector<std::size_t> rest(x.begin() + 1, x.end());
            const std::size_t col0 = tuple_index(rest, n) * m;
            const Vector w = twist.column(x[0]);
            for (std::size_t a = 0; a < m; ++a) {
                Vector img = rep.act_left(w, unit_vector(m, a));
                for (std::size_t b = 0; b < m; ++b)
                    if (!img[b].is_zero()) D(row0 + b, col0 + a) += img[b];
            }
        }
        // (-1)^i [phi(.. ^x_i ..), alpha^{n-1} x_i], i = 2..n+1 (1-based)
        for (std::size_t i = 1; i <= degree; ++i) {
            const Rational sign = ((i + 1) % 2 == 0) ? Rational(1) : Rational(-1);
            std::vector<std::size_t> rest;
            for (std::size_t p = 0; p <= degree; ++p)
                if (p != i) rest.push_back(x[p]);
            const std::size_t col0 = tuple_index(rest, n) * m;
            const Vector w = twist.column(x[i]);
            for (std::size_t a = 0; a < m; ++a) {
                Vector img = rep.act_right(unit_vector(m, a), w);
                for (std::size_t b = 0; b < m; ++b)
                    if (!img[b].is_zero()) D(row0 + b, col0 + a) += sign * img[b];
            }
        }
        // (-1)^{j+1} phi(alpha x_1, .., [x_i,x_j], .., ^x_j, ..)
        for (std::size_t i = 0; i <= degree; ++i)
            for (std::size_t j = i + 1; j <= degree; ++j) {
                const Vector& br = alg.basis_bracket(x[i], x[j]);
                if (is_zero(br)) continue;
                const Rational sign = ((j + 1 + 1) % 2 == 0) ? Rational(1) : Rational(-1);
                std::vector<Vector> args;
                for (std::size_t p = 0; p <= degree; ++p) {
                    if (p == j) continue;
                    args.push_back(p == i ? br : al.column(x[p]));
                }
                detail::for_each_support(args, [&](std::span<const std::size_t> s, const Rational& c) {
                    const std::size_t col0 = tuple_index(s, n) * m;
                    for (std::size_t b = 0; b < m; ++b) D(row0 + b, col0 + b) += sign * c;
                });
            }
    }
    return D;
}

inline Cochain apply_differential(const HomLeibnizAlgebra& alg, const Representation& rep, const Cochain& phi) {
    if (phi.in_dim != alg.dim() || phi.out_dim != rep.module_dim)
        throw DimensionMismatch("cochain does not match algebra/representation");
    Matrix D = differential_matrix(alg, rep, phi.degree);
    if (D.cols() != phi.size()) throw DimensionMismatch("cochain size");
    return Cochain::from_flat(phi.degree + 1, phi.in_dim, phi.out_dim, D * phi.coeffs);
}

/// How B^n is formed.
///   strict        : B^n = delta(equivariant C^{n-1})
///   paper_example : B^n = delta(all of Hom(L^{n-1}, M)) intersected with the
///                   equivariant cocycles Z^n
enum class CoboundaryMode { strict, paper_example };

inline std::string_view to_string(CoboundaryMode m) {
    return m == CoboundaryMode::strict ? "strict" : "paper-example";
}

inline CoboundaryMode parse_mode(std::string_view s) {
    if (s == "strict") return CoboundaryMode::strict;
    if (s == "paper-example" || s == "paper_example") return CoboundaryMode::paper_example;
    throw InvalidArgument("unknown coboundary mode '" + std::string(s) + "'");
}

struct CohomologyReport {
    std::size_t degree = 0;
    CoboundaryMode mode = CoboundaryMode::strict;
    std::size_t in_dim = 0, out_dim = 0;
    Subspace equivariant;
    Subspace Z;
    Subspace B;
    Subspace H;  // span of the canonical representatives
    std::vector<Cochain> H_reps;

    std::size_t z_dim() const { return Z.dim(); }
    std::size_t b_dim() const { return B.dim(); }
    std::size_t h_dim() const { return H.dim(); }

    bool is_cocycle(const Cochain& phi) const { return Z.contains(phi.coeffs); }
    bool is_coboundary(const Cochain& phi) const { return B.contains(phi.coeffs); }

    /// Coordinates of the class of a cocycle in the H_reps basis.
    Vector class_coordinates(const Cochain& phi) const {
        if (!Z.contains(phi.coeffs)) throw InvalidCocycle("not a cocycle of degree " + std::to_string(degree));
        // phi - sum c_i h_i lies in B; H reps vanish on B's pivot coordinates.
        Vector r = B.reduce(phi.coeffs);
        auto c = H.coordinates(r);
        if (!c) throw InvalidCocycle("class decomposition failed");
        return *c;
    }
};

inline CohomologyReport cohomology_report(const HomLeibnizAlgebra& alg, const Representation& rep,
                                          std::size_t degree, CoboundaryMode mode) {
    if (degree == 0) throw InvalidArgument("degree-0 cohomology is not computed");
    if (!is_valid(alg)) throw InvalidAlgebra("cohomology requires a multiplicative Hom-Leibniz algebra");
    CohomologyReport rpt;
    rpt.degree = degree;
    rpt.mode = mode;
    rpt.in_dim = alg.dim();
    rpt.out_dim = rep.module_dim;
    rpt.equivariant = equivariant_cochain_basis(alg, rep, degree).basis;
    const Matrix D = differential_matrix(alg, rep, degree);
    const std::size_t next = cochain_space_dim(degree + 1, alg.dim(), rep.module_dim);
    rpt.Z = preimage(D, rpt.equivariant, Subspace(next));

    const std::size_t here = cochain_space_dim(degree, alg.dim(), rep.module_dim);
    if (degree == 1) {
        rpt.B = Subspace(here);
    } else {
        const Matrix Dprev = differential_matrix(alg, rep, degree - 1);
        if (mode == CoboundaryMode::strict) {
            rpt.B = image(Dprev, equivariant_cochain_basis(alg, rep, degree - 1).basis);
        } else {
            rpt.B = intersection(column_space(Dprev), rpt.Z);
        }
    }
    rpt.H = quotient_complement(rpt.Z, rpt.B);
    for (const auto& v : rpt.H.basis_vectors())
        rpt.H_reps.push_back(Cochain::from_flat(degree, alg.dim(), rep.module_dim, v));
    return rpt;
}

// ---------------------------------------------------------------------------
// E_rs display for degree-2 cochains: entry (r, s), s = dim*(i-1) + j, is the
// e_r coefficient of phi(e_i, e_j). Indices are 1-based like the display.

inline Matrix cochain_to_display(const Cochain& phi) {
    if (phi.degree != 2 || phi.in_dim != phi.out_dim)
        throw DimensionMismatch("display form needs a degree-2 cochain with M = L");
    const std::size_t n = phi.in_dim;
    Matrix M(n, n * n);
    for (std::size_t pair = 0; pair < n * n; ++pair)
        for (std::size_t r = 0; r < n; ++r) M(r, pair) = phi.coeffs[pair * n + r];
    return M;
}

inline Cochain display_to_cochain(const Matrix& M) {
    const std::size_t n = M.rows();
    if (M.cols() != n * n) throw DimensionMismatch("display matrix must be n x n^2");
    Cochain phi = Cochain::zero(2, n, n);
    for (std::size_t pair = 0; pair < n * n; ++pair)
        for (std::size_t r = 0; r < n; ++r) phi.coeffs[pair * n + r] = M(r, pair);
    return phi;
}

/// Elementary cochain E_rs (1-based r, s) for dim(L) = dim(M) = n.
inline Cochain elementary_cochain(std::size_t n, std::size_t r, std::size_t s) {
    if (r < 1 || r > n || s < 1 || s > n * n) throw DimensionMismatch("E_rs index out of range");
    Cochain phi = Cochain::zero(2, n, n);
    phi.coeffs[(s - 1) * n + (r - 1)] = 1;
    return phi;
}

/// Parses "E29" (single digits) or "E2,9" into (r, s).
inline std::pair<std::size_t, std::size_t> parse_elementary_label(std::string_view label) {
    if (label.size() < 3 || label[0] != 'E') throw ParseError("bad E_rs label");
    std::string body(label.substr(1));
    auto comma = body.find(',');
    try {
        if (comma != std::string::npos)
            return {std::stoul(body.substr(0, comma)), std::stoul(body.substr(comma + 1))};
        if (body.size() != 2) throw ParseError("ambiguous E_rs label; use E<r>,<s>");
        return {static_cast<std::size_t>(body[0] - '0'), static_cast<std::size_t>(body[1] - '0')};
    } catch (const std::logic_error&) {
        throw ParseError("bad E_rs label");
    }
}

inline Subspace span_of_cochains(const std::vector<Cochain>& cs, std::size_t ambient) {
    std::vector<Vector> v;
    for (const auto& c : cs) v.push_back(c.coeffs);
    return Subspace::span(ambient, v);
}

} // namespace homdef
