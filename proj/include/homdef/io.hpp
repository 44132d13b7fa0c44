#pragma once

// JSON formats for algebras, bases, cochains and deformations. Keys are
// emitted in a fixed order and rationals as canonical "p/q" strings, so equal
// values serialize to identical bytes. Bracket indices are 1-based.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "base.hpp"
#include "cohomology.hpp"
#include "deformation.hpp"
#include "expr.hpp"

namespace homdef::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

/// Accepts "p/q" strings and JSON integers. With params, strings are expressions.
inline Rational rational_from_json(const json& j, const ParameterMap* params = nullptr) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
    const auto& s = j.get_ref<const std::string&>();
    if (params) return evaluate_expression(s, *params);
    return Rational::parse(s);
}

inline json to_json(std::span<const Rational> v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline Vector vector_from_json(const json& j, const ParameterMap* params = nullptr) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    Vector v;
    for (const auto& x : j) v.push_back(rational_from_json(x, params));
    return v;
}

inline json to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
    return a;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const ParameterMap* params = nullptr) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix must have " + std::to_string(rows) + " rows");
    std::vector<Vector> rs;
    for (const auto& row : j) {
        auto v = vector_from_json(row, params);
        if (v.size() != cols) throw ParseError("matrix row must have " + std::to_string(cols) + " entries");
        rs.push_back(std::move(v));
    }
    return Matrix::from_rows(cols, rs);
}

/// Reads a file; parse errors carry line and column.
inline json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

// -- algebras ---------------------------------------------------------------

inline json to_json(const HomLeibnizAlgebra& alg) {
    const auto n = alg.dim();
    json br = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(alg.basis_bracket(i, j)))
                br.push_back(json{{"i", i + 1}, {"j", j + 1}, {"value", to_json(alg.basis_bracket(i, j))}});
    return json{{"dim", n}, {"bracket", br}, {"alpha", to_json(alg.alpha())}};
}

/// True when the description contains an expression that needs parameters.
inline bool is_template(const json& j) {
    bool found = false;
    auto scan = [&](const json& v, auto&& self) -> void {
        if (v.is_string()) {
            for (char c : v.get_ref<const std::string&>())
                if (std::isalpha(static_cast<unsigned char>(c))) found = true;
        } else if (v.is_array() || v.is_object()) {
            for (const auto& x : v) self(x, self);
        }
    };
    if (j.contains("bracket")) scan(j["bracket"], scan);
    if (j.contains("alpha")) scan(j["alpha"], scan);
    return found;
}

/// Literal description from a parametric one; the result has no expressions left.
inline json substitute_parameters(const json& tmpl, const ParameterMap& params) {
    json out = tmpl;
    if (tmpl.contains("bracket"))
        for (auto& e : out["bracket"]) e["value"] = to_json(vector_from_json(e.at("value"), &params));
    if (tmpl.contains("alpha")) {
        json a = json::array();
        for (const auto& row : tmpl["alpha"]) a.push_back(to_json(vector_from_json(row, &params)));
        out["alpha"] = a;
    }
    return out;
}

/// Structure constants and alpha without validation; "yau_twist": true is not applied here.
inline HomLeibnizAlgebra algebra_from_json_unchecked(const json& j, const ParameterMap* params = nullptr) {
    if (!j.is_object() || !j.contains("dim")) throw ParseError("algebra description needs 'dim'");
    const auto n = j.at("dim").get<std::size_t>();
    auto table = HomLeibnizAlgebra::zero_table(n);
    for (const auto& e : j.value("bracket", json::array())) {
        const auto i = e.at("i").get<std::size_t>(), k = e.at("j").get<std::size_t>();
        if (i < 1 || i > n || k < 1 || k > n) throw ParseError("bracket index out of range");
        auto v = vector_from_json(e.at("value"), params);
        if (v.size() != n) throw ParseError("bracket value must have dim entries");
        table[(i - 1) * n + (k - 1)] = std::move(v);
    }
    Matrix alpha = j.contains("alpha") ? matrix_from_json(j["alpha"], n, n, params) : Matrix::identity(n);
    return HomLeibnizAlgebra::unchecked(n, std::move(table), std::move(alpha));
}

/// Validated algebra, applying the Yau twist when requested.
inline HomLeibnizAlgebra algebra_from_json(const json& j, const ParameterMap* params = nullptr) {
    auto raw = algebra_from_json_unchecked(j, params);
    auto alg = HomLeibnizAlgebra::create(raw.dim(), raw.table(), raw.alpha());
    if (j.value("yau_twist", false)) alg = yau_twist(alg);
    return alg;
}

// -- bases ------------------------------------------------------------------

inline json to_json(const LocalAlgebraBase& a) {
    const auto r = a.m_dim();
    json mult = json::array();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (!is_zero(a.product(i, j)))
                mult.push_back(json{{"i", i + 1}, {"j", j + 1}, {"value", to_json(a.product(i, j))}});
    return json{{"m_dim", r}, {"mult", mult}, {"labels", a.labels()}};
}

/// "K", "c1:<d>", "poly:<k>".
inline LocalAlgebraBase canonical_base(const std::string& name) {
    auto colon = name.find(':');
    if (name == "K") return c1_base(0);
    if (colon == std::string::npos) throw ParseError("unknown base name '" + name + "'");
    const auto kind = name.substr(0, colon);
    std::size_t k = 0;
    try {
        k = std::stoul(name.substr(colon + 1));
    } catch (const std::logic_error&) {
        throw ParseError("bad base size in '" + name + "'");
    }
    if (kind == "c1") return c1_base(k);
    if (kind == "poly") return truncated_polynomial_base(k);
    throw ParseError("unknown base name '" + name + "'");
}

inline LocalAlgebraBase base_from_json(const json& j) {
    if (j.is_string()) return canonical_base(j.get<std::string>());
    if (!j.is_object() || !j.contains("m_dim")) throw ParseError("base description needs 'm_dim'");
    const auto r = j.at("m_dim").get<std::size_t>();
    auto table = LocalAlgebraBase::zero_table(r);
    for (const auto& e : j.value("mult", json::array())) {
        const auto i = e.at("i").get<std::size_t>(), k = e.at("j").get<std::size_t>();
        if (i < 1 || i > r || k < 1 || k > r) throw ParseError("mult index out of range");
        auto v = vector_from_json(e.at("value"));
        if (v.size() != r) throw ParseError("mult value must have m_dim entries");
        table[(i - 1) * r + (k - 1)] = std::move(v);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return LocalAlgebraBase::create(r, std::move(table), std::move(labels));
}

// -- cochains ---------------------------------------------------------------

/// "E21 - 2 E13 + 1/2 E29"; terms ordered by (r, s). Degree-2 cochains with M = L only.
inline std::string elementary_expansion(const Cochain& phi) {
    if (phi.degree != 2 || phi.in_dim != phi.out_dim) return {};
    const auto n = phi.in_dim;
    Matrix M = cochain_to_display(phi);
    std::string out;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n * n; ++s) {
            const auto& c = M(r, s);
            if (c.is_zero()) continue;
            std::string label = (r + 1 < 10 && s + 1 < 10)
                                    ? "E" + std::to_string(r + 1) + std::to_string(s + 1)
                                    : "E" + std::to_string(r + 1) + "," + std::to_string(s + 1);
            Rational a = c.sign() < 0 ? -c : c;
            if (out.empty()) out += c.sign() < 0 ? "-" : "";
            else out += c.sign() < 0 ? " - " : " + ";
            if (!a.is_one()) out += a.str() + " ";
            out += label;
        }
    return out.empty() ? "0" : out;
}

/// Flat vector, or the n x n^2 display when M = L and degree 2.
inline json cochain_to_json(const Cochain& phi) {
    if (phi.degree == 2 && phi.in_dim == phi.out_dim) return to_json(cochain_to_display(phi));
    return to_json(phi.coeffs);
}

/// Accepts a flat array, an n x n^2 display, or an object {"E26": "1", ...}.
inline Cochain cochain_from_json(const json& j, std::size_t degree, std::size_t n) {
    if (j.is_object()) {
        if (degree != 2) throw ParseError("E_rs notation is only defined for degree 2");
        Cochain c = Cochain::zero(2, n, n);
        for (const auto& [key, val] : j.items()) {
            auto [r, s] = parse_elementary_label(key);
            axpy(c.coeffs, rational_from_json(val), elementary_cochain(n, r, s).coeffs);
        }
        return c;
    }
    if (j.is_array() && !j.empty() && j.front().is_array()) {
        if (degree != 2) throw ParseError("display form is only defined for degree 2");
        return display_to_cochain(matrix_from_json(j, n, n * n));
    }
    auto v = vector_from_json(j);
    if (v.size() != cochain_space_dim(degree, n, n)) throw ParseError("cochain has the wrong number of coefficients");
    return Cochain::from_flat(degree, n, n, std::move(v));
}

// -- deformations -----------------------------------------------------------

inline json to_json(const Deformation& d) {
    json psi = json::array();
    for (const auto& c : d.psi) psi.push_back(to_json(c.coeffs));
    return json{{"algebra", to_json(d.algebra)}, {"base", to_json(d.base)}, {"psi", psi}};
}

inline Deformation deformation_from_json(const json& j, const HomLeibnizAlgebra& alg, const LocalAlgebraBase& base) {
    Deformation d{alg, base, {}};
    for (const auto& c : j.at("psi")) d.psi.push_back(cochain_from_json(c, 2, alg.dim()));
    validate_shape(d);
    return d;
}

} // namespace homdef::io
