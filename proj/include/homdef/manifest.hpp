#pragma once

// Job manifests: one computation per manifest, producing a deterministic
// JSON report and a process exit status (0 ok, 1 invalid input, 2 obstructed).

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>

#include "io.hpp"
#include "obstruction.hpp"

namespace homdef {

inline constexpr const char* l0_template_json = R"({
  "dim": 3,
  "bracket": [
    {"i": 1, "j": 3, "value": ["0", "1", "0"]},
    {"i": 3, "j": 3, "value": ["1", "0", "0"]}
  ],
  "alpha": [
    ["c^2", "0", "a"],
    ["a*c", "c^3", "b"],
    ["0", "0", "c"]
  ]
})";

struct JobManifest {
    std::string command;
    io::json algebra;                  // literal or parametric description
    std::optional<io::json> base;      // description or canonical name
    std::optional<io::json> psi;       // deformation cochains, one per m-basis element
    std::optional<io::json> cocycle;   // Harrison 2-cocycle (r x r) for `obstruction`
    std::size_t degree = 2;
    CoboundaryMode mode = CoboundaryMode::strict;
    ParameterMap parameters;
    std::size_t order = 1;             // `extend`: number of extension steps
    std::string output_path;
};

namespace detail {

inline io::json resolve(const io::json& v, const std::filesystem::path& dir) {
    if (!v.is_string()) return v;
    const auto& s = v.get_ref<const std::string&>();
    if (s.ends_with(".json")) {
        auto p = std::filesystem::path(s);
        return io::read_json_file((p.is_absolute() ? p : dir / p).string());
    }
    return v;  // canonical base name
}

} // namespace detail

inline JobManifest manifest_from_json(const io::json& j, const std::filesystem::path& dir = ".") {
    static const std::vector<std::string> commands = {"verify", "cohomology", "infinitesimal",
                                                      "extend", "obstruction", "versal-step"};
    JobManifest m;
    if (!j.is_object()) throw ParseError("manifest must be a JSON object");
    m.command = j.value("command", std::string());
    if (std::find(commands.begin(), commands.end(), m.command) == commands.end())
        throw ParseError("unknown command '" + m.command + "'");
    if (!j.contains("algebra")) throw ParseError("manifest needs 'algebra'");
    m.algebra = detail::resolve(j["algebra"], dir);
    if (m.algebra.is_string() && m.algebra.get<std::string>() == "l0-template")
        m.algebra = io::json::parse(l0_template_json);
    if (!m.algebra.is_object()) throw ParseError("'algebra' must be an object, a .json path or \"l0-template\"");
    if (j.value("yau_twist", false)) m.algebra["yau_twist"] = true;
    if (j.contains("base")) m.base = detail::resolve(j["base"], dir);
    if (j.contains("psi")) m.psi = j["psi"];
    if (j.contains("cocycle")) m.cocycle = j["cocycle"];
    m.degree = j.value("degree", std::size_t{2});
    m.mode = parse_mode(j.value("mode", std::string("strict")));
    m.order = j.value("order", std::size_t{1});
    m.output_path = j.value("output", std::string());
    if (j.contains("parameters"))
        for (const auto& [k, v] : j["parameters"].items()) m.parameters[k] = io::rational_from_json(v);
    return m;
}

inline JobManifest load_manifest(const std::string& path) {
    auto j = io::read_json_file(path);
    return manifest_from_json(j, std::filesystem::path(path).parent_path());
}

/// The bundled example manifests: example1, example2, example3.
inline io::json builtin_manifest_json(const std::string& name) {
    io::json j;
    j["command"] = "cohomology";
    j["algebra"] = "l0-template";
    j["degree"] = 2;
    j["mode"] = "paper-example";
    if (name == "example1") {
        j["parameters"] = {{"a", "1"}, {"b", "0"}, {"c", "1"}};
    } else if (name == "example2") {
        j["parameters"] = {{"a", "1"}, {"b", "0"}, {"c", "0"}};
    } else if (name == "example3") {
        j["yau_twist"] = true;
        j["parameters"] = {{"a", "1"}, {"b", "0"}, {"c", "1"}};
    } else {
        throw ParseError("unknown built-in manifest '" + name + "'");
    }
    return j;
}

inline bool is_builtin_manifest(const std::string& name) {
    return name == "example1" || name == "example2" || name == "example3";
}

struct RunResult {
    io::json report;
    int exit_code = 0;
};

namespace detail {

inline io::json parameters_json(const ParameterMap& p) {
    io::json o = io::json::object();
    for (const auto& [k, v] : p) o[k] = v.str();
    return o;
}

inline io::json cochain_list(const std::vector<Cochain>& cs) {
    io::json a = io::json::array();
    for (const auto& c : cs) {
        auto e = io::elementary_expansion(c);
        a.push_back(e.empty() ? io::to_json(c.coeffs) : io::json(e));
    }
    return a;
}

inline std::vector<Cochain> as_cochains(const Subspace& s, std::size_t degree, std::size_t n) {
    std::vector<Cochain> out;
    for (const auto& v : s.basis_vectors()) out.push_back(Cochain::from_flat(degree, n, n, v));
    return out;
}

inline io::json cohomology_json(const CohomologyReport& r) {
    io::json j;
    j["degree"] = r.degree;
    j["mode"] = std::string(to_string(r.mode));
    j["dims"] = {{"equivariant", r.equivariant.dim()}, {"Z", r.z_dim()}, {"B", r.b_dim()}, {"H", r.h_dim()}};
    j["Z_basis"] = cochain_list(as_cochains(r.Z, r.degree, r.in_dim));
    j["B_basis"] = cochain_list(as_cochains(r.B, r.degree, r.in_dim));
    j["H_representatives"] = cochain_list(r.H_reps);
    return j;
}

inline io::json class_json(const ObstructionClass& oc) {
    return {{"is_zero", oc.is_zero}, {"class", io::to_json(oc.class_vector)}};
}

inline std::vector<Cochain> psi_from_manifest(const JobManifest& m, const HomLeibnizAlgebra& alg) {
    std::vector<Cochain> out;
    for (const auto& c : *m.psi) out.push_back(io::cochain_from_json(c, 2, alg.dim()));
    return out;
}

inline std::string triple_label(const TripleDefect& d, bool pair) {
    auto e = [](std::size_t x) { return "e" + std::to_string(x + 1); };
    return pair ? "(" + e(d.i) + ", " + e(d.j) + ")" : "(" + e(d.i) + ", " + e(d.j) + ", " + e(d.k) + ")";
}

} // namespace detail

inline RunResult run(const JobManifest& m) {
    RunResult res;
    auto& rep = res.report;
    rep["command"] = m.command;
    rep["parameters"] = detail::parameters_json(m.parameters);
    const ParameterMap* params = io::is_template(m.algebra) ? &m.parameters : nullptr;

    if (m.command == "verify") {
        auto raw = io::algebra_from_json_unchecked(m.algebra, params);
        if (m.algebra.value("yau_twist", false)) {
            std::vector<Vector> tw;
            for (const auto& v : raw.table()) tw.push_back(raw.apply_alpha(v));
            raw = HomLeibnizAlgebra::unchecked(raw.dim(), std::move(tw), raw.alpha());
        }
        auto jac = check_hom_jacobi(raw);
        auto mul = multiplicativity_defects(raw);
        std::string js = jac.empty() ? "ok" : "fails on " + detail::triple_label(jac.front(), false);
        std::string ms = mul.empty() ? "ok" : "fails on " + detail::triple_label(mul.front(), true);
        rep["dim"] = raw.dim();
        rep["hom_jacobi"] = js;
        rep["multiplicative"] = ms;
        rep["hom_jacobi_violations"] = jac.size();
        rep["multiplicative_violations"] = mul.size();
        rep["summary"] = "hom_jacobi: " + js + ", multiplicative: " + ms;
        res.exit_code = jac.empty() && mul.empty() ? 0 : 1;
        return res;
    }

    const auto alg = io::algebra_from_json(m.algebra, params);
    const auto adj = adjoint_representation(alg);
    rep["algebra"] = io::to_json(alg);

    if (m.command == "cohomology") {
        rep["cohomology"] = detail::cohomology_json(cohomology_report(alg, adj, m.degree, m.mode));
        return res;
    }

    const auto h2 = cohomology_report(alg, adj, 2, m.mode);
    auto eta1 = [&] { return universal_infinitesimal(alg, h2); };
    auto given_deformation = [&]() -> std::optional<Deformation> {
        if (!m.psi) return std::nullopt;
        auto base = m.base ? io::base_from_json(*m.base) : truncated_polynomial_base(m.psi->size());
        Deformation d{alg, base, detail::psi_from_manifest(m, alg)};
        validate_shape(d);
        return d;
    };

    if (m.command == "infinitesimal") {
        rep["h2_dim"] = h2.h_dim();
        rep["mode"] = std::string(to_string(m.mode));
        auto eta = eta1();
        rep["universal"] = {{"base", io::to_json(eta.base)},
                            {"psi", detail::cochain_list(eta.psi)},
                            {"check_deformation", "ok"}};
        if (auto d = given_deformation()) {
            auto defects = check_deformation(*d);
            if (!defects.empty()) {
                rep["check_deformation"] = defects.front().describe(d->base);
                res.exit_code = 1;
                return res;
            }
            auto phi = classify_infinitesimal(*d, h2);
            rep["classifying_morphism"] = io::to_json(phi.matrix);
            rep["action_differential"] = io::to_json(action_differential(*d, h2));
        }
        return res;
    }

    const auto h3 = cohomology_report(alg, adj, 3, CoboundaryMode::strict);
    rep["h3_dim"] = h3.h_dim();

    if (m.command == "extend") {
        std::vector<Cochain> psi;
        if (m.psi) psi = detail::psi_from_manifest(m, alg);
        else if (h2.h_dim() > 0) psi.push_back(h2.H_reps.front());
        else psi.push_back(Cochain::zero(2, alg.dim(), alg.dim()));
        rep["status"] = "extended";
        for (std::size_t step = 0; step < m.order; ++step) {
            auto out = extend_one_parameter(alg, h3, psi);
            if (auto* oc = std::get_if<ObstructionClass>(&out)) {
                rep["status"] = "obstructed";
                rep["obstruction"] = detail::class_json(*oc);
                res.exit_code = 2;
                break;
            }
            psi.push_back(std::get<Cochain>(out));
        }
        rep["order"] = psi.size();
        rep["psi"] = detail::cochain_list(psi);
        return res;
    }

    if (m.command == "obstruction") {
        auto d = given_deformation().value_or(eta1());
        io::json table = io::json::array();
        std::vector<HarrisonTwoCocycle> fs;
        if (m.cocycle) {
            fs.push_back(io::matrix_from_json(*m.cocycle, d.base.m_dim(), d.base.m_dim()));
            if (!is_harrison_cocycle(d.base, fs.back())) throw InvalidCocycle("'cocycle' is not a Harrison 2-cocycle");
        } else {
            fs = harrison_h2(d.base).representatives;
        }
        for (const auto& f : fs) {
            auto oc = obstruction_class(d, extend_by_cocycle(d.base, f), h3);
            auto entry = detail::class_json(oc);
            entry["cocycle"] = io::to_json(f);
            table.push_back(entry);
        }
        rep["base"] = io::to_json(d.base);
        rep["obstructions"] = table;
        return res;
    }

    // versal-step
    auto d = given_deformation().value_or(eta1());
    auto vs = versal_step(alg, h3, d);
    io::json harr = io::json::array();
    for (const auto& f : vs.harrison.representatives) harr.push_back(io::to_json(f));
    io::json obs = io::json::array();
    for (const auto& oc : vs.obstruction_table) obs.push_back(detail::class_json(oc));
    io::json ker = io::json::array();
    for (const auto& k : vs.kernel_classes) ker.push_back(io::to_json(k));
    rep["base"] = io::to_json(d.base);
    rep["harrison_h2"] = harr;
    rep["obstruction_classes"] = obs;
    rep["kernel"] = ker;
    rep["next_base"] = io::to_json(vs.next_base);
    rep["next_psi"] = detail::cochain_list(vs.next_deformation.psi);
    rep["invariants"] = versal_step_invariants_hold(vs, d) ? "ok" : "violated";
    if (rep["invariants"] != "ok") res.exit_code = 1;
    return res;
}

/// Indented "key: value" rendering of a report. color wraps keys in bold.
inline std::string render_text(const io::json& j, bool color, int indent = 0) {
    std::string out;
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto key = [&](const std::string& k) { return color ? "\x1b[1m" + k + "\x1b[0m" : k; };
    auto scalar = [](const io::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const io::json& v) {
        return std::all_of(v.begin(), v.end(), [](const io::json& x) { return x.is_primitive(); });
    };
    for (const auto& [k, v] : j.items()) {
        if (v.is_object()) {
            out += pad + key(k) + ":\n" + render_text(v, color, indent + 1);
        } else if (v.is_array() && flat(v)) {
            if (v.size() > 0 && v.front().is_string() && v.front().get<std::string>().find('E') != std::string::npos) {
                out += pad + key(k) + ":\n";
                for (const auto& x : v) out += pad + "  - " + scalar(x) + "\n";
            } else {
                std::string line;
                for (const auto& x : v) line += (line.empty() ? "" : " ") + scalar(x);
                out += pad + key(k) + ": [" + line + "]\n";
            }
        } else if (v.is_array()) {
            out += pad + key(k) + ":\n";
            for (const auto& x : v) {
                if (x.is_object()) out += pad + "  -\n" + render_text(x, color, indent + 2);
                else if (x.is_array()) {
                    std::string line;
                    for (const auto& y : x) line += (line.empty() ? "" : " ") + (y.is_primitive() ? scalar(y) : y.dump());
                    out += pad + "  - [" + line + "]\n";
                } else {
                    out += pad + "  - " + scalar(x) + "\n";
                }
            }
        } else {
            out += pad + key(k) + ": " + scalar(v) + "\n";
        }
    }
    return out;
}

inline std::string render(const io::json& report, const std::string& format, bool color = false) {
    if (format == "json") return report.dump(2) + "\n";
    if (format == "text") return render_text(report, color);
    throw InvalidArgument("unknown format '" + format + "'");
}

} // namespace homdef
