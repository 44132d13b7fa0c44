// homdef: command-line front end for the Hom-Leibniz deformation library.
//
//   homdef run example1|example2|example3|<manifest.json> [overrides]
//   homdef <command> --algebra <file|l0-template> [options]
//
// Exit status: 0 ok, 1 invalid input or validation failure, 2 obstructed extension.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "homdef/manifest.hpp"

namespace {

struct Overrides {
    std::string mode;
    std::optional<std::size_t> degree;
    std::string params;
    std::string out;
    std::string format = "json";
    std::string base;
    std::string psi;
    std::string cocycle;
    std::optional<std::size_t> order;
    bool yau_twist = false;
};

void add_common(CLI::App* app, Overrides& o) {
    app->add_option("--mode", o.mode, "coboundary mode")->check(CLI::IsMember({"strict", "paper-example"}));
    app->add_option("--degree", o.degree, "cohomology degree");
    app->add_option("--params", o.params, "template parameters, e.g. a=1,b=0,c=1/2");
    app->add_option("--out", o.out, "write the report here instead of stdout");
    app->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
}

void add_inputs(CLI::App* app, Overrides& o) {
    app->add_option("--base", o.base, "base file or canonical name (K, c1:<d>, poly:<k>)");
    app->add_option("--psi", o.psi, "JSON file holding the deformation cochains");
    app->add_option("--cocycle", o.cocycle, "JSON file holding a Harrison 2-cocycle matrix");
    app->add_option("--order", o.order, "extension steps for `extend`");
    app->add_flag("--yau-twist", o.yau_twist, "compose the bracket with alpha");
}

void apply_overrides(homdef::io::json& m, const Overrides& o) {
    if (!o.mode.empty()) m["mode"] = o.mode;
    if (o.degree) m["degree"] = *o.degree;
    if (!o.params.empty()) {
        if (!m.contains("parameters")) m["parameters"] = homdef::io::json::object();
        for (const auto& [k, v] : homdef::parse_parameter_list(o.params)) m["parameters"][k] = v.str();
    }
    if (!o.out.empty()) m["output"] = o.out;
    if (!o.base.empty()) m["base"] = o.base;
    if (!o.psi.empty()) m["psi"] = homdef::io::read_json_file(o.psi);
    if (!o.cocycle.empty()) m["cocycle"] = homdef::io::read_json_file(o.cocycle);
    if (o.order) m["order"] = *o.order;
    if (o.yau_twist) m["yau_twist"] = true;
}

bool color_enabled() {
    const char* v = std::getenv("HOMDEF_COLOR");
    if (!v) return false;
    std::string s(v);
    return s == "1" || s == "always" || s == "true";
}

int execute(const homdef::io::json& manifest_json, const std::string& format) {
    auto manifest = homdef::manifest_from_json(manifest_json, ".");
    auto result = homdef::run(manifest);
    const bool to_file = !manifest.output_path.empty();
    auto text = homdef::render(result.report, format, !to_file && color_enabled());
    if (to_file) {
        std::ofstream out(manifest.output_path, std::ios::binary);
        if (!out) throw homdef::InvalidArgument("cannot write '" + manifest.output_path + "'");
        out << text;
    } else {
        std::cout << text;
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology, deformations and obstructions of Hom-Leibniz algebras"};
    app.require_subcommand(1);

    Overrides o;
    std::string target;
    auto* run = app.add_subcommand("run", "run a manifest file or a built-in example");
    run->add_option("manifest", target, "example1|example2|example3|<path.json>")->required();
    add_common(run, o);
    add_inputs(run, o);

    std::string algebra;
    std::string active;
    for (const char* name : {"verify", "cohomology", "infinitesimal", "extend", "obstruction", "versal-step"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " on an algebra description");
        sub->add_option("--algebra", algebra, "algebra JSON file or l0-template")->required();
        add_common(sub, o);
        add_inputs(sub, o);
        sub->callback([&active, name] { active = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        homdef::io::json m;
        if (run->parsed()) {
            if (homdef::is_builtin_manifest(target)) {
                m = homdef::builtin_manifest_json(target);
            } else {
                m = homdef::io::read_json_file(target);
                auto dir = std::filesystem::path(target).parent_path();
                // Relative paths inside a manifest are relative to the manifest.
                for (const char* key : {"algebra", "base"})
                    if (m.contains(key) && m[key].is_string() && m[key].get<std::string>().ends_with(".json")) {
                        auto p = std::filesystem::path(m[key].get<std::string>());
                        if (p.is_relative()) m[key] = (dir / p).string();
                    }
            }
        } else {
            m["command"] = active;
            m["algebra"] = algebra;
        }
        apply_overrides(m, o);
        return execute(m, o.format);
    } catch (const homdef::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return 1;
    }
}
