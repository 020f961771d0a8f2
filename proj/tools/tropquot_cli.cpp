// Command-line interface for the extended tropicalization toolkit.
//
// Exit codes: 0 success; 1 mathematical failure (an invalid fan reported by
// `validate`, or a FAIL verdict from `verify-quotient`); 2 input problems
// (unreadable or malformed files, inconsistent point data, bad arguments).
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tropquot/errors.hpp"
#include "tropquot/io.hpp"
#include "tropquot/quotient.hpp"
#include "tropquot/svg.hpp"
#include "tropquot/tropicalize.hpp"

namespace {

using tropquot::Json;

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tropquot::input_error("cannot open output file: " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Extended tropicalization of toric varieties over Q(t): strata, computable\n"
        "analytic points, the skeleton retraction, and a verification that the\n"
        "tropicalization is the quotient of points by the affinoid torus."};
    app.require_subcommand(1);

    std::string fan_path, cone_path, point_path, out_path, display = "plain";
    int samples = 200;
    std::uint64_t seed = 42;
    bool negative_control = false, serial = false, plot_skeleton = false;

    auto* cmd_validate = app.add_subcommand("validate", "Check the fan axioms for a fan file");
    cmd_validate->add_option("--fan", fan_path, "fan JSON file")->required();

    auto* cmd_dual = app.add_subcommand("dual", "Generators of the dual cone");
    cmd_dual->add_option("--cone", cone_path, "cone JSON file")->required();

    auto* cmd_hilbert =
        app.add_subcommand("hilbert", "Hilbert basis of the lattice points of a pointed cone");
    cmd_hilbert->add_option("--cone", cone_path, "cone JSON file")->required();

    auto* cmd_trop = app.add_subcommand("trop", "Tropicalization of an analytic point");
    cmd_trop->add_option("--fan", fan_path, "fan JSON file")->required();
    cmd_trop->add_option("--point", point_path, "point JSON file")->required();
    cmd_trop->add_option("--display", display, "plain (exact) or exp (approximate exp(-v))")
        ->check(CLI::IsMember({"plain", "exp"}));

    auto* cmd_retract =
        app.add_subcommand("retract", "Retraction of an analytic point onto the skeleton");
    cmd_retract->add_option("--fan", fan_path, "fan JSON file")->required();
    cmd_retract->add_option("--point", point_path, "point JSON file")->required();
    cmd_retract->add_option("--display", display, "plain (exact) or exp (approximate exp(-v))")
        ->check(CLI::IsMember({"plain", "exp"}));

    auto* cmd_section =
        app.add_subcommand("section", "Monomial point over a point of the tropicalization");
    cmd_section->add_option("--fan", fan_path, "fan JSON file")->required();
    cmd_section->add_option("--point", point_path, "point JSON file (kind \"monomial\")")
        ->required();
    cmd_section->add_option("--display", display, "plain (exact) or exp (approximate exp(-v))")
        ->check(CLI::IsMember({"plain", "exp"}));

    auto* cmd_orbit = app.add_subcommand("orbit", "Torus orbit a point belongs to");
    cmd_orbit->add_option("--fan", fan_path, "fan JSON file")->required();
    cmd_orbit->add_option("--point", point_path, "point JSON file")->required();

    auto* cmd_skeleton = app.add_subcommand("skeleton", "Stratum graph of the fan");
    cmd_skeleton->add_option("--fan", fan_path, "fan JSON file")->required();

    auto* cmd_quotient = app.add_subcommand(
        "verify-quotient",
        "Sample points, identify along verified affinoid-torus translations, and check "
        "the classes against the fibers of tropicalization");
    cmd_quotient->add_option("--fan", fan_path, "fan JSON file")->required();
    cmd_quotient->add_option("--samples", samples, "number of sample points")
        ->check(CLI::Range(2, 100000));
    cmd_quotient->add_option("--seed", seed, "random seed");
    cmd_quotient->add_flag("--negative-control", negative_control,
                           "inject one non-unit identification; the verdict must be FAIL");
    cmd_quotient->add_flag("--serial", serial, "run the single-threaded kernels");

    auto* cmd_plot = app.add_subcommand("plot", "SVG picture of a fan or of its skeleton");
    cmd_plot->add_option("--fan", fan_path, "fan JSON file")->required();
    cmd_plot->add_option("-o,--output", out_path, "output file (default stdout)");
    cmd_plot->add_flag("--skeleton", plot_skeleton, "draw the stratum graph instead of the fan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool exp_display = (display == "exp");

    try {
        if (cmd_validate->parsed()) {
            const tropquot::Fan f = tropquot::load_fan_file(fan_path, /*validate=*/false);
            const tropquot::FanValidation v = tropquot::validate_fan(f);
            print_json(tropquot::validation_to_json(v));
            return v.valid ? 0 : 1;
        }
        if (cmd_dual->parsed()) {
            const tropquot::Cone c = tropquot::load_cone_file(cone_path);
            print_json(tropquot::dual_to_json(tropquot::dual_cone(c)));
            return 0;
        }
        if (cmd_hilbert->parsed()) {
            const tropquot::Cone c = tropquot::load_cone_file(cone_path);
            print_json(tropquot::hilbert_to_json(c, tropquot::hilbert_basis(c)));
            return 0;
        }
        if (cmd_trop->parsed()) {
            const tropquot::Fan f = tropquot::load_fan_file(fan_path);
            const tropquot::AnalyticPoint x = tropquot::load_point_file(f, point_path);
            print_json(tropquot::trop_to_json(f, tropquot::trop(f, x), exp_display));
            return 0;
        }
        if (cmd_retract->parsed()) {
            const tropquot::Fan f = tropquot::load_fan_file(fan_path);
            const tropquot::AnalyticPoint x = tropquot::load_point_file(f, point_path);
            print_json(tropquot::monomial_to_json(f, tropquot::retract(f, x), exp_display));
            return 0;
        }
        if (cmd_section->parsed()) {
            const tropquot::Fan f = tropquot::load_fan_file(fan_path);
            const tropquot::AnalyticPoint x = tropquot::load_point_file(f, point_path);
            const auto* m = std::get_if<tropquot::MonomialPoint>(&x);
            if (!m)
                throw tropquot::input_error(
                    "section expects a point of the tropicalization (kind \"monomial\")");
            print_json(tropquot::monomial_to_json(f, tropquot::section(m->u), exp_display));
            return 0;
        }
        if (cmd_orbit->parsed()) {
            const tropquot::Fan f = tropquot::load_fan_file(fan_path);
            const tropquot::AnalyticPoint x = tropquot::load_point_file(f, point_path);
            print_json(tropquot::orbit_to_json(f, tropquot::orbit_cone_of(x)));
            return 0;
        }
        if (cmd_skeleton->parsed()) {
            const tropquot::Fan f = tropquot::load_fan_file(fan_path);
            print_json(tropquot::skeleton_to_json(f, tropquot::skeleton_graph(f)));
            return 0;
        }
        if (cmd_quotient->parsed()) {
            const tropquot::Fan f = tropquot::load_fan_file(fan_path);
            tropquot::QuotientOptions opts;
            opts.parallel = !serial;
            opts.negative_control = negative_control;
            const tropquot::QuotientReport report =
                tropquot::verify_quotient(f, samples, seed, opts);
            print_json(tropquot::quotient_report_to_json(report));
            return report.pass ? 0 : 1;
        }
        if (cmd_plot->parsed()) {
            const tropquot::Fan f = tropquot::load_fan_file(fan_path);
            const std::string svg = plot_skeleton
                                        ? tropquot::render_skeleton_svg(f, tropquot::skeleton_graph(f))
                                        : tropquot::render_fan_svg(f);
            write_text(out_path, svg);
            return 0;
        }
    } catch (const tropquot::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const tropquot::math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
