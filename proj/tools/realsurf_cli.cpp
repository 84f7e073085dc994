#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "realsurf/bounds.hpp"
#include "realsurf/errors.hpp"
#include "realsurf/fn_surface.hpp"
#include "realsurf/surface_io.hpp"
#include "realsurf/oracle_verify.hpp"
#include "realsurf/svg_render.hpp"

namespace {

// Exit codes: 0 real / success, 1 not real or semantic failure, 2 usage or
// input errors.
constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kUsage = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

realsurf::FNSurface load(const std::string& path) { return realsurf::parse_surface(read_input(path)); }

std::vector<realsurf::Rational> parse_twist_list(const std::string& csv, int expected) {
    std::vector<realsurf::Rational> twists;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto t = realsurf::Rational::parse(item);
        if (!t) throw std::runtime_error("bad twist '" + item + "'");
        twists.push_back(realsurf::normalize_twist(*t));
    }
    if (static_cast<int>(twists.size()) != expected)
        throw std::runtime_error("expected " + std::to_string(expected) + " twists, got " +
                                 std::to_string(twists.size()));
    return twists;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fenchel-Nielsen surfaces on pants graphs: mirror-symmetry criterion, "
                 "fixed multicurves, real-form classification, certified distance bounds"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string file;
    int genus_arg = 2;
    std::string twists_csv;
    double length_arg = 2.0;
    double bound_c = 1.0;
    std::string out_path;

    auto* check = app.add_subcommand("check", "print is_real; exit 0 if real, 1 if not");
    check->add_option("file", file, "surface file ('-' for stdin)");

    auto* trace = app.add_subcommand("trace", "trace the fixed multicurve");
    trace->add_option("file", file, "surface file ('-' for stdin)");

    auto* classify = app.add_subcommand("classify", "classify the real form");
    classify->add_option("file", file, "surface file ('-' for stdin)");

    auto* bounds = app.add_subcommand("bounds", "certified distance lower bounds");
    bounds->add_option("file", file, "surface file ('-' for stdin)");

    auto* gen_chain = app.add_subcommand("gen-chain", "emit a chain-of-handles surface file");
    gen_chain->add_option("--genus", genus_arg, "genus (>= 2)")->required();
    gen_chain->add_option("--twists", twists_csv, "comma-separated rationals, one per edge")->required();
    gen_chain->add_option("--length", length_arg, "common partition length (default 2)");

    auto* gen_unbounded = app.add_subcommand("gen-unbounded", "surface whose certified bound exceeds C");
    gen_unbounded->add_option("--C", bound_c, "target lower bound")->required();
    gen_unbounded->add_option("--genus", genus_arg, "genus (>= 2)")->required();

    auto* render = app.add_subcommand("render", "write an SVG diagram");
    render->add_option("file", file, "surface file ('-' for stdin)");
    render->add_option("--out", out_path, "output SVG path")->required();

    auto* oracle = app.add_subcommand("oracle-verify", "run the half-plane oracle cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (check->parsed()) {
            const auto surface = load(file);
            std::cout << realsurf::report_check(surface);
            return realsurf::is_real(surface) ? kOk : kSemantic;
        }
        if (trace->parsed()) {
            std::cout << realsurf::report_trace(load(file));
            return kOk;
        }
        if (classify->parsed()) {
            std::cout << realsurf::report_classify(load(file));
            return kOk;
        }
        if (bounds->parsed()) {
            std::cout << realsurf::report_bounds(load(file));
            return kOk;
        }
        if (gen_chain->parsed()) {
            realsurf::FNSurface surface;
            surface.graph = realsurf::chain_graph(genus_arg);
            surface.length.assign(surface.graph.edge_count(), length_arg);
            surface.twist = parse_twist_list(twists_csv, surface.graph.edge_count());
            const auto report = realsurf::validate(surface);
            if (!report.ok()) throw std::runtime_error("generated surface invalid: " + report.issues.front());
            std::cout << realsurf::emit_surface(surface);
            return kOk;
        }
        if (gen_unbounded->parsed()) {
            std::cout << realsurf::emit_surface(realsurf::unbounded_example(bound_c, genus_arg));
            return kOk;
        }
        if (render->parsed()) {
            const std::string svg = realsurf::render_svg(load(file));
            std::ofstream outfile(out_path);
            if (!outfile) throw std::runtime_error("cannot write '" + out_path + "'");
            outfile << svg;
            return kOk;
        }
        if (oracle->parsed()) {
            return realsurf::run_oracle_verify(std::cout) ? kOk : kSemantic;
        }
    } catch (const realsurf::NotRealError& e) {
        std::cerr << "not real: " << e.what() << "\n";
        return kSemantic;
    } catch (const realsurf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
