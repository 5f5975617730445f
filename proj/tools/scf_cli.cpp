// scf: command-line front end for k-strong conflict-free interval coloring.
//
// Exit status: 0 success, 1 verification failure (or no optimum within the
// color cap), 2 input error, 3 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "scf/analysis.hpp"
#include "scf/complete.hpp"
#include "scf/io.hpp"
#include "scf/kcolor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw scf::ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

scf::IntervalFamily load_family(const std::string& path) { return scf::parse_instance(slurp(path), &std::cerr); }

std::string join(const std::vector<scf::Color>& colors) {
    std::string s;
    for (auto c : colors) s += (s.empty() ? "" : ",") + std::to_string(c);
    return "{" + s + "}";
}

scf::PaletteChoice parse_choice(const std::string& mode) {
    if (mode == "auto") return scf::PaletteChoice::Auto;
    if (mode == "general") return scf::PaletteChoice::General;
    if (mode == "special") return scf::PaletteChoice::Special;
    throw scf::ValidationError("unknown mode '" + mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-strong conflict-free coloring of points with respect to intervals"};
    app.require_subcommand(1);

    std::string input;
    int k = 1;

    auto* color = app.add_subcommand("color", "run the step-wise approximation algorithm");
    std::string mode = "auto", trace_path, select_path = "naive";
    color->add_option("instance", input, "instance file (default: stdin)");
    color->add_option("--k", k, "strength")->required()->check(CLI::PositiveNumber);
    color->add_option("--mode", mode, "palette: auto|general|special")
        ->check(CLI::IsMember({"auto", "general", "special"}));
    color->add_option("--trace", trace_path, "write the step trace to this file");
    color->add_option("--select", select_path, "selection routine: naive|fast")
        ->check(CLI::IsMember({"naive", "fast"}));

    auto* verify = app.add_subcommand("verify", "check a coloring against an instance");
    std::string coloring_path;
    verify->add_option("instance", input, "instance file (default: stdin)");
    verify->add_option("--k", k, "strength")->required()->check(CLI::PositiveNumber);
    verify->add_option("--coloring", coloring_path, "coloring file")->required();

    auto* complete = app.add_subcommand("complete", "color the complete interval hypergraph H_n");
    int n = 1;
    complete->add_option("--n", n, "number of points")->required()->check(CLI::PositiveNumber);
    complete->add_option("--k", k, "strength")->required()->check(CLI::PositiveNumber);

    auto* oracle = app.add_subcommand("oracle", "exhaustive minimum number of colors");
    int max_colors = -1;
    bool total = false;
    oracle->add_option("instance", input, "instance file (default: stdin)");
    oracle->add_option("--k", k, "strength")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--max-colors", max_colors, "color cap (default: n)");
    oracle->add_flag("--total", total, "every point must receive a positive color");

    auto* bound = app.add_subcommand("bound", "lower bounds on the optimum");
    bound->add_option("instance", input, "instance file (default: stdin)");
    bound->add_option("--k", k, "strength")->required()->check(CLI::PositiveNumber);

    auto* rep = app.add_subcommand("report", "algorithm colors, bounds and ratios");
    int oracle_limit = 9;
    rep->add_option("instance", input, "instance file (default: stdin)");
    rep->add_option("--k", k, "strength")->required()->check(CLI::PositiveNumber);
    rep->add_option("--oracle-limit", oracle_limit, "run the exhaustive search when n is at most this");
    rep->add_option("--mode", mode, "palette: auto|general|special")
        ->check(CLI::IsMember({"auto", "general", "special"}));

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    scf::GenSpec spec;
    std::string shape = "random";
    gen->add_option("--n", spec.n, "number of points")->required();
    gen->add_option("--m", spec.m, "interval count before deduplication");
    gen->add_option("--seed", spec.seed, "random seed");
    gen->add_option("--shape", shape, "random|nested|laminar-free|complete")
        ->check(CLI::IsMember({"random", "nested", "laminar-free", "complete"}));
    gen->add_option("--k", spec.k, "separation for laminar-free");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (color->parsed()) {
            const auto family = load_family(input);
            const auto palette = scf::choose_palette(family, k, parse_choice(mode));
            const auto path = select_path == "fast" ? scf::SelectPath::Fast : scf::SelectPath::Naive;
            const auto result = scf::run_kcolor(family, k, palette, path);
            std::cout << scf::emit_coloring(result.coloring);
            if (!trace_path.empty()) {
                std::ofstream out(trace_path, std::ios::binary);
                if (!out) throw scf::ValidationError("cannot write '" + trace_path + "'");
                out << scf::write_trace(result.trace);
            }
            std::cerr << "colors " << result.coloring.distinct_positive() << " steps "
                      << result.trace.step_count() << " palette " << scf::to_string(palette.mode) << " c "
                      << palette.colors_per_step << '\n';
            return kExitOk;
        }
        if (verify->parsed()) {
            const auto family = load_family(input);
            const auto coloring = scf::parse_coloring(slurp(coloring_path));
            const auto report = scf::verify(family, coloring, k);
            for (const auto& f : report.failing)
                std::cout << "FAIL " << scf::to_string(f.interval) << " unique=" << join(f.unique_colors)
                          << " required=" << f.required << '\n';
            std::cout << (report.overall ? "valid" : "invalid") << " k=" << k << " intervals=" << family.size()
                      << " failing=" << report.failing.size() << " colors=" << coloring.distinct_positive() << '\n';
            return report.overall ? kExitOk : kExitFailed;
        }
        if (complete->parsed()) {
            const auto coloring = scf::knc_color(n, k);
            std::cout << scf::emit_coloring(coloring);
            std::cerr << "colors " << coloring.distinct_positive() << " bound " << scf::knc_color_bound(n, k)
                      << '\n';
            return kExitOk;
        }
        if (oracle->parsed()) {
            const auto family = load_family(input);
            const auto sem = total ? scf::Semantics::Total : scf::Semantics::Partial;
            const auto res = scf::oracle_chi(family, k, sem, max_colors);
            if (!res.warning.empty()) std::cerr << "warning: " << res.warning << '\n';
            if (!res.found) {
                std::cout << "not found within cap " << (max_colors < 0 ? family.n() : max_colors) << '\n';
                return kExitFailed;
            }
            std::cout << "chi_star " << res.chi_star << "\nsemantics " << (total ? "total" : "partial")
                      << "\nwitness\n"
                      << scf::emit_coloring(res.witness);
            return kExitOk;
        }
        if (bound->parsed()) {
            const auto family = load_family(input);
            std::cout << "lb_dp " << scf::lb_dp(family, k) << '\n';
            if (scf::is_complete_family(family))
                std::cout << "lb_complete " << scf::lb_complete(family.n(), k) << '\n';
            return kExitOk;
        }
        if (rep->parsed()) {
            const auto family = load_family(input);
            const auto r = scf::report(family, k, parse_choice(mode), oracle_limit);
            std::cout << "k " << r.k << '\n'
                      << "palette " << scf::to_string(r.palette.mode) << " c " << r.palette.colors_per_step << '\n'
                      << "colors " << r.algorithm_colors << '\n'
                      << "steps " << r.steps << '\n'
                      << "verified " << (r.verified ? "yes" : "no") << '\n'
                      << "lb_dp " << r.lb_dp << '\n';
            if (r.lb_complete) std::cout << "lb_complete " << *r.lb_complete << '\n';
            std::cout << "ratio_guarantee " << r.ratio_guarantee.str() << " " << r.ratio_guarantee.decimal() << '\n'
                      << "lemma5_floor " << r.lemma5_floor << '\n'
                      << "lemma5_stated " << r.lemma5_stated << '\n';
            if (r.chi_partial) std::cout << "chi_partial " << *r.chi_partial << '\n';
            if (r.chi_total) std::cout << "chi_total " << *r.chi_total << '\n';
            if (r.ratio) std::cout << "ratio " << r.ratio->str() << " " << r.ratio->decimal() << '\n';
            return r.verified ? kExitOk : kExitFailed;
        }
        if (gen->parsed()) {
            spec.shape = scf::parse_shape(shape);
            std::cout << scf::emit_instance(scf::gen_instance(spec));
            return kExitOk;
        }
    } catch (const scf::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
