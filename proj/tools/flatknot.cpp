// flatknot: command-line front end for the flat ribbon knot library.
//
// Exit codes: 0 ok, 1 usage, 2 unreadable or malformed input, 3 input that
// parses but is not a valid ribbon, 4 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "flatknot/flatknot.hpp"

using namespace flatknot;

namespace {

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return 2;
        case ErrorCode::ValidationError:
        case ErrorCode::InvalidCore:
        case ErrorCode::ZeroTurn:
        case ErrorCode::CollinearOverlap:
        case ErrorCode::ModeMismatch: return 3;
        case ErrorCode::InvalidTruncation:
        case ErrorCode::NoPositiveWidth:
        case ErrorCode::UnboundedWidth: return 4;
    }
    return 4;
}

void print_real(const char* label, Real v) { std::printf("%s %.15Lg\n", label, v); }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    write_core_file(path, text);
}

const char* kEvidenceNote =
    "note: fixed-combinatorics evidence only; says nothing about other diagrams of this knot";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flat folded ribbon knots: length-to-width ratios, layouts and unfoldings"};
    app.require_subcommand(1);

    std::string file, out, svg_out, trace_out, mode_name, knot_name;
    Real scale = 1.0, width = 0.0, epsilon = 0.0;
    int evals = OptimizeOptions{}.max_evals, restarts = OptimizeOptions{}.restarts, trials = 1000;
    std::uint64_t seed = 1;

    auto* builtin = app.add_subcommand("builtin", "emit a built-in construction as a core file");
    builtin->add_option("knot", knot_name, "trefoil or figure8")->required()->check(CLI::IsMember({"trefoil", "figure8"}));
    builtin->add_option("--scale", scale, "size factor (trefoil edge 1, figure-eight a = 3 at scale 1)")
        ->check(CLI::PositiveNumber);
    builtin->add_option("--out", out, "output file (default stdout)");

    auto* ratio_cmd = app.add_subcommand("ratio", "print length, maximal width and their ratio");
    ratio_cmd->add_option("file", file)->required();
    ratio_cmd->add_option("--mode", mode_name, "closed or truncated")->check(CLI::IsMember({"closed", "truncated"}));

    auto* maxwidth_cmd = app.add_subcommand("maxwidth", "print the maximal admissible width");
    maxwidth_cmd->add_option("file", file)->required();

    auto* unfold_cmd = app.add_subcommand("unfold", "develop the ribbon at maximal width into a straight strip");
    unfold_cmd->add_option("file", file)->required();
    unfold_cmd->add_option("--svg", svg_out, "render the developed strip");

    auto* render_cmd = app.add_subcommand("render", "draw the folded ribbon");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("--svg", svg_out)->required();
    render_cmd->add_option("--width", width, "ribbon width (default maximal)")->check(CLI::PositiveNumber);

    auto* optimize_cmd = app.add_subcommand("optimize", "search for a smaller ratio at fixed crossing pattern");
    optimize_cmd->add_option("file", file)->required();
    optimize_cmd->add_option("--evals", evals, "evaluations per restart")->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--restarts", restarts)->check(CLI::NonNegativeNumber);
    optimize_cmd->add_option("--seed", seed);
    optimize_cmd->add_option("--trace", trace_out, "write eval,ratio rows of every improvement");
    optimize_cmd->add_option("--out", out, "optimized core file (default <file>.optimized.json)");

    auto* check_cmd = app.add_subcommand("check", "probe local minimality with random vertex perturbations");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--epsilon", epsilon, "perturbation radius")->required()->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
    check_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (builtin->parsed()) {
            const bool tre = knot_name == "trefoil";
            const Construction c = tre ? pentagon_trefoil(scale) : hexagon_figure_eight(3.0 * scale);
            write_text(out, serialize_core_file(c.core, c.weaving, tre ? "trefoil" : "figure-eight",
                                                tre ? "regular pentagon fold" : "semi-regular hexagon fold"));
            return 0;
        }

        const CoreFile cf = read_core_file(file);

        if (ratio_cmd->parsed()) {
            const LengthMode mode = mode_name.empty()     ? default_mode(cf.core)
                                    : mode_name == "closed" ? LengthMode::closed
                                                            : LengthMode::truncated;
            const RibbonMeasure m = ratio(cf.core, cf.weaving, mode);
            print_real("length", m.length);
            print_real("width", m.width);
            print_real("ratio", m.ratio);
        } else if (maxwidth_cmd->parsed()) {
            print_real("width", max_width(cf.core, cf.weaving));
        } else if (unfold_cmd->parsed()) {
            const Real w = max_width(cf.core, cf.weaving);
            const UnfoldedStrip s = unfold(cf.core, cf.weaving, w);
            print_real("width", s.width);
            for (std::size_t k = 0; k < s.segment_lengths.size(); ++k) {
                std::printf("segment %zu %.15Lg\n", k, s.segment_lengths[k]);
            }
            for (const auto& fm : s.fold_marks) {
                std::printf("fold at %.15Lg angle %.15Lg\n", fm.position, fm.fold_angle);
            }
            print_real("total", s.total_length);
            if (!svg_out.empty()) write_text(svg_out, render_svg(s));
        } else if (render_cmd->parsed()) {
            const Real w = width > 0.0 ? width : max_width(cf.core, cf.weaving);
            write_text(svg_out, render_svg(layout(cf.core, w), cf.weaving));
        } else if (optimize_cmd->parsed()) {
            OptimizeOptions opts;
            opts.max_evals = evals;
            opts.restarts = restarts;
            opts.seed = seed;
            const OptimizeReport rep = minimize_ratio(cf.core, cf.weaving, opts);
            print_real("start", rep.trace.front().ratio);
            print_real("best", rep.best_ratio);
            std::printf("evals %d\nconverged %s\n%s\n", rep.evals_used, rep.converged ? "yes" : "no", kEvidenceNote);
            if (!trace_out.empty()) {
                std::string rows;
                char buf[64];
                for (const auto& t : rep.trace) {
                    std::snprintf(buf, sizeof buf, "%d,%.17Lg\n", t.eval, t.ratio);
                    rows += buf;
                }
                write_text(trace_out, rows);
            }
            std::string dest = out;
            if (dest.empty()) {
                std::filesystem::path p(file);
                dest = (p.parent_path() / (p.stem().string() + ".optimized.json")).string();
            }
            write_text(dest, serialize_core_file(rep.best_core, cf.weaving, cf.name, "optimized at fixed crossing pattern"));
        } else if (check_cmd->parsed()) {
            const LocalMinReport rep = local_min_check(cf.core, cf.weaving, epsilon, trials, seed);
            print_real("base", rep.base_ratio);
            print_real("min_perturbed", rep.min_perturbed_ratio);
            std::printf("violations %d\nsamples %d\nrejected %d\n%s\n", rep.violations, rep.samples, rep.rejected,
                        kEvidenceNote);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "flatknot: %s\n", e.what());
        return exit_code(e.code());
    }
    return 0;
}
