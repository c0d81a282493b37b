#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <gtest/gtest.h>

#include "flatknot/constructions.hpp"
#include "flatknot/core_file.hpp"
#include "flatknot/svg.hpp"

using namespace flatknot;
namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace {

template <class F>
std::string error_text(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
        return e.what();
    }
    return {};
}

pt::ptree parse_xml(const std::string& text) {
    std::istringstream in(text);
    pt::ptree tree;
    pt::read_xml(in, tree);
    return tree;
}

// Every element named `tag` with the given class, anywhere under `node`.
void collect(const pt::ptree& node, const std::string& tag, const std::string& cls, std::vector<pt::ptree>& out) {
    for (const auto& [name, child] : node) {
        if (name == tag && child.get<std::string>("<xmlattr>.class", "") == cls) out.push_back(child);
        collect(child, tag, cls, out);
    }
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const fs::path log = fs::temp_directory_path() / ("flatknot_cli_" + std::to_string(::getpid()) + ".txt");
    const std::string cmd = std::string("\"") + FLATKNOT_CLI + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(log);
    return r;
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / fs::path("flatknot_test_" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

}  // namespace

TEST(CoreFile, RoundTripIsExact) {
    for (const auto& c : {pentagon_trefoil(1.0), hexagon_figure_eight(3.0)}) {
        const std::string text = serialize_core_file(c.core, c.weaving, "x", "y");
        const CoreFile back = parse_core_file(text);
        ASSERT_EQ(back.core.vertex_count(), c.core.vertex_count());
        for (std::size_t k = 0; k < c.core.vertex_count(); ++k) {
            EXPECT_NEAR(back.core.vertices()[k].x, c.core.vertices()[k].x, 1e-12);
            EXPECT_NEAR(back.core.vertices()[k].y, c.core.vertices()[k].y, 1e-12);
            // stored as doubles, read back bit for bit
            EXPECT_EQ(static_cast<double>(back.core.vertices()[k].x), static_cast<double>(c.core.vertices()[k].x));
        }
        EXPECT_EQ(back.core.closed(), c.core.closed());
        ASSERT_TRUE(back.core.truncation());
        EXPECT_EQ(back.core.truncation()->cut, CutStyle::flush);
        ASSERT_EQ(back.weaving.crossings.size(), c.weaving.crossings.size());
        for (std::size_t e = 0; e < c.weaving.crossings.size(); ++e) {
            EXPECT_EQ(back.weaving.crossings[e].i, c.weaving.crossings[e].i);
            EXPECT_EQ(back.weaving.crossings[e].j, c.weaving.crossings[e].j);
            EXPECT_EQ(back.weaving.crossings[e].over, c.weaving.crossings[e].over);
        }
        EXPECT_EQ(back.name, "x");
        EXPECT_EQ(back.notes, "y");
        EXPECT_EQ(serialize_core_file(back.core, back.weaving, "x", "y"), text);
    }
}

TEST(CoreFile, HexagonFromHandWrittenFile) {
    const std::string text = R"({
      "version": 1,
      "closed": false,
      "vertices": [[3, 1.2909944487358056], [0, -2.5819888974716112], [-3, 1.2909944487358056],
                   [3, -1.2909944487358056], [0, 2.5819888974716112], [-3, -1.2909944487358056]],
      "truncation": {"start_offset": 0, "end_offset": 0, "cut": "flush"},
      "crossings": [{"i": 0, "j": 2, "over": 0}, {"i": 0, "j": 3, "over": 3},
                    {"i": 1, "j": 4, "over": 1}, {"i": 2, "j": 4, "over": 4}]
    })";
    const CoreFile f = parse_core_file(text);
    EXPECT_NEAR(ratio(f.core, f.weaving, LengthMode::truncated).ratio, 8.26236447190916L, 1e-9);
}

TEST(CoreFile, SyntaxErrorHasPosition) {
    const std::string msg = error_text(ErrorCode::ParseError, [] { parse_core_file("{\n  \"version\": 1,\n  \"closed\": fals\n}"); });
    EXPECT_NE(msg.find("3:"), std::string::npos) << msg;
}

TEST(CoreFile, SemanticErrorsNameTheField) {
    auto base = [](const std::string& extra_vertices, const std::string& crossings) {
        return R"({"version": 1, "closed": false, "vertices": [[0,0],[2,0],[2,1],[0,1)" + extra_vertices + R"(]],
                   "truncation": {"start_offset": 0, "end_offset": 0}, "crossings": [)" + crossings + "]}";
    };
    // edges 0 and 2 are parallel and never meet
    std::string msg = error_text(ErrorCode::ValidationError, [&] { parse_core_file(base("", R"({"i":0,"j":2,"over":0})")); });
    EXPECT_NE(msg.find("crossings[0]"), std::string::npos) << msg;

    msg = error_text(ErrorCode::ValidationError,
                     [&] { parse_core_file(base("", R"({"i":0,"j":2,"over":0}, {"i":0,"j":"x","over":0})")); });
    EXPECT_NE(msg.find("crossings[1].j"), std::string::npos) << msg;

    msg = error_text(ErrorCode::ValidationError, [] { parse_core_file(R"({"version": 2, "closed": false, "vertices": []})"); });
    EXPECT_NE(msg.find("version"), std::string::npos) << msg;

    msg = error_text(ErrorCode::ValidationError,
                     [] { parse_core_file(R"({"version": 1, "closed": false, "vertices": [[0,0],[1,"a"],[1,1]]})"); });
    EXPECT_NE(msg.find("vertices[1][1]"), std::string::npos) << msg;

    msg = error_text(ErrorCode::ValidationError,
                     [] { parse_core_file(R"({"version": 1, "closed": false, "vertices": [[0,0],[1,0],[2,0]]})"); });
    EXPECT_NE(msg.find("vertices"), std::string::npos) << msg;

    msg = error_text(ErrorCode::ValidationError, [] {
        parse_core_file(R"({"version": 1, "closed": false, "vertices": [[0,0],[1,0],[1,1]],
                            "truncation": {"start_offset": 5, "end_offset": 0}})");
    });
    EXPECT_NE(msg.find("truncation"), std::string::npos) << msg;

    msg = error_text(ErrorCode::ValidationError,
                     [] { parse_core_file(R"({"version": 1, "closed": false, "vertices": [[0,0],[1,0],[1,1]], "vertexes": 3})"); });
    EXPECT_NE(msg.find("vertexes"), std::string::npos) << msg;

    // a real crossing left undeclared
    const auto tre = pentagon_trefoil(1.0);
    Weaving partial = tre.weaving;
    partial.crossings.pop_back();
    msg = error_text(ErrorCode::ValidationError, [&] { parse_core_file(serialize_core_file(tre.core, partial)); });
    EXPECT_NE(msg.find("missing"), std::string::npos) << msg;
}

TEST(Svg, PentagonCreasesFormRegularPentagon) {
    const auto c = pentagon_trefoil(1.0);
    const std::string svg = render_svg(layout(c.core, max_width(c.core, c.weaving)), c.weaving);
    const auto tree = parse_xml(svg);
    std::vector<pt::ptree> lines;
    collect(tree, "line", "crease", lines);
    collect(tree, "line", "cut", lines);
    ASSERT_EQ(lines.size(), 5u);
    const auto pent = pentagon_vertices(1.0);
    for (const auto& ln : lines) {
        // undo the screen flip
        const Point2 a{ln.get<Real>("<xmlattr>.x1"), -ln.get<Real>("<xmlattr>.y1")};
        const Point2 b{ln.get<Real>("<xmlattr>.x2"), -ln.get<Real>("<xmlattr>.y2")};
        EXPECT_NEAR(distance(a, b), 1.0, 1e-6);
        for (Point2 p : {a, b}) {
            Real best = 1e9;
            for (const auto& q : pent) best = std::min(best, distance(p, q));
            EXPECT_LT(best, 1e-6);
        }
    }
    std::vector<pt::ptree> strips, overs;
    collect(tree, "polygon", "strip", strips);
    collect(tree, "polygon", "over", overs);
    EXPECT_EQ(strips.size(), 4u);
    EXPECT_EQ(overs.size(), 3u);
}

TEST(Svg, SingleFoldHasNoBreaks) {
    const CoreCurve core({{-1, 0}, {0, 0}, {0, 1}}, false, Truncation{});
    const auto tree = parse_xml(render_svg(layout(core, 0.3), Weaving{}));
    std::vector<pt::ptree> strips, creases, overs;
    collect(tree, "polygon", "strip", strips);
    collect(tree, "line", "crease", creases);
    collect(tree, "polygon", "over", overs);
    EXPECT_EQ(strips.size(), 2u);
    EXPECT_EQ(creases.size(), 1u);
    EXPECT_EQ(overs.size(), 0u);
}

TEST(Svg, ViewBoxHasMargin) {
    const auto c = hexagon_figure_eight(3.0);
    const auto tree = parse_xml(render_svg(layout(c.core, std::sqrt(10.0L)), c.weaving));
    std::istringstream vb(tree.get<std::string>("svg.<xmlattr>.viewBox"));
    Real x, y, w, h;
    vb >> x >> y >> w >> h;
    // outline spans [-4, 4] x [-2b, 2b]; 5% of the wider extent on each side
    const Real b = std::sqrt(5.0L / 3.0L);
    EXPECT_NEAR(w, 8 + 2 * 0.05 * 8, 1e-9);
    EXPECT_NEAR(h, 4 * b + 2 * 0.05 * 8, 1e-9);
    EXPECT_NEAR(x, -4 - 0.4, 1e-9);
}

TEST(Svg, UnfoldedStripIsWellFormed) {
    const auto c = pentagon_trefoil(1.0);
    const auto s = unfold(c.core, c.weaving, max_width(c.core, c.weaving));
    const auto tree = parse_xml(render_svg(s));
    std::vector<pt::ptree> valleys, mountains, labels;
    collect(tree, "line", "fold valley", valleys);
    collect(tree, "line", "fold mountain", mountains);
    collect(tree, "text", "length", labels);
    EXPECT_EQ(valleys.size(), 2u);
    EXPECT_EQ(mountains.size(), 1u);
    EXPECT_EQ(labels.size(), 4u);
}

TEST(Cli, BuiltinRatioAndRoundTrip) {
    TempDir dir;
    const auto tre = dir / "trefoil.json";
    ASSERT_EQ(run_cli("builtin trefoil --out \"" + tre.string() + "\"").code, 0);
    const auto r = run_cli("ratio \"" + tre.string() + "\"");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("ratio 5.50552768188469\n"), std::string::npos) << r.out;

    const auto fig = dir / "figure8.json";
    ASSERT_EQ(run_cli("builtin figure8 --out \"" + fig.string() + "\"").code, 0);
    const auto r8 = run_cli("ratio \"" + fig.string() + "\"");
    EXPECT_NE(r8.out.find("ratio 8.26236447190916\n"), std::string::npos) << r8.out;

    const CoreFile f = read_core_file(tre.string());
    const auto c = pentagon_trefoil(1.0);
    for (std::size_t k = 0; k < c.core.vertex_count(); ++k) {
        EXPECT_NEAR(distance(f.core.vertices()[k], c.core.vertices()[k]), 0.0, 1e-12);
    }
}

TEST(Cli, ExitCodes) {
    TempDir dir;
    EXPECT_EQ(run_cli("").code, 1);
    EXPECT_EQ(run_cli("ratio").code, 1);
    EXPECT_EQ(run_cli("frobnicate").code, 1);
    EXPECT_EQ(run_cli("--help").code, 0);
    EXPECT_EQ(run_cli("ratio \"" + (dir / "missing.json").string() + "\"").code, 2);

    const auto bad = dir / "bad.json";
    std::ofstream(bad) << "{ \"version\": 1, ";
    EXPECT_EQ(run_cli("ratio \"" + bad.string() + "\"").code, 2);

    const auto parallel = dir / "parallel.json";
    std::ofstream(parallel) << R"({"version": 1, "closed": false, "vertices": [[0,0],[2,0],[2,1],[0,1]],
        "truncation": {"start_offset": 0, "end_offset": 0}, "crossings": [{"i": 0, "j": 2, "over": 0}]})";
    const auto r = run_cli("ratio \"" + parallel.string() + "\"");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("crossings[0]"), std::string::npos) << r.out;

    const auto tight = dir / "tight.json";
    std::ofstream(tight) << R"({"version": 1, "closed": false, "vertices": [[0,0],[2,0],[1,1],[1,-1e-7]],
        "truncation": {"start_offset": 0, "end_offset": 0}, "crossings": [{"i": 0, "j": 2, "over": 0}]})";
    EXPECT_EQ(run_cli("maxwidth \"" + tight.string() + "\"").code, 4);

    const auto tre = dir / "t.json";
    run_cli("builtin trefoil --out \"" + tre.string() + "\"");
    EXPECT_EQ(run_cli("ratio \"" + tre.string() + "\" --mode closed").code, 3);
}

TEST(Cli, RenderUnfoldOptimizeCheck) {
    TempDir dir;
    const auto tre = dir / "t.json";
    ASSERT_EQ(run_cli("builtin trefoil --scale 2 --out \"" + tre.string() + "\"").code, 0);

    const auto svg = dir / "t.svg";
    ASSERT_EQ(run_cli("render \"" + tre.string() + "\" --svg \"" + svg.string() + "\"").code, 0);
    EXPECT_NO_THROW(parse_xml(slurp(svg)));
    EXPECT_EQ(run_cli("render \"" + tre.string() + "\" --svg \"" + svg.string() + "\" --width 0.5").code, 0);

    const auto strip = dir / "strip.svg";
    const auto u = run_cli("unfold \"" + tre.string() + "\" --svg \"" + strip.string() + "\"");
    ASSERT_EQ(u.code, 0) << u.out;
    EXPECT_NE(u.out.find("total 10.4721359549996"), std::string::npos) << u.out;
    EXPECT_NO_THROW(parse_xml(slurp(strip)));

    const auto best = dir / "best.json";
    const auto trace = dir / "trace.csv";
    const auto o = run_cli("optimize \"" + tre.string() + "\" --evals 200 --restarts 1 --seed 3 --trace \"" +
                           trace.string() + "\" --out \"" + best.string() + "\"");
    ASSERT_EQ(o.code, 0) << o.out;
    EXPECT_NE(o.out.find("best 5.5055276818"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("fixed-combinatorics"), std::string::npos) << o.out;
    EXPECT_NO_THROW(read_core_file(best.string()));
    EXPECT_EQ(slurp(trace).rfind("1,", 0), 0u);

    const auto k = run_cli("check \"" + tre.string() + "\" --epsilon 0.02 --trials 50 --seed 4");
    ASSERT_EQ(k.code, 0) << k.out;
    EXPECT_NE(k.out.find("violations 0\n"), std::string::npos) << k.out;
}

TEST(Samples, AllLoad) {
    int seen = 0;
    for (const auto& e : fs::directory_iterator(FLATKNOT_SAMPLES)) {
        if (e.path().extension() != ".json") continue;
        ++seen;
        if (e.path().filename().string().rfind("invalid_", 0) == 0) {
            EXPECT_THROW(read_core_file(e.path().string()), Error) << e.path();
        } else {
            EXPECT_NO_THROW(read_core_file(e.path().string())) << e.path();
        }
    }
    EXPECT_GT(seen, 0);
}
