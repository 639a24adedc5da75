#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_set>

#include "growth/baseline.hpp"
#include "growth/full_doubling.hpp"
#include "growth/general_doubling.hpp"
#include "growth/io.hpp"
#include "growth/oracle.hpp"
#include "growth/rc_doubling.hpp"
#include "growth/rect_partition.hpp"
#include "growth/svg.hpp"

namespace fs = std::filesystem;
using namespace growth;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

Shape load_shape(const std::string& path) { return shape_from_text(slurp(path)); }

void print_shape(const Shape& s, const std::string& format) {
    if (format == "structured")
        std::cout << shape_to_json(s).dump(2) << "\n";
    else
        std::cout << shape_to_ascii(s);
}

// Offset translating `small` onto a subset of `big`, if one exists.
std::optional<GridPoint> embed_offset(const Shape& small, const Shape& big) {
    for (const auto& anchor : big.points()) {
        const GridPoint d = anchor - small.points().front();
        bool ok = true;
        for (const auto& p : small.points())
            if (!big.contains(p + d)) {
                ok = false;
                break;
            }
        if (ok) return d;
    }
    return std::nullopt;
}

void write_frames(const std::vector<Shape>& trace, const std::string& dir) {
    fs::create_directories(dir);
    // Shared canvas: the union bounding box is the final frame's box, since
    // growth only extends the shape.
    const Shape& bounds = trace.back();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%03zu.svg", i);
        const Shape* prev = i == 0 ? nullptr : &trace[i - 1];
        spill((fs::path(dir) / name).string(), render_svg_frame(trace[i], prev, bounds));
    }
}

int run_decide(const std::string& family, const Shape& si, const Shape& sf,
               const std::string& format) {
    if (family == "full") {
        const auto counts = reach_full_doubling(si, sf);
        if (counts) {
            std::cout << "YES (" << counts->horizontal << " horizontal, " << counts->vertical
                      << " vertical)\n";
            return 0;
        }
        std::cout << "NO\n";
        return 1;
    }
    if (family == "rc") {
        const BaselineProfile a = baseline(si);
        const BaselineProfile b = baseline(sf);
        auto show = [&](const char* tag, const BaselineProfile& p) {
            std::cout << tag << " baseline:\n";
            print_shape(p.baseline, format);
            std::cout << tag << " column multiplicities:";
            for (int m : p.col_mult) std::cout << ' ' << m;
            std::cout << "\n" << tag << " row multiplicities:";
            for (int m : p.row_mult) std::cout << ' ' << m;
            std::cout << "\n";
        };
        show("initial", a);
        show("target", b);
        const bool yes = decide_rc(si, sf);
        std::cout << (yes ? "YES" : "NO") << "\n";
        return yes ? 0 : 1;
    }
    // General doubling: decidable here for a singleton initial shape or an
    // initial shape embeddable in the target.
    if (si.size() == 1 || embed_offset(si, sf)) {
        std::cout << "YES\n";
        return 0;
    }
    throw ParseError(
        "deciding general doubling for a non-embeddable multi-node initial shape is not "
        "supported");
}

Constructor synthesize(const std::string& family, const std::string& strategy, const Shape& si,
                       const Shape& sf) {
    if (family == "full") {
        const auto counts = reach_full_doubling(si, sf);
        if (!counts) throw OpError("target not reachable by full doubling");
        Constructor c{si, {}};
        for (int i = 0; i < counts->horizontal; ++i)
            c.steps.push_back(FullDoublingOp{Direction::East});
        for (int i = 0; i < counts->vertical; ++i)
            c.steps.push_back(FullDoublingOp{Direction::North});
        return c;
    }
    if (family == "rc") return synthesize_rc(si, sf);

    if (strategy == "bfs") {
        if (const auto d = embed_offset(si, sf))
            return bfs_constructor(translated(si, d->x, d->y), sf);
        throw OpError("bfs strategy needs the initial shape to embed into the target");
    }
    if (si.size() != 1)
        throw OpError("the " + strategy + " strategy builds from a singleton initial shape");
    if (strategy == "baseline") return baseline_constructor(sf);
    return partition_constructor(sf);
}

int run_bench(unsigned seed, int cases);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"growth processes on the square grid: deciders, constructors, partition"};
    app.require_subcommand(1);

    std::string decide_family = "rc", synth_family = "doubling";
    std::string strategy = "partition", format = "ascii";
    std::string in_path, target_path, out_path, render_dir;

    const auto families = CLI::IsMember({"full", "rc", "doubling"});

    auto* decide = app.add_subcommand("decide", "decide reachability between two shapes");
    decide->add_option("--family", decide_family, "full | rc | doubling (default rc)")
        ->check(families);
    decide->add_option("--in", in_path, "initial shape file")->required();
    decide->add_option("--target", target_path, "target shape file")->required();
    decide->add_option("--format", format, "ascii | structured")
        ->check(CLI::IsMember({"ascii", "structured"}));

    auto* synth = app.add_subcommand("synthesize", "emit a constructor for a reachable target");
    synth->add_option("--family", synth_family, "full | rc | doubling (default doubling)")
        ->check(families);
    synth->add_option("--strategy", strategy, "bfs | baseline | partition (doubling family)")
        ->check(CLI::IsMember({"bfs", "baseline", "partition"}));
    synth->add_option("--in", in_path, "initial shape file")->required();
    synth->add_option("--target", target_path, "target shape file")->required();
    synth->add_option("--out", out_path, "constructor output file");

    auto* sim = app.add_subcommand("simulate", "replay a constructor and record the trace");
    sim->add_option("--in", in_path, "constructor file")->required();
    sim->add_option("--out", out_path, "trace output file");
    sim->add_option("--render", render_dir, "directory for one SVG frame per time-step");

    auto* part = app.add_subcommand("partition", "minimum rectangle partition of a shape");
    part->add_option("--in", in_path, "shape file")->required();
    part->add_option("--out", out_path, "partition output file");

    auto* rend = app.add_subcommand("render", "render a shape or trace to SVG frames");
    rend->add_option("--in", in_path, "shape or trace file")->required();
    rend->add_option("--out", render_dir, "output directory")->required();

    unsigned bench_seed = 7;
    int bench_cases = 25;
    auto* bench = app.add_subcommand("bench", "constructor length benchmarks against bounds");
    bench->add_option("--seed", bench_seed, "corpus seed");
    bench->add_option("--cases", bench_cases, "cases per family");

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed())
            return run_decide(decide_family, load_shape(in_path), load_shape(target_path), format);

        if (synth->parsed()) {
            Constructor c = [&] {
                try {
                    return synthesize(synth_family, strategy, load_shape(in_path),
                                      load_shape(target_path));
                } catch (const OpError& e) {
                    std::cerr << "refused: " << e.what() << "\n";
                    std::exit(1);
                }
            }();
            std::cout << c.steps.size() << " steps\n";
            if (!out_path.empty()) spill(out_path, constructor_to_json(c).dump(2) + "\n");
            return 0;
        }

        if (sim->parsed()) {
            const Constructor c = constructor_from_json(parse_json(slurp(in_path)));
            const auto trace = [&] {
                try {
                    return replay(c);
                } catch (const ReplayError& e) {
                    std::cerr << "replay failed at " << e.what() << "\n";
                    std::exit(1);
                }
            }();
            std::cout << trace.size() - 1 << " steps, final size " << trace.back().size() << "\n";
            if (!out_path.empty()) spill(out_path, trace_to_json(trace).dump(2) + "\n");
            if (!render_dir.empty()) write_frames(trace, render_dir);
            return 0;
        }

        if (part->parsed()) {
            const RectPartition p = min_partition(load_shape(in_path));
            std::cout << p.rects.size() << "\n";
            if (!out_path.empty()) spill(out_path, partition_to_json(p).dump(2) + "\n");
            return 0;
        }

        if (rend->parsed()) {
            const std::string text = slurp(in_path);
            std::vector<Shape> frames;
            const auto first = text.find_first_not_of(" \t\r\n");
            if (first != std::string::npos && text[first] == '{') {
                const nlohmann::json j = parse_json(text);
                if (j.contains("frames"))
                    frames = trace_from_json(j);
                else
                    frames.push_back(shape_from_json(j));
            } else {
                frames.push_back(shape_from_ascii(text));
            }
            write_frames(frames, render_dir);
            std::cout << frames.size() << " frames\n";
            return 0;
        }

        if (bench->parsed()) return run_bench(bench_seed, bench_cases);
    } catch (const ParseError& e) {
        if (e.line > 0)
            std::cerr << "input error at line " << e.line << ", column " << e.col << ": "
                      << e.what() << "\n";
        else
            std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ReplayError& e) {
        std::cerr << "replay failed at " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

namespace {

// Deterministic random connected shape (mirrors the test corpus generator).
Shape bench_shape(std::mt19937& rng, int n) {
    std::vector<GridPoint> pts{{0, 0}};
    std::unordered_set<GridPoint, PointHash> used{{0, 0}};
    while (static_cast<int>(pts.size()) < n) {
        const GridPoint base =
            pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
        const GridPoint cand =
            base + unit(kAllDirections[std::uniform_int_distribution<int>(0, 3)(rng)]);
        if (used.insert(cand).second) pts.push_back(cand);
    }
    std::sort(pts.begin(), pts.end());
    return normalize(Shape::unchecked(std::move(pts)));
}

int ceil_log2(int n) {
    int k = 0;
    while ((1 << k) < n) ++k;
    return k;
}

int run_bench(unsigned seed, int cases) {
    std::mt19937 rng(seed);
    int failures = 0;
    std::printf("%-16s %6s %6s %6s  %s\n", "case", "n", "steps", "bound", "result");

    auto report = [&](const std::string& tag, int n, std::size_t steps, int bound, bool ok) {
        std::printf("%-16s %6d %6zu %6d  %s\n", tag.c_str(), n, steps, bound,
                    ok ? "PASS" : "FAIL");
        if (!ok) ++failures;
    };

    for (int i = 0; i < cases; ++i) {
        // RC doubling: random profile pair, bound 2(ceil lg n + 1).
        const Shape base = baseline(bench_shape(rng, 5)).baseline;
        std::vector<int> mi(static_cast<std::size_t>(base.width())),
            mf(static_cast<std::size_t>(base.width()));
        std::vector<int> ri(static_cast<std::size_t>(base.height())),
            rf(static_cast<std::size_t>(base.height()));
        for (std::size_t k = 0; k < mi.size(); ++k) {
            mi[k] = std::uniform_int_distribution<int>(1, 3)(rng);
            mf[k] = mi[k] + std::uniform_int_distribution<int>(0, 5)(rng);
        }
        for (std::size_t k = 0; k < ri.size(); ++k) {
            ri[k] = std::uniform_int_distribution<int>(1, 3)(rng);
            rf[k] = ri[k] + std::uniform_int_distribution<int>(0, 5)(rng);
        }
        const Shape from = BaselineProfile{base, mi, ri}.expand();
        const Shape to = BaselineProfile{base, mf, rf}.expand();
        const Constructor rc = synthesize_rc(from, to);
        const bool rc_ok = equal_up_to_translation(replay(rc).back(), to) &&
                           rc.steps.size() <=
                               static_cast<std::size_t>(2 * (ceil_log2(to.size()) + 1));
        report("rc/" + std::to_string(i), to.size(), rc.steps.size(),
               2 * (ceil_log2(to.size()) + 1), rc_ok);
    }

    for (int i = 0; i < cases; ++i) {
        const Shape target = bench_shape(rng, 40 + 4 * i);
        const Constructor c = bfs_constructor(Shape::unchecked({target.points().front()}), target);
        const bool ok =
            replay(c).back() == target && c.steps.size() <= static_cast<std::size_t>(4 * target.size());
        report("bfs/" + std::to_string(i), target.size(), c.steps.size(), 4 * target.size(), ok);
    }

    for (int i = 0; i < cases; ++i) {
        const Shape target = bench_shape(rng, 50 + 5 * i);
        const Constructor c = partition_constructor(target);
        const int h = static_cast<int>(min_partition(target).rects.size());
        const int bound = h * (2 * ceil_log2(target.size()) + 6);
        const bool ok = replay(c).back() == target &&
                        c.steps.size() <= static_cast<std::size_t>(bound);
        report("partition/" + std::to_string(i), target.size(), c.steps.size(), bound, ok);
    }

    std::printf("%s\n", failures == 0 ? "all bounds hold" : "BOUND VIOLATIONS");
    return failures == 0 ? 0 : 1;
}

}  // namespace
