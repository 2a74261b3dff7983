#include "lidcol/cli.hpp"

#include "lidcol/construct.hpp"
#include "lidcol/exact_solver.hpp"
#include "lidcol/io.hpp"
#include "lidcol/special_graphs.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace lidcol::cli {

namespace {

namespace fs = std::filesystem;

struct GenArgs {
    std::string type;
    std::vector<int> params;
    std::uint64_t seed = 1;
};

struct ColorArgs {
    std::string mode = "lid";
    bool chordal = false;
    std::string graph;
};

struct VerifyArgs {
    std::string mode = "lid";
    std::string graph;
    std::string colouring;
};

struct ExactArgs {
    std::string mode = "lid";
    std::string graph;
    int max_k = 0;
    double time_limit = 0;
    std::uint64_t node_limit = 0;
    std::string witness;
};

struct BenchArgs {
    std::string dir;
    std::string mode = "lid";
    bool chordal = false;
    int exact_max_n = 12;
    double exact_time_limit = 10;
};

void need_params(const GenArgs &a, std::size_t count, const char *usage)
{
    if (a.params.size() != count)
        throw InputError(std::string("usage: gen ") + usage);
}

Graph generate(const GenArgs &a)
{
    if (a.type == "cycle") {
        need_params(a, 1, "cycle N");
        return gen_cycle(a.params[0]);
    }
    if (a.type == "path") {
        need_params(a, 1, "path N");
        return gen_path(a.params[0]);
    }
    if (a.type == "complete") {
        need_params(a, 1, "complete K");
        return gen_complete(a.params[0]);
    }
    if (a.type == "random") {
        need_params(a, 2, "random N DELTA [--seed S]");
        return gen_random_connected(a.params[0], a.params[1], a.seed);
    }
    if (a.type == "ktree") {
        need_params(a, 2, "ktree N K [--seed S]");
        return gen_ktree(a.params[0], a.params[1], a.seed);
    }
    if (a.type == "projective") {
        need_params(a, 1, "projective Q");
        return gen_projective_incidence(a.params[0]);
    }
    throw InputError("unknown graph type '" + a.type +
                     "' (cycle, path, complete, random, ktree, projective)");
}

struct Coloured {
    Colouring colouring;
    BoundInfo bound;
};

Coloured colour_graph(const Graph &g, Mode mode, bool chordal)
{
    if (chordal) {
        if (mode != Mode::slid)
            throw InputError("--chordal colours in slid mode only");
        auto bound = applicable_bound(g, mode, true);
        return {slid_colour_chordal(g), bound};
    }
    auto bound = applicable_bound(g, mode);
    return {mode == Mode::lid ? lid_colour(g) : slid_colour(g), bound};
}

void print_violations(const VerificationReport &r, std::ostream &err)
{
    for (auto [u, v] : r.improper_edges)
        err << "improper edge: " << u << ' ' << v << '\n';
    for (auto [u, v] : r.bad_edges)
        err << "bad edge: " << u << ' ' << v << '\n';
    if (r.mode == Mode::slid) {
        for (auto [v, c] : r.injectivity_violations)
            err << "repeated colour " << c << " in N[" << v << "]\n";
        for (auto [u, v] : r.distance2_violations)
            err << "distance-2 clash: " << u << ' ' << v << '\n';
    }
}

int cmd_gen(const GenArgs &a, std::ostream &out)
{
    out << serialize_graph(generate(a));
    return ok;
}

int cmd_color(const ColorArgs &a, std::ostream &out, std::ostream &err)
{
    const Mode mode = parse_mode(a.mode);
    auto g = read_graph_file(a.graph);
    auto [colouring, bound] = colour_graph(g, mode, a.chordal);
    auto report = verify(g, colouring, mode);

    err << "mode: " << to_string(mode) << '\n'
        << "vertices: " << g.n() << '\n'
        << "edges: " << g.m() << '\n'
        << "max degree: " << bound.max_degree << '\n';
    if (bound.kind == BoundKind::chordal)
        err << "clique number: " << bound.clique_number << '\n';
    else
        err << "degeneracy: " << bound.degeneracy << '\n';
    err << "bound: " << bound.value << " (" << to_string(bound.kind) << ")\n"
        << "palette: " << colouring.palette_size() << '\n'
        << "colours used: " << colouring.colours_used() << '\n'
        << "verified: " << (report.accepted() ? "yes" : "no") << '\n';
    if (!report.accepted()) {
        print_violations(report, err);
        return invalid;
    }
    out << serialize_colouring(colouring);
    return ok;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out)
{
    const Mode mode = parse_mode(a.mode);
    auto g = read_graph_file(a.graph);
    auto c = read_colouring_file(a.colouring);
    if (c.size() != g.n())
        throw InputError("graph has " + std::to_string(g.n()) + " vertices but the colouring has " +
                         std::to_string(c.size()));
    auto report = verify(g, c, mode);
    out << (report.accepted() ? "valid " : "invalid ") << to_string(mode)
        << "-colouring, colours used " << c.colours_used() << '\n';
    print_violations(report, out);
    return report.accepted() ? ok : invalid;
}

int cmd_exact(const ExactArgs &a, std::ostream &out, std::ostream &err)
{
    const Mode mode = parse_mode(a.mode);
    auto g = read_graph_file(a.graph);
    SearchBudget budget;
    budget.max_palette = a.max_k;
    if (a.time_limit > 0)
        budget.time_limit = a.time_limit;
    if (a.node_limit > 0)
        budget.node_limit = a.node_limit;
    auto result = min_number(g, mode, budget);
    err << "search nodes: " << result.nodes << '\n';
    if (result.status != SearchStatus::exact) {
        out << "inconclusive\n";
        err << "no colouring found below " << result.lower_bound << " colours"
            << (result.status == SearchStatus::lower_bound_only ? " (palette cap reached)"
                                                                : " (budget exhausted)")
            << '\n';
        return inconclusive;
    }
    out << *result.value << '\n';
    if (!a.witness.empty()) {
        std::ofstream file(a.witness);
        if (!file)
            throw InputError("cannot write " + a.witness);
        file << serialize_colouring(*result.witness);
    }
    return ok;
}

std::string format_ms(double ms)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << ms;
    return s.str();
}

int cmd_bench(const BenchArgs &a, std::ostream &out, std::ostream &err)
{
    const Mode mode = parse_mode(a.mode);
    if (!fs::is_directory(a.dir))
        throw InputError("not a directory: " + a.dir);
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(a.dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::ranges::sort(files, {}, [](const fs::path &p) { return p.filename().string(); });

    out << "name\tn\tm\tmax_degree\t" << (a.chordal ? "omega" : "degeneracy")
        << "\tcolours\tbound\texact\ttime_ms\n";
    bool failed = false;
    for (const auto &path : files) {
        const auto name = path.filename().string();
        try {
            auto g = read_graph_file(path);
            auto start = std::chrono::steady_clock::now();
            auto [colouring, bound] = colour_graph(g, mode, a.chordal);
            auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            if (!verify(g, colouring, mode).accepted())
                throw std::logic_error("constructed colouring failed verification");
            std::string exact = "-";
            if (g.n() <= a.exact_max_n) {
                SearchBudget budget;
                budget.time_limit = a.exact_time_limit;
                auto r = min_number(g, mode, budget);
                if (r.status == SearchStatus::exact)
                    exact = std::to_string(*r.value);
            }
            out << name << '\t' << g.n() << '\t' << g.m() << '\t' << bound.max_degree << '\t'
                << (a.chordal ? bound.clique_number : bound.degeneracy) << '\t'
                << colouring.colours_used() << '\t' << bound.value << '\t' << exact << '\t'
                << format_ms(ms) << '\n';
        } catch (const std::exception &e) {
            out << name << "\tERROR\n";
            err << name << ": " << e.what() << '\n';
            failed = true;
        }
    }
    return failed ? invalid : ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Locally identifying colourings: generate, colour, verify, solve exactly"};
    app.require_subcommand(1);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Write a generated graph to standard output");
    gen_cmd->add_option("type", gen.type, "cycle | path | complete | random | ktree | projective")
        ->required();
    gen_cmd->add_option("params", gen.params, "Generator parameters");
    gen_cmd->add_option("--seed", gen.seed, "Seed for random and ktree");

    ColorArgs color;
    auto *color_cmd = app.add_subcommand("color", "Construct a colouring");
    color_cmd->add_option("--mode", color.mode, "lid | slid")->capture_default_str();
    color_cmd->add_flag("--chordal", color.chordal, "Use the chordal construction (slid)");
    color_cmd->add_option("graph", color.graph, "Graph file, - for standard input")->required();

    VerifyArgs ver;
    auto *verify_cmd = app.add_subcommand("verify", "Check a colouring");
    verify_cmd->add_option("--mode", ver.mode, "lid | slid")->capture_default_str();
    verify_cmd->add_option("graph", ver.graph, "Graph file")->required();
    verify_cmd->add_option("colouring", ver.colouring, "Colouring file")->required();

    ExactArgs exact;
    auto *exact_cmd = app.add_subcommand("exact", "Compute the exact minimum palette");
    exact_cmd->add_option("--mode", exact.mode, "lid | slid")->capture_default_str();
    exact_cmd->add_option("graph", exact.graph, "Graph file")->required();
    exact_cmd->add_option("--max-k", exact.max_k, "Largest palette to try (default n)");
    exact_cmd->add_option("--time-limit", exact.time_limit, "Seconds");
    exact_cmd->add_option("--node-limit", exact.node_limit, "Search nodes");
    exact_cmd->add_option("--witness", exact.witness, "Write an optimal colouring here");

    BenchArgs bench;
    auto *bench_cmd = app.add_subcommand("bench", "Colour every graph file in a directory");
    bench_cmd->add_option("dir", bench.dir, "Corpus directory")->required();
    bench_cmd->add_option("--mode", bench.mode, "lid | slid")->capture_default_str();
    bench_cmd->add_flag("--chordal", bench.chordal, "Use the chordal construction");
    bench_cmd->add_option("--exact-max-n", bench.exact_max_n,
                          "Run the exact solver on graphs up to this size")
        ->capture_default_str();
    bench_cmd->add_option("--exact-time-limit", bench.exact_time_limit, "Seconds per graph")
        ->capture_default_str();

    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*gen_cmd)
            return cmd_gen(gen, out);
        if (*color_cmd)
            return cmd_color(color, out, err);
        if (*verify_cmd)
            return cmd_verify(ver, out);
        if (*exact_cmd)
            return cmd_exact(exact, out, err);
        if (*bench_cmd)
            return cmd_bench(bench, out, err);
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

} // namespace lidcol::cli
