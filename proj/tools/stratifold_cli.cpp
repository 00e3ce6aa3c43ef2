#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stratifold/classify.hpp"
#include "stratifold/enumerate.hpp"
#include "stratifold/homology.hpp"
#include "stratifold/io.hpp"
#include "stratifold/presentation.hpp"
#include "stratifold/reduction.hpp"

using namespace stratifold;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndetermined = 2;

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

LabelledGraph load(const std::string& path, bool check = true)
{
    LabelledGraph g = parse(read_input(path));
    if (check)
        require_valid(g);
    return g;
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

/// "N,M": maximum cosets, maximum Tietze steps.
OracleLimits parse_limits(const std::string& text)
{
    OracleLimits limits;
    std::istringstream in(text);
    char comma = 0;
    long long cosets = 0, steps = 0;
    if (!(in >> cosets >> comma >> steps) || comma != ',' || cosets <= 0 || steps < 0 || !(in >> std::ws).eof())
        throw std::runtime_error("limits must be N,M with N > 0 and M >= 0, got '" + text + "'");
    limits.max_cosets = static_cast<std::size_t>(cosets);
    limits.max_tietze_steps = static_cast<std::size_t>(steps);
    return limits;
}

OracleLimits resolve_limits(const std::string& flag)
{
    if (!flag.empty())
        return parse_limits(flag);
    if (const char* env = std::getenv("STRATIFOLD_ORACLE_LIMITS"); env && *env)
        return parse_limits(env);
    return {};
}

std::string vertex_list(const LabelledGraph& g, const std::vector<Vertex>& vs)
{
    std::string out;
    for (Vertex v : vs)
        out += (out.empty() ? "" : " ") + g.id(v);
    return out.empty() ? "-" : out;
}

int report(const Verdict& v, bool trace)
{
    std::cout << to_string(v.answer) << "\n";
    if (trace)
        std::cout << format_trace(v);
    if (v.answer == Answer::Undetermined) {
        if (!v.blocking_query.empty())
            std::cout << "blocking: " << v.blocking_query << "\n";
        return kExitUndetermined;
    }
    return kExitOk;
}

int cmd_validate(const std::string& path)
{
    ValidationResult r = validate(load(path, false));
    for (const auto& w : r.warnings)
        std::cout << "warning: " << w << "\n";
    for (const auto& e : r.errors)
        std::cout << "error: " << to_string(e.code) << ": " << e.message << "\n";
    std::cout << (r.ok() ? "valid" : "invalid") << "\n";
    return r.ok() ? kExitOk : kExitError;
}

int cmd_info(const std::string& path)
{
    LabelledGraph g = load(path);
    StructureReport s = structure_report(g);
    std::cout << "whites: " << g.num_whites() << "\n"
              << "blacks: " << g.num_blacks() << "\n"
              << "edges: " << g.num_edges() << "\n"
              << "betti1: " << s.betti1 << "\n"
              << "tree: " << (s.is_tree ? "yes" : "no") << "\n"
              << "trivalent: " << (s.trivalent ? "yes" : "no") << "\n"
              << "black branch vertices: " << vertex_list(g, s.black_branch_vertices) << "\n"
              << "white branch vertices: " << vertex_list(g, s.white_branch_vertices) << "\n"
              << "terminal vertices: " << vertex_list(g, s.terminal_vertices) << "\n";
    if (s.cycle_edges) {
        std::string ids;
        for (int e : *s.cycle_edges)
            ids += (ids.empty() ? "" : " ") + g.edge(e).id;
        std::cout << "cycle edges: " << ids << "\n";
    }
    return kExitOk;
}

int cmd_prune(const std::string& path, const std::string& out)
{
    std::vector<std::string> log;
    LabelledGraph pruned = prune(load(path), &log);
    for (const auto& line : log)
        std::cerr << line << "\n";
    write_output(out, serialize(pruned));
    return kExitOk;
}

int cmd_core(const std::string& path, const std::string& out, bool trace, const OracleLimits& limits)
{
    LabelledGraph g = prune(normalize_signs(load(path)));
    if (betti1(g) != 1 || !is_trivalent(g))
        throw StratifoldError(ErrorCode::PreconditionFailed, "core needs a trivalent graph with one cycle");
    CoreResult r = core_reduce(g, [&](const LabelledGraph& h) { return simply_connected(h, limits); });
    if (trace)
        std::cerr << format_steps(r);
    switch (r.status) {
    case CoreStatus::Empty:
        std::cout << "empty\n";
        return kExitOk;
    case CoreStatus::Undetermined:
        std::cout << "undetermined\n";
        if (!r.reason.empty())
            std::cout << "blocking: " << r.reason << "\n";
        return kExitUndetermined;
    case CoreStatus::Core:
        write_output(out, serialize(*r.core));
        return kExitOk;
    }
    return kExitError;
}

int cmd_echinus(const std::string& path)
{
    LabelledGraph g = prune(normalize_signs(load(path)));
    if (betti1(g) != 1 || !is_trivalent(g)) {
        std::cout << "not an echinus graph: needs a pruned trivalent graph with one cycle\n";
        return kExitOk;
    }
    EchinusRecognition r = recognize_echinus(g);
    if (!r) {
        std::cout << "not an echinus graph: " << r.reason << "\n";
        return kExitOk;
    }
    std::cout << to_string(*r.params) << "\n";
    return report(echinus_pi1_is_Z(*r.params), true);
}

int cmd_enumerate(const EnumerationBounds& bounds)
{
    bool first = true;
    std::size_t n = enumerate_graphs(bounds, [&](const LabelledGraph& g) {
        if (!first)
            std::cout << "\n";
        first = false;
        std::cout << serialize(g);
    });
    std::cerr << n << " graphs\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decide whether bicoloured labelled graphs of 2-stratifolds have infinite cyclic fundamental group"};
    app.require_subcommand(1);

    std::string path = "-", out, limits_flag;
    bool trace = false;

    auto add_graph_command = [&](const std::string& name, const std::string& help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("graph", path, "graph file, or - for stdin")->capture_default_str();
        return c;
    };

    auto* validate_cmd = add_graph_command("validate", "check the graph is a valid 2-stratifold graph");
    auto* info_cmd = add_graph_command("info", "structure summary");
    auto* h1_cmd = add_graph_command("h1", "first homology group");
    auto* presentation_cmd = add_graph_command("presentation", "presentation of the fundamental group");
    auto* prune_cmd = add_graph_command("prune", "remove prunable terminal edges");
    prune_cmd->add_option("-o,--output", out, "write the graph here instead of stdout");
    auto* core_cmd = add_graph_command("core", "reduce a trivalent graph to its core subgraph");
    core_cmd->add_option("-o,--output", out, "write the core here instead of stdout");
    core_cmd->add_flag("--trace", trace, "print reduction steps to stderr");
    core_cmd->add_option("--limits", limits_flag, "oracle limits N,M (cosets, Tietze steps)");
    auto* decide_z_cmd = add_graph_command("decide-z", "is the fundamental group infinite cyclic?");
    decide_z_cmd->add_flag("--trace", trace, "print the condition trace");
    decide_z_cmd->add_option("--limits", limits_flag, "oracle limits N,M (cosets, Tietze steps)");
    auto* decide_sc_cmd = add_graph_command("decide-sc", "is the 2-stratifold simply connected?");
    decide_sc_cmd->add_flag("--trace", trace, "print the condition trace");
    decide_sc_cmd->add_option("--limits", limits_flag, "oracle limits N,M (cosets, Tietze steps)");
    auto* echinus_cmd = add_graph_command("echinus", "recognize an echinus graph and decide it directly");
    auto* dot_cmd = add_graph_command("export-dot", "Graphviz rendering");

    EnumerationBounds bounds;
    int betti = -1;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list all small valid graphs up to isomorphism");
    enumerate_cmd->add_option("--max-blacks", bounds.max_blacks, "maximum number of black vertices")->required();
    enumerate_cmd->add_option("--max-label", bounds.max_label, "maximum edge label")->required();
    enumerate_cmd->add_option("--max-degree", bounds.max_black_degree, "maximum black degree")->capture_default_str();
    enumerate_cmd->add_flag("--trivalent", bounds.trivalent_only, "trivalent graphs only");
    enumerate_cmd->add_option("--betti1", betti, "0 for trees, 1 for one cycle")->check(CLI::IsMember({0, 1}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(path);
        if (*info_cmd)
            return cmd_info(path);
        if (*h1_cmd) {
            std::cout << to_string(h1(load(path))) << "\n";
            return kExitOk;
        }
        if (*presentation_cmd) {
            std::cout << to_string(pi1_presentation(load(path)));
            return kExitOk;
        }
        if (*prune_cmd)
            return cmd_prune(path, out);
        if (*core_cmd)
            return cmd_core(path, out, trace, resolve_limits(limits_flag));
        if (*decide_z_cmd)
            return report(decide_pi1_Z(load(path), resolve_limits(limits_flag)), trace);
        if (*decide_sc_cmd)
            return report(simply_connected(load(path), resolve_limits(limits_flag)), trace);
        if (*echinus_cmd)
            return cmd_echinus(path);
        if (*dot_cmd) {
            std::cout << export_dot(load(path));
            return kExitOk;
        }
        if (*enumerate_cmd) {
            if (betti >= 0)
                bounds.betti1 = betti;
            return cmd_enumerate(bounds);
        }
    } catch (const StratifoldError& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
