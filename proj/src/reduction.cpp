#include "stratifold/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace stratifold {

LabelledGraph normalize_signs(const LabelledGraph& g)
{
    LabelledGraph out = g;
    auto tree = spanning_tree(g);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (tree[e]) {
            out.set_sign(e, +1);
            continue;
        }
        int product = 1;
        for (int f : fundamental_cycle(g, tree, e))
            product *= g.edge(f).sign;
        out.set_sign(e, product);
    }
    return out;
}

LabelledGraph prune(const LabelledGraph& g, std::vector<std::string>* log)
{
    std::vector<bool> alive(g.num_vertices(), true);
    std::vector<int> degree(g.num_vertices());
    for (int f = 0; f < g.num_vertices(); ++f)
        degree[f] = g.degree(g.from_flat(f));
    std::vector<bool> edge_alive(g.num_edges(), true);

    auto live_edges = [&](Vertex v) {
        std::vector<int> out;
        for (int e : g.incident(v))
            if (edge_alive[e])
                out.push_back(e);
        return out;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int w = 0; w < g.num_whites(); ++w) {
            const int fw = g.flat(white(w));
            if (!alive[fw] || degree[fw] != 1 || g.whites()[w].genus != 0)
                continue;
            int e = live_edges(white(w)).front();
            if (g.edge(e).label != 1)
                continue;
            Vertex b = g.black_end(e);
            const int fb = g.flat(b);
            if (degree[fb] != 2)
                continue;
            auto be = live_edges(b);
            int other = be[0] == e ? be[1] : be[0];
            if (g.edge(other).label != 2 || g.edge(other).white == w)
                continue;
            Vertex u = g.white_end(other);
            alive[fw] = alive[fb] = false;
            edge_alive[e] = edge_alive[other] = false;
            --degree[g.flat(u)];
            if (log)
                log->push_back("prune " + g.id(b) + " " + g.id(white(w)) + " from " + g.id(u));
            changed = true;
        }
    }
    return induced_subgraph(g, alive, &edge_alive);
}

SplitResult split_at_black(const LabelledGraph& g, int b)
{
    const int d = g.degree(black(b));
    if (d < 2)
        throw StratifoldError(ErrorCode::DegreeTooSmall,
                              "black '" + g.blacks()[b].id + "' has degree " + std::to_string(d) + " < 2");
    std::vector<bool> keep(g.num_vertices(), true);
    keep[g.flat(black(b))] = false;
    auto comp = component_labels(g, &keep);
    int count = 0;
    for (int c : comp)
        count = std::max(count, c + 1);
    SplitResult out;
    for (int k = 0; k < count; ++k) {
        std::vector<bool> mask(g.num_vertices());
        for (int f = 0; f < g.num_vertices(); ++f)
            mask[f] = comp[f] == k;
        out.components.push_back(induced_subgraph(g, mask));
    }
    out.free_rank = d - count;
    return out;
}

namespace {

struct Arm
{
    int edge;                  // edge from the branch black to the root white
    int root;                  // root white
    int r = 0;                 // number of (1 2) pairs beyond the root
    std::vector<int> whites;   // root first
    std::vector<int> blacks;
    std::vector<int> edges;    // including `edge`
};

/// Reads the leg of black b through edge e as 1 (1 2)^r ending at a terminal white.
std::optional<Arm> arm_from(const LabelledGraph& g, int e)
{
    if (g.edge(e).label != 1)
        return std::nullopt;
    Arm arm;
    arm.edge = e;
    arm.root = g.edge(e).white;
    arm.edges.push_back(e);
    int w = arm.root, prev = e;
    for (;;) {
        if (g.whites()[w].genus != 0)
            return std::nullopt;
        arm.whites.push_back(w);
        const auto& inc = g.incident(white(w));
        if (inc.size() == 1)
            return arm;
        if (inc.size() != 2)
            return std::nullopt;
        int f = inc[0] == prev ? inc[1] : inc[0];
        if (g.edge(f).label != 1)
            return std::nullopt;
        int c = g.edge(f).black;
        const auto& cinc = g.incident(black(c));
        if (cinc.size() != 2)
            return std::nullopt;
        int h = cinc[0] == f ? cinc[1] : cinc[0];
        if (g.edge(h).label != 2)
            return std::nullopt;
        arm.blacks.push_back(c);
        arm.edges.push_back(f);
        arm.edges.push_back(h);
        ++arm.r;
        prev = h;
        w = g.edge(h).white;
    }
}

struct ArmPair
{
    int toward_cycle;  // edge of b leading to the cycle
    Arm keep;
    Arm drop;
};

std::optional<ArmPair> find_arm_pair(const LabelledGraph& g, int b, const std::vector<int>& dist)
{
    const auto& inc = g.incident(black(b));
    if (inc.size() != 3 || dist[g.flat(black(b))] == 0)
        return std::nullopt;
    int toward = -1;
    for (int e : inc)
        if (toward < 0 || dist[g.flat(g.white_end(e))] < dist[g.flat(g.white_end(toward))])
            toward = e;
    std::vector<Arm> arms;
    for (int e : inc) {
        if (e == toward)
            continue;
        auto arm = arm_from(g, e);
        if (!arm)
            return std::nullopt;
        arms.push_back(*arm);
    }
    if (g.edge(toward).label != 1)
        return std::nullopt;
    bool first_longer = arms[0].r > arms[1].r || (arms[0].r == arms[1].r && arms[0].root > arms[1].root);
    return first_longer ? ArmPair{toward, arms[1], arms[0]} : ArmPair{toward, arms[0], arms[1]};
}

std::vector<int> cycle_distances(const LabelledGraph& g)
{
    auto cyc = cycle_vertices(g);
    return distances_from(g, cyc);
}

}  // namespace

std::vector<int> arm_pair_candidates(const LabelledGraph& g)
{
    std::vector<int> out;
    if (betti1(g) != 1 || count_components(g) != 1)
        return out;
    auto dist = cycle_distances(g);
    for (int b = 0; b < g.num_blacks(); ++b)
        if (find_arm_pair(g, b, dist))
            out.push_back(b);
    return out;
}

LabelledGraph prune_arm_pair(const LabelledGraph& g, int b)
{
    if (count_components(g) != 1 || betti1(g) != 1)
        throw StratifoldError(ErrorCode::PreconditionFailed, "prune_arm_pair needs a connected graph with betti1 = 1");
    if (b < 0 || b >= g.num_blacks())
        throw StratifoldError(ErrorCode::UnknownVertex, "no black vertex with index " + std::to_string(b));
    auto dist = cycle_distances(g);
    auto pair = find_arm_pair(g, b, dist);
    if (!pair)
        throw StratifoldError(ErrorCode::PreconditionFailed,
                              "black '" + g.blacks()[b].id + "' is not an off-cycle branch vertex with two arms");
    for (int e : g.incident(black(b)))
        if (g.edge(e).sign != 1)
            throw StratifoldError(ErrorCode::PreconditionFailed, "arm edges must carry sign +1");
    for (const Arm* arm : {&pair->keep, &pair->drop})
        for (int e : arm->edges)
            if (g.edge(e).sign != 1)
                throw StratifoldError(ErrorCode::PreconditionFailed, "arm edges must carry sign +1");

    const int u = g.edge(pair->toward_cycle).white;
    std::vector<bool> keep(g.num_vertices(), true);
    keep[g.flat(black(b))] = false;
    for (int w : pair->drop.whites)
        keep[g.flat(white(w))] = false;
    for (int c : pair->drop.blacks)
        keep[g.flat(black(c))] = false;
    const int root = pair->keep.root;
    keep[g.flat(white(root))] = false;

    LabelledGraph out = induced_subgraph(g, keep);
    if (pair->keep.r > 0) {
        const Edge& moved = g.edge(pair->keep.edges[1]);
        int new_u = out.find(Colour::White, g.whites()[u].id)->index;
        int new_c = out.find(Colour::Black, g.blacks()[moved.black].id)->index;
        out.add_edge(new_u, new_c, moved.label, moved.sign, moved.id);
    }
    return out;
}

CoreResult core_reduce(const LabelledGraph& input, const SimplyConnectedOracle& oracle)
{
    CoreResult result;
    if (count_components(input) != 1 || betti1(input) != 1 || !is_trivalent(input)) {
        result.status = CoreStatus::Undetermined;
        result.reason = "core reduction needs a connected trivalent graph with betti1 = 1";
        return result;
    }
    LabelledGraph g = prune(input, &result.steps);

    for (int stage = 1;; ++stage) {
        auto dist = cycle_distances(g);
        std::vector<bool> terminal(g.num_vertices(), false);
        for (Vertex v : terminal_vertices(g))
            terminal[g.flat(v)] = true;

        struct Candidate
        {
            int b;
            int w;                      // terminal white removed with b
            std::vector<bool> subtree;  // T, over flat vertices
        };
        std::vector<Candidate> candidates;
        std::vector<bool> is_candidate(g.num_blacks(), false);
        for (int b = 0; b < g.num_blacks(); ++b) {
            const int fb = g.flat(black(b));
            if (dist[fb] == 0 || g.degree(black(b)) < 3)
                continue;
            int w = -1;
            for (int e : g.incident(black(b)))
                if (terminal[g.flat(g.white_end(e))] && (w < 0 || g.edge(e).white < w))
                    w = g.edge(e).white;
            if (w < 0)
                continue;
            std::vector<bool> keep(g.num_vertices(), true);
            keep[fb] = false;
            auto comp = component_labels(g, &keep);
            int cycle_comp = -1, w_comp = comp[g.flat(white(w))];
            for (int f = 0; f < g.num_vertices(); ++f)
                if (dist[f] == 0)
                    cycle_comp = comp[f];
            Candidate c{b, w, std::vector<bool>(g.num_vertices(), false)};
            for (int f = 0; f < g.num_vertices(); ++f)
                c.subtree[f] = comp[f] >= 0 && comp[f] != cycle_comp && comp[f] != w_comp;
            candidates.push_back(std::move(c));
            is_candidate[b] = true;
        }

        std::vector<Candidate> outer;
        for (auto& c : candidates) {
            bool outermost = true;
            for (const auto& other : candidates)
                if (other.b != c.b && c.subtree[g.flat(black(other.b))])
                    outermost = false;
            if (outermost)
                outer.push_back(std::move(c));
        }
        if (outer.empty()) {
            result.status = CoreStatus::Core;
            result.core = g;
            result.steps.push_back("core reached after " + std::to_string(stage - 1) + " stages");
            return result;
        }
        std::stable_sort(outer.begin(), outer.end(), [&](const Candidate& a, const Candidate& c) {
            int da = dist[g.flat(black(a.b))], dc = dist[g.flat(black(c.b))];
            return da != dc ? da > dc : a.b < c.b;
        });

        std::vector<bool> keep(g.num_vertices(), true);
        for (const auto& c : outer) {
            LabelledGraph t = induced_subgraph(g, c.subtree);
            std::string where = "T at " + g.blacks()[c.b].id + " (" + std::to_string(t.num_whites()) + " whites, " +
                                std::to_string(t.num_blacks()) + " blacks)";
            Verdict v = oracle(t);
            if (v.answer == Answer::No) {
                result.status = CoreStatus::Empty;
                result.reason = where + " is not simply connected";
                result.steps.push_back("stage " + std::to_string(stage) + ": " + result.reason);
                return result;
            }
            if (v.answer == Answer::Undetermined) {
                result.status = CoreStatus::Undetermined;
                result.reason = "simple connectivity of " + where + " undetermined" +
                                (v.blocking_query.empty() ? "" : ": " + v.blocking_query);
                result.steps.push_back("stage " + std::to_string(stage) + ": " + result.reason);
                return result;
            }
            keep[g.flat(black(c.b))] = false;
            keep[g.flat(white(c.w))] = false;
            for (int f = 0; f < g.num_vertices(); ++f)
                if (c.subtree[f])
                    keep[f] = false;
            result.steps.push_back("stage " + std::to_string(stage) + ": removed star of " + g.blacks()[c.b].id +
                                   " with terminal " + g.whites()[c.w].id + " and simply connected " + where);
        }
        g = prune(induced_subgraph(g, keep), &result.steps);
    }
}

std::string format_steps(const CoreResult& r)
{
    std::string out;
    for (const auto& s : r.steps)
        out += s + '\n';
    switch (r.status) {
    case CoreStatus::Core: out += "status core\n"; break;
    case CoreStatus::Empty: out += "status empty\n"; break;
    case CoreStatus::Undetermined: out += "status undetermined: " + r.reason + '\n'; break;
    }
    return out;
}

}  // namespace stratifold
