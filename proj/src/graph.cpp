#include "stratifold/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace stratifold {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
        case ErrorCode::NonBipartite: return "NonBipartite";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::BlackDegreeSumBelow3: return "BlackDegreeSumBelow3";
        case ErrorCode::NonPositiveLabel: return "NonPositiveLabel";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::InvalidSign: return "InvalidSign";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::NotCircleHomotopy: return "NotCircleHomotopy";
        case ErrorCode::NonzeroGenus: return "NonzeroGenus";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NotLinear: return "NotLinear";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::BadLabel: return "BadLabel";
        case ErrorCode::BoundsTooLarge: return "BoundsTooLarge";
    }
    return "Unknown";
}

int LabelledGraph::add_white(std::string id, int genus)
{
    whites_.push_back({std::move(id), genus});
    white_edges_.emplace_back();
    return num_whites() - 1;
}

int LabelledGraph::add_black(std::string id)
{
    blacks_.push_back({std::move(id)});
    black_edges_.emplace_back();
    return num_blacks() - 1;
}

int LabelledGraph::add_edge(int w, int b, int label, int sign, std::string id)
{
    if (w < 0 || w >= num_whites() || b < 0 || b >= num_blacks())
        throw std::out_of_range("add_edge: endpoint index out of range");
    int e = num_edges();
    if (id.empty())
        id = "e" + std::to_string(e);
    edges_.push_back({std::move(id), w, b, label, sign});
    white_edges_[w].push_back(e);
    black_edges_[b].push_back(e);
    return e;
}

const std::vector<int>& LabelledGraph::incident(Vertex v) const
{
    return v.colour == Colour::White ? white_edges_.at(v.index) : black_edges_.at(v.index);
}

Vertex LabelledGraph::other_end(int e, Vertex v) const
{
    const Edge& ed = edges_.at(e);
    return v.colour == Colour::White ? black(ed.black) : white(ed.white);
}

const std::string& LabelledGraph::id(Vertex v) const
{
    return v.colour == Colour::White ? whites_.at(v.index).id : blacks_.at(v.index).id;
}

std::optional<Vertex> LabelledGraph::find(Colour colour, std::string_view id) const
{
    if (colour == Colour::White) {
        for (int i = 0; i < num_whites(); ++i)
            if (whites_[i].id == id)
                return white(i);
    } else {
        for (int i = 0; i < num_blacks(); ++i)
            if (blacks_[i].id == id)
                return black(i);
    }
    return std::nullopt;
}

LabelledGraph induced_subgraph(const LabelledGraph& g, const std::vector<bool>& keep_vertex,
                               const std::vector<bool>* keep_edge)
{
    LabelledGraph out;
    std::vector<int> wmap(g.num_whites(), -1), bmap(g.num_blacks(), -1);
    for (int i = 0; i < g.num_whites(); ++i)
        if (keep_vertex[g.flat(white(i))])
            wmap[i] = out.add_white(g.whites()[i].id, g.whites()[i].genus);
    for (int i = 0; i < g.num_blacks(); ++i)
        if (keep_vertex[g.flat(black(i))])
            bmap[i] = out.add_black(g.blacks()[i].id);
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (keep_edge && !(*keep_edge)[e])
            continue;
        if (wmap[ed.white] < 0 || bmap[ed.black] < 0)
            continue;
        out.add_edge(wmap[ed.white], bmap[ed.black], ed.label, ed.sign, ed.id);
    }
    return out;
}

std::vector<int> component_labels(const LabelledGraph& g, const std::vector<bool>* keep_vertex,
                                  const std::vector<bool>* keep_edge)
{
    const int n = g.num_vertices();
    std::vector<int> label(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0 || (keep_vertex && !(*keep_vertex)[s]))
            continue;
        std::deque<int> queue{s};
        label[s] = next;
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            Vertex v = g.from_flat(f);
            for (int e : g.incident(v)) {
                if (keep_edge && !(*keep_edge)[e])
                    continue;
                int u = g.flat(g.other_end(e, v));
                if (label[u] >= 0 || (keep_vertex && !(*keep_vertex)[u]))
                    continue;
                label[u] = next;
                queue.push_back(u);
            }
        }
        ++next;
    }
    return label;
}

int count_components(const LabelledGraph& g)
{
    auto labels = component_labels(g);
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int betti1(const LabelledGraph& g)
{
    return g.num_edges() - g.num_vertices() + count_components(g);
}

std::vector<bool> spanning_tree(const LabelledGraph& g)
{
    std::vector<bool> in_tree(g.num_edges(), false);
    std::vector<bool> seen(g.num_vertices(), false);
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (seen[s])
            continue;
        seen[s] = true;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            Vertex v = g.from_flat(f);
            for (int e : g.incident(v)) {
                int u = g.flat(g.other_end(e, v));
                if (seen[u])
                    continue;
                seen[u] = true;
                in_tree[e] = true;
                queue.push_back(u);
            }
        }
    }
    return in_tree;
}

std::vector<int> fundamental_cycle(const LabelledGraph& g, const std::vector<bool>& tree, int edge)
{
    // Path in the tree between the endpoints, found by BFS restricted to tree edges.
    const int start = g.flat(g.white_end(edge));
    const int goal = g.flat(g.black_end(edge));
    std::vector<int> via(g.num_vertices(), -2);
    via[start] = -1;
    std::deque<int> queue{start};
    while (!queue.empty() && via[goal] == -2) {
        int f = queue.front();
        queue.pop_front();
        Vertex v = g.from_flat(f);
        for (int e : g.incident(v)) {
            if (!tree[e])
                continue;
            int u = g.flat(g.other_end(e, v));
            if (via[u] != -2)
                continue;
            via[u] = e;
            queue.push_back(u);
        }
    }
    if (via[goal] == -2)
        throw StratifoldError(ErrorCode::PreconditionFailed, "fundamental_cycle: endpoints not joined by the tree");
    std::vector<int> cycle{edge};
    for (int f = goal; via[f] >= 0;) {
        int e = via[f];
        cycle.push_back(e);
        f = g.flat(g.other_end(e, g.from_flat(f)));
    }
    return cycle;
}

namespace {

/// Flat vertices left after repeatedly stripping degree-one vertices.
std::vector<bool> core_mask(const LabelledGraph& g)
{
    const int n = g.num_vertices();
    std::vector<bool> alive(n, true);
    std::vector<int> deg(n);
    std::deque<int> leaves;
    for (int f = 0; f < n; ++f) {
        deg[f] = g.degree(g.from_flat(f));
        if (deg[f] <= 1)
            leaves.push_back(f);
    }
    while (!leaves.empty()) {
        int f = leaves.front();
        leaves.pop_front();
        if (!alive[f])
            continue;
        alive[f] = false;
        Vertex v = g.from_flat(f);
        for (int e : g.incident(v)) {
            int u = g.flat(g.other_end(e, v));
            if (alive[u] && --deg[u] == 1)
                leaves.push_back(u);
        }
    }
    return alive;
}

}  // namespace

Cycle cycle_of(const LabelledGraph& g)
{
    if (g.num_vertices() == 0 || count_components(g) != 1 || betti1(g) != 1)
        throw StratifoldError(ErrorCode::NotCircleHomotopy, "graph is not homotopy equivalent to a circle");
    auto alive = core_mask(g);
    auto on_cycle = [&](int e) {
        return alive[g.flat(g.white_end(e))] && alive[g.flat(g.black_end(e))];
    };
    int start = -1;
    for (int w = 0; w < g.num_whites(); ++w)
        if (alive[g.flat(white(w))]) {
            start = w;
            break;
        }
    Cycle cycle;
    Vertex v = white(start);
    int first = -1;
    for (int e : g.incident(v))
        if (on_cycle(e)) {
            first = e;
            break;
        }
    int e = first;
    do {
        cycle.edges.push_back(e);
        cycle.vertices.push_back(v);
        v = g.other_end(e, v);
        int next = -1;
        for (int f : g.incident(v))
            if (f != e && on_cycle(f)) {
                next = f;
                break;
            }
        e = next;
    } while (e != first);
    return cycle;
}

bool is_trivalent(const LabelledGraph& g)
{
    for (int b = 0; b < g.num_blacks(); ++b) {
        std::vector<int> labels;
        for (int e : g.incident(black(b)))
            labels.push_back(g.edge(e).label);
        std::sort(labels.begin(), labels.end());
        if (labels != std::vector<int>{1, 1, 1} && labels != std::vector<int>{1, 2} && labels != std::vector<int>{3})
            return false;
    }
    return true;
}

std::vector<int> distances_from(const LabelledGraph& g, std::span<const Vertex> targets)
{
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<int> queue;
    for (Vertex t : targets) {
        int f = g.flat(t);
        if (dist[f] < 0) {
            dist[f] = 0;
            queue.push_back(f);
        }
    }
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        Vertex v = g.from_flat(f);
        for (int e : g.incident(v)) {
            int u = g.flat(g.other_end(e, v));
            if (dist[u] < 0) {
                dist[u] = dist[f] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

int distance(const LabelledGraph& g, Vertex x, std::span<const Vertex> targets)
{
    return distances_from(g, targets)[g.flat(x)];
}

int edge_distance(const LabelledGraph& g, int edge, std::span<const Vertex> targets)
{
    auto dist = distances_from(g, targets);
    int a = dist[g.flat(g.white_end(edge))];
    int b = dist[g.flat(g.black_end(edge))];
    if (a < 0 || b < 0)
        return std::max(a, b);
    return std::min(a, b);
}

std::vector<Vertex> endpoints(const LabelledGraph& g, std::span<const int> edges)
{
    std::set<Vertex> out;
    for (int e : edges) {
        out.insert(g.white_end(e));
        out.insert(g.black_end(e));
    }
    return {out.begin(), out.end()};
}

std::vector<Vertex> terminal_vertices(const LabelledGraph& g)
{
    std::vector<Vertex> out;
    for (int f = 0; f < g.num_vertices(); ++f)
        if (g.degree(g.from_flat(f)) == 1)
            out.push_back(g.from_flat(f));
    return out;
}

std::vector<Vertex> cycle_vertices(const LabelledGraph& g)
{
    auto c = cycle_of(g);
    return c.vertices;
}

StructureReport structure_report(const LabelledGraph& g)
{
    StructureReport r;
    r.betti1 = betti1(g);
    r.is_tree = count_components(g) == 1 && r.betti1 == 0;
    if (r.betti1 == 1 && count_components(g) == 1)
        r.cycle_edges = cycle_of(g).edges;
    for (int w = 0; w < g.num_whites(); ++w)
        if (g.degree(white(w)) > 2)
            r.white_branch_vertices.push_back(white(w));
    for (int b = 0; b < g.num_blacks(); ++b)
        if (g.degree(black(b)) > 2)
            r.black_branch_vertices.push_back(black(b));
    r.terminal_vertices = terminal_vertices(g);
    r.trivalent = is_trivalent(g);
    return r;
}

ValidationResult validate(const LabelledGraph& g)
{
    ValidationResult result;
    auto error = [&](ErrorCode c, std::string msg) { result.errors.push_back({c, std::move(msg)}); };

    if (g.num_vertices() == 0)
        error(ErrorCode::EmptyGraph, "graph has no vertices");

    std::set<std::string> seen;
    for (const auto& w : g.whites())
        if (!seen.insert(w.id).second)
            error(ErrorCode::DuplicateId, "duplicate white id '" + w.id + "'");
    seen.clear();
    for (const auto& b : g.blacks())
        if (!seen.insert(b.id).second)
            error(ErrorCode::DuplicateId, "duplicate black id '" + b.id + "'");
    seen.clear();
    for (const auto& e : g.edges())
        if (!seen.insert(e.id).second)
            error(ErrorCode::DuplicateId, "duplicate edge id '" + e.id + "'");

    for (const auto& e : g.edges()) {
        if (e.label < 1)
            error(ErrorCode::NonPositiveLabel, "edge '" + e.id + "' has label " + std::to_string(e.label));
        if (e.sign != 1 && e.sign != -1)
            error(ErrorCode::InvalidSign, "edge '" + e.id + "' has sign " + std::to_string(e.sign));
    }

    for (int b = 0; b < g.num_blacks(); ++b) {
        long sum = 0;
        for (int e : g.incident(black(b)))
            sum += g.edge(e).label;
        if (sum < 3)
            error(ErrorCode::BlackDegreeSumBelow3,
                  "black '" + g.blacks()[b].id + "' has incident label sum " + std::to_string(sum));
    }

    if (g.num_vertices() > 0 && count_components(g) != 1)
        error(ErrorCode::Disconnected, "graph has " + std::to_string(count_components(g)) + " components");

    if (!result.ok())
        return result;

    result.report = structure_report(g);
    if (result.report->is_tree)
        for (const auto& e : g.edges())
            if (e.sign != 1) {
                result.warnings.push_back("tree edge '" + e.id + "' has sign -1; signs are trivial on trees");
                break;
            }
    return result;
}

void require_valid(const LabelledGraph& g)
{
    auto v = validate(g);
    if (!v.ok())
        throw StratifoldError(v.errors.front().code, v.errors.front().message);
}

}  // namespace stratifold
