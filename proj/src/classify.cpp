#include "stratifold/classify.hpp"

#include <algorithm>
#include <numeric>

#include "stratifold/constructions.hpp"
#include "stratifold/homology.hpp"
#include "stratifold/presentation.hpp"
#include "stratifold/reduction.hpp"

namespace stratifold {

namespace {

Outcome pass_if(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

struct Walk
{
    std::vector<int> labels;
    std::vector<int> edges;
    std::vector<Vertex> vertices;  // vertices[0] is the start
    Vertex end;
};

/// Follows edges from `start` through `edge`, continuing through degree-2
/// vertices; stops at the first vertex of another degree (or back at start).
Walk walk_from(const LabelledGraph& g, Vertex start, int edge)
{
    Walk w;
    w.vertices.push_back(start);
    Vertex at = start;
    int e = edge;
    for (;;) {
        w.edges.push_back(e);
        w.labels.push_back(g.edge(e).label);
        at = g.other_end(e, at);
        w.vertices.push_back(at);
        if (at == start || g.degree(at) != 2)
            break;
        const auto& inc = g.incident(at);
        e = inc[0] == e ? inc[1] : inc[0];
    }
    w.end = at;
    return w;
}

std::optional<std::pair<int, int>> parse_lpq(std::span<const int> l)
{
    std::size_t i = 0;
    int p = 0, q = 0;
    while (i + 1 < l.size() && l[i] == 1 && l[i + 1] == 2) {
        ++p;
        i += 2;
    }
    while (i + 1 < l.size() && l[i] == 2 && l[i + 1] == 1) {
        ++q;
        i += 2;
    }
    if (i != l.size())
        return std::nullopt;
    return std::pair{p, q};
}

/// r when the labels read 1 (1 2)^r.
std::optional<int> arm_word(std::span<const int> l)
{
    if (l.empty() || l[0] != 1)
        return std::nullopt;
    auto rest = l.subspan(1);
    auto shape = string_shape(rest);
    if (shape.kind != StringShape::Kind::P)
        return std::nullopt;
    return shape.twos;
}

bool all_genus_zero(const LabelledGraph& g)
{
    return std::all_of(g.whites().begin(), g.whites().end(), [](const WhiteVertex& w) { return w.genus == 0; });
}

int black_terminal_count(const LabelledGraph& g)
{
    int n = 0;
    for (int b = 0; b < g.num_blacks(); ++b)
        if (g.degree(black(b)) == 1)
            ++n;
    return n;
}

}  // namespace

StringShape string_shape(std::span<const int> labels)
{
    StringShape s;
    if (labels.size() % 2 != 0)
        return s;
    bool p = true, q = true;
    for (std::size_t i = 0; i < labels.size(); i += 2) {
        p = p && labels[i] == 1 && labels[i + 1] == 2;
        q = q && labels[i] == 2 && labels[i + 1] == 1;
    }
    if (p)
        s.kind = StringShape::Kind::P;
    else if (q)
        s.kind = StringShape::Kind::Q;
    else
        return s;
    s.twos = static_cast<int>(labels.size() / 2);
    return s;
}

bool is_linear(const LabelledGraph& g)
{
    if (g.num_vertices() == 0 || count_components(g) != 1 || betti1(g) != 0)
        return false;
    for (int f = 0; f < g.num_vertices(); ++f)
        if (g.degree(g.from_flat(f)) > 2)
            return false;
    return true;
}

std::optional<std::pair<int, int>> is_Lpq(const LabelledGraph& g)
{
    if (!is_linear(g))
        throw StratifoldError(ErrorCode::NotLinear, "graph is not linear");
    if (!all_genus_zero(g))
        return std::nullopt;
    if (g.num_vertices() == 1)
        return g.num_whites() == 1 ? std::optional(std::pair{0, 0}) : std::nullopt;
    if (black_terminal_count(g) > 0)
        return std::nullopt;
    int start = -1;
    for (int w = 0; w < g.num_whites() && start < 0; ++w)
        if (g.degree(white(w)) == 1)
            start = w;
    Walk walk = walk_from(g, white(start), g.incident(white(start)).front());
    return parse_lpq(walk.labels);
}

bool a_graph_is_simply_connected(const AGraphParams& params)
{
    require_valid(params);
    const int n = params.n();
    for (int s = 0; s + 1 < n; ++s)
        if (params.q[s] > 0)
            for (int t = s + 1; t < n; ++t)
                if (params.p[t] > 0)
                    return false;
    return true;
}

std::vector<AGraphParams> recognize_a_graph(const LabelledGraph& g)
{
    std::vector<AGraphParams> out;
    if (g.num_vertices() == 0 || count_components(g) != 1 || betti1(g) != 0 || !all_genus_zero(g))
        return out;
    std::vector<int> branch;
    for (int w = 0; w < g.num_whites(); ++w)
        if (g.degree(white(w)) > 2)
            return out;
    for (int b = 0; b < g.num_blacks(); ++b) {
        int d = g.degree(black(b));
        if (d == 1 || d > 3)
            return out;
        if (d == 3) {
            for (int e : g.incident(black(b)))
                if (g.edge(e).label != 1)
                    return out;
            branch.push_back(b);
        }
    }
    if (branch.empty())
        return out;

    struct ArmChoice
    {
        int edge;
        int r;
        std::vector<Vertex> vertices;  // excluding the branch black
    };
    std::vector<std::vector<ArmChoice>> options(branch.size());
    std::size_t combos = 1;
    for (std::size_t i = 0; i < branch.size(); ++i) {
        for (int e : g.incident(black(branch[i]))) {
            Walk w = walk_from(g, black(branch[i]), e);
            if (g.degree(w.end) != 1)
                continue;
            auto r = arm_word(w.labels);
            if (!r || *r == 0)
                continue;
            options[i].push_back({e, *r, std::vector<Vertex>(w.vertices.begin() + 1, w.vertices.end())});
        }
        if (options[i].empty())
            return out;
        combos *= options[i].size();
        if (combos > 4096)
            return out;
    }

    std::vector<std::size_t> pick(branch.size(), 0);
    for (std::size_t c = 0; c < combos; ++c) {
        std::size_t rest = c;
        for (std::size_t i = 0; i < branch.size(); ++i) {
            pick[i] = rest % options[i].size();
            rest /= options[i].size();
        }
        std::vector<bool> keep(g.num_vertices(), true);
        std::vector<int> arm_of(g.num_blacks(), -1);
        for (std::size_t i = 0; i < branch.size(); ++i) {
            const auto& choice = options[i][pick[i]];
            for (Vertex v : choice.vertices)
                keep[g.flat(v)] = false;
            arm_of[branch[i]] = choice.r;
        }
        std::vector<bool> keep_edge(g.num_edges(), true);
        for (std::size_t i = 0; i < branch.size(); ++i)
            keep_edge[options[i][pick[i]].edge] = false;
        // Walk the spine from its lowest terminal white.
        int start = -1;
        for (int w = 0; w < g.num_whites() && start < 0; ++w) {
            if (!keep[g.flat(white(w))])
                continue;
            int d = 0;
            for (int e : g.incident(white(w)))
                if (keep_edge[e] && keep[g.flat(g.black_end(e))])
                    ++d;
            if (d <= 1)
                start = w;
        }
        if (start < 0)
            continue;
        AGraphParams params;
        std::vector<int> segment;
        bool ok = true;
        Vertex at = white(start);
        int prev = -1;
        int visited = 1;
        for (;;) {
            int next = -1;
            for (int e : g.incident(at))
                if (e != prev && keep_edge[e] && keep[g.flat(g.other_end(e, at))]) {
                    if (next >= 0) {
                        ok = false;
                        break;
                    }
                    next = e;
                }
            if (!ok || next < 0)
                break;
            Vertex to = g.other_end(next, at);
            ++visited;
            if (to.colour == Colour::Black && arm_of[to.index] >= 0) {
                // Close the segment at a branch black; both spine edges must be label 1.
                if (g.edge(next).label != 1) {
                    ok = false;
                    break;
                }
                auto pq = parse_lpq(segment);
                if (!pq) {
                    ok = false;
                    break;
                }
                params.p.push_back(pq->first);
                params.q.push_back(pq->second);
                params.arms.push_back(arm_of[to.index]);
                segment.clear();
                int out_edge = -1;
                for (int e : g.incident(to))
                    if (e != next && keep_edge[e])
                        out_edge = e;
                if (out_edge < 0 || g.edge(out_edge).label != 1) {
                    ok = false;
                    break;
                }
                at = g.other_end(out_edge, to);
                prev = out_edge;
                ++visited;
                continue;
            }
            segment.push_back(g.edge(next).label);
            prev = next;
            at = to;
        }
        int kept = static_cast<int>(std::count(keep.begin(), keep.end(), true));
        if (!ok || visited != kept || at.colour != Colour::White)
            continue;
        auto pq = parse_lpq(segment);
        if (!pq)
            continue;
        params.p.push_back(pq->first);
        params.q.push_back(pq->second);
        out.push_back(std::move(params));
    }
    return out;
}

EchinusRecognition recognize_echinus(const LabelledGraph& g)
{
    EchinusRecognition out;
    if (g.num_vertices() == 0 || count_components(g) != 1 || betti1(g) != 1) {
        out.reason = "not homotopy equivalent to a circle";
        return out;
    }
    if (!is_trivalent(g)) {
        out.reason = "not trivalent";
        return out;
    }
    if (!all_genus_zero(g)) {
        out.reason = "a white vertex has nonzero genus";
        return out;
    }
    Cycle cyc = cycle_of(g);
    std::vector<bool> on_cycle(g.num_vertices(), false), cycle_edge(g.num_edges(), false);
    for (Vertex v : cyc.vertices)
        on_cycle[g.flat(v)] = true;
    for (int e : cyc.edges)
        cycle_edge[e] = true;

    std::vector<int> branch;
    for (int f = 0; f < g.num_vertices(); ++f) {
        Vertex v = g.from_flat(f);
        if (g.degree(v) <= 2)
            continue;
        if (v.colour != Colour::Black || !on_cycle[f]) {
            out.reason = "branch vertex '" + g.id(v) + "' is not a black cycle vertex";
            return out;
        }
        branch.push_back(v.index);
    }
    if (branch.empty()) {
        out.reason = "homeomorphic to a circle";
        return out;
    }
    std::vector<int> branch_pos(g.num_blacks(), -1);
    EchinusParams params;
    params.triples.resize(branch.size());

    // Walk the cycle from the lowest branch black along its lower cycle edge.
    const int b1 = branch.front();
    int forward = -1;
    for (int e : g.incident(black(b1)))
        if (cycle_edge[e] && (forward < 0 || e < forward))
            forward = e;
    std::vector<int> order{b1};
    branch_pos[b1] = 0;
    Vertex at = black(b1);
    int e = forward;
    std::vector<int> segment;
    int epsilon = 1;
    bool first = true;
    for (;;) {
        epsilon *= g.edge(e).sign;
        Vertex to = g.other_end(e, at);
        if (!first)
            segment.push_back(g.edge(e).label);
        first = false;
        if (to.colour == Colour::Black && g.degree(to) == 3) {
            segment.pop_back();  // the edge entering the branch black
            auto pq = parse_lpq(segment);
            const int i = static_cast<int>(order.size()) - 1;
            if (!pq) {
                out.reason = "cycle segment after '" + g.blacks()[order.back()].id + "' is not an L(p,q) string";
                return out;
            }
            params.triples[i].p = pq->first;
            params.triples[i].q = pq->second;
            segment.clear();
            if (to.index == b1)
                break;
            branch_pos[to.index] = static_cast<int>(order.size());
            order.push_back(to.index);
            first = true;
        }
        int next = -1;
        for (int f : g.incident(to))
            if (cycle_edge[f] && f != e)
                next = f;
        at = to;
        e = next;
    }

    for (std::size_t i = 0; i < order.size(); ++i) {
        int arm_edge = -1;
        for (int f : g.incident(black(order[i])))
            if (!cycle_edge[f])
                arm_edge = f;
        Walk w = walk_from(g, black(order[i]), arm_edge);
        auto r = arm_word(w.labels);
        if (g.degree(w.end) != 1 || !r) {
            out.reason = "arm at '" + g.blacks()[order[i]].id + "' is not an L(r,0) string";
            return out;
        }
        params.triples[i].r = *r;
    }
    params.epsilon = epsilon;
    out.params = params;
    return out;
}

Verdict echinus_pi1_is_Z(const EchinusParams& params)
{
    require_valid(params);
    Verdict v;
    const int n = params.n();
    std::vector<int> zero_arms;
    for (int i = 0; i < n; ++i)
        if (params.triples[i].r == 0)
            zero_arms.push_back(i);

    if (zero_arms.empty()) {
        const int sp = params.sum_p(), sq = params.sum_q();
        bool ok = (sp == 0) != (sq == 0);
        v.record("exactly-one-sum-zero", "echinus-sum-rule", pass_if(ok),
                 "sum p = " + std::to_string(sp) + ", sum q = " + std::to_string(sq) +
                     ", epsilon = " + std::to_string(params.epsilon));
        v.answer = ok ? Answer::Yes : Answer::No;
        return v;
    }

    // Split the constructed graph at the arm-less branch vertices.
    std::vector<LabelledGraph> pieces{make_echinus(params)};
    int free_rank = 0;
    for (int i : zero_arms) {
        const std::string id = "b" + std::to_string(i + 1);
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            auto b = pieces[k].find(Colour::Black, id);
            if (!b)
                continue;
            SplitResult split = split_at_black(pieces[k], b->index);
            free_rank += split.free_rank;
            pieces.erase(pieces.begin() + static_cast<long>(k));
            pieces.insert(pieces.end(), split.components.begin(), split.components.end());
            break;
        }
    }
    v.record("free-rank-one", "black-splitting", pass_if(free_rank == 1),
             "free rank " + std::to_string(free_rank) + " over " + std::to_string(pieces.size()) + " components");

    bool all_ok = free_rank == 1;
    const int k = static_cast<int>(zero_arms.size());
    for (int j = 0; j < k; ++j) {
        int from = zero_arms[j];
        int to = zero_arms[(j + 1) % k];
        int len = ((to - from) % n + n) % n;
        if (len == 0)
            len = n;
        AGraphParams a;
        for (int s = 0; s < len; ++s) {
            const auto& t = params.triples[(from + s) % n];
            a.p.push_back(t.p);
            a.q.push_back(t.q);
            if (s > 0)
                a.arms.push_back(t.r);
        }
        bool ok = a_graph_is_simply_connected(a);
        all_ok = all_ok && ok;
        v.record("component-simply-connected", "a-graph-criterion", pass_if(ok), to_string(a));
    }
    v.record("arm-less-split", "echinus-splitting", pass_if(all_ok),
             std::to_string(k) + " of " + std::to_string(n) + " branch vertices without arms");
    v.answer = all_ok ? Answer::Yes : Answer::No;
    return v;
}

Verdict necessary_conditions(const LabelledGraph& g)
{
    Verdict v;
    const int b1 = betti1(g);
    const bool connected = count_components(g) == 1;
    v.record("homotopy-circle", "pi1-z-graph-shape", pass_if(connected && b1 == 1), "betti1 = " + std::to_string(b1));
    v.record("genus-zero", "pi1-z-graph-shape", pass_if(all_genus_zero(g)));
    const int bt = black_terminal_count(g);
    v.record("white-terminals", "pi1-z-graph-shape", pass_if(bt == 0),
             std::to_string(bt) + " black terminal vertices");
    v.record("black-terminal-pair", "free-product-quotient", pass_if(bt < 2));
    if (connected && b1 == 1) {
        Cycle cyc = cycle_of(g);
        bool circle = true;
        for (int f = 0; f < g.num_vertices(); ++f)
            circle = circle && g.degree(g.from_flat(f)) == 2;
        v.record("not-a-circle", "hnn-extension", pass_if(!circle));
        bool branch_black = false;
        for (Vertex x : cyc.vertices)
            branch_black = branch_black || (x.colour == Colour::Black && g.degree(x) > 2);
        v.record("cycle-branch-black", "pruned-cycle-quotient", pass_if(branch_black));
    } else {
        v.record("not-a-circle", "hnn-extension", Outcome::Skip);
        v.record("cycle-branch-black", "pruned-cycle-quotient", Outcome::Skip);
    }
    bool failed = std::any_of(v.trace.begin(), v.trace.end(), [](const TraceEntry& t) { return t.outcome == Outcome::Fail; });
    v.answer = failed ? Answer::No : Answer::Yes;
    return v;
}

bool alternating_cycle(const LabelledGraph& g)
{
    Cycle cyc = cycle_of(g);
    const std::size_t len = cyc.edges.size();
    std::vector<int> labels;
    for (std::size_t i = 0; i < len; ++i) {
        Vertex u = cyc.vertices[i], w = cyc.vertices[(i + 1) % len];
        if (g.degree(u) > 2 || g.degree(w) > 2)
            continue;
        labels.push_back(g.edge(cyc.edges[i]).label);
    }
    if (labels.empty() || labels.size() % 2 != 0)
        return false;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int a = labels[i], b = labels[(i + 1) % labels.size()];
        if ((a != 1 && a != 2) || a == b)
            return false;
    }
    return true;
}

std::vector<long> black_orders(const LabelledGraph& g)
{
    // order[b] = 0 while no power of b is known to vanish.
    std::vector<long> order(g.num_blacks(), 0);
    auto trivial_power = [&](int e) {
        long o = order[g.edge(e).black];
        return o != 0 && g.edge(e).label % o == 0;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int w = 0; w < g.num_whites(); ++w) {
            if (g.whites()[w].genus != 0)
                continue;
            int open = -1, count = 0;
            for (int e : g.incident(white(w)))
                if (!trivial_power(e)) {
                    open = e;
                    ++count;
                }
            if (count != 1)
                continue;
            long& o = order[g.edge(open).black];
            long next = std::gcd(o, static_cast<long>(g.edge(open).label));
            if (next != o) {
                o = next;
                changed = true;
            }
        }
    }
    return order;
}

std::vector<bool> certified_trivial_blacks(const LabelledGraph& g)
{
    auto order = black_orders(g);
    std::vector<bool> out(g.num_blacks());
    for (int b = 0; b < g.num_blacks(); ++b)
        out[b] = order[b] == 1;
    return out;
}

namespace {

/// Syntactic layer of the oracle: components not settled by pruning,
/// certified-black splits, L(p,q) or A-graph recognition.
std::vector<LabelledGraph> syntactic_leftovers(const LabelledGraph& g, std::vector<std::string>& notes)
{
    std::vector<LabelledGraph> work{g}, leftovers;
    while (!work.empty()) {
        LabelledGraph h = prune(work.back());
        work.pop_back();
        if (h.num_vertices() == 1 && h.num_whites() == 1)
            continue;
        auto trivial = certified_trivial_blacks(h);
        int split_at = -1;
        for (int b = 0; b < h.num_blacks() && split_at < 0; ++b)
            if (trivial[b] && h.degree(black(b)) >= 2)
                split_at = b;
        if (split_at >= 0) {
            notes.push_back("split at trivial black " + h.blacks()[split_at].id);
            auto split = split_at_black(h, split_at);
            for (auto& c : split.components)
                work.push_back(std::move(c));
            continue;
        }
        if (is_linear(h) && is_Lpq(h)) {
            notes.push_back("L(p,q) component");
            continue;
        }
        auto readings = recognize_a_graph(h);
        if (std::any_of(readings.begin(), readings.end(), [](const AGraphParams& a) { return a_graph_is_simply_connected(a); })) {
            notes.push_back("A-graph component");
            continue;
        }
        leftovers.push_back(std::move(h));
    }
    return leftovers;
}

}  // namespace

Verdict simply_connected(const LabelledGraph& g, const OracleLimits& limits)
{
    Verdict v;
    const bool tree = g.num_vertices() > 0 && count_components(g) == 1 && betti1(g) == 0;
    v.record("tree", "simply-connected-shape", pass_if(tree));
    v.record("genus-zero", "simply-connected-shape", pass_if(all_genus_zero(g)));
    const int bt = black_terminal_count(g);
    v.record("white-terminals", "simply-connected-shape", pass_if(bt == 0));
    v.record("black-terminal-pair", "free-product-quotient", pass_if(bt < 2));
    if (v.has("tree", Outcome::Fail) || v.has("genus-zero", Outcome::Fail) || bt > 0) {
        v.answer = Answer::No;
        return v;
    }
    auto homology = h1(g);
    v.record("h1-trivial", "abelianization", pass_if(homology.is_trivial()), to_string(homology));
    if (!homology.is_trivial()) {
        v.answer = Answer::No;
        return v;
    }
    std::vector<std::string> notes;
    auto leftovers = syntactic_leftovers(g, notes);
    if (leftovers.empty()) {
        v.record("syntactic-reduction", "syntactic-reduction", Outcome::Pass);
        v.answer = Answer::Yes;
        return v;
    }
    v.record("syntactic-reduction", "syntactic-reduction", Outcome::Skip,
             std::to_string(leftovers.size()) + " components left");
    for (const auto& h : leftovers) {
        auto r = decide_trivial(pi1_presentation(h), limits);
        if (r.answer == Triviality::Nontrivial) {
            v.record("group-search", "group-search", Outcome::Fail, r.detail);
            v.answer = Answer::No;
            return v;
        }
        if (r.answer == Triviality::Unknown) {
            v.record("group-search", "group-search", Outcome::Skip, r.detail);
            v.answer = Answer::Undetermined;
            v.blocking_query = "is the group trivial? " + r.detail;
            return v;
        }
    }
    v.record("group-search", "group-search", Outcome::Pass);
    v.answer = Answer::Yes;
    return v;
}

namespace {

/// Combines oracle verdicts on the components of a split.
void judge_components(Verdict& v, const std::vector<LabelledGraph>& components, const std::string& anchor,
                      const OracleLimits& limits)
{
    bool undetermined = false;
    bool failed = false;
    for (const auto& c : components) {
        Verdict sc = simply_connected(c, limits);
        Outcome o = sc.answer == Answer::Yes ? Outcome::Pass : sc.answer == Answer::No ? Outcome::Fail : Outcome::Skip;
        v.record("component-simply-connected", anchor, o,
                 std::to_string(c.num_whites()) + " whites, " + std::to_string(c.num_blacks()) + " blacks");
        if (sc.answer == Answer::No)
            failed = true;
        if (sc.answer == Answer::Undetermined && !undetermined) {
            undetermined = true;
            v.blocking_query = sc.blocking_query;
        }
    }
    if (failed) {
        v.answer = Answer::No;
        v.blocking_query.clear();
    } else {
        v.answer = undetermined ? Answer::Undetermined : Answer::Yes;
    }
}

void decide_general(Verdict& v, const LabelledGraph& h, const OracleLimits& limits)
{
    auto homology = h1(h);
    v.record("h1-infinite-cyclic", "abelianization", pass_if(homology.is_z()), to_string(homology));
    if (!homology.is_z()) {
        v.answer = Answer::No;
        return;
    }
    auto vanish = vanishing_generators(h1_matrix(h).matrix);
    bool all_null = true;
    for (int b = 0; b < h.num_blacks(); ++b)
        all_null = all_null && vanish[b];
    v.record("blacks-null-in-homology", "hopfian-retraction", pass_if(all_null));
    if (!all_null) {
        v.answer = Answer::No;
        return;
    }
    auto order = black_orders(h);
    Cycle cyc = cycle_of(h);
    int chosen = -1, torsion = -1;
    std::string candidates;
    for (Vertex x : cyc.vertices) {
        if (x.colour != Colour::Black || h.degree(x) <= 2)
            continue;
        candidates += (candidates.empty() ? "" : ", ") + h.id(x);
        if (chosen < 0 && order[x.index] == 1)
            chosen = x.index;
        if (torsion < 0 && order[x.index] > 1)
            torsion = x.index;
    }
    if (chosen >= 0) {
        SplitResult split = split_at_black(h, chosen);
        v.record("contractible-cycle-black", "black-splitting", Outcome::Pass, h.blacks()[chosen].id);
        v.record("free-rank-one", "black-splitting", pass_if(split.free_rank == 1));
        judge_components(v, split.components, "black-splitting", limits);
        return;
    }
    v.record("contractible-cycle-black", "black-splitting", Outcome::Skip);
    if (torsion >= 0) {
        // A torsion element of Z is trivial, so Z would split here as well.
        SplitResult split = split_at_black(h, torsion);
        Verdict parts;
        judge_components(parts, split.components, "black-splitting", limits);
        if (parts.answer == Answer::No) {
            v.record("torsion-cycle-black-split", "black-splitting", Outcome::Fail,
                     h.blacks()[torsion].id + " has finite order " + std::to_string(order[torsion]));
            v.answer = Answer::No;
            return;
        }
    }
    auto presentation = pi1_presentation(h);
    if (presents_infinite_cyclic(presentation, limits)) {
        v.record("presentation-infinite-cyclic", "group-search", Outcome::Pass);
        v.answer = Answer::Yes;
        return;
    }
    if (has_nonabelian_finite_quotient(presentation, limits)) {
        v.record("nonabelian-finite-quotient", "group-search", Outcome::Fail);
        v.answer = Answer::No;
        return;
    }
    v.record("group-search", "group-search", Outcome::Skip);
    v.answer = Answer::Undetermined;
    v.blocking_query = "is the singular circle of any of {" + candidates + "} null-homotopic?";
}

}  // namespace

Verdict decide_pi1_Z(const LabelledGraph& g, const OracleLimits& limits)
{
    require_valid(g);
    Verdict v;
    LabelledGraph h = prune(normalize_signs(g));
    Verdict nc = necessary_conditions(h);
    v.append(nc);
    if (nc.answer == Answer::No) {
        v.answer = Answer::No;
        return v;
    }
    if (!is_trivalent(h)) {
        decide_general(v, h, limits);
        return v;
    }

    auto oracle = [&](const LabelledGraph& t) { return simply_connected(t, limits); };
    CoreResult core = core_reduce(h, oracle);
    if (core.status == CoreStatus::Empty) {
        v.record("core-nonempty", "core-nonempty", Outcome::Fail, core.reason);
        v.answer = Answer::No;
        return v;
    }
    if (core.status == CoreStatus::Undetermined) {
        v.record("core-nonempty", "core-nonempty", Outcome::Skip, core.reason);
        v.answer = Answer::Undetermined;
        v.blocking_query = core.reason;
        return v;
    }
    v.record("core-nonempty", "core-nonempty", Outcome::Pass);
    const LabelledGraph& gc = *core.core;

    Cycle cyc = cycle_of(gc);
    std::vector<bool> keep(gc.num_vertices(), true);
    std::vector<int> killed;
    for (Vertex x : cyc.vertices) {
        if (x.colour != Colour::Black)
            continue;
        for (int e : gc.incident(x))
            if (gc.degree(gc.white_end(e)) == 1) {
                killed.push_back(x.index);
                keep[gc.flat(x)] = false;
                break;
            }
    }
    if (!killed.empty()) {
        auto labels = component_labels(gc, &keep);
        int count = 1 + *std::max_element(labels.begin(), labels.end());
        std::vector<LabelledGraph> comps;
        for (int k = 0; k < count; ++k) {
            std::vector<bool> mask(gc.num_vertices());
            for (int f = 0; f < gc.num_vertices(); ++f)
                mask[f] = labels[f] == k;
            comps.push_back(induced_subgraph(gc, mask));
        }
        judge_components(v, comps, "core-splitting", limits);
        return v;
    }

    bool branch_black = true;
    for (int w = 0; w < gc.num_whites(); ++w)
        branch_black = branch_black && gc.degree(white(w)) <= 2;
    v.record("branch-vertices-black", "core-alternating", pass_if(branch_black));
    auto cycle_vertices_list = cycle_vertices(gc);
    bool odd_ones = true;
    for (int e = 0; e < gc.num_edges(); ++e)
        if (edge_distance(gc, e, cycle_vertices_list) % 2 == 1 && gc.edge(e).label != 1)
            odd_ones = false;
    v.record("odd-distance-label-one", "core-alternating", pass_if(odd_ones));
    bool alternating = alternating_cycle(gc);
    v.record("alternating-cycle", "core-alternating", pass_if(alternating));
    v.answer = branch_black && odd_ones && alternating ? Answer::Yes : Answer::No;
    return v;
}

}  // namespace stratifold
