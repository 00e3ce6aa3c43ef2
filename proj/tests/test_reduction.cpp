#include <algorithm>
#include <random>

#include "catch_amalgamated.hpp"
#include "stratifold/classify.hpp"
#include "stratifold/constructions.hpp"
#include "stratifold/enumerate.hpp"
#include "stratifold/homology.hpp"
#include "stratifold/io.hpp"
#include "stratifold/reduction.hpp"

using namespace stratifold;

namespace {

int negative_edges(const LabelledGraph& g)
{
    return static_cast<int>(
        std::count_if(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.sign < 0; }));
}

/// Deletes prunable terminal pairs one at a time in random order until none
/// is left: a terminal genus-0 white whose label-1 edge leads to a degree-2
/// black whose other edge has label 2.
LabelledGraph random_prune(LabelledGraph g, std::mt19937& rng)
{
    for (;;) {
        std::vector<std::pair<int, int>> pairs;  // (white, black)
        for (int w = 0; w < g.num_whites(); ++w) {
            if (g.whites()[w].genus != 0 || g.degree(white(w)) != 1)
                continue;
            int e = g.incident(white(w))[0];
            int b = g.edge(e).black;
            if (g.edge(e).label != 1 || g.degree(black(b)) != 2)
                continue;
            const auto& inc = g.incident(black(b));
            int other = inc[0] == e ? inc[1] : inc[0];
            if (g.edge(other).label == 2)
                pairs.emplace_back(w, b);
        }
        if (pairs.empty())
            return g;
        auto [w, b] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
        std::vector<bool> keep(g.num_vertices(), true);
        keep[g.flat(white(w))] = false;
        keep[g.flat(black(b))] = false;
        g = induced_subgraph(g, keep);
    }
}

/// Cycle w1 -1- c1 -1- w2 -1- c2 -2- w1, a pendant w3 -1- c1, and an
/// off-cycle black b below w3 with the given two arms.
LabelledGraph with_arm_pair(int r1, int r2)
{
    LabelledGraph g;
    int w1 = g.add_white("w1"), w2 = g.add_white("w2"), w3 = g.add_white("w3");
    int c1 = g.add_black("c1"), c2 = g.add_black("c2"), b = g.add_black("b");
    g.add_edge(w1, c1, 1);
    g.add_edge(w2, c1, 1);
    g.add_edge(w2, c2, 1);
    g.add_edge(w1, c2, 2);
    g.add_edge(w3, c1, 1);
    g.add_edge(w3, b, 1);
    int next = 4;
    for (int r : {r1, r2}) {
        int root = g.add_white("w" + std::to_string(next++));
        g.add_edge(root, b, 1);
        int at = root;
        for (int i = 0; i < r; ++i) {
            int c = g.add_black("d" + std::to_string(next));
            int w = g.add_white("w" + std::to_string(next++));
            g.add_edge(at, c, 1);
            g.add_edge(w, c, 2);
            at = w;
        }
    }
    return g;
}

Verdict oracle(const LabelledGraph& h) { return simply_connected(h); }

}  // namespace

TEST_CASE("normalize_signs", "[reduction]")
{
    SECTION("tree signs become +1")
    {
        LabelledGraph g = make_linear({1, 2, 2});
        g.set_sign(1, -1);
        CHECK(negative_edges(normalize_signs(g)) == 0);
    }
    SECTION("two negative cycle edges cancel")
    {
        LabelledGraph g = make_pure_cycle({1, 1}, {2, 2});
        g.set_sign(0, -1);
        g.set_sign(2, -1);
        CHECK(negative_edges(normalize_signs(g)) == 0);
    }
    SECTION("one negative cycle edge stays one")
    {
        LabelledGraph g = make_pure_cycle({1, 1}, {2, 2});
        g.set_sign(1, -1);
        LabelledGraph n = normalize_signs(g);
        CHECK(negative_edges(n) == 1);
        CHECK(h1(n) == h1(g));
    }
}

TEST_CASE("prune examples", "[reduction]")
{
    SECTION("a terminal 2,1 string collapses to its first white")
    {
        LabelledGraph p = prune(make_linear({2, 1}));
        CHECK(p.num_whites() == 1);
        CHECK(p.num_blacks() == 0);
        CHECK(p.whites()[0].id == "w1");
    }
    SECTION("a pruned graph is returned unchanged")
    {
        EchinusParams params;
        params.triples = {{1, 0, 1}};
        LabelledGraph g = make_echinus(params);
        CHECK(serialize(prune(g)) == serialize(g));
    }
    SECTION("L(1,1) prunes from both ends down to one white")
    {
        LabelledGraph g = make_lpq(1, 1);
        std::vector<std::string> log;
        LabelledGraph p = prune(g, &log);
        CHECK(p.num_vertices() == 1);
        CHECK(log.size() == 2);
        CHECK(h1(p) == h1(g));
    }
    SECTION("genus of the surviving white is kept")
    {
        LabelledGraph g = make_linear({2, 1});
        g.set_genus(0, 3);
        LabelledGraph p = prune(g);
        REQUIRE(p.num_whites() == 1);
        CHECK(p.whites()[0].genus == 3);
    }
}

TEST_CASE("prune is idempotent, confluent and preserves h1", "[reduction]")
{
    std::mt19937 rng(11);
    std::vector<LabelledGraph> graphs;
    EnumerationBounds bounds;
    bounds.max_blacks = 2;
    enumerate_graphs(bounds, [&](const LabelledGraph& g) { graphs.push_back(g); });
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            graphs.push_back(make_lpq(p, q));
    graphs.push_back(make_linear({1, 2, 1, 2, 2, 1, 2, 1, 3}));
    for (const auto& g : graphs) {
        LabelledGraph p = prune(g);
        const std::string key = canonical_key(p);
        REQUIRE(serialize(prune(p)) == serialize(p));
        REQUIRE(h1(p) == h1(g));
        for (int trial = 0; trial < 3; ++trial)
            REQUIRE(canonical_key(random_prune(g, rng)) == key);
    }
}

TEST_CASE("split_at_black", "[reduction]")
{
    SECTION("branch black on the cycle")
    {
        EchinusParams params;
        params.triples = {{1, 0, 1}};
        LabelledGraph g = make_echinus(params);
        SplitResult s = split_at_black(g, g.find(Colour::Black, "b1")->index);
        CHECK(s.components.size() == 2);
        CHECK(s.free_rank == 1);
    }
    SECTION("degree-2 black inside a tree")
    {
        LabelledGraph g = make_linear({1, 2, 2, 1});
        SplitResult s = split_at_black(g, 0);
        CHECK(s.components.size() == 2);
        CHECK(s.free_rank == 0);
    }
    SECTION("all three edges reach the same component")
    {
        LabelledGraph g;
        int w1 = g.add_white("w1"), w2 = g.add_white("w2"), w3 = g.add_white("w3");
        int b = g.add_black("b"), c1 = g.add_black("c1"), c2 = g.add_black("c2");
        g.add_edge(w1, b, 1);
        g.add_edge(w2, b, 1);
        g.add_edge(w3, b, 1);
        g.add_edge(w1, c1, 1);
        g.add_edge(w2, c1, 2);
        g.add_edge(w2, c2, 1);
        g.add_edge(w3, c2, 2);
        SplitResult s = split_at_black(g, b);
        CHECK(s.components.size() == 1);
        CHECK(s.free_rank == 2);
    }
    SECTION("a terminal black cannot be split")
    {
        LabelledGraph g = make_linear({3});
        try {
            split_at_black(g, 0);
            FAIL("no exception");
        } catch (const StratifoldError& e) {
            CHECK(e.code() == ErrorCode::DegreeTooSmall);
        }
    }
}

TEST_CASE("prune_arm_pair", "[reduction]")
{
    SECTION("the longer arm goes")
    {
        LabelledGraph g = with_arm_pair(1, 2);
        REQUIRE(validate(g).ok());
        const int b = g.find(Colour::Black, "b")->index;
        REQUIRE(arm_pair_candidates(g) == std::vector<int>{b});
        LabelledGraph h = prune_arm_pair(g, b);
        CHECK(h.num_blacks() == g.num_blacks() - 3);
        // The short arm's root white merges into w3.
        CHECK(h.num_whites() == g.num_whites() - 4);
        CHECK_FALSE(h.find(Colour::Black, "b"));
        CHECK(h.find(Colour::Black, "d5"));  // first black of the short arm
        CHECK(h1(h) == h1(g));
        CHECK(validate(h).ok());
    }
    SECTION("equal arms: the one rooted at the higher white goes")
    {
        LabelledGraph g = with_arm_pair(1, 1);
        LabelledGraph h = prune_arm_pair(g, g.find(Colour::Black, "b")->index);
        CHECK(h.find(Colour::Black, "d5"));
        CHECK_FALSE(h.find(Colour::Black, "d7"));
        CHECK(h1(h) == h1(g));
    }
    SECTION("a black that is not outermost is rejected")
    {
        // Hang the arm pair one level deeper: c1 - w3 - b' - w9 - b, b' with one arm.
        LabelledGraph g = with_arm_pair(0, 1);
        int bp = g.add_black("bp");
        int w9 = g.add_white("w9");
        int w10 = g.add_white("w10");
        // Re-route: w3 -1- bp -1- w9, and the arm pair's b reattached below w9.
        LabelledGraph h;
        for (const auto& w : g.whites())
            h.add_white(w.id, w.genus);
        for (const auto& bl : g.blacks())
            h.add_black(bl.id);
        const int w3 = g.find(Colour::White, "w3")->index;
        const int b = g.find(Colour::Black, "b")->index;
        for (const auto& e : g.edges())
            h.add_edge(e.white == w3 && e.black == b ? w9 : e.white, e.black, e.label, e.sign);
        h.add_edge(w3, bp, 1);
        h.add_edge(w9, bp, 1);
        h.add_edge(w10, bp, 1);
        REQUIRE(validate(h).ok());
        auto candidates = arm_pair_candidates(h);
        CHECK(std::find(candidates.begin(), candidates.end(), bp) == candidates.end());
        try {
            prune_arm_pair(h, bp);
            FAIL("no exception");
        } catch (const StratifoldError& e) {
            CHECK(e.code() == ErrorCode::PreconditionFailed);
        }
    }
}

TEST_CASE("core_reduce", "[reduction]")
{
    SECTION("nothing to remove")
    {
        EchinusParams params;
        params.triples = {{1, 0, 1}};
        LabelledGraph g = make_echinus(params);
        CoreResult r = core_reduce(g, oracle);
        REQUIRE(r.status == CoreStatus::Core);
        CHECK(serialize(*r.core) == serialize(g));
    }
    SECTION("a single-white T is removed with the branch")
    {
        LabelledGraph g = with_arm_pair(0, 0);
        CoreResult r = core_reduce(g, oracle);
        REQUIRE(r.status == CoreStatus::Core);
        CHECK(r.core->num_blacks() == 2);
        CHECK(r.core->num_whites() == 3);
        CHECK(h1(*r.core) == h1(g));
        CHECK_FALSE(r.steps.empty());
        CHECK(format_steps(r).find("core") != std::string::npos);
    }
    SECTION("a longer simply connected T is removed too")
    {
        LabelledGraph g = with_arm_pair(0, 2);
        CoreResult r = core_reduce(g, oracle);
        REQUIRE(r.status == CoreStatus::Core);
        CHECK(r.core->num_blacks() == 2);
        CHECK(h1(*r.core) == h1(g));
    }
    SECTION("T with two terminal label-2 edges empties the core")
    {
        LabelledGraph g = with_arm_pair(0, 0);
        const int t = g.find(Colour::White, "w5")->index;
        int c3 = g.add_black("c3"), c4 = g.add_black("c4");
        g.add_edge(t, c3, 1);
        g.add_edge(g.add_white("w6"), c3, 2);
        g.add_edge(t, c4, 1);
        g.add_edge(g.add_white("w7"), c4, 2);
        REQUIRE(validate(g).ok());
        CoreResult r = core_reduce(g, oracle);
        CHECK(r.status == CoreStatus::Empty);
        CHECK_FALSE(r.core);
    }
    SECTION("an undecided oracle propagates")
    {
        LabelledGraph g = with_arm_pair(0, 0);
        CoreResult r = core_reduce(g, [](const LabelledGraph&) { return Verdict{}; });
        CHECK(r.status == CoreStatus::Undetermined);
        CHECK_FALSE(r.reason.empty());
    }
    SECTION("h1 is preserved over the trivalent census")
    {
        EnumerationBounds bounds;
        bounds.max_blacks = 4;
        bounds.trivalent_only = true;
        bounds.betti1 = 1;
        int cores = 0;
        enumerate_graphs(bounds, [&](const LabelledGraph& g) {
            LabelledGraph p = prune(normalize_signs(g));
            if (betti1(p) != 1 || !is_trivalent(p))
                return;
            CoreResult r = core_reduce(p, oracle);
            if (r.status == CoreStatus::Core) {
                ++cores;
                REQUIRE(h1(*r.core) == h1(g));
            }
        });
        CHECK(cores > 0);
    }
}
