#include <algorithm>
#include <cstdlib>

#include "catch_amalgamated.hpp"
#include "stratifold/constructions.hpp"
#include "stratifold/enumerate.hpp"
#include "stratifold/group_search.hpp"
#include "stratifold/homology.hpp"
#include "stratifold/presentation.hpp"

using namespace stratifold;

namespace {

int exponent_sum(const Word& w, int generator)
{
    int s = 0;
    for (const Letter& l : w)
        if (l.generator == generator)
            s += l.exponent;
    return s;
}

int index_of(const GroupPresentation& p, const std::string& name)
{
    auto it = std::find(p.generators.begin(), p.generators.end(), name);
    REQUIRE(it != p.generators.end());
    return static_cast<int>(it - p.generators.begin());
}

}  // namespace

TEST_CASE("one-edge pure cycle presents a Baumslag-Solitar group", "[presentation]")
{
    LabelledGraph g = make_pure_cycle({1}, {2});
    GroupPresentation p = pi1_presentation(g);
    REQUIRE(p.generators.size() == 2);
    REQUIRE(p.relators.size() == 1);
    const int b = index_of(p, "bc1");
    const int t = 1 - b;
    const Word& r = p.relators[0];
    CHECK(exponent_sum(r, t) == 0);
    CHECK(std::abs(exponent_sum(r, b)) == 1);
    // The t-conjugated power is b^{+-2}, the other b^{+-1}.
    std::vector<int> b_powers;
    for (const Letter& l : r)
        if (l.generator == b)
            b_powers.push_back(std::abs(l.exponent));
    std::sort(b_powers.begin(), b_powers.end());
    CHECK(b_powers == std::vector<int>{1, 2});
    // Infinite cyclic abelianization, yet a non-abelian finite quotient.
    CHECK(abelian_group(abelianization_matrix(p)).is_z());
    CHECK(has_nonabelian_finite_quotient(p));
}

TEST_CASE("tree w-b-w with labels 2, 3 presents the trivial group", "[presentation]")
{
    GroupPresentation p = pi1_presentation(make_linear({2, 3}));
    CHECK(p.generators == std::vector<std::string>{"bc1"});
    REQUIRE(p.relators.size() == 2);
    CHECK(p.relators[0] == Word{{0, 2}});
    CHECK(p.relators[1] == Word{{0, 3}});
    CHECK(decide_trivial(p).answer == Triviality::Trivial);
}

TEST_CASE("single white vertex has the empty presentation", "[presentation]")
{
    LabelledGraph g;
    g.add_white("w1");
    GroupPresentation p = pi1_presentation(g);
    CHECK(p.generators.empty());
    CHECK(std::all_of(p.relators.begin(), p.relators.end(), [](const Word& w) { return w.empty(); }));
    CHECK(to_string(p).rfind("generators:", 0) == 0);
}

TEST_CASE("boundary signs", "[presentation]")
{
    SECTION("tree edges keep the stored sign")
    {
        LabelledGraph g = make_linear({1, 2, 2, 1});
        auto s = boundary_signs(g, spanning_tree(g));
        CHECK(std::all_of(s.begin(), s.end(), [](int x) { return x == 1; }));
    }
    SECTION("non-tree edge of a 2k-cycle picks up (-1)^k")
    {
        for (int k = 1; k <= 4; ++k)
            for (int eps : {+1, -1}) {
                LabelledGraph g = make_pure_cycle(std::vector<int>(k, 1), std::vector<int>(k, 2), eps);
                auto tree = spanning_tree(g);
                auto s = boundary_signs(g, tree);
                for (int e = 0; e < g.num_edges(); ++e) {
                    const int expected = tree[e] ? g.edge(e).sign : g.edge(e).sign * (k % 2 == 0 ? 1 : -1);
                    CHECK(s[e] == expected);
                }
            }
    }
}

TEST_CASE("presentations of small graphs", "[presentation]")
{
    EnumerationBounds bounds;
    bounds.max_blacks = 2;
    enumerate_graphs(bounds, [](const LabelledGraph& g) {
        GroupPresentation p = pi1_presentation(g);
        const int t_count = static_cast<int>(
            std::count_if(p.generators.begin(), p.generators.end(), [](const std::string& s) { return s[0] == 't'; }));
        REQUIRE(t_count == betti1(g));
        REQUIRE(static_cast<int>(p.generators.size()) == g.num_blacks() + betti1(g));
        if (g.num_edges() > 0)
            REQUIRE(static_cast<int>(p.relators.size()) == g.num_whites());
        for (const Word& w : p.relators)
            for (const Letter& l : w) {
                REQUIRE(l.generator >= 0);
                REQUIRE(l.generator < static_cast<int>(p.generators.size()));
                REQUIRE(l.exponent != 0);
            }
        // Abelianizing the presentation agrees with the direct relation matrix.
        REQUIRE(abelian_group(abelianization_matrix(p)) == h1(g));
    });
}

TEST_CASE("h1 matrix column naming", "[presentation]")
{
    LabelledGraph g = make_pure_cycle({1, 1}, {2, 2});
    g.set_genus(0, 2);
    H1Matrix m = h1_matrix(g);
    CHECK(m.columns.size() == 2 + 4);
    CHECK(m.columns[0] == "bc1");
    CHECK(m.free_rank_extra == 1);
}

TEST_CASE("presentation text", "[presentation]")
{
    GroupPresentation p;
    p.generators = {"a", "b"};
    p.relators = {{{0, 2}, {1, -1}}, {{1, 3}}};
    CHECK(to_string(p) == "generators: a b\na^2 b^-1\nb^3\n");
}
