#include <algorithm>
#include <numeric>
#include <random>

#include "catch_amalgamated.hpp"
#include "stratifold/constructions.hpp"
#include "stratifold/enumerate.hpp"
#include "stratifold/io.hpp"

using namespace stratifold;

namespace {

ErrorCode parse_error(const std::string& text)
{
    try {
        parse(text);
    } catch (const StratifoldError& e) {
        return e.code();
    }
    FAIL("parse accepted: " << text);
    return ErrorCode::SyntaxError;
}

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

/// Same graph with shuffled vertex and edge order, fresh ids, and (on a
/// cycle) the negative sign moved by flipping two cycle edges.
LabelledGraph scramble(const LabelledGraph& g, std::mt19937& rng)
{
    std::vector<int> wp(g.num_whites()), bp(g.num_blacks()), ep(g.num_edges());
    std::iota(wp.begin(), wp.end(), 0);
    std::iota(bp.begin(), bp.end(), 0);
    std::iota(ep.begin(), ep.end(), 0);
    std::shuffle(wp.begin(), wp.end(), rng);
    std::shuffle(bp.begin(), bp.end(), rng);
    std::shuffle(ep.begin(), ep.end(), rng);
    std::vector<int> new_white(g.num_whites()), new_black(g.num_blacks());
    LabelledGraph h;
    for (int i : wp)
        new_white[i] = h.add_white("x" + std::to_string(rng() % 1000) + "n" + std::to_string(i), g.whites()[i].genus);
    for (int i : bp)
        new_black[i] = h.add_black("y" + std::to_string(i));
    std::vector<int> flip(g.num_edges(), 1);
    if (betti1(g) == 1) {
        auto c = cycle_of(g).edges;
        std::shuffle(c.begin(), c.end(), rng);
        flip[c[0]] = -1;
        flip[c[1]] = -1;
    }
    for (int e : ep) {
        const Edge& x = g.edge(e);
        h.add_edge(new_white[x.white], new_black[x.black], x.label, x.sign * flip[e], "z" + std::to_string(e));
    }
    return h;
}

}  // namespace

TEST_CASE("parse a small tree", "[io]")
{
    LabelledGraph g = parse("white w1 genus=0\nwhite w2 genus=0\nblack b1\nedge w1 b1 label=2\nedge w2 b1 label=3\n");
    CHECK(g.num_whites() == 2);
    CHECK(g.num_blacks() == 1);
    CHECK(g.num_edges() == 2);
    CHECK(validate(g).ok());
    CHECK(betti1(g) == 0);
}

TEST_CASE("parse details", "[io]")
{
    LabelledGraph g = parse(
        "# comment\n\nwhite a\nwhite b genus=-2\nblack c\n"
        "edge a c label=1 sign=-1\nedge b c label=2 sign=+1\n");
    CHECK(g.whites()[0].genus == 0);
    CHECK(g.whites()[1].genus == -2);
    CHECK(g.edge(0).sign == -1);
    CHECK(g.edge(1).sign == 1);
}

TEST_CASE("parse errors", "[io]")
{
    ErrorCode bipartite = parse_error("white w1 genus=0\nwhite w2 genus=0\nedge w1 w2 label=1\n");
    CHECK((bipartite == ErrorCode::UnknownVertex || bipartite == ErrorCode::NonBipartite));
    CHECK(parse_error("white w1\nblack b1\nedge w1 b2 label=3\n") == ErrorCode::UnknownVertex);
    CHECK(parse_error("edge w1 b1 label=3\nwhite w1\nblack b1\n") == ErrorCode::UnknownVertex);
    CHECK(parse_error("white w1\nwhite w1\n") == ErrorCode::DuplicateId);
    CHECK(parse_error("white w1\nblack b1\nedge w1 b1 label=0\n") == ErrorCode::BadLabel);
    CHECK(parse_error("white w1\nblack b1\nedge w1 b1 label=x\n") == ErrorCode::BadLabel);
    CHECK(parse_error("white w1\nblack b1\nedge w1 b1 label=3 sign=2\n") == ErrorCode::InvalidSign);
    CHECK(parse_error("vertex w1\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("white w-1\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("white w1 genus=\n") == ErrorCode::SyntaxError);
    try {
        parse("white w1\n\nbogus\n");
        FAIL("no exception");
    } catch (const StratifoldError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("serialize round trip", "[io]")
{
    EchinusParams p;
    p.triples = {{1, 0, 1}};
    p.epsilon = -1;
    LabelledGraph g = make_echinus(p);
    const std::string text = serialize(g);
    CHECK(text.rfind("# stratifold-graph v1\n", 0) == 0);
    LabelledGraph back = parse(text);
    CHECK(serialize(back) == text);
    CHECK(canonical_key(back) == canonical_key(g));
    for (int w = 0; w < g.num_whites(); ++w)
        CHECK(back.find(Colour::White, g.whites()[w].id));
}

TEST_CASE("round trip over the census", "[io]")
{
    EnumerationBounds bounds;
    bounds.max_blacks = 2;
    enumerate_graphs(bounds, [](const LabelledGraph& g) {
        const std::string text = serialize(g);
        REQUIRE(serialize(parse(text)) == text);
    });
}

TEST_CASE("natural order of ids", "[io]")
{
    CHECK(natural_less("w2", "w10"));
    CHECK_FALSE(natural_less("w10", "w2"));
    CHECK(natural_less("a", "b"));
    CHECK_FALSE(natural_less("w1", "w1"));
    LabelledGraph g = parse("white w10\nwhite w2\nblack b1\nedge w10 b1 label=3\nedge w2 b1 label=1\n");
    const std::string text = serialize(g);
    CHECK(text.find("white w2") < text.find("white w10"));
}

TEST_CASE("canonical key ignores ids and order", "[io]")
{
    std::mt19937 rng(3);
    std::vector<LabelledGraph> graphs;
    EchinusParams p;
    p.triples = {{1, 0, 1}, {0, 2, 2}};
    graphs.push_back(make_echinus(p));
    p.epsilon = -1;
    graphs.push_back(make_echinus(p));
    graphs.push_back(make_lpq(2, 1));
    graphs.push_back(make_pure_cycle({1, 2, 1}, {2, 1, 2}, -1));
    EnumerationBounds bounds;
    bounds.max_blacks = 2;
    enumerate_graphs(bounds, [&](const LabelledGraph& g) { graphs.push_back(g); });
    for (const auto& g : graphs) {
        const std::string key = canonical_key(g);
        for (int t = 0; t < 3; ++t)
            REQUIRE(canonical_key(scramble(g, rng)) == key);
        REQUIRE(canonical_key(canonical_form(g)) == key);
    }
}

TEST_CASE("canonical key separates the sign of a cycle", "[io]")
{
    CHECK(canonical_key(make_pure_cycle({1, 1}, {2, 2}, +1)) != canonical_key(make_pure_cycle({1, 1}, {2, 2}, -1)));
}

TEST_CASE("DOT export", "[io]")
{
    LabelledGraph single;
    single.add_white("w1");
    std::string one = export_dot(single);
    CHECK(one.rfind("graph stratifold {", 0) == 0);
    CHECK(count(one, "[shape=circle") == 1);
    CHECK(count(one, " -- ") == 0);

    std::string hex = export_dot(make_pure_cycle({1, 1, 1}, {2, 2, 2}));
    CHECK(count(hex, "[shape=circle") == 3);
    CHECK(count(hex, "[shape=point") == 3);
    CHECK(count(hex, " -- ") == 6);
    CHECK(count(hex, "[label=\"1\"]") == 3);
    CHECK(count(hex, "[label=\"2\"]") == 3);
    CHECK(hex == export_dot(make_pure_cycle({1, 1, 1}, {2, 2, 2})));

    std::string neg = export_dot(make_pure_cycle({1}, {2}, -1));
    CHECK(count(neg, "[label=\"2, -\"]") == 1);

    LabelledGraph genus;
    genus.add_white("w1", 2);
    CHECK(export_dot(genus).find("g=2") != std::string::npos);
}
