#include <random>

#include "catch_amalgamated.hpp"
#include "stratifold/constructions.hpp"
#include "stratifold/enumerate.hpp"
#include "stratifold/homology.hpp"
#include "stratifold/presentation.hpp"

using namespace stratifold;

namespace {

IntMatrix mat(int rows, int cols, std::initializer_list<long> values)
{
    IntMatrix m(rows, cols);
    auto it = values.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = *it++;
    return m;
}

/// Cofactor expansion; small matrices only.
BigInt cofactor_det(const IntMatrix& m)
{
    const auto n = m.rows();
    if (n == 0)
        return 1;
    BigInt sum = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (Eigen::Index i = 1; i < n; ++i)
            for (Eigen::Index k = 0, c = 0; k < n; ++k)
                if (k != j)
                    minor(i - 1, c++) = m(i, k);
        BigInt term = m(0, j) * cofactor_det(minor);
        sum += j % 2 == 0 ? term : BigInt(-term);
    }
    return sum;
}

AbelianGroup group(int free_rank, std::vector<long> torsion)
{
    AbelianGroup g;
    g.free_rank = free_rank;
    for (long t : torsion)
        g.torsion.emplace_back(t);
    return g;
}

EchinusParams echinus(std::vector<EchinusTriple> triples, int epsilon = +1)
{
    EchinusParams p;
    p.triples = std::move(triples);
    p.epsilon = epsilon;
    return p;
}

}  // namespace

TEST_CASE("smith normal form of small matrices", "[homology]")
{
    auto id = smith_normal_form(IntMatrix(IntMatrix::Identity(2, 2)));
    CHECK(id.D == IntMatrix(IntMatrix::Identity(2, 2)));
    CHECK(id.divisors == std::vector<BigInt>{1, 1});

    auto col = smith_normal_form(mat(2, 1, {2, 1}));
    CHECK(col.divisors == std::vector<BigInt>{1});

    auto diag = smith_normal_form(mat(2, 2, {2, 0, 0, 4}));
    CHECK(diag.divisors == std::vector<BigInt>{2, 4});

    auto fix = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
    CHECK(fix.divisors == std::vector<BigInt>{1, 6});
    CHECK(IntMatrix(fix.U * mat(2, 2, {2, 0, 0, 3}) * fix.V) == fix.D);
}

TEST_CASE("smith normal form is exact on random matrices", "[homology]")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-20, 20);
    for (int t = 0; t < 200; ++t) {
        IntMatrix m(dim(rng), dim(rng));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                m(i, j) = entry(rng);
        auto s = smith_normal_form(m);
        REQUIRE(IntMatrix(s.U * m * s.V) == s.D);
        CHECK(abs(cofactor_det(s.U)) == 1);
        CHECK(abs(cofactor_det(s.V)) == 1);
        for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i)
            CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
        if (m.rows() == m.cols()) {
            BigInt product = 1;
            for (int i = 0; i < m.rows(); ++i)
                product *= s.D(i, i);
            CHECK(abs(cofactor_det(m)) == product);
            CHECK(determinant(m) == cofactor_det(m));
        }
        for (int k = 0; k <= std::min<int>(m.rows(), m.cols()); ++k)
            CHECK(elementary_ideal_gcd_by_minors(m, k) == elementary_ideal_gcd_by_smith(m, k));
    }
}

TEST_CASE("elementary ideals", "[homology]")
{
    IntMatrix d = mat(2, 2, {2, 0, 0, 6});
    CHECK(elementary_ideal_gcd(d, 0) == 12);
    CHECK(elementary_ideal_gcd(d, 1) == 2);
    CHECK(elementary_ideal_gcd(d, 2) == 1);
    CHECK(elementary_ideal_gcd(mat(2, 1, {2, 1}), 0) == 1);
    CHECK(elementary_ideal_gcd(mat(2, 2, {1, 2, 2, 4}), 0) == 0);
}

TEST_CASE("fast path falls back to big integers", "[homology]")
{
    const long big = 1L << 40;
    IntMatrix m = mat(2, 2, {big, 3, 5, big});
    AbelianGroup g = abelian_group(m);
    BigInt det = BigInt(big) * big - 15;
    CHECK(g == AbelianGroup{0, {det}});
}

TEST_CASE("abelian group formatting", "[homology]")
{
    CHECK(to_string(group(0, {})) == "0");
    CHECK(to_string(group(1, {})) == "Z^1");
    CHECK(to_string(group(1, {2, 4})) == "Z^1 + Z_{2} + Z_{4}");
    CHECK(to_string(group(0, {3})) == "Z_{3}");
}

TEST_CASE("h1 examples", "[homology]")
{
    LabelledGraph single;
    single.add_white("w1");
    CHECK(h1(single).is_trivial());
    CHECK(h1_matrix(single).matrix.size() == 0);
    CHECK(h1_matrix(single).free_rank_extra == 0);

    CHECK(h1(make_pure_cycle({1, 1}, {2, 2}, +1)) == group(1, {3}));
    CHECK(h1(make_pure_cycle({1}, {2}, +1)) == group(1, {}));
    CHECK(h1(make_echinus(echinus({{1, 0, 1}}))) == group(1, {}));
    CHECK(h1(make_linear({2, 3})).is_trivial());
}

TEST_CASE("genus columns", "[homology]")
{
    LabelledGraph g;
    int w = g.add_white("w1", -1);
    int b1 = g.add_black("b1");
    int b2 = g.add_black("b2");
    g.add_edge(w, b1, 3);
    g.add_edge(w, b2, 3);
    H1Matrix m = h1_matrix(g);
    REQUIRE(m.matrix.rows() == 1);
    REQUIRE(m.matrix.cols() == 3);
    CHECK(m.matrix == mat(1, 3, {3, 3, 2}));

    LabelledGraph torus;
    torus.add_white("w1", 1);
    H1Matrix t = h1_matrix(torus);
    CHECK(t.matrix.cols() == 2);
    CHECK(h1(torus) == group(2, {}));
}

TEST_CASE("pure cycle torsion order is the determinant", "[homology]")
{
    for (int eps : {+1, -1})
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                if (a + b < 3)
                    continue;
                std::vector<int> m{a, 1}, n{b, 2};
                long d = static_cast<long>(b) * 2 - eps * static_cast<long>(a) * 1;
                AbelianGroup g = h1(make_pure_cycle(m, n, eps));
                BigInt order = 1;
                for (const auto& t : g.torsion)
                    order *= t;
                if (d == 0)
                    CHECK(g.free_rank == 2);
                else {
                    CHECK(g.free_rank == 1);
                    CHECK(order == std::abs(d));
                }
            }
}

TEST_CASE("echinus matrix", "[homology]")
{
    CHECK(echinus_matrix(echinus({{1, 0, 1}})) == mat(2, 1, {2, 1}));
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            IntMatrix m = echinus_matrix(echinus({{p, q, 1}}));
            CHECK(abs(m(1, 0)) == abs(BigInt((1 << p) - (1 << q))));
        }
    IntMatrix zero = echinus_matrix(echinus({{1, 1, 1}, {1, 1, 1}}));
    CHECK(zero.rows() == 4);
    CHECK(zero.cols() == 2);
    CHECK_FALSE(abelian_group(zero).is_trivial());
}

TEST_CASE("echinus matrix carries the torsion of the echinus", "[homology]")
{
    for (int eps : {+1, -1})
        for (const auto& t : std::vector<std::vector<EchinusTriple>>{
                 {{1, 0, 1}}, {{1, 1, 1}}, {{2, 1, 3}}, {{1, 0, 1}, {0, 2, 2}}, {{3, 0, 1}, {1, 1, 2}, {0, 0, 1}}}) {
            EchinusParams p = echinus(t, eps);
            AbelianGroup torsion = abelian_group(echinus_matrix(p));
            AbelianGroup full = h1(make_echinus(p));
            CHECK(full.free_rank == torsion.free_rank + 1);
            CHECK(full.torsion == torsion.torsion);
        }
}

TEST_CASE("h1 does not depend on the spanning tree", "[homology]")
{
    EnumerationBounds bounds;
    bounds.max_blacks = 2;
    bounds.betti1 = 1;
    enumerate_graphs(bounds, [](const LabelledGraph& g) {
        AbelianGroup base = h1(g);
        for (int e : cycle_of(g).edges) {
            std::vector<bool> tree(g.num_edges(), true);
            tree[e] = false;
            H1Matrix m = h1_matrix(g, tree);
            REQUIRE(abelian_group(m.matrix, m.free_rank_extra) == base);
            REQUIRE(abelian_group(abelianization_matrix(pi1_presentation(g, tree))) == base);
        }
    });
}

TEST_CASE("vanishing generators", "[homology]")
{
    auto v = vanishing_generators(mat(2, 2, {1, 0, 0, 2}));
    CHECK(v == std::vector<bool>{true, false});
    // b1 = b2^2 and b2^3 = 1 leave b1 nonzero, b2 nonzero.
    auto w = vanishing_generators(mat(2, 2, {1, -2, 0, 3}));
    CHECK(w == std::vector<bool>{false, false});
    // 2a = 3a = 0 kills a.
    auto z = vanishing_generators(mat(2, 1, {2, 3}));
    CHECK(z == std::vector<bool>{true});
}
