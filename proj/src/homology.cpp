#include "stratifold/homology.hpp"

#include <functional>
#include <sstream>


#include "stratifold/presentation.hpp"

namespace stratifold {

namespace {

BigInt pow2(int k)
{
    BigInt v = 1;
    v <<= k;
    return v;
}

}  // namespace

BigInt determinant(const IntMatrix& square)
{
    const Eigen::Index n = square.rows();
    if (n != square.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    if (n == 0)
        return 1;
    IntMatrix a = square;
    BigInt prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index swap = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return 0;
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

BigInt elementary_ideal_gcd_by_minors(const IntMatrix& m, int k)
{
    const int n = static_cast<int>(std::min(m.rows(), m.cols()));
    if (k < 0 || k > n)
        throw std::invalid_argument("elementary_ideal_gcd: k out of range");
    const int size = n - k;
    if (size == 0)
        return 1;
    BigInt g = 0;
    std::vector<int> rows(size), cols(size);
    // Enumerate row subsets, and for each, column subsets, in lexicographic order.
    std::function<void(int, int)> pick_cols;
    std::function<void(int, int)> pick_rows = [&](int pos, int from) {
        if (pos == size) {
            pick_cols(0, 0);
            return;
        }
        for (int r = from; r <= m.rows() - (size - pos); ++r) {
            rows[pos] = r;
            pick_rows(pos + 1, r + 1);
        }
    };
    pick_cols = [&](int pos, int from) {
        if (pos == size) {
            IntMatrix sub(size, size);
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    sub(i, j) = m(rows[i], cols[j]);
            g = boost::multiprecision::gcd(g, determinant(sub));
            return;
        }
        for (int c = from; c <= m.cols() - (size - pos); ++c) {
            cols[pos] = c;
            pick_cols(pos + 1, c + 1);
        }
    };
    pick_rows(0, 0);
    return abs(g);
}

BigInt elementary_ideal_gcd_by_smith(const IntMatrix& m, int k)
{
    const int n = static_cast<int>(std::min(m.rows(), m.cols()));
    if (k < 0 || k > n)
        throw std::invalid_argument("elementary_ideal_gcd: k out of range");
    auto snf = smith_normal_form(m, false);
    BigInt prod = 1;
    for (int i = 0; i < n - k; ++i)
        prod *= i < snf.rank() ? snf.divisors[i] : BigInt(0);
    return prod;
}

BigInt elementary_ideal_gcd(const IntMatrix& m, int k)
{
    if (std::min(m.rows(), m.cols()) <= 8)
        return elementary_ideal_gcd_by_minors(m, k);
    return elementary_ideal_gcd_by_smith(m, k);
}

std::string to_string(const AbelianGroup& group)
{
    if (group.is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (group.free_rank > 0) {
        os << "Z^" << group.free_rank;
        first = false;
    }
    for (const auto& d : group.torsion) {
        if (!first)
            os << " + ";
        os << "Z_{" << d << "}";
        first = false;
    }
    return os.str();
}

namespace {

template <typename Scalar>
AbelianGroup abelian_group_with(const IntMatrix& relations, int extra_free)
{
    Matrix<Scalar> m(relations.rows(), relations.cols());
    for (Eigen::Index i = 0; i < relations.rows(); ++i)
        for (Eigen::Index j = 0; j < relations.cols(); ++j)
            m(i, j) = scalar_from<Scalar>(relations(i, j));
    auto snf = smith_normal_form(m, false);
    AbelianGroup out;
    out.free_rank = static_cast<int>(relations.cols()) - snf.rank() + extra_free;
    for (const auto& d : snf.divisors)
        if (d != Scalar(1))
            out.torsion.push_back(to_big(d));
    return out;
}

}  // namespace

AbelianGroup abelian_group(const IntMatrix& relations, int extra_free)
{
    try {
        return abelian_group_with<CheckedInt>(relations, extra_free);
    } catch (const OverflowError&) {
        return abelian_group_with<BigInt>(relations, extra_free);
    }
}

AbelianGroup h1(const LabelledGraph& g)
{
    auto m = h1_matrix(g);
    return abelian_group(m.matrix, m.free_rank_extra);
}

std::vector<bool> vanishing_generators(const IntMatrix& relations)
{
    auto snf = smith_normal_form(relations, true);
    std::vector<bool> out(relations.cols(), true);
    for (Eigen::Index c = 0; c < relations.cols(); ++c) {
        for (Eigen::Index i = 0; i < relations.cols(); ++i) {
            const BigInt& x = snf.V(c, i);
            bool ok = i < snf.rank() ? (x % snf.divisors[i] == 0) : (x == 0);
            if (!ok) {
                out[c] = false;
                break;
            }
        }
    }
    return out;
}

IntMatrix echinus_matrix(const EchinusParams& params)
{
    require_valid(params);
    const int n = params.n();
    IntMatrix m = IntMatrix::Zero(2 * n, n);
    for (int i = 0; i < n; ++i) {
        const auto& t = params.triples[i];
        m(i, i) = pow2(t.r);
        m(n + i, i) += pow2(t.p);
        BigInt closing = pow2(t.q);
        if (i == n - 1 && params.epsilon == -1)
            closing = -closing;
        m(n + i, (i + 1) % n) -= closing;
    }
    return m;
}

std::string dump_matrix(const IntMatrix& m)
{
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j)
                os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace stratifold
