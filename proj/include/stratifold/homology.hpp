/**
 * Exact integer linear algebra: Smith normal form, elementary ideals, and
 * first homology of 2-stratifolds.
 *
 * Everything here is exact. Matrices are Eigen dense matrices over an exact
 * integer scalar (BigInt or CheckedInt, see scalar.hpp); the algorithms are
 * templated on the scalar so the same code serves the arbitrary-precision
 * path and the overflow-checked 64-bit fast path.
 */
#ifndef STRATIFOLD_HOMOLOGY_HPP
#define STRATIFOLD_HOMOLOGY_HPP

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "stratifold/graph.hpp"
#include "stratifold/params.hpp"
#include "stratifold/scalar.hpp"

namespace stratifold {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<BigInt>;

template <typename Scalar>
struct SmithResult
{
    Matrix<Scalar> D;  // diagonal, U * M * V == D
    Matrix<Scalar> U;  // unimodular, rows x rows (empty when not requested)
    Matrix<Scalar> V;  // unimodular, cols x cols (empty when not requested)
    std::vector<Scalar> divisors;  // nonzero diagonal entries, positive, d_i | d_{i+1}

    int rank() const { return static_cast<int>(divisors.size()); }
};

namespace detail {

using std::abs;
using boost::multiprecision::abs;

template <typename Scalar>
void add_row_multiple(Matrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q, Eigen::Index from)
{
    for (Eigen::Index j = from; j < m.cols(); ++j)
        if (m(src, j) != Scalar(0))
            m(dst, j) -= q * m(src, j);
}

template <typename Scalar>
void add_col_multiple(Matrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q, Eigen::Index from)
{
    for (Eigen::Index i = from; i < m.rows(); ++i)
        if (m(i, src) != Scalar(0))
            m(i, dst) -= q * m(i, src);
}

}  // namespace detail

/**
 * Smith normal form of an integer matrix.
 *
 * Deterministic pivoting: at step t the nonzero entry of smallest absolute
 * value in the trailing block (first in column-major scan order) is moved to
 * (t, t), its row and column are cleared by Euclidean steps, and any entry of
 * the trailing block not divisible by the pivot is folded into the pivot row.
 *
 * With with_transforms = false, U and V are left empty and only D and the
 * divisors are produced.
 */
template <typename Derived>
SmithResult<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m,
                                                        bool with_transforms = true)
{
    using Scalar = typename Derived::Scalar;
    using detail::abs;
    using Index = Eigen::Index;

    SmithResult<Scalar> out;
    Matrix<Scalar> a = m;
    const Index rows = a.rows(), cols = a.cols();
    Matrix<Scalar> u, v;
    if (with_transforms) {
        u = Matrix<Scalar>::Identity(rows, rows);
        v = Matrix<Scalar>::Identity(cols, cols);
    }
    const Scalar zero(0);

    auto swap_rows = [&](Index i, Index j) {
        if (i == j)
            return;
        a.row(i).swap(a.row(j));
        if (with_transforms)
            u.row(i).swap(u.row(j));
    };
    auto swap_cols = [&](Index i, Index j) {
        if (i == j)
            return;
        a.col(i).swap(a.col(j));
        if (with_transforms)
            v.col(i).swap(v.col(j));
    };

    for (Index t = 0; t < std::min(rows, cols); ++t) {
        Index pi = -1, pj = -1;
        for (Index j = t; j < cols; ++j)
            for (Index i = t; i < rows; ++i)
                if (a(i, j) != zero && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool clear = true;
            for (Index i = t + 1; i < rows; ++i) {
                if (a(i, t) == zero)
                    continue;
                Scalar q = a(i, t) / a(t, t);
                detail::add_row_multiple(a, i, t, q, t);
                if (with_transforms)
                    detail::add_row_multiple(u, i, t, q, 0);
                if (a(i, t) != zero)
                    clear = false;
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (a(t, j) == zero)
                    continue;
                Scalar q = a(t, j) / a(t, t);
                detail::add_col_multiple(a, j, t, q, t);
                if (with_transforms)
                    detail::add_col_multiple(v, j, t, q, 0);
                if (a(t, j) != zero)
                    clear = false;
            }
            if (!clear) {
                Index bi = t, bj = t;
                for (Index i = t + 1; i < rows; ++i)
                    if (a(i, t) != zero && abs(a(i, t)) < abs(a(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (Index j = t + 1; j < cols; ++j)
                    if (a(t, j) != zero && abs(a(t, j)) < abs(a(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            Index bad = -1;
            for (Index i = t + 1; i < rows && bad < 0; ++i)
                for (Index j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != zero) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            // row_t += row_bad
            detail::add_row_multiple(a, t, bad, Scalar(-1), t);
            if (with_transforms)
                detail::add_row_multiple(u, t, bad, Scalar(-1), 0);
        }
        if (a(t, t) < zero) {
            for (Index j = t; j < cols; ++j)
                a(t, j) = -a(t, j);
            if (with_transforms)
                for (Index j = 0; j < rows; ++j)
                    u(t, j) = -u(t, j);
        }
        out.divisors.push_back(a(t, t));
    }
    out.D = std::move(a);
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& square);

/// gcd of all (n-k)-minors, n = min(rows, cols); 0 if they all vanish and 1
/// for the empty minor (k = n). Enumerates minors directly when n <= 8,
/// otherwise reads the product of Smith divisors.
BigInt elementary_ideal_gcd(const IntMatrix& m, int k);

/// Direct enumeration of minors regardless of size.
BigInt elementary_ideal_gcd_by_minors(const IntMatrix& m, int k);

/// Product d_1 ... d_{n-k} of the Smith divisors (0 past the rank).
BigInt elementary_ideal_gcd_by_smith(const IntMatrix& m, int k);

struct AbelianGroup
{
    int free_rank = 0;
    std::vector<BigInt> torsion;  // each >= 2, d_i | d_{i+1}

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_z() const { return free_rank == 1 && torsion.empty(); }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// "Z^r + Z_{d1} + ... + Z_{dk}", or "0" for the trivial group.
std::string to_string(const AbelianGroup& group);

/// The abelian group Z^cols / rowspan(relations) plus extra_free free summands.
AbelianGroup abelian_group(const IntMatrix& relations, int extra_free = 0);

/// First homology of X_g.
AbelianGroup h1(const LabelledGraph& g);

/// For each column generator, whether it is zero in Z^cols / rowspan(relations).
std::vector<bool> vanishing_generators(const IntMatrix& relations);

/// Stacked relation matrix (A; B) of an echinus graph: A = diag(2^{r_i}),
/// B(i,i) += 2^{p_i}, B(i,i+1 mod n) -= 2^{q_i}; the closing entry changes
/// sign when epsilon = -1.
IntMatrix echinus_matrix(const EchinusParams& params);

/// Row-major, space-separated integers, one row per line.
std::string dump_matrix(const IntMatrix& m);

}  // namespace stratifold

#endif
