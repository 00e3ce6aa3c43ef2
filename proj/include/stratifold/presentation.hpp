/**
 * Fundamental-group presentations and abelianized relation matrices.
 *
 * Orientation convention. The sign s(e) with which a boundary curve enters
 * the relator of its white vertex is the stored sign on spanning-tree edges
 * and (-1)^k times the stored sign on a non-tree edge whose fundamental
 * cycle has 2k edges. With all stored signs +1 every fundamental cycle then
 * reads as a chain of "equal boundary curves" relations,
 *   b_1^{n_1} = b_2^{m_2}, ..., t^{-1} b_k^{n_k} t = b_1^{m_1},
 * and a single -1 sign flips the closing relation.
 */
#ifndef STRATIFOLD_PRESENTATION_HPP
#define STRATIFOLD_PRESENTATION_HPP

#include <string>
#include <vector>

#include "stratifold/graph.hpp"
#include "stratifold/homology.hpp"

namespace stratifold {

struct Letter
{
    int generator;
    int exponent;

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct GroupPresentation
{
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

/// Signs s(e) of the orientation convention above, relative to tree.
std::vector<int> boundary_signs(const LabelledGraph& g, const std::vector<bool>& tree);

/// Generators: one per black vertex ("b<id>"), then one per non-tree edge
/// ("t<edge id>"). One relator per white vertex: the product over its
/// incident edges (index order) of b^{s m} for tree edges and
/// t b^{s m} t^-1 for non-tree edges; an isolated white contributes none.
/// Requires every genus to be 0.
GroupPresentation pi1_presentation(const LabelledGraph& g);
GroupPresentation pi1_presentation(const LabelledGraph& g, const std::vector<bool>& tree);

struct H1Matrix
{
    IntMatrix matrix;                  // one row per white vertex
    std::vector<std::string> columns;  // black generators, then surface generators
    int free_rank_extra = 0;           // number of t generators
};

/// Abelianized relations: row w = sum_e s(e) m_e b_e + 2 (a_1 + ... + a_|g|)
/// for genus g < 0; a white of genus g > 0 contributes 2g zero columns.
H1Matrix h1_matrix(const LabelledGraph& g);
H1Matrix h1_matrix(const LabelledGraph& g, const std::vector<bool>& tree);

/// Relator matrix of the abelianization of an arbitrary presentation.
IntMatrix abelianization_matrix(const GroupPresentation& p);

/// One relator per line after a "generators:" header, e.g. "bx^2 ty bz ty^-1".
std::string to_string(const GroupPresentation& p);

}  // namespace stratifold

#endif
