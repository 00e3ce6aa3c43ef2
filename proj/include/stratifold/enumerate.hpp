/**
 * Exhaustive enumeration of small valid graphs (genus-0 whites, connected,
 * betti1 <= 1), one representative per isomorphism class.
 *
 * Trees are grown leaf by leaf from a single white vertex and deduplicated
 * by canonical key at every size; graphs with one cycle are every tree plus
 * one extra edge, with both values of the cycle sign.
 */
#ifndef STRATIFOLD_ENUMERATE_HPP
#define STRATIFOLD_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "stratifold/graph.hpp"

namespace stratifold {

struct EnumerationBounds
{
    int max_blacks = 2;
    int max_label = 3;
    int max_black_degree = 3;
    bool trivalent_only = false;
    std::optional<int> betti1;  // 0, 1, or both when unset

    /// Hard caps; larger requests throw BoundsTooLarge.
    static constexpr int kMaxBlacks = 6;
    static constexpr int kMaxLabel = 6;
    static constexpr int kMaxBlackDegree = 4;
};

/// Calls sink once per graph: trees by increasing size, then unicyclic
/// graphs, each group in canonical-key order. Returns the number emitted.
std::size_t enumerate_graphs(const EnumerationBounds& bounds, const std::function<void(const LabelledGraph&)>& sink);

std::vector<LabelledGraph> enumerate_graphs(const EnumerationBounds& bounds);

}  // namespace stratifold

#endif
