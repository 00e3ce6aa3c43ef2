/**
 * Graph moves that preserve the fundamental group (or split it as a free
 * product), and the iterated reduction of a trivalent graph to its core.
 */
#ifndef STRATIFOLD_REDUCTION_HPP
#define STRATIFOLD_REDUCTION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stratifold/graph.hpp"
#include "stratifold/verdict.hpp"

namespace stratifold {

/// Signs +1 on a breadth-first spanning tree; each non-tree edge carries the
/// product of the signs around its fundamental cycle.
LabelledGraph normalize_signs(const LabelledGraph& g);

/// Repeatedly deletes a terminal genus-0 white joined by a label-1 edge to a
/// degree-2 black whose other edge has label 2. The surviving white keeps
/// its genus. Optionally records one line per deletion.
LabelledGraph prune(const LabelledGraph& g, std::vector<std::string>* log = nullptr);

struct SplitResult
{
    std::vector<LabelledGraph> components;  // ordered by lowest surviving vertex
    int free_rank = 0;                      // degree(b) - number of components
};

/// Components of g minus the closed star of black vertex b.
SplitResult split_at_black(const LabelledGraph& g, int b);

/// Off-cycle degree-3 blacks carrying two arms (strings reading
/// 1 (1 2)^r from the black to a terminal white).
std::vector<int> arm_pair_candidates(const LabelledGraph& g);

/// Deletes the longer arm (ties: the arm whose root white has the higher
/// index) and b, and identifies the root white of the shorter arm with the
/// neighbour of b towards the cycle.
LabelledGraph prune_arm_pair(const LabelledGraph& g, int b);

enum class CoreStatus
{
    Core,
    Empty,
    Undetermined
};

struct CoreResult
{
    CoreStatus status = CoreStatus::Undetermined;
    std::optional<LabelledGraph> core;
    std::vector<std::string> steps;
    std::string reason;
};

using SimplyConnectedOracle = std::function<Verdict(const LabelledGraph&)>;

/// Iteratively removes, for every outermost off-cycle black branch vertex b
/// adjacent to a terminal white w, the star of b together with w and the
/// remaining subtree T beyond b, after the oracle has certified T simply
/// connected. Requires a pruned trivalent graph with betti1 = 1.
CoreResult core_reduce(const LabelledGraph& g, const SimplyConnectedOracle& oracle);

/// One line per step, followed by the final status.
std::string format_steps(const CoreResult& r);

}  // namespace stratifold

#endif
