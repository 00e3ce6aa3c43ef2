/**
 * Recognizers and decision procedures: strings, L(p, q), A-graphs and
 * echinus graphs, the simple-connectivity oracle, and the decision of
 * whether the fundamental group is infinite cyclic.
 *
 * Trace anchors name the result a condition relies on:
 *
 *   pi1-z-graph-shape      cycle type, genus 0, white terminals
 *   free-product-quotient  two black terminals force a Z_m * Z_n quotient
 *   hnn-extension          a bare cycle gives an HNN extension, never Z
 *   pruned-cycle-quotient  some cycle black must have degree > 2
 *   hopfian-retraction     every black circle is null-homotopic
 *   black-splitting        splitting at a contractible black circle
 *   abelianization         first homology
 *   simply-connected-shape tree, genus 0, white terminals
 *   syntactic-reduction    pruning, killed-black splits, L(p,q), A-graphs
 *   group-search           Tietze + coset enumeration
 *   echinus-sum-rule       exactly one of sum p, sum q vanishes
 *   echinus-splitting      cutting an echinus at arm-less branch vertices
 *   a-graph-criterion      q_s > 0 for s < n forces p_t = 0 for t > s
 *   core-nonempty, core-splitting, core-alternating
 *                          the trivalent core conditions
 */
#ifndef STRATIFOLD_CLASSIFY_HPP
#define STRATIFOLD_CLASSIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stratifold/graph.hpp"
#include "stratifold/group_search.hpp"
#include "stratifold/params.hpp"
#include "stratifold/verdict.hpp"

namespace stratifold {

using OracleLimits = SearchLimits;

struct StringShape
{
    enum class Kind
    {
        P,  // 1 2 1 2 ... 1 2
        Q,  // 2 1 2 1 ... 2 1
        Neither
    };
    Kind kind = Kind::Neither;
    int twos = 0;
};

/// The empty word is reported as a p-string with no 2s.
StringShape string_shape(std::span<const int> labels);

/// True for a connected tree whose vertices all have degree <= 2.
bool is_linear(const LabelledGraph& g);

/// (p, q) when the labels, read from the lowest terminal, form a p-string
/// followed by a q-string; nullopt otherwise (also for black terminals or
/// nonzero genus). Throws NotLinear.
std::optional<std::pair<int, int>> is_Lpq(const LabelledGraph& g);

bool a_graph_is_simply_connected(const AGraphParams& params);

/// Every reading of g as an A-graph (one per choice of arm at each branch
/// vertex); empty when g is not an A-graph with at least one branch vertex.
std::vector<AGraphParams> recognize_a_graph(const LabelledGraph& g);

struct EchinusRecognition
{
    std::optional<EchinusParams> params;
    std::string reason;  // why recognition failed

    explicit operator bool() const { return params.has_value(); }
};

/// Expects a valid, pruned, trivalent graph with betti1 = 1. Branch black
/// b1 is the lowest-indexed branch vertex; the cycle is walked from b1
/// along its lower-indexed cycle edge.
EchinusRecognition recognize_echinus(const LabelledGraph& g);

Verdict echinus_pi1_is_Z(const EchinusParams& params);

/// Answer No if a necessary condition for infinite cyclic fundamental
/// group fails, Yes ("so far") otherwise. All conditions are recorded.
Verdict necessary_conditions(const LabelledGraph& g);

/// Cycle labels, skipping the cycle edges at branch vertices, alternate
/// 1, 2 cyclically and number a positive even count.
bool alternating_cycle(const LabelledGraph& g);

/// Per black, a positive m with b^m = 1 proved by propagating known orders
/// through genus-0 white relators, or 0 when none is known.
std::vector<long> black_orders(const LabelledGraph& g);

/// Blacks proved trivial in the fundamental group by propagating known
/// orders through genus-0 white relators.
std::vector<bool> certified_trivial_blacks(const LabelledGraph& g);

Verdict simply_connected(const LabelledGraph& g, const OracleLimits& limits = {});

Verdict decide_pi1_Z(const LabelledGraph& g, const OracleLimits& limits = {});

}  // namespace stratifold

#endif
