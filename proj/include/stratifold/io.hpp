/**
 * Line-based text format, canonical forms and Graphviz export.
 *
 *   # comment
 *   white <id> genus=<int>
 *   black <id>
 *   edge <white-id> <black-id> label=<int >= 1> [sign=<+1|-1>]
 *
 * Ids are [A-Za-z0-9_]+, unique within each colour class. Edges receive ids
 * e0, e1, ... in file order.
 */
#ifndef STRATIFOLD_IO_HPP
#define STRATIFOLD_IO_HPP

#include <string>
#include <string_view>

#include "stratifold/graph.hpp"

namespace stratifold {

/// Parses the text format; throws SyntaxError, UnknownVertex, DuplicateId,
/// BadLabel, InvalidSign or NonBipartite with the offending line number.
/// The graph is not validated beyond that.
LabelledGraph parse(std::string_view text);

/// Header comment, whites, blacks and edges, each sorted (ids in natural
/// order, so w2 < w10). parse(serialize(g)) reproduces every vertex id.
std::string serialize(const LabelledGraph& g);

/// Isomorphism-invariant relabelling of a connected graph with betti1 <= 1:
/// isomorphic graphs (respecting colours, genera, labels and the cycle sign)
/// map to identical serializations. Throws PreconditionFailed otherwise.
LabelledGraph canonical_form(const LabelledGraph& g);

/// serialize(canonical_form(g)) without the header.
std::string canonical_key(const LabelledGraph& g);

/// Whites as circles labelled with id and genus, blacks as filled points,
/// edges labelled with their label (", -" appended for sign -1).
std::string export_dot(const LabelledGraph& g);

/// Natural ordering of ids: digit runs compare numerically.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace stratifold

#endif
