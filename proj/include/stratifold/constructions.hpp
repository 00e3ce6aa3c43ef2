/**
 * Builders for the standard graph families: linear strings, L(p, q),
 * pure cycles, echinus graphs and A-graphs.
 *
 * Naming. Whites are "w1", "w2", ...; blacks "c1", "c2", ... except the
 * branch blacks of an echinus or A-graph, which come first as "b1", "b2", ...
 */
#ifndef STRATIFOLD_CONSTRUCTIONS_HPP
#define STRATIFOLD_CONSTRUCTIONS_HPP

#include <vector>

#include "stratifold/graph.hpp"
#include "stratifold/params.hpp"

namespace stratifold {

/// Path starting at a white vertex: w -l1- c -l2- w -l3- c ...
LabelledGraph make_linear(const std::vector<int>& labels);

/// The string whose labels read (1 2)^p (2 1)^q from its first white.
LabelledGraph make_lpq(int p, int q);

/// Cycle w1 -m1- c1 -n1- w2 -m2- c2 ... c_k -n_k- w1, the closing edge
/// carrying sign epsilon.
LabelledGraph make_pure_cycle(const std::vector<int>& m, const std::vector<int>& n, int epsilon = +1);

/// Branch blacks b1..bn on the cycle, segment i running from b_i to
/// b_{i+1 mod n}, arm i hanging from b_i. For epsilon = -1 the edge closing
/// the last segment at b1 has sign -1.
LabelledGraph make_echinus(const EchinusParams& params);

LabelledGraph make_a_graph(const AGraphParams& params);

/// Label words of the two string families.
std::vector<int> lpq_labels(int p, int q);

}  // namespace stratifold

#endif
