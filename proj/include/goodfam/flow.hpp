#pragma once
// Connectivity queries via unit-capacity max flow.
//
// All three notions reduce to max flow in a directed gadget over the subgraph
// picked out by edge_subset: each undirected edge becomes two opposed
// unit-capacity arcs, and a vertex is "split" into an in-node and an out-node
// joined by a unit arc whenever deleting it must cost one unit of flow:
//   vertex connectivity:  split every vertex except the endpoints
//   element connectivity: split only non-terminal vertices (terminals other
//                         than the endpoints pass through unbounded)
//   edge connectivity:    split nothing
// Requirements are tiny, so flow is computed by repeated augmenting search;
// `limit` stops early once that many units are reached.

#include "goodfam/sndp.hpp"

#include <climits>

namespace goodfam {

// max number of internally-vertex-disjoint u-v paths; a direct u-v edge in
// edge_subset contributes one path
int vertex_connectivity(const SndpInstance &inst, const EdgeSet &edge_subset,
                        int u, int v, int limit = INT_MAX);

// max number of element-disjoint u-v paths, elements = edges + non-terminal
// vertices; u and v must belong to terminal_set
int element_connectivity(const SndpInstance &inst, const EdgeSet &edge_subset,
                         const std::vector<int> &terminal_set, int u, int v,
                         int limit = INT_MAX);

// max number of edge-disjoint u-v paths
int edge_connectivity(const SndpInstance &inst, const EdgeSet &edge_subset,
                      int u, int v, int limit = INT_MAX);

} // namespace goodfam
