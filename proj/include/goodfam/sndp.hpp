#pragma once
// Survivable network design instances and the subset-split reduction.
//
// An instance asks for a min-cost edge set giving r(u,v) vertex-disjoint
// paths between required terminal pairs (general) or r(s,t) paths from one
// source (single-source). The reduction indexes subinstances by the good
// family's subsets: each nonempty subset keeps only its member terminals and
// their induced requirements, is solved as an element-connectivity problem by
// a pluggable subsolver, and the union of the subinstance edge sets is the
// answer. Post-verification recomputes every requirement's vertex
// connectivity on the union; a shortfall means the family was not actually
// good (or a bug) and is reported as an internal error, never returned.

#include "goodfam/label_ops.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace goodfam {

struct SndpEdge {
    int u = 0, v = 0;
    double cost = 0;
};

struct Requirement {
    int u = 0, v = 0; // v is the terminal for single-source (u = source)
    int r = 0;
};

struct SndpInstance {
    Variant variant = Variant::general;
    int vertex_count = 0;
    std::vector<SndpEdge> edges;
    std::vector<int> terminals; // order binds terminal index -> family label
    std::vector<Requirement> requirements;
    int source = -1; // single-source only; never listed in terminals
    int k = 0;       // max requirement
};

// throws std::invalid_argument on any structural violation (self loop,
// duplicate edge, negative cost, requirement off the terminal set, r > k,
// single-source requirement not involving s, ...)
void validate_instance(const SndpInstance &inst);

using EdgeSet = std::vector<int>; // sorted edge indices into instance.edges

struct Subinstance {
    const SndpInstance *parent = nullptr;
    int position = 0, character = 0;   // the family subset (j, c) behind it
    std::vector<int> terminal_subset;  // member terminals; + source for ss
    std::vector<Requirement> induced;  // parent requirements inside the subset
};

struct PerSubinstance {
    int position = 0, character = 0;
    EdgeSet edges;
    double cost = 0;
};

struct RequirementCheck {
    Requirement req;
    int achieved = 0; // verified vertex connectivity on the union
};

struct SolutionReport {
    EdgeSet chosen_edges; // union of the per-subinstance edge sets
    double total_cost = 0;
    int nonempty_subsets = 0; // m in the cost bound: subsets with any member
    std::vector<PerSubinstance> per_subinstance; // deduplicated, by (j, c)
    std::vector<RequirementCheck> feasibility;
};

// a subsolver maps a subinstance to an edge set feasible for its induced
// element-connectivity requirements; the pipeline verifies before accepting
using ElementSubsolver = std::function<EdgeSet(const Subinstance &)>;

struct Infeasible : std::runtime_error {
    Requirement witness;
    explicit Infeasible(const Requirement &w)
        : std::runtime_error("requirement r(" + std::to_string(w.u) + "," +
                             std::to_string(w.v) + ")=" + std::to_string(w.r) +
                             " cannot be met"),
          witness(w) {}
};

// minimum-cost edge subset meeting the induced element-connectivity
// requirements, by enumerating subsets in nondecreasing cost order (ties by
// mask value) with monotone pruning: a set contained in a known-infeasible
// set is infeasible. Usage error above the edge cap.
EdgeSet exact_subsolver(const Subinstance &sub, int edge_cap = 22);

// start from all edges, scan in nonincreasing cost order (ties by edge
// index), drop an edge whenever all induced requirements still hold without
// it; feasible and inclusion-minimal
EdgeSet reverse_delete_subsolver(const Subinstance &sub);

// ground-truth optimum for the whole instance under vertex connectivity
std::pair<EdgeSet, double> exact_vcsndp_oracle(const SndpInstance &inst,
                                               int edge_cap = 22);

struct PostVerificationFailure : std::logic_error {
    Requirement req;
    int achieved;
    PostVerificationFailure(const Requirement &req_, int achieved_)
        : std::logic_error("union fails requirement r(" + std::to_string(req_.u) +
                           "," + std::to_string(req_.v) +
                           ")=" + std::to_string(req_.r) + ": achieved " +
                           std::to_string(achieved_)),
          req(req_), achieved(achieved_) {}
};

SolutionReport solve_vcsndp(const SndpInstance &inst, const GoodFamily &fam,
                            const ElementSubsolver &subsolver);

SolutionReport solve_single_source(const SndpInstance &inst, const GoodFamily &fam,
                                   const ElementSubsolver &subsolver);

} // namespace goodfam
