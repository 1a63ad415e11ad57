#include "goodfam/sndp.hpp"

#include "goodfam/flow.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace goodfam {

void validate_instance(const SndpInstance &inst) {
    int n = inst.vertex_count;
    if (n <= 0) throw std::invalid_argument("vertex_count must be positive");
    std::set<std::pair<int, int>> seen;
    for (const SndpEdge &e : inst.edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint outside vertex range");
        if (e.u == e.v) throw std::invalid_argument("self loops not allowed");
        if (e.cost < 0) throw std::invalid_argument("edge costs must be >= 0");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge (graph must be simple)");
    }
    std::set<int> term;
    for (int t : inst.terminals) {
        if (t < 0 || t >= n) throw std::invalid_argument("terminal outside vertex range");
        if (!term.insert(t).second) throw std::invalid_argument("duplicate terminal");
    }
    if (inst.variant == Variant::single_source) {
        if (inst.source < 0 || inst.source >= n)
            throw std::invalid_argument("single-source instance needs a source vertex");
        if (term.count(inst.source))
            throw std::invalid_argument("source must not appear in the terminal list");
    } else if (inst.source >= 0) {
        throw std::invalid_argument("general instance must not set a source");
    }
    std::set<std::pair<int, int>> req_seen;
    for (const Requirement &r : inst.requirements) {
        if (r.r <= 0 || r.r > inst.k)
            throw std::invalid_argument("requirement must satisfy 0 < r <= k");
        if (inst.variant == Variant::single_source) {
            if (r.u != inst.source)
                throw std::invalid_argument("single-source requirement must involve s");
            if (!term.count(r.v))
                throw std::invalid_argument("requirement endpoint is not a terminal");
        } else {
            if (!term.count(r.u) || !term.count(r.v))
                throw std::invalid_argument("requirement endpoint is not a terminal");
            if (r.u == r.v) throw std::invalid_argument("requirement needs distinct endpoints");
        }
        auto key = std::minmax(r.u, r.v);
        if (!req_seen.insert(key).second)
            throw std::invalid_argument("duplicate requirement");
    }
}

namespace {

double edge_set_cost(const SndpInstance &inst, const EdgeSet &edges) {
    double c = 0;
    for (int e : edges) c += inst.edges[e].cost;
    return c;
}

EdgeSet mask_to_edges(uint32_t mask) {
    EdgeSet out;
    for (int e = 0; mask; ++e, mask >>= 1)
        if (mask & 1) out.push_back(e);
    return out;
}

bool induced_feasible(const Subinstance &sub, const EdgeSet &edges) {
    for (const Requirement &r : sub.induced)
        if (element_connectivity(*sub.parent, edges, sub.terminal_subset, r.u,
                                 r.v, r.r) < r.r)
            return false;
    return true;
}

// shared scaffold for the two exact enumerators: all edge subsets in
// nondecreasing cost order (ties by mask), monotone infeasibility pruning
template <typename Feasible>
std::pair<EdgeSet, double> cheapest_feasible_subset(const SndpInstance &inst,
                                                    int edge_cap,
                                                    Feasible feasible) {
    int m = static_cast<int>(inst.edges.size());
    if (m > edge_cap)
        throw std::invalid_argument(
            "instance exceeds the exact enumeration cap; use the "
            "reverse-delete subsolver");
    std::vector<uint32_t> masks(1u << m);
    std::iota(masks.begin(), masks.end(), 0u);
    std::vector<double> cost(1u << m, 0.0);
    for (uint32_t mask = 1; mask < masks.size(); ++mask) {
        uint32_t low = mask & (mask - 1);
        int bit = std::countr_zero(mask);
        cost[mask] = cost[low] + inst.edges[bit].cost;
    }
    std::stable_sort(masks.begin(), masks.end(),
                     [&](uint32_t a, uint32_t b) { return cost[a] < cost[b]; });
    std::vector<uint32_t> failed;
    for (uint32_t mask : masks) {
        bool doomed = false;
        for (uint32_t f : failed)
            if ((mask & f) == mask) { // subset of a known-infeasible set
                doomed = true;
                break;
            }
        if (doomed) continue;
        if (feasible(mask_to_edges(mask))) return {mask_to_edges(mask), cost[mask]};
        failed.push_back(mask);
    }
    throw Infeasible(Requirement{});
}

} // namespace

EdgeSet exact_subsolver(const Subinstance &sub, int edge_cap) {
    if (sub.induced.empty()) return {};
    // report the cheapest unmeetable requirement when even all edges fail
    EdgeSet all(sub.parent->edges.size());
    std::iota(all.begin(), all.end(), 0);
    for (const Requirement &r : sub.induced)
        if (element_connectivity(*sub.parent, all, sub.terminal_subset, r.u, r.v,
                                 r.r) < r.r)
            throw Infeasible(r);
    return cheapest_feasible_subset(*sub.parent, edge_cap,
                                    [&](const EdgeSet &edges) {
                                        return induced_feasible(sub, edges);
                                    })
        .first;
}

EdgeSet reverse_delete_subsolver(const Subinstance &sub) {
    const SndpInstance &inst = *sub.parent;
    std::vector<char> keep(inst.edges.size(), 1);
    EdgeSet current(inst.edges.size());
    std::iota(current.begin(), current.end(), 0);
    for (const Requirement &r : sub.induced)
        if (element_connectivity(inst, current, sub.terminal_subset, r.u, r.v,
                                 r.r) < r.r)
            throw Infeasible(r);
    if (sub.induced.empty()) return {};
    std::vector<int> order(inst.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.edges[a].cost > inst.edges[b].cost;
    });
    for (int e : order) {
        keep[e] = 0;
        current.clear();
        for (int i = 0; i < static_cast<int>(keep.size()); ++i)
            if (keep[i]) current.push_back(i);
        if (!induced_feasible(sub, current)) keep[e] = 1;
    }
    current.clear();
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        if (keep[i]) current.push_back(i);
    return current;
}

std::pair<EdgeSet, double> exact_vcsndp_oracle(const SndpInstance &inst,
                                               int edge_cap) {
    if (inst.requirements.empty()) return {{}, 0.0};
    return cheapest_feasible_subset(inst, edge_cap, [&](const EdgeSet &edges) {
        for (const Requirement &r : inst.requirements)
            if (vertex_connectivity(inst, edges, r.u, r.v, r.r) < r.r)
                return false;
        return true;
    });
}

namespace {

SolutionReport solve_common(const SndpInstance &inst, const GoodFamily &fam,
                            const ElementSubsolver &subsolver) {
    validate_instance(inst);
    if (static_cast<int>(fam.labels.size()) !=
        static_cast<int>(inst.terminals.size()))
        throw std::invalid_argument(
            "family size must equal the instance's terminal count");
    bool ss = inst.variant == Variant::single_source;

    // requirements indexed for fast induction onto terminal subsets
    std::map<std::pair<int, int>, int> req_of;
    for (const Requirement &r : inst.requirements)
        req_of[std::minmax(r.u, r.v)] = r.r;

    SolutionReport report;
    std::set<int> union_edges;
    std::map<std::vector<int>, size_t> solved; // dedup by T_i -> report index
    for (const SubsetEntry &entry : subsets_from_labels(fam)) {
        if (entry.members.empty()) continue;
        report.nonempty_subsets++;
        Subinstance sub;
        sub.parent = &inst;
        sub.position = entry.position;
        sub.character = entry.character;
        for (int member : entry.members)
            sub.terminal_subset.push_back(inst.terminals[member]);
        std::sort(sub.terminal_subset.begin(), sub.terminal_subset.end());
        if (ss) {
            sub.terminal_subset.insert(sub.terminal_subset.begin(), inst.source);
            for (int t : sub.terminal_subset) {
                auto it = req_of.find(std::minmax(inst.source, t));
                if (it != req_of.end())
                    sub.induced.push_back({inst.source, t, it->second});
            }
        } else {
            for (size_t a = 0; a < sub.terminal_subset.size(); ++a)
                for (size_t b = a + 1; b < sub.terminal_subset.size(); ++b) {
                    int u = sub.terminal_subset[a], v = sub.terminal_subset[b];
                    auto it = req_of.find(std::minmax(u, v));
                    if (it != req_of.end()) sub.induced.push_back({u, v, it->second});
                }
        }
        auto dedup = solved.find(sub.terminal_subset);
        if (dedup != solved.end()) {
            for (int e : report.per_subinstance[dedup->second].edges)
                union_edges.insert(e);
            continue;
        }
        EdgeSet edges = subsolver(sub);
        std::sort(edges.begin(), edges.end());
        if (!induced_feasible(sub, edges))
            throw std::logic_error("subsolver returned an infeasible edge set");
        for (int e : edges) union_edges.insert(e);
        report.per_subinstance.push_back(
            {sub.position, sub.character, std::move(edges), 0.0});
        report.per_subinstance.back().cost =
            edge_set_cost(inst, report.per_subinstance.back().edges);
        solved.emplace(sub.terminal_subset, report.per_subinstance.size() - 1);
    }
    report.chosen_edges.assign(union_edges.begin(), union_edges.end());
    report.total_cost = edge_set_cost(inst, report.chosen_edges);
    for (const Requirement &r : inst.requirements) {
        int achieved = vertex_connectivity(inst, report.chosen_edges, r.u, r.v);
        if (achieved < r.r) throw PostVerificationFailure(r, achieved);
        report.feasibility.push_back({r, achieved});
    }
    return report;
}

} // namespace

SolutionReport solve_vcsndp(const SndpInstance &inst, const GoodFamily &fam,
                            const ElementSubsolver &subsolver) {
    if (inst.variant != Variant::general)
        throw std::invalid_argument("solve_vcsndp expects a general instance");
    if (fam.params.variant != Variant::general)
        throw std::invalid_argument("solve_vcsndp expects a general family");
    return solve_common(inst, fam, subsolver);
}

SolutionReport solve_single_source(const SndpInstance &inst,
                                   const GoodFamily &fam,
                                   const ElementSubsolver &subsolver) {
    if (inst.variant != Variant::single_source)
        throw std::invalid_argument("solve_single_source expects a single-source instance");
    if (fam.params.variant != Variant::single_source)
        throw std::invalid_argument("solve_single_source expects a single-source family");
    return solve_common(inst, fam, subsolver);
}

} // namespace goodfam
