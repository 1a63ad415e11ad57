#pragma once
// Start generation for the family builder.
//
// build_next_label only descends; whether a rung closes is decided almost
// entirely by the quality of the start labels it is given. Two providers:
//
//   field_start_set  -- exact algebraic starts for single-source families
//                       whose alphabet size is a power of two and whose
//                       current gamma is a power of two >= n/|A|. Every pair
//                       of returned labels agrees in exactly gamma/|A| = beta
//                       positions (or zero), so each start descends in zero
//                       steps. Returns an empty vector when not applicable.
//
//   grow_family      -- randomized multi-start search: the contractual
//                       roll(nu, r) start first, then random starts polished
//                       by a short annealing pass over the same move set the
//                       descent uses (uphill allowed only here). On repeated
//                       stalls it backjumps: removes recent non-seed labels
//                       and rebuilds. Deterministic for a fixed budget/seed.

#include "goodfam/label_ops.hpp"
#include "goodfam/potential.hpp"

#include <cstdint>
#include <vector>

namespace goodfam {

// Arithmetic in GF(2^m), m <= 8, via shift-and-xor multiply.
struct GF2m {
    int m;
    uint32_t poly; // primitive polynomial, top bit = x^m
    explicit GF2m(int m_);
    uint32_t mul(uint32_t a, uint32_t b) const;
};

// Single-source algebraic start set (empty if the template does not apply:
// wrong variant, |A| not a power of two, gamma not a power of two, or gamma
// too small to give n distinct labels).
std::vector<Label> field_start_set(int n, const FamilyParams &params);

struct GrowBudget {
    int starts_per_label = 12;        // attempts before declaring a stall
    long long sa_iters = 60000;       // annealing length per random start
    int max_backjumps = 300;          // stall-driven rebuilds per rung
    long long sa_iter_cap = 40000000; // total annealing budget per rung
    long long phi_start_cap = 0;      // reject starts with phi above this
                                      // before descending (0 = no cap);
                                      // descent length is at most phi(start)
    uint64_t seed = 1;
};

// Iteration-count budgets tuned per cell size (deterministic; no wall time).
GrowBudget tuned_budget(const FamilyParams &params);

struct GrowStats {
    std::vector<long long> append_steps; // descent steps per accepted append
    long long sa_iterations = 0;         // annealing iterations consumed
    long long spot_checks = 0;           // exact-recompute checks passed
    int backjumps = 0;
    int stalls = 0; // rejected starts
};

// Extend fam (which must already hold the seed labels) to n labels at fixed
// params. template_rows, when non-null, are tried as the first start for the
// corresponding label index. Returns true when |fam| == n.
bool grow_family(std::vector<Label> &fam, const FamilyParams &params,
                 const GrowBudget &budget, GrowStats &stats,
                 const std::vector<Label> *template_rows = nullptr);

} // namespace goodfam
