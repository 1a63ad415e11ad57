#pragma once
// Family certification.
//
// Strong goodness is polynomial to check and is what the builder guarantees:
//   general:       every pair agrees in >= alpha positions, every triple in
//                  <= beta positions;
//   single-source: every label has exactly gamma neighbors (one per column)
//                  and every pair agrees in <= beta positions.
// Weak goodness (no small blocker set X can cover a pair's shared subsets /
// a terminal's subsets) is the property the reduction actually consumes; it
// has no known polynomial check, so the oracle here is brute force over all
// maximum-size X and only runs on small instances.

#include "goodfam/label_ops.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace goodfam {

enum class ViolationKind { pairwise_low, triple_high, pairwise_high_ss, degree_ss };

const char *violation_kind_name(ViolationKind kind);

struct ViolationReport {
    ViolationKind kind;
    std::vector<int> witnesses; // offending terminal indices
    long long observed = 0;
    long long bound = 0;
};

// Empty result <=> strongly good. Reports are ordered: pairwise violations by
// (i,j), then triple violations by (i,j,t) -- identical for the serial and
// parallel paths. Triples whose minimum pairwise agreement is already <= beta
// are skipped (triple agreement can never exceed min pairwise agreement).
std::vector<ViolationReport> verify_strong_goodness(const GoodFamily &fam);
std::vector<ViolationReport> verify_strong_goodness_serial(const GoodFamily &fam);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A witness that weak goodness fails: for the general variant, the subsets
// shared by terminals i and j are all covered by the blocker set X; for the
// single-source variant, all of terminal i's subsets are covered (j = -1).
struct WeakCounterexample {
    int i = -1;
    int j = -1;
    std::vector<int> blockers;
};

// Brute-force oracle over all pairs (i < j) and all X of size min(k-1, n-2)
// drawn from the other terminals. Checking only maximum-size X suffices:
// coverage by X implies coverage by any superset. Enumeration is lexicographic
// and the first counterexample is returned. The work budget counts (pair, X)
// combinations; exceeding it throws BudgetExceeded before any work is done.
std::optional<WeakCounterexample>
verify_weak_goodness_bruteforce(const GoodFamily &fam, int k,
                                long long work_budget = 100000000);

// Single-source analogue: terminal i against X of size min(k-1, n-1).
std::optional<WeakCounterexample>
verify_weak_goodness_ss_bruteforce(const GoodFamily &fam, int k,
                                   long long work_budget = 100000000);

// Standing implication test: strongly good with alpha/beta > k must imply
// weakly good. Returns true when the implication holds (vacuously true when
// the precondition fails). Dispatches on the family's variant.
bool cross_check_observation(const GoodFamily &fam, int k,
                             long long work_budget = 100000000);

} // namespace goodfam
