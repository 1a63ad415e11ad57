#pragma once
// Family construction: the deterministic potential-descent path and the
// randomized uniform-labeling baseline.
//
// build_family seeds the family (general: the zero label and the cyclic ramp;
// single-source: the zero label alone) and appends one label per iteration by
// descending the potential to zero. When a rung of parameters cannot be
// closed within its search budget, gamma escalates by 3/2 (re-rounded to a
// multiple of |A|), thresholds are recomputed, and the whole construction
// restarts; after 8 escalations the builder gives up with EscalationExhausted.
// The procedure takes no seed: every run with the same inputs produces the
// same family, byte for byte.

#include "goodfam/templates.hpp"
#include "goodfam/verifier.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace goodfam {

struct BuildConfig {
    int c_mult = 2;    // |A| = c_mult * k
    double zeta = 1.0; // gamma scale factor
};

struct BuildReport {
    FamilyParams params;                 // final parameters, escalations included
    std::vector<long long> append_steps; // descent steps per label, winning rung
    long long sa_iterations = 0;         // start-polish iterations, all rungs
    long long spot_checks = 0;           // passed phi audits, all rungs
    int stalls = 0;                      // rejected starts, all rungs
    int backjumps = 0;                   // rebuilds, all rungs
};

struct EscalationExhausted : std::runtime_error {
    int escalations;
    explicit EscalationExhausted(int escalations_)
        : std::runtime_error("construction failed after " +
                             std::to_string(escalations_) + " escalations"),
          escalations(escalations_) {}
};

GoodFamily build_family(int n, int k, Variant variant,
                        const BuildConfig &config = {},
                        BuildReport *report = nullptr);

// ---------------------------------------------------------------------------
// Randomized baseline: every label drawn uniformly from A^gamma (the natural
// fractional assignment rounded independently per position), then checked
// against relaxed thresholds
//     alpha' = floor(gamma / (2|A|)),   beta' = min(beta_budget, 2*ceil(gamma/|A|^2)).
// Failure is a value, not an exception: the caller gets the violated
// constraints back. Deterministic for a fixed rng_seed.

struct BaselineConfig {
    int c_mult = 2;
    double zeta = 1.0;
    int gamma_override = 0; // > 0: use this gamma (rounded up to a multiple of |A|)
    long long beta_budget = 1LL << 60; // cap on the relaxed triple bound
};

struct BaselineFailure {
    FamilyParams params; // with the relaxed thresholds substituted
    std::vector<ViolationReport> violations;
};

using BaselineResult = std::variant<GoodFamily, BaselineFailure>;

BaselineResult build_family_randomized(int n, int k, Variant variant,
                                       const BaselineConfig &config,
                                       uint64_t rng_seed);

} // namespace goodfam
