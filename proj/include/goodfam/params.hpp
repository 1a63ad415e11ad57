#pragma once
// Parameter derivation for label families.
//
// A family assigns each of n terminals a label in A^gamma. Two regimes:
//   general:       every pair of labels agrees in >= alpha positions and
//                  every triple agrees in <= beta positions, alpha/beta > k.
//   single-source: every label trivially has degree gamma; every pair agrees
//                  in <= beta positions, alpha = gamma, alpha/beta > k.
// gamma is rounded up to a multiple of |A| so the seed labels' agreement is
// exactly gamma/|A| with no truncation corner case.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goodfam {

enum class Variant { general, single_source };

inline const char *variant_name(Variant v) {
    return v == Variant::general ? "general" : "ss";
}

struct Alphabet {
    int size = 2; // characters are 0..size-1
};

struct FamilyParams {
    int n = 0;          // terminal count
    int k = 0;          // max connectivity requirement
    Alphabet alphabet;  // |A| = c_mult * k
    int gamma = 0;      // label length, multiple of |A|
    int alpha = 0;      // pairwise agreement lower bound (general) / = gamma (ss)
    int beta = 0;       // triple agreement cap (general) / pairwise cap (ss)
    Variant variant = Variant::general;
    int escalations = 0;

    int q() const { return alphabet.size; }
};

struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gamma = ceil(zeta * |A|^2 * ln n) (general) or ceil(zeta * |A| * ln n) (ss),
// rounded up to a multiple of |A|; alpha/beta derived per variant.
FamilyParams derive_params(int n, int k, Variant variant, int c_mult = 2,
                           double zeta = 1.0);

// gamma <- ceil(3*gamma/2), re-rounded to a multiple of |A|; alpha/beta
// recomputed; escalation counter incremented. Used when construction stalls.
FamilyParams escalate(const FamilyParams &p);

// recompute alpha/beta from gamma and the variant; throws if alpha/beta <= k
void refresh_thresholds(FamilyParams &p);

} // namespace goodfam
