#pragma once
// Labels and pure agreement arithmetic.
//
// A label is a string over the alphabet {0..|A|-1}, stored one character per
// byte. The family of n labels corresponds to a bipartite graph: left side
// terminals, right side the gamma*|A| subsets T_(j,c) = { i : labels[i][j]==c };
// agreement(w_i, w_j) equals the number of subsets shared by terminals i and j.

#include "goodfam/params.hpp"

#include <cstdint>
#include <vector>

namespace goodfam {

using Label = std::vector<uint8_t>;

struct GoodFamily {
    FamilyParams params;
    std::vector<Label> labels;
};

// |s1 (.) s2| = number of positions where the two labels agree
int agreement(const Label &s1, const Label &s2);

// number of positions where all three labels agree; <= min pairwise agreement
int triple_agreement(const Label &s1, const Label &s2, const Label &s3);

// The two fixed starting labels of the general construction:
//   mu = all zeros, nu = 0,1,...,|A|-1 cyclically repeated (truncated if
//   |A| does not divide gamma). With gamma a multiple of |A| (the default
//   rounding), agreement(mu,nu) = gamma/|A| exactly.
std::pair<Label, Label> seed_pair(const FamilyParams &params);

struct SubsetEntry {
    int position; // j in [gamma]
    int character; // c in [|A|]
    std::vector<int> members; // terminal indices i with labels[i][j] == c
};

// all gamma*|A| subsets T_(j,c); for fixed j the subsets partition {0..n-1}
std::vector<SubsetEntry> subsets_from_labels(const GoodFamily &fam);

} // namespace goodfam
