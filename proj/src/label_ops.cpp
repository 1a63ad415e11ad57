#include "goodfam/label_ops.hpp"

#include <stdexcept>

namespace goodfam {

int agreement(const Label &s1, const Label &s2) {
    if (s1.size() != s2.size())
        throw std::invalid_argument("agreement: label length mismatch");
    int a = 0;
    for (size_t j = 0; j < s1.size(); j++) a += s1[j] == s2[j];
    return a;
}

int triple_agreement(const Label &s1, const Label &s2, const Label &s3) {
    if (s1.size() != s2.size() || s2.size() != s3.size())
        throw std::invalid_argument("triple_agreement: label length mismatch");
    int a = 0;
    for (size_t j = 0; j < s1.size(); j++) a += s1[j] == s2[j] && s2[j] == s3[j];
    return a;
}

std::pair<Label, Label> seed_pair(const FamilyParams &params) {
    int q = params.alphabet.size;
    if (params.gamma < q)
        throw ParameterError("seed_pair: gamma < |A|");
    Label mu(params.gamma, 0);
    Label nu(params.gamma);
    for (int j = 0; j < params.gamma; j++) nu[j] = static_cast<uint8_t>(j % q);
    return {mu, nu};
}

std::vector<SubsetEntry> subsets_from_labels(const GoodFamily &fam) {
    int q = fam.params.alphabet.size;
    int g = fam.params.gamma;
    std::vector<SubsetEntry> out;
    out.reserve(static_cast<size_t>(g) * q);
    for (int j = 0; j < g; j++)
        for (int c = 0; c < q; c++) {
            SubsetEntry e;
            e.position = j;
            e.character = c;
            for (int i = 0; i < static_cast<int>(fam.labels.size()); i++)
                if (fam.labels[i][j] == c) e.members.push_back(i);
            out.push_back(std::move(e));
        }
    return out;
}

} // namespace goodfam
