#include "goodfam/params.hpp"

#include <cmath>

namespace goodfam {

void refresh_thresholds(FamilyParams &p) {
    int q = p.alphabet.size;
    if (p.variant == Variant::general) {
        p.alpha = (p.gamma + q - 1) / q;
        p.beta = (p.gamma + q * q - 1) / (q * q);
    } else {
        p.alpha = p.gamma;
        p.beta = (p.gamma + q - 1) / q;
    }
    if (!(static_cast<long long>(p.alpha) > static_cast<long long>(p.k) * p.beta))
        throw ParameterError("alpha/beta <= k; increase c_mult");
}

FamilyParams derive_params(int n, int k, Variant variant, int c_mult, double zeta) {
    if (n < 2) throw ParameterError("n must be >= 2");
    if (k < 1) throw ParameterError("k must be >= 1");
    int q = c_mult * k;
    if (q < 2) throw ParameterError("c_mult*k must be >= 2");

    double base = (variant == Variant::general)
                      ? zeta * double(q) * double(q) * std::log(double(n))
                      : zeta * double(q) * std::log(double(n));
    long long g = static_cast<long long>(std::ceil(base));
    if (g < q) g = q; // gamma >= |A| so the seed labels are well defined
    g = (g + q - 1) / q * q;

    FamilyParams p;
    p.n = n;
    p.k = k;
    p.alphabet.size = q;
    p.gamma = static_cast<int>(g);
    p.variant = variant;
    p.escalations = 0;
    refresh_thresholds(p);
    return p;
}

FamilyParams escalate(const FamilyParams &p) {
    FamilyParams next = p;
    int q = p.alphabet.size;
    long long g = (3LL * p.gamma + 1) / 2;
    g = (g + q - 1) / q * q;
    next.gamma = static_cast<int>(g);
    next.escalations = p.escalations + 1;
    refresh_thresholds(next);
    return next;
}

} // namespace goodfam
