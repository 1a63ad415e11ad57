#include "goodfam/builder.hpp"

#include <random>

namespace goodfam {

GoodFamily build_family(int n, int k, Variant variant, const BuildConfig &config,
                        BuildReport *report) {
    if (n < 2) throw ParameterError("build_family requires n >= 2");
    FamilyParams p = derive_params(n, k, variant, config.c_mult, config.zeta);
    long long sa_total = 0, spot_total = 0;
    int stalls_total = 0, backjumps_total = 0;
    for (;;) {
        std::vector<Label> fam;
        if (p.variant == Variant::general) {
            auto [mu, nu] = seed_pair(p);
            fam.push_back(std::move(mu));
            fam.push_back(std::move(nu));
        } else {
            fam.push_back(Label(p.gamma, 0));
        }
        GrowStats stats;
        std::vector<Label> tmpl = field_start_set(n, p);
        bool ok = grow_family(fam, p, tuned_budget(p), stats,
                              tmpl.empty() ? nullptr : &tmpl);
        sa_total += stats.sa_iterations;
        spot_total += stats.spot_checks;
        stalls_total += stats.stalls;
        backjumps_total += stats.backjumps;
        if (ok) {
            if (report) {
                report->params = p;
                report->append_steps = std::move(stats.append_steps);
                report->sa_iterations = sa_total;
                report->spot_checks = spot_total;
                report->stalls = stalls_total;
                report->backjumps = backjumps_total;
            }
            return GoodFamily{p, std::move(fam)};
        }
        if (p.escalations >= 8) throw EscalationExhausted(p.escalations);
        p = escalate(p);
    }
}

BaselineResult build_family_randomized(int n, int k, Variant variant,
                                       const BaselineConfig &config,
                                       uint64_t rng_seed) {
    FamilyParams p = derive_params(n, k, variant, config.c_mult, config.zeta);
    int q = p.alphabet.size;
    if (config.gamma_override > 0)
        p.gamma = (config.gamma_override + q - 1) / q * q;
    // relaxed thresholds: half the expected pairwise agreement gamma/|A|,
    // twice the expected triple agreement gamma/|A|^2
    p.alpha = p.gamma / (2 * q);
    long long beta_relaxed = 2LL * ((p.gamma + static_cast<long long>(q) * q - 1) /
                                    (static_cast<long long>(q) * q));
    p.beta = static_cast<int>(std::min<long long>(config.beta_budget, beta_relaxed));

    std::mt19937_64 rng(rng_seed);
    std::vector<Label> labels(n);
    for (auto &w : labels) {
        w.resize(p.gamma);
        for (int j = 0; j < p.gamma; ++j)
            w[j] = static_cast<uint8_t>(rng() % q);
    }
    GoodFamily fam{p, std::move(labels)};
    auto violations = verify_strong_goodness(fam);
    if (violations.empty()) return fam;
    return BaselineFailure{p, std::move(violations)};
}

} // namespace goodfam
