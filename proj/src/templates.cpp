#include "goodfam/templates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace goodfam {

// ---------------------------------------------------------------------------
// GF(2^m)

namespace {
// one irreducible polynomial per degree, top bit = x^m
constexpr uint32_t kPoly[9] = {0,    0x3,  0x7,  0xB, 0x13,
                               0x25, 0x43, 0x89, 0x11B};
} // namespace

GF2m::GF2m(int m_) : m(m_) {
    if (m < 1 || m > 8) throw std::invalid_argument("GF2m: m outside 1..8");
    poly = kPoly[m];
}

uint32_t GF2m::mul(uint32_t a, uint32_t b) const {
    uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << m)) a ^= poly;
    }
    return r & ((1u << m) - 1);
}

// ---------------------------------------------------------------------------
// Algebraic single-source start set.
//
// Label (u, c) with u in GF(2^m), c in [q], q = 2^s, gamma = 2^m columns:
//     w[(u,c)][j] = low s bits of (u * j in GF(2^m))  xor  c
// For u1 != u2 the per-column difference trunc((u1^u2)*j) ^ (c1^c2) sweeps a
// bijection of the field as j does, so it vanishes in exactly gamma/q = beta
// columns; for u1 == u2, c1 != c2 it never vanishes. Either way every pair
// agrees in <= beta positions. Row (0,0) is the all-zeros seed and row (1,0)
// is the cyclic ramp 0,1,...,q-1,... — both native to the builder's seeding.

std::vector<Label> field_start_set(int n, const FamilyParams &params) {
    if (params.variant != Variant::single_source) return {};
    int q = params.alphabet.size, gamma = params.gamma;
    if (q < 2 || (q & (q - 1)) != 0) return {};
    if (gamma < q || (gamma & (gamma - 1)) != 0) return {};
    int s = std::countr_zero(static_cast<unsigned>(q));
    int m = std::countr_zero(static_cast<unsigned>(gamma));
    if (m > 8) return {};
    if ((n + q - 1) / q > gamma) return {}; // one field element per q-block of rows
    GF2m f(m);
    uint32_t mask = static_cast<uint32_t>(q) - 1;
    std::vector<Label> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        uint32_t u = static_cast<uint32_t>(i / q);
        uint32_t c = static_cast<uint32_t>(i % q);
        Label w(gamma);
        for (int j = 0; j < gamma; ++j)
            w[j] = static_cast<uint8_t>((f.mul(u, static_cast<uint32_t>(j)) & mask) ^ c);
        rows.push_back(std::move(w));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Budgets. Iteration counts, not wall time, so runs are reproducible. Tiny
// cells get generous budgets (they close fast anyway); large cells get a
// bounded attempt sized so a hopeless rung gives up in seconds.

GrowBudget tuned_budget(const FamilyParams &params) {
    GrowBudget b;
    if (params.n <= 20) {
        b.starts_per_label = 40;
        b.sa_iters = 60000;
        b.max_backjumps = 2000;
        b.sa_iter_cap = 12000000;
    } else if (params.variant == Variant::single_source) {
        // pairwise-only potential: scans stay cheap even at large gamma.
        // n > 96 cells sit on a knife edge (mean pair agreement ~= the cap)
        // and need the deeper annealing budget to close their tight rungs
        b.starts_per_label = 12;
        b.sa_iters = 120000;
        b.max_backjumps = 400;
        b.sa_iter_cap = params.n > 96
                            ? std::max<long long>(4000000, 4000000000 / params.n)
                            : std::max<long long>(4000000, 800000000 / params.n);
        b.phi_start_cap = 40 * params.n;
    } else {
        // triple terms make each descent scan O(gamma |A| pairs/|A|^2); the
        // phi cap keeps a failing rung from sinking time into long descents
        b.starts_per_label = 5;
        b.sa_iters = 25000;
        b.max_backjumps = 40;
        b.sa_iter_cap = std::max<long long>(
            500000, 256000000 / (static_cast<long long>(params.n) * params.k));
        b.phi_start_cap = params.n <= 64 ? 1500 : (params.n <= 128 ? 400 : 120);
    }
    return b;
}

// ---------------------------------------------------------------------------
// grow_family

namespace {

Label random_label(std::mt19937_64 &rng, int gamma, int q) {
    Label s(gamma);
    for (int j = 0; j < gamma; ++j) s[j] = static_cast<uint8_t>(rng() % q);
    return s;
}

// anneal the label toward small phi with the ledger's own move deltas;
// geometric cooling t0 -> t1; returns the best label seen via inout
void sa_polish(AgreementLedger &led, const FamilyParams &p, Label &inout,
               long long iters, std::mt19937_64 &rng, long long &consumed) {
    const double t0 = 3.0, t1 = 0.05;
    led.attach(inout);
    int q = p.alphabet.size;
    long long phi = led.phi().total;
    long long best = phi;
    Label best_s = led.working();
    double lam = std::log(t0 / t1) / static_cast<double>(iters);
    long long it = 0;
    for (; it < iters && phi > 0; ++it) {
        int j = static_cast<int>(rng() % p.gamma);
        int c = static_cast<int>(rng() % q);
        if (c == led.working()[j]) continue;
        long long d = led.move_delta(j, c);
        if (d <= 0) {
            led.apply_move({j, c, d});
            phi += d;
            if (phi < best) {
                best = phi;
                best_s = led.working();
            }
        } else {
            double T = t0 * std::exp(-lam * static_cast<double>(it));
            if (static_cast<double>(rng() >> 11) * 0x1p-53 <
                std::exp(-static_cast<double>(d) / T)) {
                led.apply_move({j, c, d});
                phi += d;
            }
        }
    }
    consumed += it;
    inout = best_s;
}

} // namespace

bool grow_family(std::vector<Label> &fam, const FamilyParams &params,
                 const GrowBudget &budget, GrowStats &stats,
                 const std::vector<Label> *template_rows) {
    const int n = params.n, q = params.alphabet.size, gamma = params.gamma;
    std::mt19937_64 rng(budget.seed);

    auto make_ledger = [&]() {
        AgreementLedger led(params);
        for (const auto &w : fam) led.add_accepted(w);
        return led;
    };
    AgreementLedger led = make_ledger();

    const size_t seed_count = (params.variant == Variant::general) ? 2 : 1;
    int backjumps = 0;
    while (static_cast<int>(fam.size()) < n) {
        // column character counts drive the preferential-attachment starts
        std::vector<int> colcnt(static_cast<size_t>(gamma) * q, 0);
        for (const auto &w : fam)
            for (int j = 0; j < gamma; ++j) colcnt[static_cast<size_t>(j) * q + w[j]]++;

        bool ok = false;
        for (int g = 0; g < budget.starts_per_label && !ok; ++g) {
            Label start;
            bool polish = true;
            if (g == 0) {
                size_t r = fam.size();
                if (template_rows && r < template_rows->size()) {
                    start = (*template_rows)[r];
                } else {
                    // the contractual start: the ramp seed shifted by the index
                    start.resize(gamma);
                    for (int j = 0; j < gamma; ++j)
                        start[j] = static_cast<uint8_t>((j + r) % q);
                }
                polish = false;
            } else if (g % 2 == 1) {
                // join big classes with probability ~ (count+1)^2: columns that
                // already tilt toward a character pull new labels the same way
                start.resize(gamma);
                for (int j = 0; j < gamma; ++j) {
                    long long tot = 0;
                    for (int c = 0; c < q; ++c) {
                        long long w = colcnt[static_cast<size_t>(j) * q + c] + 1;
                        tot += w * w;
                    }
                    long long pick = static_cast<long long>(rng() % static_cast<uint64_t>(tot));
                    int c = 0;
                    for (; c < q; ++c) {
                        long long w = colcnt[static_cast<size_t>(j) * q + c] + 1;
                        pick -= w * w;
                        if (pick < 0) break;
                    }
                    start[j] = static_cast<uint8_t>(c);
                }
            } else {
                start = random_label(rng, gamma, q);
            }
            if (polish) {
                sa_polish(led, params, start, budget.sa_iters, rng, stats.sa_iterations);
                if (stats.sa_iterations > budget.sa_iter_cap) return false;
            }
            if (budget.phi_start_cap > 0) {
                led.attach(start);
                if (led.phi().total > budget.phi_start_cap) {
                    ++stats.stalls;
                    continue;
                }
            }
            try {
                long long steps = 0;
                Label w = build_next_label(led, params, start, &steps, &stats.spot_checks);
                stats.append_steps.push_back(steps);
                fam.push_back(w);
                led.add_accepted(w);
                ok = true;
            } catch (const Stalled &) {
                ++stats.stalls;
            }
        }
        if (!ok) {
            if (++backjumps > budget.max_backjumps) {
                stats.backjumps = backjumps - 1;
                return false;
            }
            // escalating ruin: repeated failures near one size mean the accepted
            // set's shape is wrong, so tear off a bigger chunk (never the seeds)
            size_t kick = 1 + static_cast<size_t>(backjumps % 8) + rng() % 2;
            if (backjumps % 25 == 24) kick = fam.size() / 3;
            for (size_t t = 0; t < kick && fam.size() > seed_count; ++t)
                fam.erase(fam.begin() + seed_count + rng() % (fam.size() - seed_count));
            led = make_ledger();
        }
    }
    stats.backjumps = backjumps;
    return true;
}

} // namespace goodfam
