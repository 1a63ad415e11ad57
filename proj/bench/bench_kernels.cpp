// Compares the OpenMP kernels against their serial reference implementations
// on the same inputs: the single-character move scan and the strong-goodness
// verifier. Results must agree exactly (the parallel reductions are defined
// to be order-independent); timings go to stdout as CSV.
//
//   bench_kernels [n] [k] [general|ss] [reps]

#include "goodfam/builder.hpp"
#include "goodfam/potential.hpp"
#include "goodfam/verifier.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>

using namespace goodfam;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

bool same_move(const std::optional<MoveDelta> &a,
               const std::optional<MoveDelta> &b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->position == b->position && a->new_char == b->new_char &&
           a->delta == b->delta;
}

bool same_violations(const std::vector<ViolationReport> &a,
                     const std::vector<ViolationReport> &b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].kind != b[i].kind || a[i].witnesses != b[i].witnesses ||
            a[i].observed != b[i].observed || a[i].bound != b[i].bound)
            return false;
    return true;
}

} // namespace

int main(int argc, char **argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 16;
    int k = argc > 2 ? std::atoi(argv[2]) : 2;
    Variant variant = (argc > 3 && std::strcmp(argv[3], "ss") == 0)
                          ? Variant::single_source
                          : Variant::general;
    int reps = argc > 4 ? std::atoi(argv[4]) : 200;

    GoodFamily fam = build_family(n, k, variant);
    const FamilyParams &p = fam.params;
    std::mt19937_64 rng(7);

    AgreementLedger ledger(p);
    for (const Label &w : fam.labels) ledger.add_accepted(w);

    // move scan: attach a fresh random working label per repetition so the
    // two paths see identical, non-trivial states
    std::vector<Label> probes(reps, Label(p.gamma));
    for (Label &s : probes)
        for (int j = 0; j < p.gamma; ++j)
            s[j] = static_cast<uint8_t>(rng() % p.alphabet.size);

    bool moves_match = true;
    auto t0 = std::chrono::steady_clock::now();
    for (const Label &s : probes) {
        ledger.attach(s);
        volatile bool any = ledger.best_single_char_move_serial().has_value();
        (void)any;
    }
    double serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (const Label &s : probes) {
        ledger.attach(s);
        volatile bool any = ledger.best_single_char_move().has_value();
        (void)any;
    }
    double parallel_ms = ms_since(t0);
    for (const Label &s : probes) {
        ledger.attach(s);
        auto a = ledger.best_single_char_move_serial();
        auto b = ledger.best_single_char_move();
        if (!same_move(a, b)) moves_match = false;
    }

    std::printf("kernel,n,k,variant,gamma,reps,serial_ms,parallel_ms,speedup,match\n");
    std::printf("move_scan,%d,%d,%s,%d,%d,%.2f,%.2f,%.2f,%s\n", n, k,
                variant_name(variant), p.gamma, reps, serial_ms, parallel_ms,
                serial_ms / std::max(parallel_ms, 0.01),
                moves_match ? "yes" : "NO");

    int vreps = std::max(1, reps / 10);
    t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < vreps; ++r) {
        volatile size_t count = verify_strong_goodness_serial(fam).size();
        (void)count;
    }
    serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < vreps; ++r) {
        volatile size_t count = verify_strong_goodness(fam).size();
        (void)count;
    }
    parallel_ms = ms_since(t0);
    bool verify_match =
        same_violations(verify_strong_goodness_serial(fam), verify_strong_goodness(fam));
    std::printf("verify,%d,%d,%s,%d,%d,%.2f,%.2f,%.2f,%s\n", n, k,
                variant_name(variant), p.gamma, vreps, serial_ms, parallel_ms,
                serial_ms / std::max(parallel_ms, 0.01),
                verify_match ? "yes" : "NO");
    return (moves_match && verify_match) ? 0 : 1;
}
