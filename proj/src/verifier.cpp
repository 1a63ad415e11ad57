#include "goodfam/verifier.hpp"

#ifdef GOODFAM_OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace goodfam {

const char *violation_kind_name(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::pairwise_low: return "pairwise_low";
    case ViolationKind::triple_high: return "triple_high";
    case ViolationKind::pairwise_high_ss: return "pairwise_high_ss";
    case ViolationKind::degree_ss: return "degree_ss";
    }
    return "unknown";
}

namespace {

// pairwise agreements as a dense matrix; shared by the pair phase and the
// triple-pruning phase
std::vector<int> agreement_matrix(const std::vector<Label> &L) {
    int n = static_cast<int>(L.size());
    std::vector<int> A(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int a = agreement(L[i], L[j]);
            A[static_cast<size_t>(i) * n + j] = a;
            A[static_cast<size_t>(j) * n + i] = a;
        }
    return A;
}

std::vector<ViolationReport> verify_general(const GoodFamily &fam, bool parallel) {
    const FamilyParams &p = fam.params;
    const auto &L = fam.labels;
    int n = static_cast<int>(L.size());
    std::vector<int> A = agreement_matrix(L);
    std::vector<ViolationReport> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int a = A[static_cast<size_t>(i) * n + j];
            if (a < p.alpha)
                out.push_back({ViolationKind::pairwise_low, {i, j}, a, p.alpha});
        }
    // triples grouped by leading index so the parallel path can merge
    // per-i lists back into the serial order
    std::vector<std::vector<ViolationReport>> per_i(n);
#ifdef GOODFAM_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (A[static_cast<size_t>(i) * n + j] <= p.beta) continue;
            for (int t = j + 1; t < n; ++t) {
                if (A[static_cast<size_t>(i) * n + t] <= p.beta ||
                    A[static_cast<size_t>(j) * n + t] <= p.beta)
                    continue;
                int tr = triple_agreement(L[i], L[j], L[t]);
                if (tr > p.beta)
                    per_i[i].push_back(
                        {ViolationKind::triple_high, {i, j, t}, tr, p.beta});
            }
        }
    }
    (void)parallel;
    for (auto &v : per_i) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<ViolationReport> verify_ss(const GoodFamily &fam, bool parallel) {
    const FamilyParams &p = fam.params;
    const auto &L = fam.labels;
    int n = static_cast<int>(L.size());
    std::vector<ViolationReport> out;
    // degree condition: a label touches exactly one subset per column, so its
    // neighborhood size is its length; anything != gamma is malformed
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(L[i].size()) != p.gamma)
            out.push_back({ViolationKind::degree_ss,
                           {i},
                           static_cast<long long>(L[i].size()),
                           p.gamma});
    if (!out.empty()) return out;
    std::vector<std::vector<ViolationReport>> per_i(n);
#ifdef GOODFAM_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int a = agreement(L[i], L[j]);
            if (a > p.beta)
                per_i[i].push_back(
                    {ViolationKind::pairwise_high_ss, {i, j}, a, p.beta});
        }
    (void)parallel;
    for (auto &v : per_i) out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace

std::vector<ViolationReport> verify_strong_goodness(const GoodFamily &fam) {
    return fam.params.variant == Variant::general ? verify_general(fam, true)
                                                  : verify_ss(fam, true);
}

std::vector<ViolationReport> verify_strong_goodness_serial(const GoodFamily &fam) {
    return fam.params.variant == Variant::general ? verify_general(fam, false)
                                                  : verify_ss(fam, false);
}

namespace {

// combinations of {0..pool_size-1} in lexicographic order; size may be 0
struct CombinationIter {
    int pool_size, size;
    std::vector<int> idx;
    bool done = false;
    CombinationIter(int pool_size_, int size_) : pool_size(pool_size_), size(size_) {
        for (int t = 0; t < size; ++t) idx.push_back(t);
        if (size > pool_size) done = true;
    }
    bool next() {
        int t = size - 1;
        while (t >= 0 && idx[t] == pool_size - size + t) --t;
        if (t < 0) return false;
        ++idx[t];
        for (int u = t + 1; u < size; ++u) idx[u] = idx[u - 1] + 1;
        return true;
    }
};

long long combinations_or_cap(int n, int r, long long cap) {
    if (r < 0 || r > n) return 0;
    long long c = 1;
    for (int t = 1; t <= r; ++t) {
        c = c * (n - r + t) / t;
        if (c > cap) return cap + 1;
    }
    return c;
}

// does some member of X share the character at column `col` with `chr`?
bool covered(const std::vector<Label> &L, const std::vector<int> &X, int col,
             uint8_t chr) {
    for (int x : X)
        if (L[x][col] == chr) return true;
    return false;
}

} // namespace

std::optional<WeakCounterexample>
verify_weak_goodness_bruteforce(const GoodFamily &fam, int k,
                                long long work_budget) {
    const auto &L = fam.labels;
    int n = static_cast<int>(L.size());
    int gamma = fam.params.gamma;
    int xsize = std::min(k - 1, n - 2);
    long long per_pair = combinations_or_cap(n - 2, xsize, work_budget);
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (per_pair > work_budget / std::max<long long>(pairs, 1))
        throw BudgetExceeded("weak-goodness enumeration exceeds work budget");

    std::vector<int> others, X(xsize);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // the subsets shared by i and j = the columns where they agree
            std::vector<int> shared;
            for (int col = 0; col < gamma; ++col)
                if (L[i][col] == L[j][col]) shared.push_back(col);
            others.clear();
            for (int t = 0; t < n; ++t)
                if (t != i && t != j) others.push_back(t);
            CombinationIter comb(static_cast<int>(others.size()), xsize);
            if (comb.done) continue;
            do {
                for (int t = 0; t < xsize; ++t) X[t] = others[comb.idx[t]];
                bool contained = true;
                for (int col : shared)
                    if (!covered(L, X, col, L[i][col])) {
                        contained = false;
                        break;
                    }
                if (contained) return WeakCounterexample{i, j, X};
            } while (comb.next());
        }
    return std::nullopt;
}

std::optional<WeakCounterexample>
verify_weak_goodness_ss_bruteforce(const GoodFamily &fam, int k,
                                   long long work_budget) {
    const auto &L = fam.labels;
    int n = static_cast<int>(L.size());
    int gamma = fam.params.gamma;
    int xsize = std::min(k - 1, n - 1);
    long long per_terminal = combinations_or_cap(n - 1, xsize, work_budget);
    if (per_terminal > work_budget / std::max(n, 1))
        throw BudgetExceeded("weak-goodness enumeration exceeds work budget");

    std::vector<int> others, X(xsize);
    for (int i = 0; i < n; ++i) {
        others.clear();
        for (int t = 0; t < n; ++t)
            if (t != i) others.push_back(t);
        CombinationIter comb(static_cast<int>(others.size()), xsize);
        if (comb.done) continue;
        do {
            for (int t = 0; t < xsize; ++t) X[t] = others[comb.idx[t]];
            bool contained = true;
            for (int col = 0; col < gamma; ++col)
                if (!covered(L, X, col, L[i][col])) {
                    contained = false;
                    break;
                }
            if (contained) return WeakCounterexample{i, -1, X};
        } while (comb.next());
    }
    return std::nullopt;
}

bool cross_check_observation(const GoodFamily &fam, int k, long long work_budget) {
    bool strong = verify_strong_goodness(fam).empty();
    bool ratio = static_cast<long long>(fam.params.alpha) >
                 static_cast<long long>(k) * fam.params.beta;
    if (!strong || !ratio) return true; // implication holds vacuously
    auto cex = fam.params.variant == Variant::general
                   ? verify_weak_goodness_bruteforce(fam, k, work_budget)
                   : verify_weak_goodness_ss_bruteforce(fam, k, work_budget);
    return !cex.has_value();
}

} // namespace goodfam
