#include "goodfam/potential.hpp"

#ifdef GOODFAM_OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cassert>

namespace goodfam {

long long step_bound(const FamilyParams &params) {
    long long n = params.n;
    return n * params.alpha + n * (n - 1) / 2 * params.beta;
}

PotentialValue potential(const Label &s, const std::vector<Label> &accepted,
                         const FamilyParams &params) {
    PotentialValue v;
    int r = static_cast<int>(accepted.size());
    if (params.variant == Variant::general) {
        for (int i = 0; i < r; ++i) {
            long long a = agreement(accepted[i], s);
            if (a < params.alpha) v.pairwise_deficit += params.alpha - a;
        }
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                long long t = triple_agreement(accepted[i], accepted[j], s);
                if (t > params.beta) v.triple_excess += t - params.beta;
            }
    } else {
        for (int i = 0; i < r; ++i) {
            long long a = agreement(accepted[i], s);
            if (a > params.beta) v.triple_excess += a - params.beta;
        }
    }
    v.total = v.pairwise_deficit + v.triple_excess;
    return v;
}

AgreementLedger::AgreementLedger(const FamilyParams &params)
    : params_(params),
      col_index_(static_cast<size_t>(params.gamma) * params.alphabet.size),
      pair_col_index_(static_cast<size_t>(params.gamma) * params.alphabet.size) {}

void AgreementLedger::add_accepted(const Label &w) {
    if (static_cast<int>(w.size()) != params_.gamma)
        throw std::invalid_argument("label length != gamma");
    int q = params_.alphabet.size;
    int32_t id = static_cast<int32_t>(accepted_.size());
    for (int j = 0; j < params_.gamma; ++j)
        col_index_[static_cast<size_t>(j) * q + w[j]].push_back(id);
    if (params_.variant == Variant::general) {
        for (int32_t i = 0; i < id; ++i) {
            int32_t pid = static_cast<int32_t>(pairs_.size());
            bool agrees_somewhere = false;
            const Label &wi = accepted_[i];
            for (int j = 0; j < params_.gamma; ++j)
                if (wi[j] == w[j]) {
                    pair_col_index_[static_cast<size_t>(j) * q + w[j]].push_back(pid);
                    agrees_somewhere = true;
                }
            // pair ids must stay dense: record the pair even if it never agrees
            (void)agrees_somewhere;
            pairs_.emplace_back(i, id);
        }
    }
    accepted_.push_back(w);
}

void AgreementLedger::attach(const Label &s) {
    if (static_cast<int>(s.size()) != params_.gamma)
        throw std::invalid_argument("label length != gamma");
    s_ = s;
    int q = params_.alphabet.size;
    pair_agr_.assign(accepted_.size(), 0);
    triple_agr_.assign(pairs_.size(), 0);
    for (int j = 0; j < params_.gamma; ++j) {
        size_t cell = static_cast<size_t>(j) * q + s_[j];
        for (int32_t i : col_index_[cell]) pair_agr_[i]++;
        for (int32_t p : pair_col_index_[cell]) triple_agr_[p]++;
    }
    phi_pair_ = 0;
    phi_triple_ = 0;
    if (params_.variant == Variant::general) {
        for (int32_t a : pair_agr_)
            if (a < params_.alpha) phi_pair_ += params_.alpha - a;
        for (int32_t t : triple_agr_)
            if (t > params_.beta) phi_triple_ += t - params_.beta;
    } else {
        for (int32_t a : pair_agr_)
            if (a > params_.beta) phi_triple_ += a - params_.beta;
    }
}

PotentialValue AgreementLedger::phi() const {
    PotentialValue v;
    v.pairwise_deficit = phi_pair_;
    v.triple_excess = phi_triple_;
    v.total = phi_pair_ + phi_triple_;
    return v;
}

long long AgreementLedger::move_delta(int j, int c) const {
    int q = params_.alphabet.size;
    int c_old = s_[j];
    size_t cell_old = static_cast<size_t>(j) * q + c_old;
    size_t cell_new = static_cast<size_t>(j) * q + c;
    long long d = 0;
    if (params_.variant == Variant::general) {
        int alpha = params_.alpha, beta = params_.beta;
        // pairwise deficit: losing one agreement hurts iff a <= alpha,
        // gaining one helps iff a < alpha
        for (int32_t i : col_index_[cell_old])
            if (pair_agr_[i] <= alpha) d += 1;
        for (int32_t i : col_index_[cell_new])
            if (pair_agr_[i] < alpha) d -= 1;
        // triple excess: losing helps iff t > beta, gaining hurts iff t >= beta
        for (int32_t p : pair_col_index_[cell_old])
            if (triple_agr_[p] > beta) d -= 1;
        for (int32_t p : pair_col_index_[cell_new])
            if (triple_agr_[p] >= beta) d += 1;
    } else {
        int beta = params_.beta;
        for (int32_t i : col_index_[cell_old])
            if (pair_agr_[i] > beta) d -= 1;
        for (int32_t i : col_index_[cell_new])
            if (pair_agr_[i] >= beta) d += 1;
    }
    return d;
}

namespace {
inline bool move_less(long long da, int ja, int ca, long long db, int jb, int cb) {
    if (da != db) return da < db;
    if (ja != jb) return ja < jb;
    return ca < cb;
}
} // namespace

std::optional<MoveDelta> AgreementLedger::best_single_char_move_serial() const {
    int q = params_.alphabet.size;
    long long best_d = 0;
    int best_j = -1, best_c = -1;
    for (int j = 0; j < params_.gamma; ++j) {
        int c_old = s_[j];
        for (int c = 0; c < q; ++c) {
            if (c == c_old) continue;
            // strict < plus increasing (j, c) scan order = lexicographic tie-break
            long long d = move_delta(j, c);
            if (d < best_d) best_d = d, best_j = j, best_c = c;
        }
    }
    if (best_j < 0) return std::nullopt;
    return MoveDelta{best_j, best_c, best_d};
}

std::optional<MoveDelta> AgreementLedger::best_single_char_move() const {
#ifdef GOODFAM_OPENMP
    int q = params_.alphabet.size;
    int nthreads = omp_get_max_threads();
    std::vector<long long> t_d(nthreads, 0);
    std::vector<int> t_j(nthreads, -1), t_c(nthreads, -1);
#pragma omp parallel
    {
        int tid = omp_get_thread_num();
        long long bd = 0;
        int bj = -1, bc = -1;
#pragma omp for schedule(static)
        for (int j = 0; j < params_.gamma; ++j) {
            int c_old = s_[j];
            for (int c = 0; c < q; ++c) {
                if (c == c_old) continue;
                long long d = move_delta(j, c);
                if (d < bd) bd = d, bj = j, bc = c;
            }
        }
        t_d[tid] = bd, t_j[tid] = bj, t_c[tid] = bc;
    }
    // merge thread-local minima in a fixed order; the lexicographic rule makes
    // the result independent of how columns were partitioned across threads
    long long best_d = 0;
    int best_j = -1, best_c = -1;
    for (int t = 0; t < nthreads; ++t) {
        if (t_j[t] < 0) continue;
        if (best_j < 0 || move_less(t_d[t], t_j[t], t_c[t], best_d, best_j, best_c))
            best_d = t_d[t], best_j = t_j[t], best_c = t_c[t];
    }
    if (best_j < 0 || best_d >= 0) return std::nullopt;
    return MoveDelta{best_j, best_c, best_d};
#else
    return best_single_char_move_serial();
#endif
}

void AgreementLedger::apply_move(const MoveDelta &m) {
    int q = params_.alphabet.size;
    int j = m.position, c = m.new_char;
    int c_old = s_[j];
    assert(c != c_old && c >= 0 && c < q);
    size_t cell_old = static_cast<size_t>(j) * q + c_old;
    size_t cell_new = static_cast<size_t>(j) * q + c;
    if (params_.variant == Variant::general) {
        int alpha = params_.alpha, beta = params_.beta;
        for (int32_t i : col_index_[cell_old]) {
            if (pair_agr_[i] <= alpha) phi_pair_ += 1;
            pair_agr_[i]--;
        }
        for (int32_t i : col_index_[cell_new]) {
            if (pair_agr_[i] < alpha) phi_pair_ -= 1;
            pair_agr_[i]++;
        }
        for (int32_t p : pair_col_index_[cell_old]) {
            if (triple_agr_[p] > beta) phi_triple_ -= 1;
            triple_agr_[p]--;
        }
        for (int32_t p : pair_col_index_[cell_new]) {
            if (triple_agr_[p] >= beta) phi_triple_ += 1;
            triple_agr_[p]++;
        }
    } else {
        int beta = params_.beta;
        for (int32_t i : col_index_[cell_old]) {
            if (pair_agr_[i] > beta) phi_triple_ -= 1;
            pair_agr_[i]--;
        }
        for (int32_t i : col_index_[cell_new]) {
            if (pair_agr_[i] >= beta) phi_triple_ += 1;
            pair_agr_[i]++;
        }
    }
    s_[j] = static_cast<uint8_t>(c);
}

bool AgreementLedger::consistent() const {
    PotentialValue ref = potential(s_, accepted_, params_);
    PotentialValue inc = phi();
    return ref.pairwise_deficit == inc.pairwise_deficit &&
           ref.triple_excess == inc.triple_excess && ref.total == inc.total;
}

Label build_next_label(AgreementLedger &ledger, const FamilyParams &params,
                       const Label &start, long long *steps_out,
                       long long *spot_checks_out) {
    ledger.attach(start);
    long long bound = step_bound(params);
    long long phi = ledger.phi().total;
    if (phi > bound) throw Stalled(phi);
    long long steps = 0, spots = 0;
    while (phi > 0) {
        auto mv = ledger.best_single_char_move();
        if (!mv) throw Stalled(phi);
        assert(mv->delta < 0);
        ledger.apply_move(*mv);
        phi += mv->delta;
        assert(phi == ledger.phi().total);
        ++steps;
        assert(steps <= bound);
        // audit every 100th step plus the final one, so even short descents
        // get at least one full recompute against the incremental totals
        if (steps % 100 == 0 || phi == 0) {
            if (!ledger.consistent() || phi != ledger.phi().total)
                throw std::logic_error("incremental phi diverged from exact recompute");
            ++spots;
        }
    }
    if (steps_out) *steps_out = steps;
    if (spot_checks_out) *spot_checks_out += spots;
    return ledger.working();
}

} // namespace goodfam
