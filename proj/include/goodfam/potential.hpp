#pragma once
// Potential-guided steepest descent for appending one label to a family.
//
// For a candidate label s against accepted labels w_1..w_r:
//   general:       phi(s) = sum_i max(0, alpha - |w_i (.) s|)
//                         + sum_{i<j} max(0, |w_i (.) w_j (.) s| - beta)
//   single-source: phi(s) = sum_i max(0, |w_i (.) s| - beta)
// phi(s) = 0 iff s can be appended keeping the family strongly good. A step
// changes one character of s and must strictly decrease phi; descent stops at
// phi = 0 or raises Stalled when no single-character move improves.

#include "goodfam/label_ops.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace goodfam {

struct PotentialValue {
    long long pairwise_deficit = 0; // general only; 0 for single-source
    long long triple_excess = 0;    // triple excesses (general) / pairwise excesses (ss)
    long long total = 0;
};

struct MoveDelta {
    int position = 0;
    int new_char = 0;
    long long delta = 0; // change in phi.total; < 0 for improving moves
};

struct Stalled : std::runtime_error {
    long long phi;
    explicit Stalled(long long phi_)
        : std::runtime_error("local search stalled at phi=" + std::to_string(phi_)),
          phi(phi_) {}
};

// from-scratch reference evaluation of the displayed formula
PotentialValue potential(const Label &s, const std::vector<Label> &accepted,
                         const FamilyParams &params);

// -----------------------------------------------------------------------------
// AgreementLedger — incremental state for move evaluation.
//
// Persistent part (grows as labels are accepted):
//   col_index[j*q + c]       = accepted label ids with character c at column j
//   pair_col_index[j*q + c]  = ids of accepted pairs agreeing (with char c) at j
// Per-working-label part (rebuilt by attach, updated by apply_move):
//   pair_agr[i]   = agreement(accepted[i], s)
//   triple_agr[p] = triple_agreement(accepted pair p, s)
// This makes one full move scan O(gamma * (n + pairs-per-column)) instead of
// O(gamma^2 * n^2), and one move application cheaper still.
// -----------------------------------------------------------------------------
class AgreementLedger {
  public:
    explicit AgreementLedger(const FamilyParams &params);

    void add_accepted(const Label &w);
    int accepted_count() const { return static_cast<int>(accepted_.size()); }
    const std::vector<Label> &accepted() const { return accepted_; }

    // bind the working label; recomputes all counters
    void attach(const Label &s);
    const Label &working() const { return s_; }

    PotentialValue phi() const;

    // scan all gamma*(|A|-1) single-character changes; most negative delta,
    // ties broken by smallest (position, new_char); nullopt iff none improve
    std::optional<MoveDelta> best_single_char_move() const;
    std::optional<MoveDelta> best_single_char_move_serial() const;

    // apply a move to the working label, updating counters incrementally
    void apply_move(const MoveDelta &m);

    // delta of phi from changing column j to character c (c != s_[j]);
    // also the primitive for randomized start-generation policies
    long long move_delta(int j, int c) const;

    // debug: recompute phi from scratch and compare against incremental state
    bool consistent() const;

  private:
    FamilyParams params_;
    std::vector<Label> accepted_;
    std::vector<std::vector<int32_t>> col_index_;      // [gamma*q] -> label ids
    std::vector<std::vector<int32_t>> pair_col_index_; // [gamma*q] -> pair ids
    std::vector<std::pair<int32_t, int32_t>> pairs_;   // pair id -> (i, j)
    Label s_;
    std::vector<int32_t> pair_agr_;
    std::vector<int32_t> triple_agr_;
    long long phi_pair_ = 0;
    long long phi_triple_ = 0;
};

// Steepest descent from `start` until phi = 0; returns the feasible label and
// the number of accepted steps via out-param. Raises Stalled if no improving
// move exists at phi > 0, or when the start's phi already exceeds the step
// budget n*alpha + C(n,2)*beta (regime too tight either way).
//
// Every 100th step (1% of steps) the incremental phi is audited against a
// from-scratch recompute; a mismatch throws std::logic_error and the number
// of audits performed is reported via spot_checks_out.
Label build_next_label(AgreementLedger &ledger, const FamilyParams &params,
                       const Label &start, long long *steps_out = nullptr,
                       long long *spot_checks_out = nullptr);

// worst-case phi of any label, n*alpha + C(n,2)*beta: every pair deficit and
// triple excess maxed out; a strict descent can never take more steps
long long step_bound(const FamilyParams &params);

} // namespace goodfam
