#include "doctest.h"

#include "goodfam/potential.hpp"

#include <random>

using namespace goodfam;

namespace {

FamilyParams raw_params(Variant v, int n, int q, int gamma, int alpha, int beta) {
    FamilyParams p;
    p.n = n;
    p.k = 1;
    p.alphabet.size = q;
    p.gamma = gamma;
    p.alpha = alpha;
    p.beta = beta;
    p.variant = v;
    return p;
}

Label from_digits(const char *s) {
    Label w;
    for (; *s; ++s) w.push_back(static_cast<uint8_t>(*s - '0'));
    return w;
}

// formula recomputation independent of potential(): plain loops, no reuse
long long naive_phi(const Label &s, const std::vector<Label> &acc,
                    const FamilyParams &p) {
    long long phi = 0;
    if (p.variant == Variant::general) {
        for (const Label &w : acc) {
            long long a = agreement(w, s);
            if (a < p.alpha) phi += p.alpha - a;
        }
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t j = i + 1; j < acc.size(); ++j) {
                long long t = triple_agreement(acc[i], acc[j], s);
                if (t > p.beta) phi += t - p.beta;
            }
    } else {
        for (const Label &w : acc) {
            long long a = agreement(w, s);
            if (a > p.beta) phi += a - p.beta;
        }
    }
    return phi;
}

Label random_label(std::mt19937 &rng, int gamma, int q) {
    Label w(gamma);
    for (auto &ch : w) ch = static_cast<uint8_t>(rng() % q);
    return w;
}

} // namespace

// ---------------------------------------------------------------------------
// potential()

TEST_CASE("potential: empty accepted set gives zero") {
    FamilyParams p = raw_params(Variant::general, 4, 3, 6, 2, 1);
    PotentialValue v = potential(from_digits("012012"), {}, p);
    CHECK(v.total == 0);
    CHECK(v.pairwise_deficit == 0);
    CHECK(v.triple_excess == 0);
}

TEST_CASE("potential: single-source worked example phi = 4") {
    FamilyParams p = raw_params(Variant::single_source, 2, 2, 5, 5, 1);
    std::vector<Label> acc = {from_digits("00000")};
    PotentialValue v = potential(from_digits("00000"), acc, p);
    CHECK(v.pairwise_deficit == 0);
    CHECK(v.triple_excess == 4); // agreement 5 against cap 1
    CHECK(v.total == 4);
}

TEST_CASE("potential: general seed-pair example, mu against both seeds") {
    FamilyParams p = raw_params(Variant::general, 4, 3, 6, 2, 1);
    Label mu = from_digits("000000"), nu = from_digits("012012");
    std::vector<Label> acc = {mu, nu};
    PotentialValue v = potential(mu, acc, p);
    // vs mu: agreement 6 >= 2; vs nu: agreement 2 >= 2; triple (mu,nu,mu) = 2 > 1
    CHECK(v.pairwise_deficit == 0);
    CHECK(v.triple_excess == 1);
    CHECK(v.total == 1);
}

TEST_CASE("potential: matches the naive formula on random inputs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        int q = 2 + static_cast<int>(rng() % 4);
        int gamma = q * (1 + static_cast<int>(rng() % 4));
        int r = static_cast<int>(rng() % 7);
        Variant v = (rng() & 1) ? Variant::general : Variant::single_source;
        FamilyParams p = raw_params(v, r + 1, q, gamma,
                                    1 + static_cast<int>(rng() % gamma),
                                    static_cast<int>(rng() % (gamma / 2 + 1)));
        std::vector<Label> acc;
        for (int i = 0; i < r; ++i) acc.push_back(random_label(rng, gamma, q));
        Label s = random_label(rng, gamma, q);
        PotentialValue got = potential(s, acc, p);
        CHECK(got.total == naive_phi(s, acc, p));
        CHECK(got.total == got.pairwise_deficit + got.triple_excess);
        if (v == Variant::single_source) CHECK(got.pairwise_deficit == 0);
    }
}

TEST_CASE("step_bound: n*alpha + C(n,2)*beta") {
    FamilyParams p = raw_params(Variant::general, 6, 4, 20, 5, 2);
    CHECK(step_bound(p) == 6 * 5 + 15 * 2);
    p.n = 2;
    CHECK(step_bound(p) == 2 * 5 + 1 * 2);
}

// ---------------------------------------------------------------------------
// AgreementLedger

TEST_CASE("ledger: attach reproduces the from-scratch potential") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int q = 2 + static_cast<int>(rng() % 3);
        int gamma = q * (2 + static_cast<int>(rng() % 3));
        Variant v = (rng() & 1) ? Variant::general : Variant::single_source;
        FamilyParams p = raw_params(v, 8, q, gamma, 1 + static_cast<int>(rng() % 5),
                                    static_cast<int>(rng() % 4));
        AgreementLedger led(p);
        int r = 1 + static_cast<int>(rng() % 6);
        std::vector<Label> acc;
        for (int i = 0; i < r; ++i) {
            acc.push_back(random_label(rng, gamma, q));
            led.add_accepted(acc.back());
        }
        Label s = random_label(rng, gamma, q);
        led.attach(s);
        CHECK(led.phi().total == naive_phi(s, acc, p));
        CHECK(led.consistent());
    }
}

TEST_CASE("ledger: apply_move tracks phi exactly through random walks") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        int q = 2 + static_cast<int>(rng() % 3);
        int gamma = q * (2 + static_cast<int>(rng() % 3));
        Variant v = (rng() & 1) ? Variant::general : Variant::single_source;
        FamilyParams p = raw_params(v, 10, q, gamma, 1 + static_cast<int>(rng() % 5),
                                    static_cast<int>(rng() % 4));
        AgreementLedger led(p);
        std::vector<Label> acc;
        for (int i = 0, r = 2 + static_cast<int>(rng() % 8); i < r; ++i) {
            acc.push_back(random_label(rng, gamma, q));
            led.add_accepted(acc.back());
        }
        Label s = random_label(rng, gamma, q);
        led.attach(s);
        for (int walk = 0; walk < 40; ++walk) {
            int j = static_cast<int>(rng() % gamma);
            int c = static_cast<int>(rng() % q);
            if (c == led.working()[j]) continue;
            long long before = led.phi().total;
            long long predicted = led.move_delta(j, c);
            led.apply_move(MoveDelta{j, c, predicted});
            s[j] = static_cast<uint8_t>(c);
            CHECK(led.working() == s);
            CHECK(led.phi().total == before + predicted);
            CHECK(led.phi().total == naive_phi(s, acc, p));
        }
        CHECK(led.consistent());
    }
}

TEST_CASE("ledger: rejects labels of the wrong length") {
    FamilyParams p = raw_params(Variant::general, 4, 2, 6, 2, 1);
    AgreementLedger led(p);
    CHECK_THROWS_AS(led.add_accepted(Label(5, 0)), std::invalid_argument);
    led.add_accepted(Label(6, 0));
    CHECK_THROWS_AS(led.attach(Label(7, 0)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// best_single_char_move

TEST_CASE("best move: single-source tie-break picks (position 0, char 1)") {
    FamilyParams p = raw_params(Variant::single_source, 2, 3, 3, 3, 1);
    AgreementLedger led(p);
    led.add_accepted(from_digits("000"));
    led.attach(from_digits("000"));
    CHECK(led.phi().total == 2);
    auto mv = led.best_single_char_move();
    REQUIRE(mv.has_value());
    // all six moves lower agreement 3 -> 2, delta -1; lexicographic winner
    CHECK(mv->position == 0);
    CHECK(mv->new_char == 1);
    CHECK(mv->delta == -1);
}

TEST_CASE("best move: absent iff no strictly improving move") {
    // accepted = all four binary labels of length 2, cap beta = 0: the total
    // agreement mass is column-partition-constant, so every move has delta 0
    FamilyParams p = raw_params(Variant::single_source, 4, 2, 2, 2, 0);
    AgreementLedger led(p);
    for (const char *w : {"00", "01", "10", "11"}) led.add_accepted(from_digits(w));
    led.attach(from_digits("00"));
    CHECK(led.phi().total == 4);
    CHECK(!led.best_single_char_move().has_value());
    CHECK(!led.best_single_char_move_serial().has_value());
}

TEST_CASE("best move: parallel scan equals the serial reference") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        int q = 2 + static_cast<int>(rng() % 4);
        int gamma = q * (2 + static_cast<int>(rng() % 4));
        Variant v = (rng() & 1) ? Variant::general : Variant::single_source;
        FamilyParams p = raw_params(v, 9, q, gamma, 1 + static_cast<int>(rng() % 6),
                                    static_cast<int>(rng() % 3));
        AgreementLedger led(p);
        for (int i = 0, r = 2 + static_cast<int>(rng() % 7); i < r; ++i)
            led.add_accepted(random_label(rng, gamma, q));
        led.attach(random_label(rng, gamma, q));
        auto par = led.best_single_char_move();
        auto ser = led.best_single_char_move_serial();
        REQUIRE(par.has_value() == ser.has_value());
        if (par) {
            CHECK(par->position == ser->position);
            CHECK(par->new_char == ser->new_char);
            CHECK(par->delta == ser->delta);
            // returned delta is the true steepest one: no move beats it
            for (int j = 0; j < gamma; ++j)
                for (int c = 0; c < q; ++c)
                    if (c != led.working()[j]) CHECK(led.move_delta(j, c) >= par->delta);
        }
    }
}

// ---------------------------------------------------------------------------
// build_next_label

TEST_CASE("descent: reaches phi = 0, strictly decreasing, within the bound") {
    std::mt19937 rng(47);
    FamilyParams p = raw_params(Variant::single_source, 4, 4, 16, 16, 4);
    AgreementLedger led(p);
    led.add_accepted(Label(16, 0));
    led.add_accepted(random_label(rng, 16, 4));
    Label start = random_label(rng, 16, 4);
    long long steps = 0, spots = 0;
    Label out = build_next_label(led, p, start, &steps, &spots);
    CHECK(potential(out, led.accepted(), p).total == 0);
    CHECK(steps <= naive_phi(start, led.accepted(), p)); // each step drops phi >= 1
    CHECK(steps <= step_bound(p));
    if (steps > 0) CHECK(spots >= 1); // final-step audit always fires
}

TEST_CASE("descent: start already feasible returns immediately") {
    FamilyParams p = raw_params(Variant::single_source, 3, 3, 6, 6, 2);
    AgreementLedger led(p);
    led.add_accepted(from_digits("000000"));
    Label start = from_digits("121212");
    long long steps = -1;
    Label out = build_next_label(led, p, start, &steps);
    CHECK(out == start);
    CHECK(steps == 0);
}

TEST_CASE("descent: stalls when no improving move exists at phi > 0") {
    FamilyParams p = raw_params(Variant::single_source, 4, 2, 2, 2, 0);
    AgreementLedger led(p);
    for (const char *w : {"00", "01", "10", "11"}) led.add_accepted(from_digits(w));
    try {
        build_next_label(led, p, from_digits("00"));
        FAIL("expected Stalled");
    } catch (const Stalled &st) {
        CHECK(st.phi == 4);
    }
}

TEST_CASE("descent: start with phi above the step budget is rejected up front") {
    // bound = n*alpha + C(n,2)*beta = 1*1 + 0 = 1 but phi(start) = 4
    FamilyParams p = raw_params(Variant::single_source, 1, 2, 2, 1, 0);
    AgreementLedger led(p);
    for (const char *w : {"00", "01", "10", "11"}) led.add_accepted(from_digits(w));
    CHECK(step_bound(p) == 1);
    CHECK_THROWS_AS(build_next_label(led, p, from_digits("00")), Stalled);
}
