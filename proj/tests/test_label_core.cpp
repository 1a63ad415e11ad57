#include "doctest.h"

#include "goodfam/label_ops.hpp"
#include "goodfam/params.hpp"

#include <random>
#include <set>

using namespace goodfam;

namespace {

Label from_digits(const char *s) {
    Label w;
    for (; *s; ++s) w.push_back(static_cast<uint8_t>(*s - '0'));
    return w;
}

} // namespace

// ---------------------------------------------------------------------------
// derive_params

TEST_CASE("derive_params: general n=64 k=2 lands on 68/17/5") {
    FamilyParams p = derive_params(64, 2, Variant::general);
    CHECK(p.alphabet.size == 4);
    CHECK(p.gamma == 68);
    CHECK(p.alpha == 17);
    CHECK(p.beta == 5);
    CHECK(p.escalations == 0);
}

TEST_CASE("derive_params: single-source n=64 k=3 lands on 30/30/5") {
    FamilyParams p = derive_params(64, 3, Variant::single_source);
    CHECK(p.alphabet.size == 6);
    CHECK(p.gamma == 30);
    CHECK(p.alpha == 30);
    CHECK(p.beta == 5);
}

TEST_CASE("derive_params: gamma is a multiple of |A| and alpha/beta > k") {
    for (int n : {2, 5, 16, 64, 100, 256})
        for (int k : {1, 2, 3, 4, 5})
            for (Variant v : {Variant::general, Variant::single_source}) {
                FamilyParams p = derive_params(n, k, v);
                int q = p.alphabet.size;
                CHECK(q == 2 * k);
                CHECK(p.gamma % q == 0);
                CHECK(p.gamma >= q);
                CHECK(static_cast<long long>(p.alpha) > static_cast<long long>(k) * p.beta);
                if (v == Variant::general) {
                    CHECK(p.alpha == (p.gamma + q - 1) / q);
                    CHECK(p.beta == (p.gamma + q * q - 1) / (q * q));
                } else {
                    CHECK(p.alpha == p.gamma);
                    CHECK(p.beta == p.gamma / q);
                }
            }
}

TEST_CASE("derive_params: zeta scales gamma") {
    FamilyParams p1 = derive_params(64, 2, Variant::general, 2, 1.0);
    FamilyParams p2 = derive_params(64, 2, Variant::general, 2, 2.0);
    CHECK(p2.gamma >= 2 * p1.gamma - 4); // up to one rounding step apart
    CHECK(p2.gamma % p2.alphabet.size == 0);
}

TEST_CASE("derive_params: degenerate inputs are rejected") {
    CHECK_THROWS_AS(derive_params(1, 2, Variant::general), ParameterError);
    CHECK_THROWS_AS(derive_params(0, 2, Variant::general), ParameterError);
    CHECK_THROWS_AS(derive_params(16, 0, Variant::general), ParameterError);
    // c_mult = 1 makes alpha/beta == k for the general regime: not allowed
    CHECK_THROWS_AS(derive_params(16, 2, Variant::general, 1), ParameterError);
}

TEST_CASE("escalate: gamma grows by 3/2 re-rounded, thresholds follow") {
    FamilyParams p = derive_params(64, 2, Variant::general);
    FamilyParams e = escalate(p);
    CHECK(e.gamma == 104); // ceil(3*68/2) = 102, rounded up to a multiple of 4
    CHECK(e.alpha == 26);
    CHECK(e.beta == 7);
    CHECK(e.escalations == 1);
    // escalation strictly increases gamma and keeps the divisibility invariant
    FamilyParams cur = derive_params(16, 3, Variant::single_source);
    for (int step = 0; step < 8; ++step) {
        FamilyParams nxt = escalate(cur);
        CHECK(nxt.gamma > cur.gamma);
        CHECK(nxt.gamma % nxt.alphabet.size == 0);
        CHECK(nxt.escalations == cur.escalations + 1);
        cur = nxt;
    }
}

// ---------------------------------------------------------------------------
// agreement / triple_agreement

TEST_CASE("agreement and triple_agreement on the worked example") {
    Label a = from_digits("000000");
    Label b = from_digits("012012");
    Label c = from_digits("010212");
    CHECK(agreement(a, b) == 2);
    CHECK(triple_agreement(a, b, c) == 1);
}

TEST_CASE("agreement: bounds, symmetry, and the triple upper bound") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int g = 1 + static_cast<int>(rng() % 12);
        int q = 2 + static_cast<int>(rng() % 4);
        auto rand_label = [&] {
            Label w(g);
            for (auto &ch : w) ch = static_cast<uint8_t>(rng() % q);
            return w;
        };
        Label x = rand_label(), y = rand_label(), z = rand_label();
        int axy = agreement(x, y);
        CHECK(axy == agreement(y, x));
        CHECK(axy >= 0);
        CHECK(axy <= g);
        CHECK(agreement(x, x) == g);
        int t = triple_agreement(x, y, z);
        CHECK(t <= axy);
        CHECK(t <= agreement(x, z));
        CHECK(t <= agreement(y, z));
        CHECK(t == triple_agreement(z, x, y));
    }
}

TEST_CASE("agreement: length mismatch is an error") {
    CHECK_THROWS_AS(agreement(Label(3, 0), Label(4, 0)), std::invalid_argument);
    CHECK_THROWS_AS(triple_agreement(Label(3, 0), Label(3, 0), Label(2, 0)),
                    std::invalid_argument);
}

// ---------------------------------------------------------------------------
// seed_pair

TEST_CASE("seed_pair: |A|=3 gamma=6 gives the zero label and the ramp") {
    FamilyParams p;
    p.alphabet.size = 3;
    p.gamma = 6;
    auto [mu, nu] = seed_pair(p);
    CHECK(mu == from_digits("000000"));
    CHECK(nu == from_digits("012012"));
    CHECK(agreement(mu, nu) == 2);
}

TEST_CASE("seed_pair: agreement is exactly gamma/|A| whenever |A| | gamma") {
    for (int q : {2, 3, 4, 6, 8, 10})
        for (int mult : {1, 2, 5}) {
            FamilyParams p;
            p.alphabet.size = q;
            p.gamma = q * mult;
            auto [mu, nu] = seed_pair(p);
            CHECK(static_cast<int>(mu.size()) == p.gamma);
            CHECK(agreement(mu, nu) == mult);
        }
}

// ---------------------------------------------------------------------------
// subsets_from_labels

TEST_CASE("subsets_from_labels: fixed column's subsets partition the terminals") {
    GoodFamily fam;
    fam.params = derive_params(6, 2, Variant::general);
    fam.params.gamma = 8; // thresholds untouched: subsets only need labels
    std::mt19937 rng(11);
    for (int i = 0; i < 6; ++i) {
        Label w(8);
        for (auto &ch : w) ch = static_cast<uint8_t>(rng() % 4);
        fam.labels.push_back(w);
    }
    auto subsets = subsets_from_labels(fam);
    REQUIRE(static_cast<int>(subsets.size()) == 8 * 4);
    for (int j = 0; j < 8; ++j) {
        std::set<int> seen;
        for (int c = 0; c < 4; ++c) {
            const SubsetEntry &e = subsets[static_cast<size_t>(j) * 4 + c];
            CHECK(e.position == j);
            CHECK(e.character == c);
            for (int i : e.members) {
                CHECK(fam.labels[i][j] == c);
                CHECK(seen.insert(i).second); // no terminal in two classes
            }
        }
        CHECK(seen.size() == 6); // every terminal in exactly one class
    }
    // membership count of terminal i in all subsets = gamma (its degree)
    std::vector<int> degree(6, 0);
    for (const auto &e : subsets)
        for (int i : e.members) degree[i]++;
    for (int d : degree) CHECK(d == 8);
}
