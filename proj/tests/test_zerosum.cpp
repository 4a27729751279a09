#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zsconst/ring.hpp"
#include "zsconst/zerosum.hpp"

using namespace zsconst;

namespace {

// Brute-force oracle: enumerates every coefficient assignment directly.
// Deliberately shares nothing with the bitmask DP.
bool oracle_full_zero_sum(const Sequence& s, const WeightSpec& a) {
    const auto weights = a.realized.elements();
    const int k = static_cast<int>(s.size());
    std::vector<int> pick(k, 0);
    while (true) {
        long long sum = 0;
        for (int i = 0; i < k; ++i) sum += static_cast<long long>(weights[pick[i]]) * s.terms[i];
        if (sum % s.n == 0) return true;
        int i = k - 1;
        while (i >= 0 && pick[i] == static_cast<int>(weights.size()) - 1) pick[i--] = 0;
        if (i < 0) return false;
        ++pick[i];
    }
}

bool oracle_has_subset_zs(const Sequence& s, const WeightSpec& a) {
    const int k = static_cast<int>(s.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) sub.push_back(s.terms[i]);
        if (oracle_full_zero_sum(Sequence(s.n, sub), a)) return true;
    }
    return false;
}

bool oracle_has_consecutive_zs(const Sequence& s, const WeightSpec& a) {
    const int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            std::vector<int> block(s.terms.begin() + i, s.terms.begin() + j + 1);
            if (oracle_full_zero_sum(Sequence(s.n, block), a)) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("reachable_sums examples") {
    // (1,1,1) with weights {1,-1} mod 7 reaches exactly the odd +-1 sums
    auto r = reachable_sums(Sequence(7, {1, 1, 1}), parse_weights(7, "pm1"));
    REQUIRE(r.elements() == std::vector<int>{1, 3, 4, 6});
    REQUIRE_FALSE(r.contains(0));

    REQUIRE(reachable_sums(Sequence(5, {}), parse_weights(5, "units")).elements() ==
            std::vector<int>{0});
    REQUIRE(reachable_sums(Sequence(9, {0, 0}), parse_weights(9, "units")).elements() ==
            std::vector<int>{0});
}

TEST_CASE("is_weighted_zero_sum with witnesses") {
    // any pair of nonzero terms closes under nonzero weights
    auto w = is_weighted_zero_sum(Sequence(5, {2, 3}), parse_weights(5, "nonzero"));
    REQUIRE(w.has_value());
    REQUIRE(validate_witness(Sequence(5, {2, 3}), parse_weights(5, "nonzero"), *w));

    // (-1, x) with x a non-residue avoids square weights mod 7
    REQUIRE_FALSE(is_weighted_zero_sum(Sequence(7, {6, 3}), parse_weights(7, "units^2")).has_value());

    auto w13 = is_weighted_zero_sum(Sequence(13, {1, 12}), parse_weights(13, "units^3"));
    REQUIRE(w13.has_value());
    REQUIRE(w13->coefficients == std::vector<int>{1, 1});

    REQUIRE_THROWS_AS(is_weighted_zero_sum(Sequence(5, {}), parse_weights(5, "units")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(is_weighted_zero_sum(Sequence(5, {1}), parse_weights(7, "units")),
                      std::invalid_argument);
}

TEST_CASE("find_zs_subsequence examples") {
    REQUIRE_FALSE(find_zs_subsequence(Sequence(7, {6, 3}), parse_weights(7, "units^2")).has_value());

    auto w = find_zs_subsequence(Sequence(7, {1, 2, 3}), parse_weights(7, "pm1"));
    REQUIRE(w.has_value());
    REQUIRE(validate_witness(Sequence(7, {1, 2, 3}), parse_weights(7, "pm1"), *w));

    REQUIRE_FALSE(find_zs_subsequence(Sequence(5, {1}), parse_weights(5, "one")).has_value());
    auto z = find_zs_subsequence(Sequence(5, {0}), parse_weights(5, "one"));
    REQUIRE(z.has_value());
    REQUIRE(z->indices == std::vector<int>{0});
}

TEST_CASE("find_consecutive_zs examples and tie-breaks") {
    REQUIRE_FALSE(find_consecutive_zs(Sequence(7, {1, 3, 1}), parse_weights(7, "pm1")).has_value());

    auto w = find_consecutive_zs(Sequence(6, {2, 4}), parse_weights(6, "one"));
    REQUIRE(w.has_value());
    REQUIRE(w->indices == std::vector<int>{0, 1});

    // middle zero: smallest end index wins, block is just the zero term
    auto z = find_consecutive_zs(Sequence(7, {1, 0, 1}), parse_weights(7, "units"));
    REQUIRE(z.has_value());
    REQUIRE(z->indices == std::vector<int>{1});
    REQUIRE(validate_witness(Sequence(7, {1, 0, 1}), parse_weights(7, "units"), *z));
}

TEST_CASE("DP predicates agree with brute force on random instances") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 4000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 19);   // n <= 20
        const int k = 1 + static_cast<int>(rng() % 8);    // k <= 8
        std::vector<int> terms(k);
        for (int& x : terms) x = static_cast<int>(rng() % n);
        Sequence s(n, terms);

        WeightSpec a;
        switch (rng() % 4) {
        case 0: a = parse_weights(n, "units"); break;
        case 1: a = parse_weights(n, "units^2"); break;
        case 2: a = parse_weights(n, "pm1"); break;
        default: a = parse_weights(n, "nonzero"); break;
        }

        const bool full = is_weighted_zero_sum(s, a).has_value();
        REQUIRE(full == oracle_full_zero_sum(s, a));

        auto consec = find_consecutive_zs(s, a);
        REQUIRE(consec.has_value() == oracle_has_consecutive_zs(s, a));
        if (consec) REQUIRE(validate_witness(s, a, *consec));

        if (k <= 12) {
            auto subset = find_zs_subsequence(s, a);
            REQUIRE(subset.has_value() == oracle_has_subset_zs(s, a));
            if (subset) REQUIRE(validate_witness(s, a, *subset));
        }
    }
}

TEST_CASE("unit scaling invariance") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 14);
        const int k = 1 + static_cast<int>(rng() % 6);
        std::vector<int> terms(k);
        for (int& x : terms) x = static_cast<int>(rng() % n);
        Sequence s(n, terms);
        const WeightSpec a = (trial % 2) ? parse_weights(n, "units") : parse_weights(n, "units^2");

        for (int c : unit_set(n).elements()) {
            std::vector<int> scaled;
            for (int x : terms) scaled.push_back(static_cast<int>(static_cast<long long>(c) * x % n));
            Sequence cs(n, scaled);
            REQUIRE(is_weighted_zero_sum(s, a).has_value() ==
                    is_weighted_zero_sum(cs, a).has_value());
            REQUIRE(find_zs_subsequence(s, a).has_value() ==
                    find_zs_subsequence(cs, a).has_value());
            REQUIRE(find_consecutive_zs(s, a).has_value() ==
                    find_consecutive_zs(cs, a).has_value());
        }
    }
}

TEST_CASE("CRT equivalence of weighted zero-sums") {
    std::mt19937_64 rng(99);
    for (int n : {12, 45, 63, 65}) {
        const auto factors = factorize(n).factors;
        for (int j : {1, 2, 3}) {
            const WeightSpec a = make_weights(n, WeightKind::UnitPowers, j);
            for (int trial = 0; trial < 400; ++trial) {
                const int k = 1 + static_cast<int>(rng() % 5);
                std::vector<int> terms(k);
                for (int& x : terms) x = static_cast<int>(rng() % n);
                Sequence s(n, terms);
                const bool whole = is_weighted_zero_sum(s, a).has_value();
                bool all = true;
                for (auto& [p, e] : factors) {
                    int pr = 1;
                    for (int i = 0; i < e; ++i) pr *= static_cast<int>(p);
                    Sequence proj(pr, project(terms, n, pr));
                    all = all && is_weighted_zero_sum(proj, make_weights(pr, WeightKind::UnitPowers, j))
                                     .has_value();
                }
                REQUIRE(whole == all);
            }
        }
    }
}

TEST_CASE("dividing by a common prime preserves weighted zero-sums") {
    std::mt19937_64 rng(4242);
    int tested = 0;
    for (int trial = 0; trial < 8000; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 97);  // n <= 100
        const auto factors = factorize(n).factors;
        const int p = static_cast<int>(factors[rng() % factors.size()].first);
        const int np = n / p;
        const int k = 1 + static_cast<int>(rng() % 5);
        std::vector<int> small(k), big(k);
        for (int i = 0; i < k; ++i) {
            small[i] = static_cast<int>(rng() % np);
            big[i] = small[i] * p;
        }
        for (int j : {1, 2, 3}) {
            Sequence quotient(np, small);
            if (!is_weighted_zero_sum(quotient, make_weights(np, WeightKind::UnitPowers, j)).has_value())
                continue;
            ++tested;
            Sequence whole(n, big);
            REQUIRE(is_weighted_zero_sum(whole, make_weights(n, WeightKind::UnitPowers, j)).has_value());
        }
    }
    REQUIRE(tested > 500);
}

TEST_CASE("prefix_pigeonhole") {
    auto [i1, j1] = prefix_pigeonhole(Sequence(3, {1, 1, 1}));
    REQUIRE(i1 == 0);
    REQUIRE(j1 == 2);

    auto [i2, j2] = prefix_pigeonhole(Sequence(6, {2, 4, 1, 0, 3, 5}));
    REQUIRE(i2 == 0);
    REQUIRE(j2 == 1);

    auto [i3, j3] = prefix_pigeonhole(Sequence(4, {0, 1, 2, 3}));
    REQUIRE(i3 == 0);
    REQUIRE(j3 == 0);

    REQUIRE_THROWS_AS(prefix_pigeonhole(Sequence(6, {2, 4})), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 25);
        std::vector<int> terms(n + static_cast<int>(rng() % 5));
        for (int& x : terms) x = static_cast<int>(rng() % n);
        Sequence s(n, terms);
        auto [i, j] = prefix_pigeonhole(s);
        REQUIRE(i >= 0);
        REQUIRE(i <= j);
        REQUIRE(j < static_cast<int>(s.size()));
        long long sum = 0;
        for (int idx = i; idx <= j; ++idx) sum += s.terms[idx];
        REQUIRE(sum % n == 0);
    }
}

TEST_CASE("zero weight admits trivial zero-sums") {
    const WeightSpec a = parse_weights(6, "set:{0,1}");
    auto w = is_weighted_zero_sum(Sequence(6, {5}), a);
    REQUIRE(w.has_value());
    REQUIRE(w->coefficients == std::vector<int>{0});
}
