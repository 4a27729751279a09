#include <catch2/catch_amalgamated.hpp>

#include "zsconst/constructions.hpp"
#include "zsconst/ring.hpp"
#include "zsconst/search.hpp"

using namespace zsconst;

TEST_CASE("product_construction interleaving") {
    auto s = product_construction(Sequence(5, {4, 2}), 5, Sequence(3, {1, 1}), 3, 15);
    REQUIRE(s.terms == std::vector<int>{12, 6, 1, 12, 6, 1, 12, 6});
    REQUIRE(verify_avoiding(s, parse_weights(15, "units^2"), Mode::C));

    auto t = product_construction(Sequence(2, {1}), 2, Sequence(3, {1}), 3, 6);
    REQUIRE(t.terms == std::vector<int>{3, 1, 3});
    REQUIRE(verify_avoiding(t, parse_weights(6, "units"), Mode::C));

    // degenerate factors
    REQUIRE(product_construction(Sequence(2, {}), 2, Sequence(3, {1, 1}), 3, 6).terms ==
            std::vector<int>{1, 1});
    REQUIRE(product_construction(Sequence(2, {1}), 2, Sequence(3, {}), 3, 6).terms ==
            std::vector<int>{3});

    REQUIRE_THROWS_AS(product_construction(Sequence(2, {1}), 2, Sequence(3, {1}), 3, 12),
                      std::invalid_argument);
}

TEST_CASE("product_construction length law") {
    for (auto [k1, k2] : {std::pair{1, 1}, {1, 3}, {2, 2}, {3, 2}}) {
        Sequence s1(5, std::vector<int>(k1, 1));
        Sequence s2(7, std::vector<int>(k2, 1));
        auto s = product_construction(s1, 5, s2, 7, 35);
        REQUIRE(static_cast<int>(s.size()) == (k1 + 1) * (k2 + 1) - 1);
    }
}

TEST_CASE("lower-bound certificates: units") {
    auto c15 = build_lower_bound_certificate(15, WeightKind::Units);
    REQUIRE(c15.size() == 3);  // 2^2 - 1
    REQUIRE(verify_avoiding(c15, parse_weights(15, "units"), Mode::C));

    auto c7 = build_lower_bound_certificate(7, WeightKind::Units);
    REQUIRE(c7.size() == 1);

    // length 2^Omega(n) - 1 and avoiding, for all supported n
    for (int n = 2; n <= 105; ++n) {
        auto cert = build_lower_bound_certificate(n, WeightKind::Units);
        int expect = 1;
        for (int i = 0; i < omega(n); ++i) expect *= 2;
        REQUIRE(static_cast<int>(cert.size()) == expect - 1);
        REQUIRE(verify_avoiding(cert, parse_weights(n, "units"), Mode::C));
    }
}

TEST_CASE("lower-bound certificates: squares") {
    auto c15 = build_lower_bound_certificate(15, WeightKind::UnitPowers, 2);
    REQUIRE(c15.size() == 8);  // 3^2 - 1
    REQUIRE(verify_avoiding(c15, parse_weights(15, "units^2"), Mode::C));

    // length 2^r * 3^Omega(m) - 1 where n = 2^r * m
    for (int n = 2; n <= 105; ++n) {
        auto cert = build_lower_bound_certificate(n, WeightKind::UnitPowers, 2);
        int r = 0, m = n;
        while (m % 2 == 0) { m /= 2; ++r; }
        long long expect = 1;
        for (int i = 0; i < r; ++i) expect *= 2;
        for (int i = 0; i < omega(m); ++i) expect *= 3;
        REQUIRE(static_cast<long long>(cert.size()) == expect - 1);
        if (cert.size() > 0)
            REQUIRE(verify_avoiding(cert, parse_weights(n, "units^2"), Mode::C));
    }
}

TEST_CASE("lower-bound certificates: cubes") {
    auto c65 = build_lower_bound_certificate(65, WeightKind::UnitPowers, 3);
    REQUIRE(c65.size() == 5);  // 2 * 3 - 1
    REQUIRE(verify_avoiding(c65, parse_weights(65, "units^3"), Mode::C));

    auto c7 = build_lower_bound_certificate(7, WeightKind::UnitPowers, 3);
    REQUIRE(c7.terms == std::vector<int>{1, 3, 1});

    auto c35 = build_lower_bound_certificate(35, WeightKind::UnitPowers, 3);
    REQUIRE(c35.size() == 7);  // 4 * 2 - 1
    REQUIRE(verify_avoiding(c35, parse_weights(35, "units^3"), Mode::C));

    // length 2^Omega(n2) * 3^Omega(n1) * 4^r - 1 where n = 7^r * n1 * n2
    for (int n = 2; n <= 105; ++n) {
        int r = 0, rest = n;
        while (rest % 7 == 0) { rest /= 7; ++r; }
        auto split = split_n1_n2(rest);
        long long expect = 1;
        for (int i = 0; i < omega(split.n2); ++i) expect *= 2;
        for (int i = 0; i < omega(split.n1); ++i) expect *= 3;
        for (int i = 0; i < r; ++i) expect *= 4;
        auto cert = build_lower_bound_certificate(n, WeightKind::UnitPowers, 3);
        REQUIRE(static_cast<long long>(cert.size()) == expect - 1);
        if (cert.size() > 0)
            REQUIRE(verify_avoiding(cert, parse_weights(n, "units^3"), Mode::C));
    }
}

TEST_CASE("window_blocker") {
    REQUIRE(window_blocker(5, 3, 7).terms == std::vector<int>{1, 0, 0, 1, 0, 0, 1});
    REQUIRE(window_blocker(9, 1, 4).terms == std::vector<int>{1, 1, 1, 1});
    REQUIRE(window_blocker(9, 4, 4).terms == std::vector<int>{1, 0, 0, 0});

    // every length-m window contains exactly one 1
    for (auto [n, m, len] : {std::tuple{5, 3, 30}, {7, 4, 30}, {11, 2, 9}}) {
        auto s = window_blocker(n, m, len);
        for (int start = 0; start + m <= len; ++start) {
            int ones = 0;
            for (int i = start; i < start + m; ++i) ones += s.terms[i] == 1;
            REQUIRE(ones == 1);
        }
    }
}
