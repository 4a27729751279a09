#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "zsconst/claims.hpp"

using namespace zsconst;

TEST_CASE("sumset") {
    auto a = ResidueSet::of(5, {0, 1});
    REQUIRE(sumset(a, a).elements() == std::vector<int>{0, 1, 2});

    auto g = unit_powers(13, 3);
    auto gg = sumset(g, g);
    // doubling the cubes mod 13 misses exactly the cubes themselves
    REQUIRE(gg.elements() == std::vector<int>{0, 2, 3, 4, 6, 7, 9, 10, 11});

    auto x = ResidueSet::of(9, {2, 5});
    auto zero = ResidueSet::of(9, {0});
    REQUIRE(sumset(x, zero) == x);

    REQUIRE_THROWS_AS(sumset(ResidueSet(5), ResidueSet(7)), std::invalid_argument);
}

TEST_CASE("cauchy-davenport") {
    REQUIRE(check_cauchy_davenport(7, ResidueSet::of(7, {1, 2}), ResidueSet::of(7, {1}),
                                   ResidueSet::of(7, {1})));

    // squares mod 7 sum to all of Z_7 in three steps
    auto q7 = unit_powers(7, 2);
    REQUIRE(sumset(sumset(q7, q7), q7) == ResidueSet::full(7));
    REQUIRE(check_cauchy_davenport(7, q7, q7, q7));

    // exhaustive at p = 3: all nonempty subset triples
    const int p = 3;
    for (int mx = 1; mx < 8; ++mx)
        for (int my = 1; my < 8; ++my)
            for (int mw = 1; mw < 8; ++mw) {
                ResidueSet x(p), y(p), w(p);
                for (int b = 0; b < p; ++b) {
                    if (mx >> b & 1) x.insert(b);
                    if (my >> b & 1) y.insert(b);
                    if (mw >> b & 1) w.insert(b);
                }
                REQUIRE(check_cauchy_davenport(p, x, y, w));
            }

    REQUIRE_THROWS_AS(check_cauchy_davenport(6, ResidueSet::of(6, {1}), ResidueSet::of(6, {1}),
                                             ResidueSet::of(6, {1})),
                      std::invalid_argument);
}

TEST_CASE("index-3 subgroup sumsets") {
    auto r19 = check_index3_sumsets(19);
    REQUIRE(r19.ls1);
    REQUIRE(r19.ls2);

    auto r13 = check_index3_sumsets(13);
    REQUIRE_FALSE(r13.ls1);
    REQUIRE(r13.ls2);

    auto r7 = check_index3_sumsets(7);
    REQUIRE_FALSE(r7.ls1);

    REQUIRE_THROWS_AS(check_index3_sumsets(11), std::invalid_argument);  // 11 != 1 (mod 3)
}

TEST_CASE("unit-count lemmas") {
    REQUIRE(check_unit_count_lemma(9, 1, 2, 1).holds);
    REQUIRE(check_unit_count_lemma(13, 3, 4, 0).holds);
    REQUIRE(check_unit_count_lemma(19, 3, 3, 1).holds);

    auto r5 = check_unit_count_lemma(5, 2, 3, 0);
    REQUIRE_FALSE(r5.holds);
    REQUIRE(r5.counterexample->terms == std::vector<int>{1, 1, 1});

    auto r3 = check_unit_count_lemma(3, 2, 3, 0);
    REQUIRE_FALSE(r3.holds);
    // enumeration is by multiset, so (1,2,1) surfaces as (1,1,2)
    REQUIRE(r3.counterexample->terms == std::vector<int>{1, 1, 2});

    auto r7 = check_unit_count_lemma(7, 3, 3, 0);
    REQUIRE_FALSE(r7.holds);
    REQUIRE(r7.counterexample->terms == std::vector<int>{1, 1, 1});

    auto r13 = check_unit_count_lemma(13, 3, 3, 0);
    REQUIRE_FALSE(r13.holds);
    REQUIRE(r13.counterexample->terms == std::vector<int>{1, 1, 1});
}

TEST_CASE("unit-count symmetry reduction is sound") {
    for (int n : {3, 5, 7, 9, 13})
        for (int j : {1, 2, 3})
            for (int u : {2, 3}) {
                auto fast = check_unit_count_lemma(n, j, u, 0, true);
                auto slow = check_unit_count_lemma(n, j, u, 0, false);
                REQUIRE(fast.holds == slow.holds);
            }
}

TEST_CASE("crt equivalence check") {
    REQUIRE(check_crt_equivalence(12, 1, 2000, 1));
    REQUIRE(check_crt_equivalence(45, 2, 2000, 2));
    REQUIRE(check_crt_equivalence(13, 2, 500, 3));  // single component: vacuously consistent
}

TEST_CASE("registry parsing") {
    std::stringstream src(R"(# comment
q1-p5 | constant-exact | exhaustive | n=5,weights=units^2,mode=C | 3 | squares mod 5
!unchecked something beyond desk scale
a-first | window | exhaustive | n=5,m=3,len=12 | holds | blocker
)");
    Registry reg = parse_registry(src);
    REQUIRE(reg.claims.size() == 2);
    REQUIRE(reg.claims[0].id == "a-first");  // sorted by id
    REQUIRE(reg.claims[1].params.at("weights") == "units^2");
    REQUIRE(reg.claims[1].expected == "3");
    REQUIRE(reg.unchecked.size() == 1);

    std::stringstream bad("x | y | z | too | few");
    REQUIRE_THROWS_AS(parse_registry(bad), std::runtime_error);
}

TEST_CASE("claim execution statuses") {
    auto make = [](const std::string& id, const std::string& kind, const std::string& method,
                   std::map<std::string, std::string> params, const std::string& expected) {
        Claim c;
        c.id = id;
        c.kind = kind;
        c.method = method;
        c.params = std::move(params);
        c.expected = expected;
        return c;
    };

    auto exact = run_claim(make("q1-p5", "constant-exact", "exhaustive",
                                {{"n", "5"}, {"weights", "units^2"}, {"mode", "C"}}, "3"));
    REQUIRE(exact.status == ClaimStatus::ProvedAtScale);

    auto wrong = run_claim(make("bogus", "constant-exact", "exhaustive",
                                {{"n", "5"}, {"weights", "units^2"}, {"mode", "C"}}, "4"));
    REQUIRE(wrong.status == ClaimStatus::Refuted);

    auto lower = run_claim(make("sq-lb", "constant-lower", "certificate",
                                {{"n", "15"}, {"weights", "units^2"}}, "9"));
    REQUIRE(lower.status == ClaimStatus::ProvedAtScale);

    auto upper = run_claim(make("sq-ub", "constant-upper", "sampled",
                                {{"n", "15"}, {"weights", "nonzero"}, {"mode", "C"}, {"trials", "500"}},
                                "2"));
    REQUIRE(upper.status == ClaimStatus::Corroborated);

    // a false upper bound must be refuted by sampling
    auto false_upper = run_claim(make("bad-ub", "constant-upper", "sampled",
                                      {{"n", "7"}, {"weights", "pm1"}, {"mode", "C"}, {"trials", "2000"}},
                                      "3"));
    REQUIRE(false_upper.status == ClaimStatus::Refuted);

    auto budget = run_claim(make("tight", "constant-exact", "exhaustive",
                                 {{"n", "15"}, {"weights", "units"}, {"mode", "C"}, {"max_nodes", "2"}},
                                 "4"));
    REQUIRE(budget.status == ClaimStatus::BudgetExceeded);
}

TEST_CASE("shipped registry parses and spot claims pass") {
#ifdef ZSCONST_REGISTRY_PATH
    Registry reg = load_registry(ZSCONST_REGISTRY_PATH);
    REQUIRE(reg.claims.size() > 30);
    REQUIRE_FALSE(reg.unchecked.empty());
    for (auto filter : {"q1-p5", "c7-D", "ls1-p13", "window-5-3", "cm-n5-counter"}) {
        auto reports = run_claims(reg, filter);
        REQUIRE(reports.size() == 1);
        REQUIRE(reports[0].status == ClaimStatus::ProvedAtScale);
    }
#endif
}
