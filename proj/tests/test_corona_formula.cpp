#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qec/corona_formula.hpp"
#include "qec/errors.hpp"
#include "qec/graph.hpp"
#include "qec/omega_psi.hpp"
#include "qec/random_graphs.hpp"

#include "helpers.hpp"

using namespace qec;

namespace {

bool has_rule(const TheoremReport& r, const std::string& rule) {
    return std::find(r.applicable.begin(), r.applicable.end(), rule) != r.applicable.end();
}

} // namespace

TEST_CASE("double star: regular rule applies, the nonnegativity rule does not") {
    const TheoremReport r = verify_pair(complete_graph(2), empty_graph(2));
    CHECK(has_rule(r, "T4.13"));
    CHECK_FALSE(has_rule(r, "T4.9")); // QEC(K2) = -1 < 0
    REQUIRE(r.predicted.has_value());
    CHECK(*r.predicted == doctest::Approx((-5.0 + std::sqrt(17.0)) / 2.0).epsilon(1e-10));
    REQUIRE(r.oracle.has_value());
    CHECK(*r.abs_deviation <= 1e-7);
    CHECK(r.passed());
}

TEST_CASE("pendant corona of complete graphs") {
    const TheoremReport r = verify_pair(complete_graph(3), complete_graph(1));
    REQUIRE(r.predicted.has_value());
    CHECK(*r.predicted == doctest::Approx(-2.0 + std::sqrt(2.0)).epsilon(1e-10));
    CHECK(r.passed());
}

TEST_CASE("C4 corona C4 goes through the min-eigenvalue -2 dichotomy") {
    const TheoremReport r = verify_pair(cycle_graph(4), cycle_graph(4));
    CHECK(has_rule(r, "T4.16"));
    CHECK_FALSE(has_rule(r, "T4.9")); // condition (i) fails: -2 is an eigenvalue
    REQUIRE(r.predicted.has_value());
    CHECK(*r.predicted == doctest::Approx(0.0)); // QEC(C4) = 0, zero branch
    CHECK(r.conditions.cond_i_not_eigen == TriState::no);
    CHECK(r.passed());
}

TEST_CASE("both sides computed independently for (P3, E2)") {
    const TheoremReport r = verify_pair(path_graph(3), empty_graph(2));
    REQUIRE(r.predicted.has_value());
    // empty-H closed form at QEC(P3) = -2/3
    const double expect = psi_inverse_regular_closed_form(2, 0, -2.0 / 3.0);
    CHECK(*r.predicted == doctest::Approx(expect).epsilon(1e-9));
    CHECK(r.passed());
}

TEST_CASE("(C5, K2) conditions and oracle agreement") {
    const TheoremReport r = verify_pair(cycle_graph(5), complete_graph(2));
    CHECK_FALSE(r.applicable.empty());
    CHECK(r.passed());
}

TEST_CASE("zero-product rule applies to (K2, K_{1,4})") {
    const TheoremReport r = verify_pair(complete_graph(2), test::star(4));
    CHECK(has_rule(r, "P2.3")); // QEC(K1 + K_{1,4}) = 0 and QEC(K2) <= 0
    REQUIRE(r.predicted.has_value());
    CHECK(*r.predicted == doctest::Approx(0.0));
    CHECK(std::abs(r.oracle->value) <= 1e-8);
    CHECK(r.passed());
}

TEST_CASE("odd-cycle H falls outside every rule and is reported oracle-only") {
    const TheoremReport r = verify_pair(complete_graph(2), cycle_graph(5));
    CHECK(r.applicable.empty());
    CHECK_FALSE(r.predicted.has_value());
    REQUIRE(r.oracle.has_value());
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("odd-cycle") != std::string::npos);
    // the sanity floor still holds
    CHECK(r.lower_bound_ok);
    CHECK(r.psi_floor_ok);

    TheoremReport rc = check_conditions(complete_graph(2), cycle_graph(5));
    CHECK_THROWS_AS(predict_qec(rc, complete_graph(2), cycle_graph(5)), precondition_error);
}

TEST_CASE("predict_qec message names the pair") {
    TheoremReport rc = check_conditions(complete_graph(2), path_graph(4));
    if (rc.applicable.empty()) {
        try {
            predict_qec(rc, complete_graph(2), path_graph(4));
            FAIL("expected precondition_error");
        } catch (const precondition_error& e) {
            CHECK(std::string(e.what()).find("formula not established") != std::string::npos);
        }
    }
}

TEST_CASE("preconditions of the pair pipeline") {
    CHECK_THROWS_AS(check_conditions(complete_graph(1), empty_graph(2)), precondition_error);
    CHECK_THROWS_AS(
        check_conditions(disjoint_union(complete_graph(2), complete_graph(2)), empty_graph(1)),
        precondition_error);
    CHECK_THROWS_AS(verify_pair(complete_graph(5), empty_graph(4), Tolerances{}, 20),
                    precondition_error); // corona order 25 over the cap
}

TEST_CASE("every section-5 family has an applicable rule that matches the oracle") {
    std::vector<Graph> gs = {complete_graph(2), path_graph(3), cycle_graph(4), cycle_graph(5),
                             complete_graph(3)};
    std::vector<Graph> hs;
    for (int n = 1; n <= 3; ++n) hs.push_back(empty_graph(n));
    hs.push_back(complete_graph(2));
    hs.push_back(complete_graph(3));
    hs.push_back(complete_blocks(2, 2));
    hs.push_back(complete_blocks(2, 3));
    hs.push_back(cycle_graph(4)); // even cycle
    hs.push_back(disjoint_union(cycle_graph(4), cycle_graph(4)));
    hs.push_back(disjoint_union(complete_blocks(1, 1), complete_blocks(1, 2)));
    hs.push_back(disjoint_union(complete_blocks(2, 1), complete_blocks(1, 3)));

    for (const auto& g : gs)
        for (const auto& h : hs) {
            const TheoremReport r = verify_pair(g, h);
            INFO("pair (", r.g_label, ", ", r.h_label, ")");
            CHECK_FALSE(r.applicable.empty());
            REQUIRE(r.abs_deviation.has_value());
            CHECK(*r.abs_deviation <= 1e-7);
            CHECK(r.passed());
        }
}

TEST_CASE("co-applicable rules agree with each other") {
    // (K23, C6): regular H, min ev -2, QEC(G) > 0: T4.11 and T4.16 both fire
    const TheoremReport r = verify_pair(test::complete_bipartite(2, 3), cycle_graph(6));
    CHECK(r.applicable.size() >= 2);
    double lo = 1e300, hi = -1e300;
    for (const auto& [rule, v] : r.predictions_by_rule) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo <= 1e-9);
    CHECK(r.passed());
}

TEST_CASE("gamma3 upper bound and the isometric floor") {
    for (const auto& h : {empty_graph(2), complete_graph(3), cycle_graph(4), test::star(4)}) {
        const TheoremReport r = verify_pair(cycle_graph(5), h);
        CHECK(r.gamma3_upper_bound ==
              doctest::Approx(-r.min_ev - 2.0).epsilon(1e-12));
        CHECK(r.lower_bound_ok);
        CHECK(r.psi_floor_ok);
        CHECK(r.gamma3_bound_ok);
    }
}

TEST_CASE("corona QEC exceeds the path floor strictly when both factors grow") {
    // with |V1| >= 2 and |V2| >= 2 the corona strictly beats -2+sqrt(2)
    for (const auto& g : {complete_graph(2), path_graph(3)})
        for (const auto& h : {empty_graph(2), complete_graph(2), path_graph(3)}) {
            const TheoremReport r = verify_pair(g, h);
            CHECK(r.oracle->value > -2.0 + std::sqrt(2.0) + 1e-9);
        }

    std::mt19937_64 rng(90210);
    for (int t = 0; t < 100; ++t) {
        const Graph g = random_connected_graph(rng, 2, 6);
        const Graph h = random_graph(rng, 2 + static_cast<int>(uniform_below(rng, 3)));
        const TheoremReport r = verify_pair(g, h);
        CHECK(r.oracle->value > -2.0 + std::sqrt(2.0) + 1e-9);
    }
}

TEST_CASE("batch verify: seeded sweep passes and is deterministic") {
    BatchConfig cfg;
    cfg.count = 200;
    cfg.seed = 42;
    const BatchSummary s1 = batch_verify(cfg);
    CHECK(s1.total == 200);
    CHECK(s1.failures == 0);
    CHECK(s1.passes == s1.total);
    CHECK(s1.indeterminate == static_cast<int>(s1.indeterminate_indices.size()));
    CHECK(s1.worst_abs_deviation <= 1e-7);
    CHECK(s1.applicable_pairs + s1.no_theorem == s1.total);

    const BatchSummary s2 = batch_verify(cfg);
    CHECK(s2.worst_abs_deviation == s1.worst_abs_deviation);
    CHECK(s2.per_rule == s1.per_rule);
    REQUIRE(s2.outcomes.size() == s1.outcomes.size());
    for (std::size_t i = 0; i < s1.outcomes.size(); ++i) {
        CHECK(s1.outcomes[i].g_desc == s2.outcomes[i].g_desc);
        CHECK(s1.outcomes[i].h_desc == s2.outcomes[i].h_desc);
        CHECK(s1.outcomes[i].oracle == s2.outcomes[i].oracle);
    }
}

TEST_CASE("batch verify: empty run") {
    BatchConfig cfg;
    cfg.count = 0;
    cfg.seed = 1;
    const BatchSummary s = batch_verify(cfg);
    CHECK(s.total == 0);
    CHECK(s.failures == 0);
    CHECK(s.outcomes.empty());
}
