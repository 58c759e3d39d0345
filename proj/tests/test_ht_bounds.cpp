#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "renyi/decision.hpp"
#include "renyi/ht_bounds.hpp"
#include "renyi/measures.hpp"
#include "support.hpp"

using namespace renyi;
using testsupport::Rng;

TEST_CASE("binary bound specializations") {
    // identical models: the objective no longer depends on the divergence
    auto m = ProbVector::from_masses({0.3, 0.7});
    auto r = hellman_raviv_binary(0.4, m, m);
    auto joint = JointPMF::from_matrix({{0.4 * 0.3, 0.4 * 0.7}, {0.6 * 0.3, 0.6 * 0.7}}, false);
    CHECK(r.value >= map_error(joint) - 1e-12);

    // disjoint supports: a perfect test
    auto p0 = ProbVector::from_masses({1.0, 0.0});
    auto p1 = ProbVector::from_masses({0.0, 1.0});
    CHECK(hellman_raviv_binary(0.5, p0, p1).value == doctest::Approx(0.0));

    // equal priors at order 1/2 give half the Bhattacharyya coefficient
    Rng rng(0xaa);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = testsupport::random_pmf(rng, 4, 1e-3);
        auto b = testsupport::random_pmf(rng, 4, 1e-3);
        double bc = 0.0;
        for (std::size_t i = 0; i < 4; ++i) bc += std::sqrt(a[i] * b[i]);
        double at_half = 0.5 * std::exp(-0.5 * renyi_divergence(b, a, Order::of(0.5)));
        CHECK(at_half == doctest::Approx(0.5 * bc).epsilon(1e-11));
        CHECK(hellman_raviv_binary(0.5, a, b).value <= at_half + 1e-11);
    }
}

TEST_CASE("generalized bound is tight without observations") {
    Rng rng(0xab);
    for (int trial = 0; trial < 50; ++trial) {
        int m = rng.uniform_int(2, 5);
        auto prior = testsupport::random_pmf(rng, m, 1e-2);
        // one observation column: Y carries nothing
        std::vector<std::vector<double>> rows(m, std::vector<double>(2));
        for (int i = 0; i < m; ++i) rows[i] = {prior[i] * 0.5, prior[i] * 0.5};
        auto joint = JointPMF::from_matrix(rows, false);
        auto r = generalized_hellman_raviv(joint);
        CHECK(r.value == doctest::Approx(1.0 - prior.p_max()).epsilon(1e-5));
    }
}

TEST_CASE("generalized bound agrees with the binary form when M = 2") {
    Rng rng(0xac);
    for (int trial = 0; trial < 30; ++trial) {
        auto joint = testsupport::random_joint(rng, 2, rng.uniform_int(2, 5), 1e-3);
        auto prior = joint.prior();
        auto pr = pairwise_restriction(joint, 0, 1);
        auto binary = hellman_raviv_binary(prior[0], *pr.conditional_i, *pr.conditional_j);
        auto general = generalized_hellman_raviv(joint);
        CHECK(general.value == doctest::Approx(binary.value).epsilon(1e-9));
    }
}

TEST_CASE("pairwise sum bound: equality routes and corner cases") {
    Rng rng(0xad);
    for (int trial = 0; trial < 100; ++trial) {
        int m = rng.uniform_int(2, 6);
        auto joint = testsupport::random_joint(rng, m, rng.uniform_int(2, 6), 1e-4);
        auto direct = pairwise_sum_bound(joint);

        // the restricted-test route must agree exactly
        double via_pairs = 0.0;
        auto prior = joint.prior();
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                via_pairs += (prior[i] + prior[j]) * pairwise_restriction(joint, i, j).error;
        CHECK(std::fabs(direct.value - via_pairs) <= 1e-12);

        CHECK(direct.value >= map_error(joint) - 1e-12);
        if (m == 2) CHECK(direct.value == doctest::Approx(map_error(joint)).epsilon(1e-12));
    }

    auto det = JointPMF::from_matrix({{0.4, 0.0}, {0.0, 0.6}}, true);
    CHECK(pairwise_sum_bound(det).value == doctest::Approx(0.0));
}

TEST_CASE("worst-pair scaling bound may exceed one and is flagged") {
    // three blind equiprobable hypotheses: each binary test errs half the time
    auto blind = JointPMF::from_matrix({{1, 1}, {1, 1}, {1, 1}}, true);
    auto r = leang_johnson_bound(blind);
    CHECK(r.value == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(!r.domain_note.empty());

    auto two = JointPMF::from_matrix({{0.3, 0.1}, {0.2, 0.4}}, true);
    CHECK(leang_johnson_bound(two).value == doctest::Approx(map_error(two)).epsilon(1e-12));

    auto ex1 = testsupport::example_joint_1();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            worst = std::max(worst, pairwise_restriction(ex1, i, j).error);
    CHECK(leang_johnson_bound(ex1).value == doctest::Approx(3.0 * worst).epsilon(1e-12));
}

TEST_CASE("divergence and chernoff bounds") {
    auto ex1 = testsupport::example_joint_1();
    auto cs = chernoff_sum_bound(ex1);
    double eps = map_error(ex1);
    CHECK(cs.pairwise.value >= eps - 1e-12);
    if (cs.worst_pair.value <= 1.0) CHECK(cs.worst_pair.value >= eps - 1e-12);
    if (cs.improved.value <= 1.0) CHECK(cs.improved.value >= eps - 1e-12);

    // identical rows: the worst-pair bound degenerates to M - 1
    auto same = JointPMF::from_matrix({{1, 2}, {1, 2}, {1, 2}}, true);
    auto degenerate = chernoff_sum_bound(same);
    CHECK(degenerate.worst_pair.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(!degenerate.worst_pair.domain_note.empty());

    // equiprobable prior: the improved factor is exactly half
    auto equi = JointPMF::from_matrix({{3, 1, 1}, {1, 3, 1}, {1, 1, 3}}, true);
    auto eq = chernoff_sum_bound(equi);
    CHECK(eq.improved.value == doctest::Approx(0.5 * eq.worst_pair.value).epsilon(1e-12));
}

TEST_CASE("ordering among the chernoff-type bounds") {
    Rng rng(0xae);
    for (int trial = 0; trial < 100; ++trial) {
        int m = rng.uniform_int(2, 5);
        auto joint = testsupport::random_joint(rng, m, rng.uniform_int(2, 5), 1e-3);
        auto cs = chernoff_sum_bound(joint);
        CHECK(cs.pairwise.value <= cs.worst_pair.value + 1e-9);
        // the pairwise-count variant is weaker than the (M-1)-scaled one
        double pair_count = 0.5 * m * (m - 1.0) * std::exp(-*cs.worst_pair.inner_arg);
        CHECK(cs.worst_pair.value <= pair_count + 1e-12);
        CHECK(cs.improved.value <= cs.worst_pair.value + 1e-12);
    }
}

TEST_CASE("every binary-test bound dominates the MAP error") {
    Rng rng(0xaf);
    for (int trial = 0; trial < 200; ++trial) {
        int m = rng.uniform_int(2, 6);
        auto joint = testsupport::random_joint(rng, m, rng.uniform_int(2, 6), 1e-4);
        double eps = map_error(joint);
        auto cs = chernoff_sum_bound(joint);
        for (double v : {generalized_hellman_raviv(joint).value, pairwise_sum_bound(joint).value,
                         leang_johnson_bound(joint).value, cs.pairwise.value,
                         cs.worst_pair.value, cs.improved.value}) {
            CHECK(std::min(v, 1.0) >= eps - 1e-12);
        }
    }
}
