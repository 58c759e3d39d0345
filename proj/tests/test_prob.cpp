#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "renyi/decision.hpp"
#include "renyi/prob.hpp"
#include "support.hpp"

using namespace renyi;
using testsupport::Rng;

TEST_CASE("ProbVector validation and bookkeeping") {
    auto p = ProbVector::from_masses({2.0, 3.0, 0.0, 5.0});
    CHECK(p.size() == 4);
    CHECK(p[0] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(p.support_size() == 3);
    CHECK(p.p_max() == doctest::Approx(0.5));
    CHECK(p.p_min() == doctest::Approx(0.2));
    CHECK(p.mode() == 3);

    double sum = 0.0;
    for (double x : p.masses()) sum += x;
    CHECK(std::fabs(sum - 1.0) <= 1e-12);

    CHECK_THROWS_AS(ProbVector::from_masses({0.5, -0.1, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(ProbVector::from_masses({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ProbVector::from_masses({0.3, 0.3}, false), std::invalid_argument);
    CHECK_THROWS_AS(ProbVector::from_masses({}), std::invalid_argument);
}

TEST_CASE("JointPMF marginals and posteriors") {
    auto joint = testsupport::example_joint_1();
    CHECK(joint.hypotheses() == 3);
    CHECK(joint.observations() == 3);
    CHECK(joint(0, 0) == doctest::Approx(8.0 / 45.0).epsilon(1e-15));

    auto px = joint.prior();
    auto py = joint.observation_marginal();
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(px[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(py[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    auto post = joint.posterior(0);
    CHECK(post[0] == doctest::Approx(8.0 / 15.0).epsilon(1e-14));

    // zero-marginal observation columns are allowed but have no posterior
    auto with_dead_column = JointPMF::from_matrix({{1.0, 0.0}, {1.0, 0.0}}, true);
    CHECK_THROWS_AS(with_dead_column.posterior(1), std::domain_error);
}

TEST_CASE("channel validation") {
    CHECK_THROWS_AS(Channel::from_rows({{0.5, 0.4}}, false), std::invalid_argument);
    auto bsc = Channel::bsc(0.11);
    CHECK(bsc(0, 1) == doctest::Approx(0.11));
    CHECK(bsc.is_binary_input_symmetric());
    auto zchan = Channel::from_rows({{1.0, 0.0}, {0.25, 0.75}}, false);
    CHECK_FALSE(zchan.is_binary_input_symmetric());
}

TEST_CASE("map_error on the worked examples") {
    CHECK(map_error(testsupport::example_joint_1()) == doctest::Approx(21.0 / 45.0).epsilon(1e-15));
    CHECK(map_error(testsupport::example_joint_2()) == doctest::Approx(0.6050).epsilon(1e-15));
    CHECK(map_error(testsupport::example_joint_3()) == doctest::Approx(0.1944).epsilon(1e-12));

    // blind guessing: uniform hypothesis independent of the observation
    auto blind = JointPMF::from_matrix({{1, 1}, {1, 1}, {1, 1}, {1, 1}}, true);
    CHECK(map_error(blind) == doctest::Approx(1.0 - 0.25).epsilon(1e-15));
}

TEST_CASE("Z-channel error equals the prior mass") {
    for (double p : {0.05, 0.2, 0.35, 0.5}) {
        auto prior = ProbVector::from_masses({p, 1.0 - p});
        auto chan = Channel::from_rows({{1.0, 0.0}, {p / (1.0 - p), 1.0 - p / (1.0 - p)}}, false);
        auto joint = JointPMF::from_prior_channel(prior, chan);
        CHECK(map_error(joint) == doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("list error: trivial sizes and brute-force oracle") {
    auto joint = testsupport::example_joint_1();
    CHECK(map_list_error(joint, 1) == doctest::Approx(map_error(joint)).epsilon(1e-15));
    CHECK(map_list_error(joint, 3) == doctest::Approx(0.0).epsilon(1e-12));
    // frozen from the subset-enumeration oracle: columns keep 12/45, 14/45, 13/45
    CHECK(map_list_error(joint, 2) == doctest::Approx(6.0 / 45.0).epsilon(1e-13));
    CHECK_THROWS_AS(map_list_error(joint, 0), std::invalid_argument);
    CHECK_THROWS_AS(map_list_error(joint, 4), std::invalid_argument);

    Rng rng(0x11aa22bb);
    for (int trial = 0; trial < 50; ++trial) {
        int m = rng.uniform_int(2, 6), n = rng.uniform_int(2, 6);
        auto j = testsupport::random_joint(rng, m, n);
        double prev = 1.0;
        for (std::size_t ell = 1; ell <= static_cast<std::size_t>(m); ++ell) {
            double got = map_list_error(j, ell);
            double oracle = testsupport::list_error_by_subset_enumeration(j, ell);
            CHECK(got == doctest::Approx(oracle).epsilon(1e-12));
            CHECK(got <= prev + 1e-12);  // nonincreasing in the list size
            prev = got;
        }
        CHECK(map_list_error(j, m) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("conditional error given the observation") {
    auto joint = testsupport::example_joint_1();
    CHECK(conditional_error_given_y(joint, 0) == doctest::Approx(1.0 - 8.0 / 15.0).epsilon(1e-14));

    auto deterministic = JointPMF::from_matrix({{0.5, 0.0}, {0.0, 0.5}}, true);
    CHECK(conditional_error_given_y(deterministic, 0) == doctest::Approx(0.0));

    auto uniform_post = JointPMF::from_matrix({{1, 1}, {1, 1}, {1, 1}}, true);
    CHECK(conditional_error_given_y(uniform_post, 1) == doctest::Approx(1.0 - 1.0 / 3.0));

    auto dead = JointPMF::from_matrix({{1.0, 0.0}, {1.0, 0.0}}, true);
    CHECK_THROWS_AS(conditional_error_given_y(dead, 1), std::domain_error);
}

TEST_CASE("averaging the conditional error recovers the MAP error") {
    Rng rng(0x5eed);
    for (int trial = 0; trial < 200; ++trial) {
        int m = rng.uniform_int(2, 6), n = rng.uniform_int(2, 6);
        auto joint = testsupport::random_joint(rng, m, n);
        double acc = 0.0;
        for (std::size_t y = 0; y < joint.observations(); ++y)
            acc += joint.observation_mass(y) * conditional_error_given_y(joint, y);
        CHECK(std::fabs(acc - map_error(joint)) <= 1e-12);

        // MAP never loses to blind guessing
        CHECK(map_error(joint) <= 1.0 - joint.prior().p_max() + 1e-12);
        CHECK(map_error(joint) <= 1.0 - 1.0 / m + 1e-12);
    }
}

TEST_CASE("pairwise restriction") {
    auto joint = testsupport::example_joint_1();
    auto r = pairwise_restriction(joint, 0, 1);
    CHECK(r.prior_i == doctest::Approx(0.5).epsilon(1e-14));
    // frozen from min-sum enumeration: (3 + 1 + 6)/30
    CHECK(r.error == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    REQUIRE(r.conditional_i.has_value());
    CHECK((*r.conditional_i)[0] == doctest::Approx(8.0 / 15.0).epsilon(1e-14));

    // identical rows: the observation is useless, so the error is the smaller prior
    auto same = JointPMF::from_matrix({{0.1, 0.2}, {0.2, 0.4}, {0.05, 0.05}}, true);
    auto rs = pairwise_restriction(same, 0, 1);
    CHECK(rs.error == doctest::Approx(std::min(rs.prior_i, rs.prior_j)).epsilon(1e-12));

    // disjoint supports: a perfect test
    auto disjoint = JointPMF::from_matrix({{0.5, 0.0}, {0.0, 0.5}}, true);
    CHECK(pairwise_restriction(disjoint, 0, 1).error == doctest::Approx(0.0));

    CHECK_THROWS_AS(pairwise_restriction(joint, 1, 1), std::invalid_argument);
    auto dead_rows = JointPMF::from_matrix({{0, 0}, {0, 0}, {1, 1}}, true);
    CHECK_THROWS_AS(pairwise_restriction(dead_rows, 0, 1), std::domain_error);
}
