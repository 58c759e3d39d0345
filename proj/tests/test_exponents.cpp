#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "renyi/exponents.hpp"
#include "renyi/numeric.hpp"
#include "support.hpp"

using namespace renyi;
using testsupport::Rng;

namespace {
const double kLn2 = std::log(2.0);
const double kDelta = 0.110;

RateNats bits(double b) { return RateNats::from_bits(b); }
}

TEST_CASE("bsc rates at the half-bit design point") {
    auto r = bsc_rates(kDelta);
    CHECK(r.capacity_bits == doctest::Approx(0.5).epsilon(5e-4));
    CHECK(r.critical_bits == doctest::Approx(0.1731).epsilon(5e-4));
    CHECK(r.cutoff_bits == doctest::Approx(0.2989).epsilon(5e-4));
    CHECK(r.critical_bits / r.cutoff_bits == doctest::Approx(0.5791).epsilon(1e-3));
    CHECK_THROWS_AS(bsc_rates(0.6), std::invalid_argument);

    // noiseless limit
    auto clean = bsc_rates(1e-9);
    CHECK(clean.capacity_bits == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(clean.cutoff_bits == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("rate ordering across the crossover grid") {
    for (double d = 0.02; d < 0.5; d += 0.02) {
        auto r = bsc_rates(d);
        CHECK(r.critical_bits >= 0.0);
        CHECK(r.critical_bits <= r.cutoff_bits + 1e-12);
        CHECK(r.cutoff_bits <= r.capacity_bits + 1e-12);
    }
}

TEST_CASE("inverse binary entropy") {
    CHECK(inverse_binary_entropy(kLn2) == doctest::Approx(0.5));
    CHECK(inverse_binary_entropy(0.0) == doctest::Approx(0.0));
    CHECK(inverse_binary_entropy(0.5 * kLn2) == doctest::Approx(0.110).epsilon(5e-4));
    Rng rng(0xf0);
    for (int trial = 0; trial < 100; ++trial) {
        double p = rng.uniform(0.0, 0.5);
        CHECK(inverse_binary_entropy(binary_entropy(p)) == doctest::Approx(p).epsilon(1e-9));
    }
    CHECK_THROWS_AS(inverse_binary_entropy(1.0), std::invalid_argument);
}

TEST_CASE("random-coding exponent") {
    auto uniform = ProbVector::uniform(2);
    auto bsc = Channel::bsc(kDelta);
    auto rates = bsc_rates(kDelta);

    // zero at and above the mutual information
    CHECK(random_coding_exponent(bits(rates.capacity_bits), uniform, bsc).value ==
          doctest::Approx(0.0).epsilon(1e-9));
    CHECK(random_coding_exponent(bits(0.8), uniform, bsc).value == doctest::Approx(0.0));

    // straight-line segment: E_r(R) = R0 - R with rho pinned at one
    for (double rb : {0.0, 0.05, 0.1, rates.critical_bits}) {
        auto er = random_coding_exponent(bits(rb), uniform, bsc);
        CHECK(er.value == doctest::Approx((rates.cutoff_bits - rb) * kLn2).epsilon(1e-9));
    }
    auto at_zero = random_coding_exponent(bits(0.0), uniform, bsc);
    CHECK(at_zero.arg == doctest::Approx(1.0).epsilon(1e-6));

    // at the critical rate the curves meet: E_r = R0 - Rc = Esp
    auto at_rc = random_coding_exponent(bits(rates.critical_bits), uniform, bsc);
    CHECK(at_rc.value / kLn2 == doctest::Approx(0.1256).epsilon(5e-4));
    CHECK(at_rc.value ==
          doctest::Approx(bsc_sphere_packing(bits(rates.critical_bits), kDelta)).epsilon(1e-9));

    // strictly decreasing in the rate
    double prev = at_zero.value;
    for (double rb = 0.02; rb < rates.capacity_bits; rb += 0.02) {
        double v = random_coding_exponent(bits(rb), uniform, bsc).value;
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("piecewise agreement between the random-coding and sphere-packing curves") {
    auto uniform = ProbVector::uniform(2);
    auto bsc = Channel::bsc(kDelta);
    auto rates = bsc_rates(kDelta);
    for (int i = 0; i <= 20; ++i) {
        double rb = rates.critical_bits +
                    (rates.capacity_bits - rates.critical_bits) * i / 20.0;
        double er = random_coding_exponent(bits(rb), uniform, bsc).value;
        double esp = bsc_sphere_packing(bits(rb), kDelta);
        CHECK(std::fabs(er - esp) <= 1e-9);
    }
    for (int i = 0; i <= 10; ++i) {
        double rb = rates.critical_bits * i / 10.0;
        double er = random_coding_exponent(bits(rb), uniform, bsc).value;
        CHECK(std::fabs(er - (rates.cutoff_bits - rb) * kLn2) <= 1e-9);
    }
}

TEST_CASE("sphere-packing exponent: closed form vs generic optimizer") {
    auto bsc = Channel::bsc(kDelta);
    auto rates = bsc_rates(kDelta);
    CHECK(bsc_sphere_packing(bits(rates.capacity_bits), kDelta) == doctest::Approx(0.0));
    CHECK(bsc_sphere_packing(bits(0.3), kDelta) ==
          doctest::Approx(binary_kl(inverse_binary_entropy(0.7 * kLn2), kDelta)).epsilon(1e-12));

    for (double rb : {0.2, 0.3, 0.45}) {
        double generic = sphere_packing_exponent(bits(rb), bsc);
        double closed = bsc_sphere_packing(bits(rb), kDelta);
        CHECK(generic == doctest::Approx(closed).epsilon(1e-6));
    }

    // a non-symmetric binary-input channel goes through the input grid
    auto zlike = Channel::from_rows({{0.9, 0.1}, {0.25, 0.75}}, false);
    double v = sphere_packing_exponent(bits(0.05), zlike);
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));

    // zero-error channels diverge at low rates; the rho cap keeps the value
    // finite but very large
    auto clean = Channel::identity(2);
    double capped = sphere_packing_exponent(bits(0.1), clean);
    CHECK(std::isfinite(capped));
    CHECK(capped > 100.0);
}

TEST_CASE("rate threshold R_alpha for the BSC") {
    auto uniform = ProbVector::uniform(2);
    auto bsc = Channel::bsc(kDelta);
    auto rates = bsc_rates(kDelta);
    double alpha_c = rates.critical_bits / rates.cutoff_bits;

    // linear branch below the critical order
    CHECK(r_alpha_bsc(kDelta, 0.3).bits() ==
          doctest::Approx(0.3 * rates.cutoff_bits).epsilon(1e-9));
    CHECK(r_alpha_bsc(kDelta, alpha_c).bits() == doctest::Approx(0.1731).epsilon(5e-4));

    // generic solver agrees with the closed-form branch logic
    for (double a : {0.2, 0.45, alpha_c, 0.7, 0.9}) {
        CHECK(r_alpha(uniform, bsc, a).bits() ==
              doctest::Approx(r_alpha_bsc(kDelta, a).bits()).epsilon(1e-5));
    }

    // convergence to capacity is square-root slow in 1 - alpha: the gap is
    // ~0.024 bits at alpha = 0.999 and ~8e-4 bits at alpha = 1 - 1e-6
    CHECK(rates.capacity_bits - r_alpha_bsc(kDelta, 0.999).bits() < 0.03);
    CHECK(std::fabs(r_alpha_bsc(kDelta, 1.0 - 1e-6).bits() - rates.capacity_bits) < 1e-3);
    CHECK(r_alpha_bsc(kDelta, 0.01).bits() == doctest::Approx(0.01 * rates.cutoff_bits).epsilon(1e-9));

    double prev = 0.0;
    for (double a = 0.05; a <= 0.951; a += 0.01) {
        double r = r_alpha_bsc(kDelta, a).bits();
        CHECK(r > prev);
        CHECK(r - prev < 2e-2);  // no jumps across the critical order
        prev = r;
    }
    CHECK_THROWS_AS(r_alpha_bsc(kDelta, 1.5), std::invalid_argument);

    auto flat = Channel::from_rows({{0.5, 0.5}, {0.5, 0.5}}, false);
    CHECK_THROWS_AS(r_alpha(uniform, flat, 0.5), std::domain_error);
}

TEST_CASE("ensemble equivocation bound") {
    auto uniform = ProbVector::uniform(2);
    auto bsc = Channel::bsc(kDelta);

    auto fm = feder_merhav_bound(bits(0.25), 50, uniform, bsc);
    // frozen from a dense rho-grid scan
    CHECK(fm.infimum == doctest::Approx(0.262739).epsilon(1e-4));
    CHECK(fm.rho == doctest::Approx(0.7107).epsilon(1e-2));
    CHECK(fm.infimum <= fm.at_rho_star + 1e-12);

    // the infimum form dominates the fixed-rho-star form on a grid
    for (double rb : {0.1, 0.2, 0.3, 0.4}) {
        for (int n : {10, 30, 80}) {
            auto b = feder_merhav_bound(bits(rb), n, uniform, bsc);
            CHECK(b.infimum <= b.at_rho_star + 1e-12);
            CHECK(b.infimum > 0.0);
        }
    }

    // large blocklength drives the bound to zero below capacity
    CHECK(feder_merhav_bound(bits(0.25), 2000, uniform, bsc).infimum < 1e-6);
    CHECK_THROWS_AS(feder_merhav_bound(bits(0.9), 10, uniform, bsc), std::invalid_argument);
}

TEST_CASE("list exponent") {
    auto uniform = ProbVector::uniform(2);
    auto bsc = Channel::bsc(kDelta);
    RateNats r = bits(0.1);

    auto base = list_exponent(r, 1, uniform, bsc);
    CHECK(base.value ==
          doctest::Approx(random_coding_exponent(r, uniform, bsc).value).epsilon(1e-9));

    // nondecreasing in the list size; dense-grid oracle for L = 2
    double prev = base.value;
    for (std::size_t ell : {2, 3, 4}) {
        double v = list_exponent(r, ell, uniform, bsc).value;
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
    double grid_best = 0.0;
    for (double rho = 0.0; rho <= 2.0; rho += 1e-4) {
        double v = gallager_e0(rho, uniform, bsc) - rho * r.value;
        grid_best = std::max(grid_best, v);
    }
    CHECK(list_exponent(r, 2, uniform, bsc).value == doctest::Approx(grid_best).epsilon(1e-6));
}
