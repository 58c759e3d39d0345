#include "renyi/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "renyi/numeric.hpp"

namespace renyi {

namespace {

constexpr double kRhoCap = 1e3;

double e0_gap(double rho, RateNats rate, const ProbVector& prior, const Channel& channel) {
    return gallager_e0(rho, prior, channel) - rho * rate.value;
}

// max_Q E0(rho, Q) for binary-input channels: the symmetric input is exact
// for output-symmetric channels, otherwise a grid with golden refinement.
double e0_best_input(double rho, const Channel& channel) {
    if (channel.inputs() != 2)
        throw std::invalid_argument("sphere_packing_exponent: only binary-input channels supported");
    if (channel.is_binary_input_symmetric())
        return gallager_e0(rho, ProbVector::uniform(2), channel);
    auto objective = [&](double q) {
        return gallager_e0(rho, ProbVector::binary(q), channel);
    };
    double best_q = 0.5, best = objective(0.5);
    for (double q = 0.0; q <= 1.0 + 1e-12; q += 1e-3) {
        double v = objective(std::min(q, 1.0));
        if (v > best) {
            best = v;
            best_q = std::min(q, 1.0);
        }
    }
    auto refined = golden_section_max(objective, std::max(0.0, best_q - 1e-3),
                                      std::min(1.0, best_q + 1e-3), 1e-10);
    return std::max(best, refined.value);
}

}  // namespace

ExponentValue random_coding_exponent(RateNats rate, const ProbVector& prior,
                                     const Channel& channel) {
    auto objective = [&](double rho) { return e0_gap(rho, rate, prior, channel); };
    auto best = golden_section_max(objective, 0.0, 1.0, 1e-9);
    if (best.value <= 0.0) return {0.0, 0.0};
    return {best.value, best.arg};
}

ExponentValue list_exponent(RateNats rate, std::size_t list_size, const ProbVector& prior,
                            const Channel& channel) {
    if (list_size < 1) throw std::invalid_argument("list_exponent: list size must be positive");
    auto objective = [&](double rho) { return e0_gap(rho, rate, prior, channel); };
    auto best = golden_section_max(objective, 0.0, static_cast<double>(list_size), 1e-9);
    if (best.value <= 0.0) return {0.0, 0.0};
    return {best.value, best.arg};
}

double sphere_packing_exponent(RateNats rate, const Channel& channel) {
    auto objective = [&](double rho) { return e0_best_input(rho, channel) - rho * rate.value; };
    // E0 grows without bound in rho for some channels as the rate vanishes;
    // scan a geometric grid and refine around the best point, capping rho.
    double best_rho = 0.0, best = 0.0;
    std::vector<double> grid;
    for (double rho = 1e-3; rho <= kRhoCap; rho *= 1.25) grid.push_back(rho);
    for (double rho : grid) {
        double v = objective(rho);
        if (v > best) {
            best = v;
            best_rho = rho;
        }
    }
    if (best <= 0.0) return 0.0;  // at or above capacity
    auto refined =
        golden_section_max(objective, best_rho / 1.25, std::min(kRhoCap, best_rho * 1.25), 1e-9);
    return std::max(best, refined.value);
}

double bsc_sphere_packing(RateNats rate, double delta) {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("bsc_sphere_packing: delta outside (0, 1/2)");
    double ln2 = std::log(2.0);
    if (rate.value >= ln2 - binary_entropy(delta)) return 0.0;  // at or above capacity
    double gv = inverse_binary_entropy(ln2 - rate.value);
    return binary_kl(gv, delta);
}

BscRates bsc_rates(double delta) {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("bsc_rates: delta outside (0, 1/2)");
    double ln2 = std::log(2.0);
    double root = std::sqrt(4.0 * delta * (1.0 - delta));
    BscRates r;
    r.cutoff_bits = 1.0 - std::log(1.0 + root) / ln2;
    double sd = std::sqrt(delta);
    r.critical_bits = 1.0 - binary_entropy(sd / (sd + std::sqrt(1.0 - delta))) / ln2;
    r.capacity_bits = 1.0 - binary_entropy(delta) / ln2;
    return r;
}

double inverse_binary_entropy(double h_nats) {
    double ln2 = std::log(2.0);
    if (!(h_nats >= 0.0 && h_nats <= ln2 + 1e-12))
        throw std::invalid_argument("inverse_binary_entropy: value outside [0, log 2]");
    if (h_nats >= ln2) return 0.5;
    if (h_nats <= 0.0) return 0.0;
    return bisect_increasing([](double p) { return binary_entropy(p); }, h_nats, 0.0, 0.5, 1e-12,
                             200);
}

RateNats r_alpha(const ProbVector& prior, const Channel& channel, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("r_alpha: alpha outside (0,1)");
    double mi = alpha_mutual_information(prior, channel, Order::one());
    if (mi <= 0.0) throw std::domain_error("r_alpha: channel carries no information");
    double slope = 1.0 / alpha - 1.0;
    // E_r(r) decreases from a positive value to 0 at the mutual information,
    // while slope*r increases from 0: the sign change locates the crossing.
    auto gap = [&](double r) {
        return slope * r - random_coding_exponent(RateNats(r), prior, channel).value;
    };
    double r = bisect_increasing(gap, 0.0, 1e-12, mi, 1e-10, 200);
    return RateNats(r);
}

RateNats r_alpha_bsc(double delta, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("r_alpha_bsc: alpha outside (0,1)");
    auto rates = bsc_rates(delta);
    double ln2 = std::log(2.0);
    double r0 = rates.cutoff_bits * ln2;
    double rc = rates.critical_bits * ln2;
    double cap = rates.capacity_bits * ln2;
    double alpha_c = rc / r0;
    if (alpha <= alpha_c) return RateNats(alpha * r0);
    double slope = 1.0 / alpha - 1.0;
    auto gap = [&](double r) { return slope * r - bsc_sphere_packing(RateNats(r), delta); };
    return RateNats(bisect_increasing(gap, 0.0, rc, cap, 1e-12, 200));
}

FederMerhavBound feder_merhav_bound(RateNats rate, int blocklength, const ProbVector& prior,
                                    const Channel& channel) {
    if (blocklength < 1) throw std::invalid_argument("feder_merhav_bound: blocklength < 1");
    double mi = alpha_mutual_information(prior, channel, Order::one());
    if (rate.value > mi + 1e-12)
        throw std::invalid_argument("feder_merhav_bound: rate exceeds the mutual information");
    double n = static_cast<double>(blocklength);
    auto log_objective = [&](double rho) {
        return std::log1p(1.0 / rho) - n * e0_gap(rho, rate, prior, channel);
    };
    double best_rho = 1.0, best = log_objective(1.0);
    for (double rho = 1e-3; rho < 1.0; rho += 1e-3) {
        double v = log_objective(rho);
        if (v < best) {
            best = v;
            best_rho = rho;
        }
    }
    auto refined = golden_section_max([&](double rho) { return -log_objective(rho); },
                                      std::max(1e-6, best_rho - 1e-3),
                                      std::min(1.0, best_rho + 1e-3), 1e-10);
    FederMerhavBound out;
    out.infimum = std::exp(std::min(best, -refined.value));
    out.rho = -refined.value <= best ? refined.arg : best_rho;
    auto er = random_coding_exponent(rate, prior, channel);
    out.rho_star = er.arg;
    out.at_rho_star = er.arg > 0.0 ? (1.0 + 1.0 / er.arg) * std::exp(-n * er.value) : kInfinity;
    return out;
}

}  // namespace renyi
