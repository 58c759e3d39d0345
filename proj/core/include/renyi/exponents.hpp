#pragma once

#include <cstddef>

#include "renyi/measures.hpp"
#include "renyi/order.hpp"
#include "renyi/prob.hpp"

namespace renyi {

/// Coding rate in nats per channel use.
struct RateNats {
    double value = 0.0;

    explicit RateNats(double nats) : value(nats) {
        if (!(nats >= 0.0)) throw std::invalid_argument("RateNats: negative rate");
    }
    static RateNats from_bits(double bits) { return RateNats(bits * std::log(2.0)); }
    double bits() const { return value / std::log(2.0); }
};

/// A one-dimensional optimum: the value and the argument achieving it.
struct ExponentValue {
    double value = 0.0;
    double arg = 0.0;  // the maximizing rho
};

/// Random-coding exponent max over rho in [0,1] of E0(rho) - rho R.
ExponentValue random_coding_exponent(RateNats rate, const ProbVector& prior,
                                     const Channel& channel);

/// Fixed-list generalization: rho ranges over [0, L]; L = 1 recovers the
/// random-coding exponent.
ExponentValue list_exponent(RateNats rate, std::size_t list_size, const ProbVector& prior,
                            const Channel& channel);

/// Sphere-packing exponent sup over rho >= 0 of (max_Q E0(rho, Q)) - rho R.
/// Exact symmetric input for binary-input output-symmetric channels; a grid
/// with refinement (approximate) for other binary-input channels.  Returns 0
/// at and above capacity; rho is capped at 1e3 near zero rate.
double sphere_packing_exponent(RateNats rate, const Channel& channel);

/// BSC closed form: binary relative entropy between the Gilbert-Varshamov
/// distance at the rate and the crossover probability.
double bsc_sphere_packing(RateNats rate, double delta);

/// Cutoff rate, critical rate and capacity of the BSC, in bits.
struct BscRates {
    double cutoff_bits = 0.0;
    double critical_bits = 0.0;
    double capacity_bits = 0.0;
};
BscRates bsc_rates(double delta);

/// Unique preimage of the binary entropy function on [0, 1/2];
/// input in nats on [0, log 2].
double inverse_binary_entropy(double h_nats);

/// The rate threshold where the random-coding exponent crosses (1/alpha - 1) r;
/// below it the ensemble-averaged order-alpha equivocation decays
/// exponentially.  alpha in (0,1); requires positive mutual information.
RateNats r_alpha(const ProbVector& prior, const Channel& channel, double alpha);

/// BSC specialization: alpha * cutoff rate below the critical order
/// alpha_c = Rc/R0, the sphere-packing crossing above it.
RateNats r_alpha_bsc(double delta, double alpha);

/// Ensemble-averaged equivocation bound for a random code of blocklength n:
/// inf over rho in (0,1] of (1 + 1/rho) exp(-n (E0(rho) - rho R)), together
/// with the looser value at the random-coding-optimal rho.
struct FederMerhavBound {
    double infimum = 0.0;
    double rho = 0.0;           // minimizer of the infimum form
    double at_rho_star = 0.0;   // value at the exponent-maximizing rho
    double rho_star = 0.0;
};
FederMerhavBound feder_merhav_bound(RateNats rate, int blocklength, const ProbVector& prior,
                                    const Channel& channel);

}  // namespace renyi
