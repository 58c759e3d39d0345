#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "renyi/exponents.hpp"
#include "renyi/measures.hpp"
#include "renyi/order.hpp"
#include "renyi/prob.hpp"

namespace renyi {

/// Raised when a requested enumeration would exceed the desk-scale budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnsembleConfig {
    int blocklength = 1;          // n
    int codebook_size = 2;        // M
    Channel channel;              // per-letter transition matrix
    ProbVector prior;             // per-letter codeword distribution
    std::vector<Order> orders;    // entropy orders to evaluate
    int trials = 1;
    std::uint64_t seed = 0;
};

/// M codewords of length n over the channel input alphabet.
struct Codebook {
    int blocklength = 0;
    std::vector<std::vector<int>> words;
};

/// Counter-based generator: the stream depends only on (seed, trial), so the
/// same trial reproduces bit-identically regardless of evaluation order.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);
    double next_uniform();  // [0, 1)

private:
    std::uint64_t state_;
};

/// i.i.d. per-letter codeword draws; deterministic given (seed, trial).
Codebook sample_codebook(const EnsembleConfig& cfg, int trial);

/// Exact joint pmf over (message, output block) with equiprobable messages
/// and the product channel.  Enforces the enumeration budget.
JointPMF code_joint(const Codebook& codebook, const Channel& channel);

/// Exact order-alpha equivocation of the message given the output block.
EntropyValue code_conditional_entropy(const Codebook& codebook, const Channel& channel,
                                      Order order);

struct EnsembleMoments {
    Order order = Order::one();
    double mean = 0.0;
    double standard_error = 0.0;
};

struct EnsembleResult {
    std::vector<EnsembleMoments> per_order;
    double mean_map_error = 0.0;  // ensemble mean of the exact per-code MAP error
};

/// Sample mean and standard error of the per-code equivocation over the
/// trials; the reduction is ordered by trial index.
EnsembleResult ensemble_average(const EnsembleConfig& cfg);

struct SweepPoint {
    int blocklength = 0;
    int codebook_size = 0;
    double mean = 0.0;
    double standard_error = 0.0;
};

struct ExponentFit {
    std::vector<SweepPoint> points;
    double slope_nats = 0.0;           // least-squares slope of -log(mean) against n
    double slope_standard_error = 0.0; // jackknife over trials
    bool saturated = false;            // some mean reached zero exactly
    double floor_nats = 0.0;           // decay-rate reference: alpha Er - (1-alpha) R (Er at order >= 1)
    double ceiling_nats = 0.0;         // decay-rate reference: sphere-packing exponent
};

/// Sweeps the blocklength at a fixed rate (codebook size max(2, round(e^{nR})))
/// and fits the decay exponent of the ensemble-mean equivocation.
ExponentFit exponent_fit(const EnsembleConfig& base, const std::vector<int>& blocklengths,
                         RateNats rate, Order order);

}  // namespace renyi
