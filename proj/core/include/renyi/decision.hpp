#pragma once

#include <cstddef>
#include <optional>

#include "renyi/prob.hpp"

namespace renyi {

/// Minimum error probability of guessing the hypothesis from the observation,
/// achieved by the MAP rule: 1 - sum_y max_x P(x,y).  Lies in [0, 1 - 1/M].
double map_error(const JointPMF& joint);

/// Miss probability of the list decoder that keeps the L largest posteriors
/// per observation (ties broken toward the lowest hypothesis index).
/// Equals map_error for L = 1 and vanishes at L = M.
double map_list_error(const JointPMF& joint, std::size_t list_size);

/// 1 - max_x P(x|y).  Averaging over the observation recovers map_error.
double conditional_error_given_y(const JointPMF& joint, std::size_t y);

/// Binary sub-problem obtained by conditioning on the hypothesis being i or j.
struct PairwiseRestriction {
    double prior_i = 0.0;  // P[X = i | X in {i, j}]
    double prior_j = 0.0;
    std::optional<ProbVector> conditional_i;  // P(y | x = i); absent when the prior is zero
    std::optional<ProbVector> conditional_j;
    double error = 0.0;  // exact binary MAP error of the restricted test
};

PairwiseRestriction pairwise_restriction(const JointPMF& joint, std::size_t i, std::size_t j);

}  // namespace renyi
