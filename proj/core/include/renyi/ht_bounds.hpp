#pragma once

#include "renyi/bound_report.hpp"
#include "renyi/measures.hpp"
#include "renyi/prob.hpp"

namespace renyi {

/// Binary-test upper bound on the MAP error:
/// inf over alpha in (0,1) of P1^alpha P0^(1-alpha) exp((alpha-1) D_alpha(P1||P0)).
BoundReport hellman_raviv_binary(double prior0, const ProbVector& model0, const ProbVector& model1);

/// M-ary generalization through leave-one-out mixtures, minimized over
/// ordered hypothesis pairs.  Tight when the observation is uninformative.
BoundReport generalized_hellman_raviv(const JointPMF& joint);

/// Sum over pairs of E[min of the two posteriors]; computed exactly by
/// enumeration.  Equals the prior-weighted sum of restricted binary errors.
BoundReport pairwise_sum_bound(const JointPMF& joint);

/// (M(M-1)/2) max over pairs of the restricted binary error; may exceed one.
BoundReport leang_johnson_bound(const JointPMF& joint);

/// The three divergence-based upper bounds: the pairwise infimum sum, the
/// (M-1)-scaled worst-pair Chernoff bound, and its prior-spread improvement.
struct ChernoffSumBounds {
    BoundReport pairwise;     // sum over pairs of the per-pair infimum
    BoundReport worst_pair;   // (M-1) exp(-min Chernoff information)
    BoundReport improved;     // ((M-1)/2 + spread/2) exp(-min Chernoff information)
};
ChernoffSumBounds chernoff_sum_bound(const JointPMF& joint);

}  // namespace renyi
