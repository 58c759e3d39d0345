#pragma once

#include "renyi/order.hpp"
#include "renyi/prob.hpp"

namespace renyi {

/// Renyi entropy of order alpha, in nats.  Zero masses are excluded from the
/// power sum, matching the smallest-nonzero-mass convention at negative
/// orders.  Tags dispatch to the closed forms: log|supp| at 0, Shannon at 1,
/// -log p_max at +inf, -log p_min at -inf.
EntropyValue renyi_entropy(const ProbVector& p, Order order);

/// Renyi entropy of the two-point pmf [p, 1-p].
EntropyValue binary_renyi_entropy(double p, Order order);

/// Arimoto's conditional Renyi entropy of the hypothesis given the
/// observation.  For orders <= 0 every posterior must be strictly positive on
/// the whole hypothesis set; a zero posterior raises std::domain_error.
EntropyValue arimoto_conditional(const JointPMF& joint, Order order);

/// Renyi divergence D_alpha(p || q) in nats.  Returns +inf where the
/// definition does (e.g. alpha > 1 without absolute continuity).
double renyi_divergence(const ProbVector& p, const ProbVector& q, Order order);

/// Divergence between the two-point pmfs [p,1-p] and [q,1-q], continuously
/// extended to the boundary of the unit square.
double binary_renyi_divergence(double p, double q, Order order);

/// sup over alpha in (0,1) of (1-alpha) D_alpha(p||q) plus the maximizing
/// order.  For p == q the value is zero and the argmax is reported as NaN.
struct ChernoffInformation {
    double value = 0.0;
    double alpha_star = 0.0;
};
ChernoffInformation chernoff_information(const ProbVector& p, const ProbVector& q);

/// Gallager's exponent function
/// E0(rho) = -log sum_y ( sum_x P(x) W(y|x)^{1/(1+rho)} )^{1+rho},  rho > -1.
double gallager_e0(double rho, const ProbVector& prior, const Channel& channel);

/// alpha-mutual information I_alpha(X;Y) in nats; Shannon MI at order one.
double alpha_mutual_information(const ProbVector& prior, const Channel& channel, Order order);

/// The normalized alpha-th power of the prior together with the entropy gap
/// H_alpha(X) - H_alpha(X|Y) it induces through E0.
struct ScaledDistributionGap {
    ProbVector scaled_prior;
    double gap_nats = 0.0;
};
ScaledDistributionGap scaled_distribution_gap(const ProbVector& prior, const Channel& channel,
                                              Order order);

}  // namespace renyi
