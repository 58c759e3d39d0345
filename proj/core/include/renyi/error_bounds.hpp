#pragma once

#include <cstddef>

#include "renyi/bound_report.hpp"
#include "renyi/measures.hpp"
#include "renyi/order.hpp"
#include "renyi/prob.hpp"

namespace renyi {

/// Generalized Fano bound: H_alpha(X|Y) <= log M - d_alpha(eps || 1 - 1/M)
/// for eps in [0, 1-1/M] and positive order.  Order zero follows the
/// continuous extension: 0 at eps = 0, log M otherwise.
EntropyValue fano_upper_H(double eps, std::size_t m, Order order);

/// Implicit lower bound on the MAP error: the unique eps in [0, 1-1/M] at
/// which fano_upper_H reaches the given conditional entropy (bisection to
/// 1e-12 on eps).
double fano_lb_error(double h_nats, std::size_t m, Order order);

/// Explicit lower bound from the order-1/2 conditional entropy.
double lb_error_half(const JointPMF& joint);

/// Explicit lower bound from the quadratic conditional entropy.
double lb_error_quadratic(const JointPMF& joint);

/// Negative-order lower bound on the list miss probability
/// exp( ((1-alpha)/alpha) [H_alpha(X|Y) - log(M-L)] ), alpha < 0.
/// Requires strictly positive posteriors.
double lb_error_negative_alpha(const JointPMF& joint, double alpha, std::size_t list_size = 1);

/// The negative order maximizing lb_error_negative_alpha, found by a coarse
/// grid on [-50, -0.01] refined by golden section.
BoundReport lb_error_negative_alpha_optimized(const JointPMF& joint, std::size_t list_size = 1);

/// Positive-order (alpha > 1) lower bound on the list miss probability
/// 1 - exp( ((1-alpha)/alpha) [H_alpha(X|Y) - log L] ).
double lb_error_revholder(const JointPMF& joint, double alpha, std::size_t list_size = 1);

/// List-decoding Fano bound: H_alpha(X|Y) <= log M - d_alpha(P_L || 1 - L/M).
EntropyValue list_fano_upper(double miss_prob, std::size_t m, std::size_t list_size, Order order);

/// Piecewise-linear lower bound on H_alpha(X|Y) as a function of the MAP
/// error, from the Schur-concavity of the Renyi entropy.  The weaker
/// companion bound log(1/(1-eps)) is exposed separately.
EntropyValue lb_H_from_error(double eps, Order order);
double lb_H_from_error_weak(double eps);

/// Explicit upper bound on the MAP error from H_alpha(X|Y); inverse of
/// lb_H_from_error on each linear segment.
double ub_error_from_H(double h_nats, Order order);

/// Bhattacharyya coefficient of a binary-hypothesis joint.
double bhattacharyya_coefficient(const JointPMF& joint);

/// Joint whose posteriors have the two-level shape attaining fano_upper_H
/// with equality: the MAP decision takes mass 1-eps given every observation.
JointPMF fano_equality_joint(std::size_t m, double eps);

/// Two-level joint attaining list_fano_upper with equality for list size L.
JointPMF list_fano_equality_joint(std::size_t m, std::size_t list_size, double miss_prob);

/// Report wrappers with vacuous-bound clamping for table generation.
BoundReport fano_lb_report(const JointPMF& joint, Order order);
BoundReport revholder_report(const JointPMF& joint, double alpha, std::size_t list_size = 1);
BoundReport ub_from_H_report(const JointPMF& joint, Order order);

}  // namespace renyi
