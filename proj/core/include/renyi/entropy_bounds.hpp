#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "renyi/measures.hpp"
#include "renyi/order.hpp"
#include "renyi/prob.hpp"

namespace renyi {

/// Upper bound on H_alpha(X) from a deterministic labeling of the alphabet
/// into classes: (1/(1-alpha)) log sum_y L_y^{1-alpha} P[f(X)=y]^alpha with
/// L_y the class sizes.  Tight iff the pmf is flat on every class that
/// carries mass.  `labels[i]` is the class of symbol i.
EntropyValue ub_via_partition(const ProbVector& p, std::span<const int> labels, Order order);

/// Specialization to a binary labeling by a subset: log M - d_alpha(P[X in L] || L/M).
EntropyValue ub_via_subset(const ProbVector& p, std::span<const std::size_t> subset, Order order);

/// Single-symbol bound minimized over the pinned symbol.
struct SingleMassBound {
    EntropyValue bound;
    std::size_t arg_x = 0;  // symbol attaining the minimum
};
SingleMassBound ub_via_single_mass(const ProbVector& p, Order order);

/// Bound that pins the mode: log M - d_alpha(p_max || 1/M); requires p_max >= 1/M.
EntropyValue ub_via_pmax(double p_max, std::size_t m, Order order);

/// Sharp Schur-concavity lower bound from the maximal mass:
/// (1/(1-alpha)) log( floor(1/p_max) p_max^alpha + r^alpha ), r the remainder,
/// with 0^0 := 0 at order zero.  Attained by the flat-plus-remainder pmf.
EntropyValue lb_schur(double p_max, Order order);

/// The flat-plus-remainder pmf attaining lb_schur with equality.
ProbVector schur_extremal_distribution(double p_max);

/// Mode plus uniform rest: attains ub_via_pmax with equality.
ProbVector pmax_extremal_distribution(double p_max, std::size_t m);

}  // namespace renyi
