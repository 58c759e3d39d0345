#include "renyi/entropy_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "renyi/numeric.hpp"

namespace renyi {

namespace {

void check_bound_order(Order order) {
    if (order.is(Order::Tag::neg_inf) || (order.is_finite() && order.alpha() < 0.0))
        throw std::invalid_argument("entropy bound: order must be nonnegative");
}

}  // namespace

EntropyValue ub_via_partition(const ProbVector& p, std::span<const int> labels, Order order) {
    check_bound_order(order);
    if (labels.size() != p.size())
        throw std::invalid_argument("ub_via_partition: label vector size mismatch");
    std::map<int, double> class_mass;
    std::map<int, std::size_t> class_size;
    for (std::size_t i = 0; i < p.size(); ++i) {
        class_mass[labels[i]] += p[i];
        class_size[labels[i]] += 1;
    }
    switch (order.tag()) {
        case Order::Tag::zero: {
            // classes carrying mass contribute their full cardinality
            double total = 0.0;
            for (auto& [c, mass] : class_mass)
                if (mass > 0.0) total += static_cast<double>(class_size[c]);
            return {std::log(total), order};
        }
        case Order::Tag::one: {
            // grouping form: H(f(X)) + E[log L_{f(X)}]
            double h = 0.0;
            for (auto& [c, mass] : class_mass)
                if (mass > 0.0)
                    h += mass * (std::log(static_cast<double>(class_size[c])) - std::log(mass));
            return {h, order};
        }
        case Order::Tag::pos_inf: {
            // min over classes of log(L_y / P[f(X)=y])
            double best = kInfinity;
            for (auto& [c, mass] : class_mass)
                if (mass > 0.0)
                    best = std::min(best, std::log(static_cast<double>(class_size[c]) / mass));
            return {best, order};
        }
        default:
            break;
    }
    double a = order.alpha();
    std::vector<double> terms;
    for (auto& [c, mass] : class_mass)
        if (mass > 0.0)
            terms.push_back((1.0 - a) * std::log(static_cast<double>(class_size[c])) +
                            a * std::log(mass));
    return {log_sum_exp(terms) / (1.0 - a), order};
}

EntropyValue ub_via_subset(const ProbVector& p, std::span<const std::size_t> subset, Order order) {
    check_bound_order(order);
    if (subset.empty() || subset.size() >= p.size())
        throw std::invalid_argument("ub_via_subset: need a nonempty proper subset");
    std::vector<bool> in(p.size(), false);
    for (std::size_t i : subset) {
        if (i >= p.size() || in[i]) throw std::invalid_argument("ub_via_subset: bad subset");
        in[i] = true;
    }
    double mass = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (in[i]) mass += p[i];
    double m = static_cast<double>(p.size());
    double frac = static_cast<double>(subset.size()) / m;
    return {std::log(m) - binary_renyi_divergence(mass, frac, order), order};
}

SingleMassBound ub_via_single_mass(const ProbVector& p, Order order) {
    check_bound_order(order);
    double m = static_cast<double>(p.size());
    SingleMassBound best{{kInfinity, order}, 0};
    for (std::size_t x = 0; x < p.size(); ++x) {
        double v = std::log(m) - binary_renyi_divergence(p[x], 1.0 / m, order);
        if (v < best.bound.nats) {
            best.bound.nats = v;
            best.arg_x = x;
        }
    }
    return best;
}

EntropyValue ub_via_pmax(double p_max, std::size_t m, Order order) {
    check_bound_order(order);
    double md = static_cast<double>(m);
    if (!(p_max >= 1.0 / md - 1e-15 && p_max <= 1.0))
        throw std::invalid_argument("ub_via_pmax: p_max outside [1/M, 1]");
    return {std::log(md) - binary_renyi_divergence(std::min(p_max, 1.0), 1.0 / md, order), order};
}

EntropyValue lb_schur(double p_max, Order order) {
    if (!(p_max > 0.0 && p_max <= 1.0))
        throw std::invalid_argument("lb_schur: p_max outside (0,1]");
    check_bound_order(order);
    long long k = nudged_floor(1.0 / p_max);
    double rem = std::max(0.0, 1.0 - p_max * static_cast<double>(k));
    if (rem < 1e-12) rem = 0.0;
    switch (order.tag()) {
        case Order::Tag::zero:
            return {std::log(static_cast<double>(k + (rem > 0.0 ? 1 : 0))), order};
        case Order::Tag::one: {
            double t = p_max * static_cast<double>(k);
            return {binary_entropy(t) + t * std::log(static_cast<double>(k)), order};
        }
        case Order::Tag::pos_inf:
            return {-std::log(p_max), order};
        default:
            break;
    }
    double a = order.alpha();
    double lead = std::log(static_cast<double>(k)) + a * std::log(p_max);
    double tail = rem > 0.0 ? a * std::log(rem) : kNegInfinity;
    return {log_sum_exp2(lead, tail) / (1.0 - a), order};
}

ProbVector schur_extremal_distribution(double p_max) {
    if (!(p_max > 0.0 && p_max <= 1.0))
        throw std::invalid_argument("schur_extremal_distribution: p_max outside (0,1]");
    long long k = nudged_floor(1.0 / p_max);
    double rem = std::max(0.0, 1.0 - p_max * static_cast<double>(k));
    std::vector<double> masses(static_cast<std::size_t>(k), p_max);
    if (rem >= 1e-12) masses.push_back(rem);
    return ProbVector::from_masses(std::move(masses));
}

ProbVector pmax_extremal_distribution(double p_max, std::size_t m) {
    if (m < 1) throw std::invalid_argument("pmax_extremal_distribution: empty alphabet");
    double md = static_cast<double>(m);
    if (!(p_max >= 1.0 / md - 1e-15 && p_max <= 1.0))
        throw std::invalid_argument("pmax_extremal_distribution: p_max outside [1/M, 1]");
    std::vector<double> masses(m, m > 1 ? (1.0 - p_max) / (md - 1.0) : 0.0);
    masses[0] = p_max;
    return ProbVector::from_masses(std::move(masses));
}

}  // namespace renyi
