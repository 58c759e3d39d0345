#include "renyi/error_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "renyi/decision.hpp"
#include "renyi/numeric.hpp"

namespace renyi {

EntropyValue fano_upper_H(double eps, std::size_t m, Order order) {
    if (m < 2) throw std::invalid_argument("fano_upper_H: need at least two hypotheses");
    double md = static_cast<double>(m);
    double cap = 1.0 - 1.0 / md;
    if (!(eps >= 0.0 && eps <= cap + 1e-12))
        throw std::invalid_argument("fano_upper_H: eps outside [0, 1-1/M]");
    eps = std::min(eps, cap);
    if (order.is(Order::Tag::zero))
        return {eps > 0.0 ? std::log(md) : 0.0, order};
    if (!order.positive())
        throw std::invalid_argument("fano_upper_H: order must be nonnegative");
    return {std::log(md) - binary_renyi_divergence(eps, cap, order), order};
}

double fano_lb_error(double h_nats, std::size_t m, Order order) {
    if (m < 2) throw std::invalid_argument("fano_lb_error: need at least two hypotheses");
    if (!order.positive())
        throw std::invalid_argument("fano_lb_error: order must be positive");
    double md = static_cast<double>(m);
    if (!(h_nats >= 0.0 && h_nats <= std::log(md) + 1e-12))
        throw std::invalid_argument("fano_lb_error: entropy outside [0, log M]");
    if (h_nats <= 0.0) return 0.0;
    // the bound is continuous and increasing in eps on [0, 1-1/M]
    auto bound = [&](double eps) { return fano_upper_H(eps, m, order).nats; };
    return bisect_increasing(bound, std::min(h_nats, std::log(md)), 0.0, 1.0 - 1.0 / md, 1e-12,
                             200);
}

double lb_error_half(const JointPMF& joint) {
    std::size_t m = joint.hypotheses();
    if (m < 2) throw std::invalid_argument("lb_error_half: need at least two hypotheses");
    double md = static_cast<double>(m);
    double xi = md * std::exp(-arimoto_conditional(joint, Order::of(0.5)).nats);
    xi = std::clamp(xi, 1.0, md);
    double root = std::sqrt((xi - 1.0) / (md - 1.0));
    return (1.0 - 1.0 / md) / xi * (1.0 - root) * (1.0 - root);
}

double lb_error_quadratic(const JointPMF& joint) {
    std::size_t m = joint.hypotheses();
    if (m < 2) throw std::invalid_argument("lb_error_quadratic: need at least two hypotheses");
    double md = static_cast<double>(m);
    double xi = md * std::exp(-arimoto_conditional(joint, Order::of(2.0)).nats);
    xi = std::clamp(xi, 1.0, md);
    return (1.0 - 1.0 / md) * (1.0 - std::sqrt((xi - 1.0) / (md - 1.0)));
}

double lb_error_negative_alpha(const JointPMF& joint, double alpha, std::size_t list_size) {
    if (!(alpha < 0.0)) throw std::invalid_argument("lb_error_negative_alpha: order must be negative");
    std::size_t m = joint.hypotheses();
    if (list_size < 1 || list_size >= m)
        throw std::invalid_argument("lb_error_negative_alpha: list size outside [1, M-1]");
    double h = arimoto_conditional(joint, Order::of(alpha)).nats;
    double rest = std::log(static_cast<double>(m - list_size));
    return std::exp((1.0 - alpha) / alpha * (h - rest));
}

BoundReport lb_error_negative_alpha_optimized(const JointPMF& joint, std::size_t list_size) {
    auto value_at = [&](double a) { return lb_error_negative_alpha(joint, a, list_size); };
    double best_a = -1.0, best_v = -1.0;
    for (double a = -50.0; a <= -0.01 + 1e-12; a += 0.01) {
        double v = value_at(a);
        if (v > best_v) {
            best_v = v;
            best_a = a;
        }
    }
    double lo = std::max(-50.0, best_a - 0.01);
    double hi = std::min(-0.01, best_a + 0.01);
    auto refined = golden_section_max(value_at, lo, hi, 1e-10);
    BoundReport r;
    r.name = "lb-negative-order";
    r.value = refined.value;
    r.order = Order::of(refined.arg);
    r.inner_arg = refined.arg;
    return r;
}

double lb_error_revholder(const JointPMF& joint, double alpha, std::size_t list_size) {
    if (!(alpha > 1.0)) throw std::invalid_argument("lb_error_revholder: order must exceed one");
    std::size_t m = joint.hypotheses();
    if (list_size < 1 || list_size > m)
        throw std::invalid_argument("lb_error_revholder: list size outside [1, M]");
    double h = arimoto_conditional(joint, Order::of(alpha)).nats;
    return 1.0 - std::exp((1.0 - alpha) / alpha * (h - std::log(static_cast<double>(list_size))));
}

EntropyValue list_fano_upper(double miss_prob, std::size_t m, std::size_t list_size, Order order) {
    if (m < 2 || list_size < 1 || list_size > m)
        throw std::invalid_argument("list_fano_upper: bad alphabet/list sizes");
    double md = static_cast<double>(m);
    double cap = 1.0 - static_cast<double>(list_size) / md;
    if (!(miss_prob >= 0.0 && miss_prob <= cap + 1e-12))
        throw std::invalid_argument("list_fano_upper: miss probability outside [0, 1-L/M]");
    miss_prob = std::min(miss_prob, cap);
    if (!order.positive())
        throw std::invalid_argument("list_fano_upper: order must be positive");
    return {std::log(md) - binary_renyi_divergence(miss_prob, cap, order), order};
}

namespace {

// segment index: eps in [1-1/k, 1-1/(k+1))
long long segment_of(double eps) { return nudged_floor(1.0 / (1.0 - eps)); }

double g_alpha(double eps, double alpha) {
    double k = static_cast<double>(segment_of(eps));
    double ka = std::pow(k, 1.0 / alpha);
    double k1a = std::pow(k + 1.0, 1.0 / alpha);
    return (k * k1a - ka * (k + 1.0)) * eps + ka * k - (k - 1.0) * k1a;
}

// piecewise-linear Shannon-limit form of the same bound
double phi(double eps) {
    double k = static_cast<double>(segment_of(eps));
    return eps * k * (k + 1.0) * std::log((k + 1.0) / k) + (1.0 - k * k) * std::log(k + 1.0) +
           k * k * std::log(k);
}

}  // namespace

EntropyValue lb_H_from_error(double eps, Order order) {
    if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("lb_H_from_error: eps outside [0,1)");
    switch (order.tag()) {
        case Order::Tag::one:
            return {phi(eps), order};
        case Order::Tag::pos_inf:
            return {std::log(1.0 / (1.0 - eps)), order};
        case Order::Tag::zero:
        case Order::Tag::neg_inf:
            throw std::invalid_argument("lb_H_from_error: order must be positive");
        case Order::Tag::finite:
            break;
    }
    double a = order.alpha();
    if (a <= 0.0) throw std::invalid_argument("lb_H_from_error: order must be positive");
    return {a / (1.0 - a) * std::log(g_alpha(eps, a)), order};
}

double lb_H_from_error_weak(double eps) {
    if (!(eps >= 0.0 && eps < 1.0))
        throw std::invalid_argument("lb_H_from_error_weak: eps outside [0,1)");
    return std::log(1.0 / (1.0 - eps));
}

double ub_error_from_H(double h_nats, Order order) {
    if (!(h_nats >= 0.0)) throw std::invalid_argument("ub_error_from_H: negative entropy");
    long long k = nudged_floor(std::exp(h_nats));
    double kd = static_cast<double>(k);
    switch (order.tag()) {
        case Order::Tag::one:
            return (h_nats + (kd * kd - 1.0) * std::log(kd + 1.0) - kd * kd * std::log(kd)) /
                   (kd * (kd + 1.0) * std::log((kd + 1.0) / kd));
        case Order::Tag::pos_inf:
            return 1.0 - std::exp(-h_nats);
        case Order::Tag::zero:
        case Order::Tag::neg_inf:
            throw std::invalid_argument("ub_error_from_H: order must be positive");
        case Order::Tag::finite:
            break;
    }
    double a = order.alpha();
    if (a <= 0.0) throw std::invalid_argument("ub_error_from_H: order must be positive");
    double ka = std::pow(kd, 1.0 / a);
    double k1a = std::pow(kd + 1.0, 1.0 / a);
    double num = std::exp((1.0 - a) / a * h_nats) - ka * kd + (kd - 1.0) * k1a;
    double den = kd * k1a - ka * (kd + 1.0);
    return num / den;
}

double bhattacharyya_coefficient(const JointPMF& joint) {
    if (joint.hypotheses() != 2)
        throw std::invalid_argument("bhattacharyya_coefficient: needs exactly two hypotheses");
    auto prior = joint.prior();
    if (prior[0] <= 0.0 || prior[1] <= 0.0)
        throw std::domain_error("bhattacharyya_coefficient: a hypothesis has zero prior");
    double rho = 0.0;
    for (std::size_t y = 0; y < joint.observations(); ++y)
        rho += std::sqrt((joint(0, y) / prior[0]) * (joint(1, y) / prior[1]));
    return rho;
}

JointPMF fano_equality_joint(std::size_t m, double eps) {
    if (m < 2) throw std::invalid_argument("fano_equality_joint: need at least two hypotheses");
    double cap = 1.0 - 1.0 / static_cast<double>(m);
    if (!(eps >= 0.0 && eps <= cap))
        throw std::invalid_argument("fano_equality_joint: eps outside [0, 1-1/M]");
    // uniform observation, MAP decision = the diagonal
    std::vector<std::vector<double>> rows(m, std::vector<double>(m, eps / (m - 1.0)));
    for (std::size_t y = 0; y < m; ++y) rows[y][y] = 1.0 - eps;
    return JointPMF::from_matrix(std::move(rows), true);
}

JointPMF list_fano_equality_joint(std::size_t m, std::size_t list_size, double miss_prob) {
    if (m < 2 || list_size < 1 || list_size >= m)
        throw std::invalid_argument("list_fano_equality_joint: bad sizes");
    double cap = 1.0 - static_cast<double>(list_size) / static_cast<double>(m);
    if (!(miss_prob >= 0.0 && miss_prob <= cap))
        throw std::invalid_argument("list_fano_equality_joint: miss probability outside [0, 1-L/M]");
    // list for observation y is {y, y+1, ..., y+L-1} (mod M), uniform observation
    std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
    for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t x = 0; x < m; ++x) {
            std::size_t offset = (x + m - y) % m;
            rows[x][y] = offset < list_size ? (1.0 - miss_prob) / static_cast<double>(list_size)
                                            : miss_prob / static_cast<double>(m - list_size);
        }
    }
    return JointPMF::from_matrix(std::move(rows), true);
}

BoundReport fano_lb_report(const JointPMF& joint, Order order) {
    BoundReport r;
    r.name = "lb-fano-implicit";
    r.order = order;
    double h = arimoto_conditional(joint, order).nats;
    r.value = fano_lb_error(h, joint.hypotheses(), order);
    return r;
}

BoundReport revholder_report(const JointPMF& joint, double alpha, std::size_t list_size) {
    BoundReport r;
    r.name = "lb-closed-form";
    r.order = Order::of(alpha);
    double v = lb_error_revholder(joint, alpha, list_size);
    if (v < 0.0) {
        r.value = 0.0;
        r.domain_note = "vacuous: clamped from " + std::to_string(v);
    } else {
        r.value = v;
    }
    return r;
}

BoundReport ub_from_H_report(const JointPMF& joint, Order order) {
    BoundReport r;
    r.name = "ub-from-entropy";
    r.order = order;
    double h = arimoto_conditional(joint, order).nats;
    double v = ub_error_from_H(h, order);
    double cap = 1.0 - 1.0 / static_cast<double>(joint.hypotheses());
    if (v > cap) {
        r.value = cap;
        r.domain_note = "clamped to 1-1/M from " + std::to_string(v);
    } else {
        r.value = v;
    }
    return r;
}

}  // namespace renyi
