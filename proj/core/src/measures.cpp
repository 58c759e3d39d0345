#include "renyi/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "renyi/numeric.hpp"

namespace renyi {

namespace {

// log of sum_i p_i^alpha over the support, in the log domain
double log_power_sum(std::span<const double> p, double alpha) {
    std::vector<double> terms;
    terms.reserve(p.size());
    for (double x : p)
        if (x > 0.0) terms.push_back(alpha * std::log(x));
    return log_sum_exp(terms);
}

double shannon_entropy(std::span<const double> p) {
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log(x);
    return h;
}

void require_positive_posteriors(const JointPMF& joint) {
    for (std::size_t y = 0; y < joint.observations(); ++y) {
        if (joint.observation_mass(y) <= 0.0) continue;
        for (std::size_t x = 0; x < joint.hypotheses(); ++x)
            if (joint(x, y) <= 0.0)
                throw std::domain_error(
                    "arimoto_conditional: order <= 0 requires strictly positive posteriors");
    }
}

}  // namespace

EntropyValue renyi_entropy(const ProbVector& p, Order order) {
    switch (order.tag()) {
        case Order::Tag::zero:
            return {std::log(static_cast<double>(p.support_size())), order};
        case Order::Tag::one:
            return {shannon_entropy(p.masses()), order};
        case Order::Tag::pos_inf:
            return {-std::log(p.p_max()), order};
        case Order::Tag::neg_inf:
            return {-std::log(p.p_min()), order};
        case Order::Tag::finite:
            break;
    }
    double a = order.alpha();
    return {log_power_sum(p.masses(), a) / (1.0 - a), order};
}

EntropyValue binary_renyi_entropy(double p, Order order) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binary_renyi_entropy: p outside [0,1]");
    return renyi_entropy(ProbVector::binary(p), order);
}

EntropyValue arimoto_conditional(const JointPMF& joint, Order order) {
    if (!order.positive()) require_positive_posteriors(joint);
    switch (order.tag()) {
        case Order::Tag::one: {
            // H(X|Y) = sum_y sum_x P(x,y) log(P_Y(y)/P(x,y))
            double h = 0.0;
            for (std::size_t y = 0; y < joint.observations(); ++y) {
                double py = joint.observation_mass(y);
                if (py <= 0.0) continue;
                for (std::size_t x = 0; x < joint.hypotheses(); ++x) {
                    double pxy = joint(x, y);
                    if (pxy > 0.0) h += pxy * std::log(py / pxy);
                }
            }
            return {h, order};
        }
        case Order::Tag::pos_inf: {
            double kept = 0.0;
            for (std::size_t y = 0; y < joint.observations(); ++y) {
                double best = 0.0;
                for (std::size_t x = 0; x < joint.hypotheses(); ++x)
                    best = std::max(best, joint(x, y));
                kept += best;
            }
            return {-std::log(kept), order};
        }
        case Order::Tag::neg_inf: {
            // reciprocal of E[min_x P(x|Y)] over observations with positive mass
            double s = 0.0;
            for (std::size_t y = 0; y < joint.observations(); ++y) {
                if (joint.observation_mass(y) <= 0.0) continue;
                double worst = kInfinity;
                for (std::size_t x = 0; x < joint.hypotheses(); ++x)
                    worst = std::min(worst, joint(x, y));
                s += worst;
            }
            return {-std::log(s), order};
        }
        case Order::Tag::zero: {
            std::size_t biggest = 0;
            for (std::size_t y = 0; y < joint.observations(); ++y) {
                if (joint.observation_mass(y) <= 0.0) continue;
                std::size_t supp = 0;
                for (std::size_t x = 0; x < joint.hypotheses(); ++x)
                    if (joint(x, y) > 0.0) ++supp;
                biggest = std::max(biggest, supp);
            }
            return {std::log(static_cast<double>(biggest)), order};
        }
        case Order::Tag::finite:
            break;
    }
    // (alpha/(1-alpha)) log sum_y (sum_x P(x,y)^alpha)^(1/alpha)
    double a = order.alpha();
    std::vector<double> log_norms;
    log_norms.reserve(joint.observations());
    std::vector<double> terms;
    for (std::size_t y = 0; y < joint.observations(); ++y) {
        terms.clear();
        for (std::size_t x = 0; x < joint.hypotheses(); ++x) {
            double pxy = joint(x, y);
            if (pxy > 0.0) terms.push_back(a * std::log(pxy));
        }
        if (terms.empty()) continue;  // zero-marginal observation
        log_norms.push_back(log_sum_exp(terms) / a);
    }
    double h = a / (1.0 - a) * log_sum_exp(log_norms);
    return {h, order};
}

double renyi_divergence(const ProbVector& p, const ProbVector& q, Order order) {
    if (p.size() != q.size())
        throw std::invalid_argument("renyi_divergence: alphabet size mismatch");
    switch (order.tag()) {
        case Order::Tag::zero: {
            double mass = 0.0;  // Q(supp P)
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[i] > 0.0) mass += q[i];
            return mass > 0.0 ? -std::log(mass) : kInfinity;
        }
        case Order::Tag::one: {
            double s = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (p[i] > 0.0) {
                    if (q[i] <= 0.0) return kInfinity;
                    s += p[i] * std::log(p[i] / q[i]);
                }
            }
            return s;
        }
        case Order::Tag::pos_inf: {
            double r = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (p[i] > 0.0) {
                    if (q[i] <= 0.0) return kInfinity;
                    r = std::max(r, p[i] / q[i]);
                }
            }
            return std::log(r);
        }
        case Order::Tag::neg_inf:
            throw std::invalid_argument("renyi_divergence: order -inf is not defined");
        case Order::Tag::finite:
            break;
    }
    double a = order.alpha();
    if (a < 0.0) throw std::invalid_argument("renyi_divergence: negative finite order");
    std::vector<double> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;  // terms with zero p vanish for alpha > 0
        if (q[i] <= 0.0) {
            if (a > 1.0) return kInfinity;  // absolute continuity fails
            continue;
        }
        terms.push_back(a * std::log(p[i]) + (1.0 - a) * std::log(q[i]));
    }
    if (terms.empty()) return kInfinity;  // disjoint supports
    return log_sum_exp(terms) / (a - 1.0);
}

double binary_renyi_divergence(double p, double q, Order order) {
    if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("binary_renyi_divergence: arguments outside [0,1]");
    return renyi_divergence(ProbVector::binary(p), ProbVector::binary(q), order);
}

ChernoffInformation chernoff_information(const ProbVector& p, const ProbVector& q) {
    if (p == q) return {0.0, std::nan("")};
    auto objective = [&](double a) {
        return (1.0 - a) * renyi_divergence(p, q, Order::of(a));
    };
    // the objective is continuous on (0,1); bracket away from the endpoints
    auto best = golden_section_max(objective, 1e-6, 1.0 - 1e-6, 1e-9);
    return {best.value, best.arg};
}

double gallager_e0(double rho, const ProbVector& prior, const Channel& channel) {
    if (!(rho > -1.0)) throw std::invalid_argument("gallager_e0: rho must exceed -1");
    if (prior.size() != channel.inputs())
        throw std::invalid_argument("gallager_e0: prior/channel mismatch");
    double s = 1.0 / (1.0 + rho);
    std::vector<double> terms;
    terms.reserve(channel.outputs());
    for (std::size_t y = 0; y < channel.outputs(); ++y) {
        double inner = 0.0;
        for (std::size_t x = 0; x < channel.inputs(); ++x) {
            double w = channel(x, y);
            if (prior[x] > 0.0 && w > 0.0) inner += prior[x] * std::exp(s * std::log(w));
        }
        if (inner > 0.0) terms.push_back((1.0 + rho) * std::log(inner));
    }
    return -log_sum_exp(terms);
}

double alpha_mutual_information(const ProbVector& prior, const Channel& channel, Order order) {
    switch (order.tag()) {
        case Order::Tag::one: {
            // I(X;Y) = H(Y) - H(Y|X)
            auto joint = JointPMF::from_prior_channel(prior, channel);
            double hy = renyi_entropy(joint.observation_marginal(), Order::one()).nats;
            double hyx = 0.0;
            for (std::size_t x = 0; x < channel.inputs(); ++x)
                if (prior[x] > 0.0)
                    hyx += prior[x] * shannon_entropy(channel.row(x));
            return hy - hyx;
        }
        case Order::Tag::zero:
        case Order::Tag::neg_inf:
            throw std::invalid_argument("alpha_mutual_information: order must be positive");
        case Order::Tag::pos_inf:
        case Order::Tag::finite:
            break;
    }
    double a = order.alpha();
    if (order.is(Order::Tag::pos_inf)) {
        // limit rho -> -1 of the E0 route: -log sum_y max_x over supp(P) of W(y|x)
        double s = 0.0;
        for (std::size_t y = 0; y < channel.outputs(); ++y) {
            double best = 0.0;
            for (std::size_t x = 0; x < channel.inputs(); ++x)
                if (prior[x] > 0.0) best = std::max(best, channel(x, y));
            s += best;
        }
        return std::log(s);
    }
    if (a <= 0.0) throw std::invalid_argument("alpha_mutual_information: order must be positive");
    double rho = 1.0 / a - 1.0;
    return a / (1.0 - a) * gallager_e0(rho, prior, channel);
}

ScaledDistributionGap scaled_distribution_gap(const ProbVector& prior, const Channel& channel,
                                              Order order) {
    if (!order.is_finite() || order.alpha() <= 0.0)
        throw std::invalid_argument("scaled_distribution_gap: order must be finite positive, != 1");
    double a = order.alpha();
    std::vector<double> scaled(prior.size(), 0.0);
    for (std::size_t i = 0; i < prior.size(); ++i)
        if (prior[i] > 0.0) scaled[i] = std::exp(a * std::log(prior[i]));
    auto scaled_prior = ProbVector::from_masses(std::move(scaled));
    double gap = a / (1.0 - a) * gallager_e0(1.0 / a - 1.0, scaled_prior, channel);
    return {scaled_prior, gap};
}

}  // namespace renyi
