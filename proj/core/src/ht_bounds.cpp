#include "renyi/ht_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "renyi/decision.hpp"
#include "renyi/numeric.hpp"

namespace renyi {

namespace {

// log of inf over alpha in (0,1) of w1^alpha w0^(1-alpha) exp((alpha-1) D_alpha(m1||m0)),
// endpoints approached to 1e-6.  Returns the minimizing alpha as well.
ScalarMax log_binary_test_inf(double w0, double w1, const ProbVector& m0, const ProbVector& m1) {
    auto neg_log_objective = [&](double a) {
        double d = renyi_divergence(m1, m0, Order::of(a));
        if (d == kInfinity) return kInfinity;  // disjoint supports: objective is zero
        double lw1 = w1 > 0.0 ? std::log(w1) : kNegInfinity;
        double lw0 = w0 > 0.0 ? std::log(w0) : kNegInfinity;
        return -(a * lw1 + (1.0 - a) * lw0 + (a - 1.0) * d);
    };
    auto best = golden_section_max(neg_log_objective, 1e-6, 1.0 - 1e-6, 1e-9);
    return {best.arg, -best.value};
}

void mark_if_vacuous(BoundReport& r) {
    if (r.value > 1.0) r.domain_note = "vacuous";
}

}  // namespace

BoundReport hellman_raviv_binary(double prior0, const ProbVector& model0,
                                 const ProbVector& model1) {
    if (!(prior0 >= 0.0 && prior0 <= 1.0))
        throw std::invalid_argument("hellman_raviv_binary: prior outside [0,1]");
    if (model0.size() != model1.size())
        throw std::invalid_argument("hellman_raviv_binary: alphabet mismatch");
    auto best = log_binary_test_inf(prior0, 1.0 - prior0, model0, model1);
    BoundReport r;
    r.name = "hellman-raviv";
    r.value = std::exp(best.value);
    r.order = Order::of(best.arg);
    r.inner_arg = best.arg;
    mark_if_vacuous(r);
    return r;
}

BoundReport generalized_hellman_raviv(const JointPMF& joint) {
    std::size_t m = joint.hypotheses();
    if (m < 2) throw std::invalid_argument("generalized_hellman_raviv: need at least two hypotheses");
    auto prior = joint.prior();

    // degenerate prior: some hypothesis is certain, so the MAP error is zero
    for (std::size_t i = 0; i < m; ++i) {
        if (prior[i] >= 1.0) {
            BoundReport r;
            r.name = "generalized-hellman-raviv";
            r.value = 0.0;
            r.domain_note = "degenerate prior";
            return r;
        }
    }

    // leave-one-out mixtures over the observation alphabet
    std::size_t n = joint.observations();
    std::vector<ProbVector> mixtures;
    mixtures.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> mix(n, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            for (std::size_t y = 0; y < n; ++y) mix[y] += joint(j, y);
        }
        mixtures.push_back(ProbVector::from_masses(std::move(mix)));
    }

    BoundReport r;
    r.name = "generalized-hellman-raviv";
    r.value = kInfinity;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            if (i == k) continue;
            auto best =
                log_binary_test_inf(1.0 - prior[k], 1.0 - prior[i], mixtures[k], mixtures[i]);
            double v = std::exp(best.value);
            if (v < r.value) {
                r.value = v;
                r.order = Order::of(best.arg);
                r.inner_arg = best.arg;
            }
        }
    }
    mark_if_vacuous(r);
    return r;
}

BoundReport pairwise_sum_bound(const JointPMF& joint) {
    std::size_t m = joint.hypotheses();
    if (m < 2) throw std::invalid_argument("pairwise_sum_bound: need at least two hypotheses");
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t y = 0; y < joint.observations(); ++y)
                total += std::min(joint(i, y), joint(j, y));
    BoundReport r;
    r.name = "pairwise-sum";
    r.value = total;
    mark_if_vacuous(r);
    return r;
}

BoundReport leang_johnson_bound(const JointPMF& joint) {
    std::size_t m = joint.hypotheses();
    if (m < 2) throw std::invalid_argument("leang_johnson_bound: need at least two hypotheses");
    auto prior = joint.prior();
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (prior[i] + prior[j] > 0.0)
                worst = std::max(worst, pairwise_restriction(joint, i, j).error);
    BoundReport r;
    r.name = "leang-johnson";
    r.value = 0.5 * static_cast<double>(m) * static_cast<double>(m - 1) * worst;
    mark_if_vacuous(r);
    return r;
}

ChernoffSumBounds chernoff_sum_bound(const JointPMF& joint) {
    std::size_t m = joint.hypotheses();
    if (m < 2) throw std::invalid_argument("chernoff_sum_bound: need at least two hypotheses");
    auto prior = joint.prior();
    std::size_t n = joint.observations();

    std::vector<ProbVector> models;
    models.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (prior[i] <= 0.0)
            throw std::domain_error("chernoff_sum_bound: hypothesis with zero prior");
        std::vector<double> row(n);
        for (std::size_t y = 0; y < n; ++y) row[y] = joint(i, y) / prior[i];
        models.push_back(ProbVector::from_masses(std::move(row)));
    }

    double pair_sum = 0.0;
    double min_chernoff = kInfinity;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            auto best = log_binary_test_inf(prior[j], prior[i], models[j], models[i]);
            pair_sum += std::exp(best.value);
            min_chernoff = std::min(min_chernoff, chernoff_information(models[i], models[j]).value);
        }
    }
    double spread = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) spread += std::fabs(prior[i] - prior[j]);

    ChernoffSumBounds out;
    out.pairwise.name = "chernoff-pairwise-sum";
    out.pairwise.value = pair_sum;
    mark_if_vacuous(out.pairwise);

    double md = static_cast<double>(m);
    out.worst_pair.name = "chernoff-worst-pair";
    out.worst_pair.value = (md - 1.0) * std::exp(-min_chernoff);
    out.worst_pair.inner_arg = min_chernoff;
    mark_if_vacuous(out.worst_pair);

    out.improved.name = "chernoff-worst-pair-improved";
    out.improved.value = (0.5 * (md - 1.0) + 0.5 * spread) * std::exp(-min_chernoff);
    out.improved.inner_arg = min_chernoff;
    mark_if_vacuous(out.improved);
    return out;
}

}  // namespace renyi
