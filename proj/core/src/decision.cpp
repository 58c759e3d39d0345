#include "renyi/decision.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace renyi {

double map_error(const JointPMF& joint) {
    double kept = 0.0;
    for (std::size_t y = 0; y < joint.observations(); ++y) {
        double best = 0.0;
        for (std::size_t x = 0; x < joint.hypotheses(); ++x) best = std::max(best, joint(x, y));
        kept += best;
    }
    return 1.0 - kept;
}

double map_list_error(const JointPMF& joint, std::size_t list_size) {
    std::size_t m = joint.hypotheses();
    if (list_size < 1 || list_size > m)
        throw std::invalid_argument("map_list_error: list size out of range");
    double kept = 0.0;
    std::vector<std::size_t> idx(m);
    for (std::size_t y = 0; y < joint.observations(); ++y) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        // stable partial sort keeps the lowest index on ties
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return joint(a, y) > joint(b, y); });
        for (std::size_t k = 0; k < list_size; ++k) kept += joint(idx[k], y);
    }
    return 1.0 - kept;
}

double conditional_error_given_y(const JointPMF& joint, std::size_t y) {
    if (y >= joint.observations()) throw std::invalid_argument("conditional_error_given_y: bad index");
    double py = joint.observation_mass(y);
    if (py <= 0.0)
        throw std::domain_error("conditional_error_given_y: zero-probability observation");
    double best = 0.0;
    for (std::size_t x = 0; x < joint.hypotheses(); ++x) best = std::max(best, joint(x, y));
    return 1.0 - best / py;
}

PairwiseRestriction pairwise_restriction(const JointPMF& joint, std::size_t i, std::size_t j) {
    if (i == j || i >= joint.hypotheses() || j >= joint.hypotheses())
        throw std::invalid_argument("pairwise_restriction: bad hypothesis pair");
    double wi = 0.0, wj = 0.0;
    for (std::size_t y = 0; y < joint.observations(); ++y) {
        wi += joint(i, y);
        wj += joint(j, y);
    }
    double w = wi + wj;
    if (w <= 0.0) throw std::domain_error("pairwise_restriction: both hypotheses have zero prior");

    PairwiseRestriction r;
    r.prior_i = wi / w;
    r.prior_j = wj / w;
    if (wi > 0.0) {
        std::vector<double> ci(joint.observations());
        for (std::size_t y = 0; y < joint.observations(); ++y) ci[y] = joint(i, y) / wi;
        r.conditional_i = ProbVector::from_masses(std::move(ci));
    }
    if (wj > 0.0) {
        std::vector<double> cj(joint.observations());
        for (std::size_t y = 0; y < joint.observations(); ++y) cj[y] = joint(j, y) / wj;
        r.conditional_j = ProbVector::from_masses(std::move(cj));
    }
    double miss = 0.0;
    for (std::size_t y = 0; y < joint.observations(); ++y)
        miss += std::min(joint(i, y), joint(j, y));
    r.error = miss / w;
    return r;
}

}  // namespace renyi
