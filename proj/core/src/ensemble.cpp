#include "renyi/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "renyi/decision.hpp"
#include "renyi/numeric.hpp"

namespace renyi {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_budget(const EnsembleConfig& cfg) {
    if (cfg.blocklength < 1 || cfg.blocklength > 12)
        throw BudgetError("ensemble: blocklength outside [1, 12]");
    if (cfg.codebook_size < 1 || cfg.codebook_size > 64)
        throw BudgetError("ensemble: codebook size outside [1, 64]");
    double outputs = std::pow(static_cast<double>(cfg.channel.outputs()), cfg.blocklength);
    if (outputs > static_cast<double>(1 << 20))
        throw BudgetError("ensemble: output enumeration exceeds 2^20 cells");
    if (outputs * cfg.codebook_size > static_cast<double>(1ULL << 22))
        throw BudgetError("ensemble: joint enumeration exceeds 2^22 cells");
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(mix64(seed) ^ mix64(trial * 0x632be59bd9b4e019ULL + 0x100000001b3ULL)) {}

double TrialRng::next_uniform() {
    state_ = mix64(state_);
    return static_cast<double>(state_ >> 11) * 0x1.0p-53;
}

Codebook sample_codebook(const EnsembleConfig& cfg, int trial) {
    check_budget(cfg);
    if (cfg.prior.size() != cfg.channel.inputs())
        throw std::invalid_argument("sample_codebook: prior/channel mismatch");
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(trial));
    Codebook cb;
    cb.blocklength = cfg.blocklength;
    cb.words.resize(cfg.codebook_size);
    for (auto& word : cb.words) {
        word.resize(cfg.blocklength);
        for (int& letter : word) {
            double u = rng.next_uniform();
            double acc = 0.0;
            int x = static_cast<int>(cfg.prior.size()) - 1;
            for (std::size_t i = 0; i < cfg.prior.size(); ++i) {
                acc += cfg.prior[i];
                if (u < acc) {
                    x = static_cast<int>(i);
                    break;
                }
            }
            letter = x;
        }
    }
    return cb;
}

JointPMF code_joint(const Codebook& codebook, const Channel& channel) {
    int n = codebook.blocklength;
    std::size_t m = codebook.words.size();
    std::size_t ny = channel.outputs();
    double cells = std::pow(static_cast<double>(ny), n);
    if (cells > static_cast<double>(1 << 20) ||
        cells * static_cast<double>(m) > static_cast<double>(1ULL << 22))
        throw BudgetError("code_joint: enumeration exceeds the budget");
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= ny;

    std::vector<std::vector<double>> rows(m, std::vector<double>(total));
    std::vector<int> y(n, 0);
    for (std::size_t col = 0; col < total; ++col) {
        for (std::size_t msg = 0; msg < m; ++msg) {
            double p = 1.0 / static_cast<double>(m);
            const auto& word = codebook.words[msg];
            for (int i = 0; i < n; ++i) p *= channel(word[i], y[i]);
            rows[msg][col] = p;
        }
        for (int i = 0; i < n; ++i) {  // odometer over output blocks
            if (++y[i] < static_cast<int>(ny)) break;
            y[i] = 0;
        }
    }
    return JointPMF::from_matrix(std::move(rows), true);
}

EntropyValue code_conditional_entropy(const Codebook& codebook, const Channel& channel,
                                      Order order) {
    return arimoto_conditional(code_joint(codebook, channel), order);
}

EnsembleResult ensemble_average(const EnsembleConfig& cfg) {
    check_budget(cfg);
    if (cfg.trials < 1) throw std::invalid_argument("ensemble_average: trials < 1");
    std::vector<std::vector<double>> samples(cfg.orders.size());
    double err_sum = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
        auto joint = code_joint(sample_codebook(cfg, t), cfg.channel);
        for (std::size_t k = 0; k < cfg.orders.size(); ++k)
            samples[k].push_back(arimoto_conditional(joint, cfg.orders[k]).nats);
        err_sum += map_error(joint);
    }
    EnsembleResult out;
    out.mean_map_error = err_sum / cfg.trials;
    for (std::size_t k = 0; k < cfg.orders.size(); ++k) {
        EnsembleMoments m;
        m.order = cfg.orders[k];
        double s = 0.0;
        for (double v : samples[k]) s += v;
        m.mean = s / cfg.trials;
        double var = 0.0;
        for (double v : samples[k]) var += (v - m.mean) * (v - m.mean);
        m.standard_error =
            cfg.trials > 1 ? std::sqrt(var / (cfg.trials - 1) / cfg.trials) : 0.0;
        out.per_order.push_back(m);
    }
    return out;
}

ExponentFit exponent_fit(const EnsembleConfig& base, const std::vector<int>& blocklengths,
                         RateNats rate, Order order) {
    if (blocklengths.size() < 3)
        throw std::invalid_argument("exponent_fit: need at least three blocklengths");
    ExponentFit fit;

    // per-trial equivocation samples for every blocklength
    std::vector<std::vector<double>> samples(blocklengths.size());
    for (std::size_t i = 0; i < blocklengths.size(); ++i) {
        EnsembleConfig cfg = base;
        cfg.blocklength = blocklengths[i];
        cfg.codebook_size = std::max(
            2, static_cast<int>(std::llround(std::exp(blocklengths[i] * rate.value))));
        cfg.orders = {order};
        check_budget(cfg);
        samples[i].reserve(cfg.trials);
        for (int t = 0; t < cfg.trials; ++t) {
            auto cb = sample_codebook(cfg, t);
            samples[i].push_back(code_conditional_entropy(cb, cfg.channel, order).nats);
        }
        SweepPoint pt;
        pt.blocklength = blocklengths[i];
        pt.codebook_size = cfg.codebook_size;
        double s = 0.0;
        for (double v : samples[i]) s += v;
        pt.mean = s / cfg.trials;
        double var = 0.0;
        for (double v : samples[i]) var += (v - pt.mean) * (v - pt.mean);
        pt.standard_error = cfg.trials > 1 ? std::sqrt(var / (cfg.trials - 1) / cfg.trials) : 0.0;
        fit.points.push_back(pt);
        if (pt.mean <= 0.0) fit.saturated = true;
    }

    std::vector<double> xs(blocklengths.begin(), blocklengths.end());
    if (fit.saturated) {
        fit.slope_nats = kInfinity;
    } else {
        std::vector<double> ys;
        for (const auto& pt : fit.points) ys.push_back(-std::log(pt.mean));
        fit.slope_nats = fit_slope(xs, ys);

        // jackknife over trials: drop one trial from every blocklength at once
        int trials = base.trials;
        if (trials > 1) {
            std::vector<double> jack;
            jack.reserve(trials);
            for (int t = 0; t < trials; ++t) {
                std::vector<double> ys_t;
                bool bad = false;
                for (std::size_t i = 0; i < samples.size(); ++i) {
                    double mean_t =
                        (fit.points[i].mean * trials - samples[i][t]) / (trials - 1);
                    if (mean_t <= 0.0) {
                        bad = true;
                        break;
                    }
                    ys_t.push_back(-std::log(mean_t));
                }
                if (!bad) jack.push_back(fit_slope(xs, ys_t));
            }
            if (jack.size() > 1) {
                double mean_j = 0.0;
                for (double v : jack) mean_j += v;
                mean_j /= static_cast<double>(jack.size());
                double var = 0.0;
                for (double v : jack) var += (v - mean_j) * (v - mean_j);
                double k = static_cast<double>(jack.size());
                fit.slope_standard_error = std::sqrt((k - 1.0) / k * var);
            }
        }
    }

    // decay-rate reference lines at the configured rate
    double er = random_coding_exponent(rate, base.prior, base.channel).value;
    if (order.positive() && order.is_finite() && order.alpha() < 1.0) {
        double a = order.alpha();
        fit.floor_nats = a * er - (1.0 - a) * rate.value;
    } else {
        fit.floor_nats = er;  // orders >= 1 inherit the random-coding bound
    }
    fit.ceiling_nats = sphere_packing_exponent(rate, base.channel);
    return fit;
}

}  // namespace renyi
