#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>

namespace renyi {

inline constexpr double kNegInfinity = -std::numeric_limits<double>::infinity();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// log(sum(exp(v))) with max subtraction; -inf entries are skipped.
double log_sum_exp(std::span<const double> v);

/// Two-term log-sum-exp.
double log_sum_exp2(double a, double b);

/// Binary entropy in nats, h(0) = h(1) = 0.
double binary_entropy(double p);

/// Binary relative entropy d(p||q) in nats (+inf when absolute continuity fails).
double binary_kl(double p, double q);

/// Maximize a unimodal function on [lo, hi] by golden-section search.
/// Returns the argmax to within xtol; `max_iter` bounds the bracketing loop.
struct ScalarMax {
    double arg = 0.0;
    double value = 0.0;
};
ScalarMax golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                             double xtol = 1e-9, int max_iter = 200);

/// Root of an increasing function on [lo, hi] by bisection: returns x with
/// f(x) ~ target to within xtol on x.
double bisect_increasing(const std::function<double(double)>& f, double target, double lo,
                         double hi, double xtol = 1e-12, int max_iter = 200);

/// floor(x) with a 1e-12 nudge so that exact reciprocals of integers land on
/// the integer despite floating-point representation error.
long long nudged_floor(double x);

}  // namespace renyi
