#include "renyi/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace renyi {

double log_sum_exp(std::span<const double> v) {
    double m = kNegInfinity;
    for (double x : v) m = std::max(m, x);
    if (m == kNegInfinity) return kNegInfinity;
    double s = 0.0;
    for (double x : v)
        if (x != kNegInfinity) s += std::exp(x - m);
    return m + std::log(s);
}

double log_sum_exp2(double a, double b) {
    const double v[2] = {a, b};
    return log_sum_exp(v);
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

double binary_kl(double p, double q) {
    if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0)
        throw std::invalid_argument("binary_kl: arguments outside [0,1]");
    double s = 0.0;
    if (p > 0.0) {
        if (q == 0.0) return kInfinity;
        s += p * std::log(p / q);
    }
    if (p < 1.0) {
        if (q == 1.0) return kInfinity;
        s += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
    }
    return s;
}

ScalarMax golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                             double xtol, int max_iter) {
    if (!(lo <= hi)) throw std::invalid_argument("golden_section_max: empty interval");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    double x = 0.5 * (a + b);
    double fx = f(x);
    // endpoints can win when the maximum sits on the boundary
    double flo = f(lo), fhi = f(hi);
    if (flo > fx) { x = lo; fx = flo; }
    if (fhi > fx) { x = hi; fx = fhi; }
    return {x, fx};
}

double bisect_increasing(const std::function<double(double)>& f, double target, double lo,
                         double hi, double xtol, int max_iter) {
    if (!(lo <= hi)) throw std::invalid_argument("bisect_increasing: empty interval");
    double a = lo, b = hi;
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        double mid = 0.5 * (a + b);
        if (f(mid) < target)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

long long nudged_floor(double x) {
    return static_cast<long long>(std::floor(x + 1e-12));
}

}  // namespace renyi
