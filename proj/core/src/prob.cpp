#include "renyi/prob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace renyi {

namespace {

double checked_sum(std::span<const double> v, const char* what) {
    double s = 0.0;
    for (double x : v) {
        if (!(x >= 0.0) || std::isnan(x))
            throw std::invalid_argument(std::string(what) + ": negative or nan mass");
        s += x;
    }
    if (s <= 0.0) throw std::invalid_argument(std::string(what) + ": all masses zero");
    return s;
}

}  // namespace

ProbVector::ProbVector(std::vector<double> m) : masses_(std::move(m)) {
    p_min_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        double x = masses_[i];
        if (x > 0.0) {
            ++support_;
            p_min_ = std::min(p_min_, x);
        }
        if (x > p_max_) {
            p_max_ = x;
            mode_ = i;
        }
    }
}

ProbVector ProbVector::from_masses(std::vector<double> masses, bool normalize) {
    if (masses.empty()) throw std::invalid_argument("ProbVector: empty");
    double s = checked_sum(masses, "ProbVector");
    if (!normalize && std::fabs(s - 1.0) > 1e-12)
        throw std::invalid_argument("ProbVector: masses do not sum to one");
    for (double& x : masses) x /= s;
    return ProbVector(std::move(masses));
}

ProbVector ProbVector::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ProbVector::uniform: n == 0");
    return ProbVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbVector ProbVector::binary(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ProbVector::binary: p outside [0,1]");
    return ProbVector(std::vector<double>{p, 1.0 - p});
}

Channel Channel::from_rows(std::vector<std::vector<double>> rows, bool normalize) {
    if (rows.empty()) throw std::invalid_argument("Channel: no rows");
    std::size_t n = rows.front().size();
    if (n == 0) throw std::invalid_argument("Channel: empty row");
    for (auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("Channel: ragged rows");
        double s = checked_sum(r, "Channel");
        if (!normalize && std::fabs(s - 1.0) > 1e-12)
            throw std::invalid_argument("Channel: row does not sum to one");
        for (double& x : r) x /= s;
    }
    return Channel(std::move(rows));
}

Channel Channel::bsc(double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("Channel::bsc: delta outside [0,1]");
    return Channel({{1.0 - delta, delta}, {delta, 1.0 - delta}});
}

Channel Channel::identity(std::size_t n) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1.0;
    return Channel(std::move(rows));
}

bool Channel::is_binary_input_symmetric() const {
    if (inputs() != 2) return false;
    const auto& r0 = rows_[0];
    const auto& r1 = rows_[1];
    std::size_t n = r0.size();
    std::vector<std::size_t> match(n, n);
    std::vector<bool> used(n, false);
    const double tol = 1e-12;
    for (std::size_t y = 0; y < n; ++y) {
        if (match[y] != n) continue;
        bool found = false;
        for (std::size_t z = 0; z < n && !found; ++z) {
            if (used[z]) continue;
            if (std::fabs(r0[y] - r1[z]) <= tol && std::fabs(r1[y] - r0[z]) <= tol) {
                match[y] = z;
                match[z] = y;
                used[y] = used[z] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

JointPMF JointPMF::from_matrix(std::vector<std::vector<double>> rows, bool normalize) {
    if (rows.empty()) throw std::invalid_argument("JointPMF: no rows");
    std::size_t n = rows.front().size();
    if (n == 0) throw std::invalid_argument("JointPMF: empty row");
    std::vector<double> cells;
    cells.reserve(rows.size() * n);
    for (auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("JointPMF: ragged rows");
        cells.insert(cells.end(), r.begin(), r.end());
    }
    double s = checked_sum(cells, "JointPMF");
    if (!normalize && std::fabs(s - 1.0) > 1e-12)
        throw std::invalid_argument("JointPMF: cells do not sum to one");
    for (double& x : cells) x /= s;
    return JointPMF(std::move(cells), rows.size(), n);
}

JointPMF JointPMF::from_prior_channel(const ProbVector& prior, const Channel& channel) {
    if (prior.size() != channel.inputs())
        throw std::invalid_argument("JointPMF: prior size does not match channel inputs");
    std::size_t m = channel.inputs(), n = channel.outputs();
    std::vector<double> cells(m * n);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < n; ++y) cells[x * n + y] = prior[x] * channel(x, y);
    return JointPMF(std::move(cells), m, n);
}

ProbVector JointPMF::prior() const {
    std::vector<double> px(m_, 0.0);
    for (std::size_t x = 0; x < m_; ++x)
        for (std::size_t y = 0; y < n_; ++y) px[x] += p_[x * n_ + y];
    return ProbVector::from_masses(std::move(px));
}

ProbVector JointPMF::observation_marginal() const {
    std::vector<double> py(n_, 0.0);
    for (std::size_t x = 0; x < m_; ++x)
        for (std::size_t y = 0; y < n_; ++y) py[y] += p_[x * n_ + y];
    return ProbVector::from_masses(std::move(py));
}

double JointPMF::observation_mass(std::size_t y) const {
    double s = 0.0;
    for (std::size_t x = 0; x < m_; ++x) s += p_[x * n_ + y];
    return s;
}

ProbVector JointPMF::posterior(std::size_t y) const {
    double py = observation_mass(y);
    if (py <= 0.0) throw std::domain_error("JointPMF::posterior: zero-probability observation");
    std::vector<double> col(m_);
    for (std::size_t x = 0; x < m_; ++x) col[x] = p_[x * n_ + y] / py;
    return ProbVector::from_masses(std::move(col));
}

bool JointPMF::strictly_positive() const {
    for (double x : p_)
        if (x <= 0.0) return false;
    return true;
}

std::vector<double> JointPMF::column(std::size_t y) const {
    std::vector<double> col(m_);
    for (std::size_t x = 0; x < m_; ++x) col[x] = p_[x * n_ + y];
    return col;
}

}  // namespace renyi
