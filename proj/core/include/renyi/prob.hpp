#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace renyi {

/// Finite discrete probability mass function.  Masses are normalized once at
/// construction; afterwards the vector is immutable and |sum - 1| <= 1e-12.
class ProbVector {
public:
    /// Builds a pmf from nonnegative masses.  With `normalize` the masses may
    /// be any nonnegative weights (e.g. integer counts); without it their sum
    /// must already be within 1e-12 of one.
    static ProbVector from_masses(std::vector<double> masses, bool normalize = true);

    static ProbVector uniform(std::size_t n);

    /// Two-point pmf [p, 1-p].
    static ProbVector binary(double p);

    std::size_t size() const { return masses_.size(); }
    double operator[](std::size_t i) const { return masses_[i]; }
    std::span<const double> masses() const { return masses_; }

    double p_max() const { return p_max_; }
    /// Smallest strictly positive mass.
    double p_min() const { return p_min_; }
    std::size_t support_size() const { return support_; }
    std::size_t mode() const { return mode_; }

    bool operator==(const ProbVector& o) const { return masses_ == o.masses_; }

private:
    explicit ProbVector(std::vector<double> m);
    std::vector<double> masses_;
    double p_max_ = 0.0;
    double p_min_ = 0.0;
    std::size_t support_ = 0;
    std::size_t mode_ = 0;
};

/// DMC transition matrix P(y|x): every row is a pmf over the output alphabet.
class Channel {
public:
    static Channel from_rows(std::vector<std::vector<double>> rows, bool normalize = false);

    /// Binary symmetric channel with crossover probability delta.
    static Channel bsc(double delta);

    /// Noiseless identity channel on n symbols.
    static Channel identity(std::size_t n);

    std::size_t inputs() const { return rows_.size(); }
    std::size_t outputs() const { return rows_.empty() ? 0 : rows_.front().size(); }
    double operator()(std::size_t x, std::size_t y) const { return rows_[x][y]; }
    const std::vector<double>& row(std::size_t x) const { return rows_[x]; }

    /// True for a binary-input channel whose outputs can be paired by an
    /// involution swapping the roles of the two inputs.
    bool is_binary_input_symmetric() const;

private:
    explicit Channel(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {}
    std::vector<std::vector<double>> rows_;
};

/// Joint pmf on a finite hypothesis x observation grid (rows = hypotheses).
/// Columns with zero marginal are allowed; their posteriors are undefined and
/// every expectation over the observation skips them.
class JointPMF {
public:
    static JointPMF from_matrix(std::vector<std::vector<double>> rows, bool normalize = true);

    /// Joint induced by a prior on the inputs and a channel.
    static JointPMF from_prior_channel(const ProbVector& prior, const Channel& channel);

    std::size_t hypotheses() const { return m_; }
    std::size_t observations() const { return n_; }
    double operator()(std::size_t x, std::size_t y) const { return p_[x * n_ + y]; }

    ProbVector prior() const;            // P_X
    ProbVector observation_marginal() const;  // P_Y
    double observation_mass(std::size_t y) const;

    /// Posterior P(x|y); requires a positive observation marginal at y.
    ProbVector posterior(std::size_t y) const;

    /// True when every cell is strictly positive (so every posterior is too).
    bool strictly_positive() const;

    std::span<const double> cells() const { return p_; }
    /// Column y as a span stride view copy.
    std::vector<double> column(std::size_t y) const;

private:
    JointPMF(std::vector<double> p, std::size_t m, std::size_t n)
        : p_(std::move(p)), m_(m), n_(n) {}
    std::vector<double> p_;  // row-major m x n
    std::size_t m_ = 0, n_ = 0;
};

}  // namespace renyi
