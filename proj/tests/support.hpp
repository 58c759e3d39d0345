#pragma once

// Shared test helpers: a deterministic generator for random pmfs/joints and
// a few brute-force oracles kept independent of the library code paths.

#include <cmath>
#include <cstdint>
#include <vector>

#include "renyi/prob.hpp"

namespace testsupport {

// splitmix64; deterministic across platforms
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline renyi::ProbVector random_pmf(Rng& rng, int size, double floor_mass = 0.0) {
    std::vector<double> masses(size);
    for (double& m : masses) m = floor_mass + rng.uniform();
    return renyi::ProbVector::from_masses(std::move(masses));
}

// strictly positive cells when floor_mass > 0
inline renyi::JointPMF random_joint(Rng& rng, int m, int n, double floor_mass = 0.0) {
    std::vector<std::vector<double>> rows(m, std::vector<double>(n));
    for (auto& row : rows)
        for (double& cell : row) cell = floor_mass + rng.uniform();
    return renyi::JointPMF::from_matrix(std::move(rows), true);
}

// exact list-MAP miss probability by enumerating every size-L subset per column
inline double list_error_by_subset_enumeration(const renyi::JointPMF& joint,
                                               std::size_t list_size) {
    std::size_t m = joint.hypotheses();
    double kept = 0.0;
    for (std::size_t y = 0; y < joint.observations(); ++y) {
        double best = 0.0;
        // iterate over all bitmasks with popcount == list_size
        for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) != list_size) continue;
            double s = 0.0;
            for (std::size_t x = 0; x < m; ++x)
                if (mask & (1ULL << x)) s += joint(x, y);
            if (s > best) best = s;
        }
        kept += best;
    }
    return 1.0 - kept;
}

// long-double direct power sum (1/(1-a)) log sum p^a
inline long double renyi_entropy_direct(const renyi::ProbVector& p, long double a) {
    long double s = 0.0L;
    for (double x : p.masses())
        if (x > 0.0) s += powl(static_cast<long double>(x), a);
    return logl(s) / (1.0L - a);
}

inline renyi::JointPMF example_joint_1() {
    return renyi::JointPMF::from_matrix({{8, 1, 6}, {3, 5, 7}, {4, 9, 2}}, true);
}

inline renyi::JointPMF example_joint_2() {
    return renyi::JointPMF::from_matrix(
        {{10, 38, 10, 26}, {32, 20, 44, 20}, {10, 29, 10, 35}, {41, 20, 35, 20}}, true);
}

inline renyi::JointPMF example_joint_3() {
    return renyi::JointPMF::from_matrix({{0.1906, 0.3737}, {0.4319, 0.0038}}, true);
}

}  // namespace testsupport
