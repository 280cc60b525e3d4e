#include "leximax/sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace leximax {

Cohort sample_cohort(const MarginalVector& x, std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<Real> unif(0.0, 1.0);
    Cohort cohort;
    cohort.indicator.resize(x.x.size(), 0);
    for (std::size_t i = 0; i < x.x.size(); ++i) {
        if (unif(rng) < x.x[i]) {
            cohort.indicator[i] = 1;
            cohort.selected.push_back(i);
        }
    }
    return cohort;
}

std::vector<GroupTail> concentration_report(const Instance& inst, const MarginalVector& x,
                                            Real delta, long trials,
                                            std::uint64_t rng_seed) {
    if (delta <= 0) throw std::invalid_argument("range: delta must be > 0");
    if (trials < 1) throw std::invalid_argument("range: trials must be >= 1");
    if (x.x.size() != inst.n()) {
        throw std::invalid_argument("dimension: marginal vector does not match instance");
    }
    const std::size_t n = inst.n();
    const std::size_t m = inst.m();

    std::vector<Real> expected(m);
    for (std::size_t j = 0; j < m; ++j) expected[j] = group_utility(inst, x, j);

    std::vector<long> tail_counts(m, 0);
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<Real> unif(0.0, 1.0);
    std::vector<Real> util(m);
    for (long t = 0; t < trials; ++t) {
        std::fill(util.begin(), util.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (unif(rng) < x.x[i]) {
                for (std::size_t j = 0; j < m; ++j) util[j] += inst.values[i][j];
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (util[j] < expected[j] - delta) ++tail_counts[j];
        }
    }

    const Real bound = std::exp(-2.0 * delta * delta / static_cast<Real>(n));
    std::vector<GroupTail> report(m);
    for (std::size_t j = 0; j < m; ++j) {
        report[j].empirical_tail = static_cast<Real>(tail_counts[j]) / static_cast<Real>(trials);
        report[j].bound = bound;
    }
    return report;
}

}  // namespace leximax
