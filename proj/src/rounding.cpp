#include "leximax/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace leximax {

namespace {
constexpr Real kSnapTol = 1e-9;
}

Cohort dependent_round(const MarginalVector& x, std::uint64_t rng_seed) {
    const std::size_t n = x.x.size();
    std::vector<Real> w = x.x;
    Real sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] < kSnapTol) w[i] = 0.0;
        if (w[i] > 1.0 - kSnapTol) w[i] = 1.0;
        sum += w[i];
    }
    const Real rounded_sum = std::round(sum);
    if (std::abs(sum - rounded_sum) > 1e-9 * std::max<Real>(1.0, rounded_sum)) {
        throw std::invalid_argument("range: sum(x) = " + std::to_string(sum) +
                                    " is not integral");
    }

    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<Real> unif(0.0, 1.0);

    // Lowest-index fractional pair each step; each step makes at least one
    // of the two coordinates integral.
    for (;;) {
        std::size_t i = n, j = n;
        for (std::size_t t = 0; t < n; ++t) {
            if (w[t] > 0.0 && w[t] < 1.0) {
                if (i == n) {
                    i = t;
                } else {
                    j = t;
                    break;
                }
            }
        }
        if (j == n) break;  // fewer than two fractional coordinates left

        const Real up = std::min(1.0 - w[i], w[j]);    // move mass j -> i
        const Real down = std::min(w[i], 1.0 - w[j]);  // move mass i -> j
        if (unif(rng) < down / (up + down)) {
            w[i] += up;
            w[j] -= up;
        } else {
            w[i] -= down;
            w[j] += down;
        }
        if (w[i] < kSnapTol) w[i] = 0.0;
        if (w[i] > 1.0 - kSnapTol) w[i] = 1.0;
        if (w[j] < kSnapTol) w[j] = 0.0;
        if (w[j] > 1.0 - kSnapTol) w[j] = 1.0;
    }

    // A single leftover fractional coordinate can only be rounding residue;
    // the integral sum forces it to the nearest integer.
    for (std::size_t t = 0; t < n; ++t) {
        if (w[t] > 0.0 && w[t] < 1.0) w[t] = std::round(w[t]);
    }

    Cohort cohort;
    cohort.indicator.resize(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        if (w[t] == 1.0) {
            cohort.indicator[t] = 1;
            cohort.selected.push_back(t);
        }
    }
    return cohort;
}

}  // namespace leximax
