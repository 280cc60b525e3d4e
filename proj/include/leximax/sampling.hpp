#pragma once

#include <cstdint>
#include <vector>

#include "leximax/model.hpp"
#include "leximax/rounding.hpp"

namespace leximax {

/// Independent Bernoulli inclusion with probability x_i per candidate.
Cohort sample_cohort(const MarginalVector& x, std::uint64_t rng_seed);

struct GroupTail {
    Real empirical_tail = 0;  // fraction of trials with u(C, G_j) < u(x, G_j) - delta
    Real bound = 0;           // e^{-2 delta^2 / n}
};

/// Empirical check of the concentration bound, per group.
std::vector<GroupTail> concentration_report(const Instance& inst, const MarginalVector& x,
                                            Real delta, long trials,
                                            std::uint64_t rng_seed);

}  // namespace leximax
