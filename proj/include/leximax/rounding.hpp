#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "leximax/model.hpp"

namespace leximax {

struct Cohort {
    std::vector<std::size_t> selected;
    std::vector<int> indicator;  // length n, 0/1
};

/// Dependent rounding to a cohort of exactly k members. Repeatedly pairs
/// the two lowest-index fractional coordinates and shifts mass between them
/// so that at least one becomes integral each step; marginals are preserved
/// and inclusions are negatively correlated. Requires sum(x) integral
/// within 1e-9. Coordinates within 1e-9 of 0 or 1 are snapped first.
Cohort dependent_round(const MarginalVector& x, std::uint64_t rng_seed);

}  // namespace leximax
