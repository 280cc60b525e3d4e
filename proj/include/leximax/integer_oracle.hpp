#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leximax/model.hpp"

namespace leximax {

struct IntegerLeximaxResult {
    std::vector<std::vector<std::size_t>> cohorts;  // all leximax size-k cohorts
    std::vector<Real> sorted_vector;                // their common sorted utility vector
};

struct IntegerMaxminResult {
    Real value = 0;
    std::vector<std::vector<std::size_t>> cohorts;
};

/// Enumerates all size-k cohorts (sum utilities). Guarded at n <= 20.
IntegerLeximaxResult integer_leximax_bruteforce(const Instance& inst, int k);
IntegerMaxminResult integer_maxmin_bruteforce(const Instance& inst, int k);

/// Hitting-set reduction: candidate i gets value 1 for group j iff
/// universe element i belongs to collection set j. k is a per-probe choice.
Instance hitting_set_to_instance(const std::vector<std::string>& universe,
                                 const std::vector<std::vector<std::size_t>>& collection,
                                 int k = 1);

}  // namespace leximax
