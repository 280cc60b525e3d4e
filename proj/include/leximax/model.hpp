#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace leximax {

using Real = double;

/// Cohort-selection instance: n candidates, m groups, per-candidate group
/// values in [0,1], and a target cohort size k.
struct Instance {
    std::vector<std::string> candidate_ids;
    std::vector<std::string> group_ids;
    std::vector<std::vector<Real>> values;  // n rows, m columns
    int k = 0;

    std::size_t n() const { return candidate_ids.size(); }
    std::size_t m() const { return group_ids.size(); }
};

/// Explicit finite solution set with a |S| x m utility matrix.
struct FiniteInstance {
    std::vector<std::string> solution_ids;
    std::vector<std::string> group_ids;
    std::vector<std::vector<Real>> utilities;  // |S| rows, m columns

    std::size_t size() const { return solution_ids.size(); }
    std::size_t m() const { return group_ids.size(); }
};

/// Marginal selection probabilities: x in [0,1]^n with sum(x) = k.
struct MarginalVector {
    std::vector<Real> x;
    Real k = 0;
};

/// A utility row sorted ascending, remembering which group occupies each
/// rank. Ties are broken by ascending group index.
struct SortedUtilityVector {
    std::vector<Real> entries;
    std::vector<std::size_t> permutation;
};

enum class Ordering { less, equal, greater };

// Validation. Each throws std::invalid_argument with a "category: ..."
// message on the first violated invariant.
void validate(const Instance& inst);
void validate(const FiniteInstance& inst);
void validate(const MarginalVector& mv);

/// Expected utility of group j under marginals x: sum_i x_i * v_ij.
Real group_utility(const Instance& inst, const MarginalVector& x, std::size_t j);
Real group_utility(const Instance& inst, const std::vector<Real>& x, std::size_t j);

SortedUtilityVector sorted_utilities(const std::vector<Real>& row);

/// Lexicographic comparison of equal-length sorted vectors. Exact
/// floating-point comparison, no tolerance.
Ordering lex_compare(const SortedUtilityVector& u, const SortedUtilityVector& v);
Ordering lex_compare(const std::vector<Real>& u, const std::vector<Real>& v);

}  // namespace leximax
