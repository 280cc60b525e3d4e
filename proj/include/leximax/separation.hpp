#pragma once

#include <cstddef>
#include <vector>

#include "leximax/model.hpp"

namespace leximax {

/// Outcome of certifying a candidate point against box, cardinality, and
/// the cumulative subset-sum constraints of levels 1..L.
struct SeparationResult {
    enum class Verdict { feasible, violated };
    enum class Kind { none, box, cardinality, subset };

    Verdict verdict = Verdict::feasible;
    Kind kind = Kind::none;

    std::size_t box_index = 0;  // valid when kind == box

    // Valid when kind == subset: the `level` groups with smallest utilities,
    // whose cumulative utility `lhs` fell short of the target `rhs`.
    std::size_t level = 0;
    std::vector<std::size_t> groups;
    Real lhs = 0;
    Real rhs = 0;

    bool feasible() const { return verdict == Verdict::feasible; }
};

/// Checks, in order: box bounds, cardinality, then for l = 1..L that the
/// sum of the l smallest group utilities meets gamma_targets[l-1]. Returns
/// the first violation found. O(n*m + m log m).
SeparationResult separate(const Instance& inst, const std::vector<Real>& x,
                          const std::vector<Real>& gamma_targets);

}  // namespace leximax
