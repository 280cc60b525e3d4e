#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leximax/model.hpp"

namespace leximax {

constexpr Real kFeasibilityTol = 1e-7;
constexpr Real kOptimalityTol = 1e-8;
constexpr Real kPivotFloor = 1e-12;
// Tableau entries below this are treated as zero when selecting a pivot.
// Accumulated elimination error reaches ~1e-12 on dense tableaus, so pivoting
// on such an entry (a numerical zero) amplifies that error by ~1e12 and
// corrupts the basis; a 1e-9 cutoff leaves bound violations below
// kFeasibilityTol while refusing those pivots.
constexpr Real kRatioFloor = 1e-9;

/// One inequality row: coeffs . x - gamma_coefficient * gamma >= rhs.
struct LpRow {
    std::vector<Real> coeffs;
    Real gamma_coefficient = 0;  // 0 or 1
    Real rhs = 0;
};

/// The staged-leximax LP shape: maximize the scalar gamma over
/// box-constrained x with sum(x) = k and a set of >= rows. The box bounds
/// and the cardinality equality are implicit and always present; gamma is
/// boxed to [-1, n] to keep the feasible region bounded.
struct LpProblem {
    std::size_t num_candidates = 0;
    Real k = 0;
    std::vector<LpRow> rows;
};

enum class LpStatus { optimal, infeasible };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    MarginalVector x;
    Real gamma = 0;
    long iterations = 0;
};

/// Maximize gamma. Two-phase bounded-variable primal simplex, deterministic
/// given identical inputs. Throws std::runtime_error("numeric: ...") on
/// pivot breakdown, std::invalid_argument on malformed problems (a problem
/// with no gamma row is rejected).
LpSolution solve(const LpProblem& problem, const LpSolution* warm_start = nullptr);

bool check_feasible(const LpProblem& problem, const std::vector<Real>& x, Real gamma);

}  // namespace leximax
