#include "leximax/lp_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace leximax {

namespace {

constexpr Real kInf = std::numeric_limits<Real>::infinity();

enum class VarStatus { at_lower, at_upper, basic };

// Dense bounded-variable primal simplex over A z = b, lo <= z <= hi,
// minimizing c . z. Bland's pivoting rule throughout; the full tableau
// B^{-1}A and the reduced-cost row are kept up to date by pivots.
class BoundedSimplex {
public:
    BoundedSimplex(std::size_t nrows, std::size_t nstruct)
        : nrows_(nrows), ncols_(nstruct + nrows), nstruct_(nstruct) {
        tab_.assign(nrows_ * ncols_, 0.0);
        b_.assign(nrows_, 0.0);
        lo_.assign(ncols_, 0.0);
        hi_.assign(ncols_, 0.0);
        val_.assign(ncols_, 0.0);
        stat_.assign(ncols_, VarStatus::at_lower);
        d_.assign(ncols_, 0.0);
    }

    Real& a(std::size_t r, std::size_t c) { return tab_[r * ncols_ + c]; }
    void set_bounds(std::size_t c, Real lo, Real hi) { lo_[c] = lo; hi_[c] = hi; }
    void set_rhs(std::size_t r, Real v) { b_[r] = v; }

    // Runs phase 1 then phase 2 with the given structural cost vector
    // (artificial columns always cost 0 in phase 2). Returns false when
    // phase 1 cannot drive the artificials to zero.
    bool optimize(const std::vector<Real>& cost) {
        for (std::size_t j = 0; j < nstruct_; ++j) {
            val_[j] = lo_[j];
            stat_[j] = VarStatus::at_lower;
        }
        // Artificial columns: one per row, signed so their start value is
        // the nonnegative residual of the initial point.
        basis_.resize(nrows_);
        std::vector<Real> phase1_cost(ncols_, 0.0);
        for (std::size_t r = 0; r < nrows_; ++r) {
            Real residual = b_[r];
            for (std::size_t j = 0; j < nstruct_; ++j) residual -= a(r, j) * val_[j];
            const std::size_t art = nstruct_ + r;
            a(r, art) = residual >= 0 ? 1.0 : -1.0;
            set_bounds(art, 0.0, kInf);
            val_[art] = std::abs(residual);
            stat_[art] = VarStatus::basic;
            basis_[r] = art;
            phase1_cost[art] = 1.0;
            if (a(r, art) < 0) {
                for (std::size_t j = 0; j < ncols_; ++j) a(r, j) = -a(r, j);
            }
        }
        run_phase(phase1_cost);
        Real infeas = 0.0;
        for (std::size_t r = 0; r < nrows_; ++r) infeas += val_[nstruct_ + r];
        if (infeas > kFeasibilityTol) return false;
        // Pin the artificials at zero for phase 2.
        for (std::size_t r = 0; r < nrows_; ++r) set_bounds(nstruct_ + r, 0.0, 0.0);
        std::vector<Real> phase2_cost(ncols_, 0.0);
        std::copy(cost.begin(), cost.end(), phase2_cost.begin());
        run_phase(phase2_cost);
        return true;
    }

    Real value(std::size_t c) const { return val_[c]; }
    long iterations() const { return iters_; }

private:
    void reset_reduced_costs(const std::vector<Real>& cost) {
        d_ = cost;
        for (std::size_t r = 0; r < nrows_; ++r) {
            const Real cb = cost[basis_[r]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < ncols_; ++j) d_[j] -= cb * a(r, j);
        }
        for (std::size_t r = 0; r < nrows_; ++r) d_[basis_[r]] = 0.0;
    }

    void run_phase(const std::vector<Real>& cost) {
        reset_reduced_costs(cost);
        const long cap = 20000 + 500 * static_cast<long>(nrows_ + ncols_);
        bool refreshed = true;  // reduced costs are exact right now
        for (;;) {
            if (++iters_ > cap) {
                throw std::runtime_error("numeric: simplex iteration cap exceeded (" +
                                         std::to_string(cap) + ")");
            }
            // Bland: first eligible entering column.
            std::size_t enter = ncols_;
            Real sigma = 0.0;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (stat_[j] == VarStatus::basic || lo_[j] == hi_[j]) continue;
                if (stat_[j] == VarStatus::at_lower && d_[j] < -kOptimalityTol) {
                    enter = j;
                    sigma = 1.0;
                    break;
                }
                if (stat_[j] == VarStatus::at_upper && d_[j] > kOptimalityTol) {
                    enter = j;
                    sigma = -1.0;
                    break;
                }
            }
            if (enter == ncols_) {
                // The incrementally updated reduced-cost row drifts over long
                // degenerate pivot sequences; only accept optimality once it
                // survives a from-scratch recomputation.
                if (refreshed) return;
                reset_reduced_costs(cost);
                refreshed = true;
                continue;
            }
            refreshed = false;

            Real t_best = hi_[enter] - lo_[enter];  // bound-flip limit
            std::size_t leave_row = nrows_;         // nrows_ means bound flip
            Real leave_bound = 0.0;
            for (std::size_t r = 0; r < nrows_; ++r) {
                const Real w = a(r, enter);
                const Real g = -sigma * w;  // rate of change of the basic var
                if (std::abs(g) <= kRatioFloor) continue;
                const std::size_t bv = basis_[r];
                Real limit;
                Real bound;
                if (g > 0) {
                    if (hi_[bv] == kInf) continue;
                    limit = (hi_[bv] - val_[bv]) / g;
                    bound = hi_[bv];
                } else {
                    limit = (lo_[bv] - val_[bv]) / g;
                    bound = lo_[bv];
                }
                limit = std::max(limit, Real{0});
                if (limit < t_best - kPivotFloor ||
                    (leave_row < nrows_ && limit < t_best + kPivotFloor &&
                     basis_[r] < basis_[leave_row])) {
                    t_best = limit;
                    leave_row = r;
                    leave_bound = bound;
                }
            }
            if (t_best == kInf) {
                throw std::runtime_error("numeric: unbounded direction in simplex");
            }

            // Move the entering variable and every basic variable.
            for (std::size_t r = 0; r < nrows_; ++r) {
                val_[basis_[r]] -= sigma * a(r, enter) * t_best;
            }
            if (leave_row == nrows_) {
                // Bound flip, no basis change.
                stat_[enter] = (sigma > 0) ? VarStatus::at_upper : VarStatus::at_lower;
                val_[enter] = (sigma > 0) ? hi_[enter] : lo_[enter];
                continue;
            }
            val_[enter] = (sigma > 0 ? lo_[enter] : hi_[enter]) + sigma * t_best;

            const std::size_t leave = basis_[leave_row];
            val_[leave] = leave_bound;
            stat_[leave] =
                (leave_bound == hi_[leave]) ? VarStatus::at_upper : VarStatus::at_lower;

            const Real pivot = a(leave_row, enter);
            if (std::abs(pivot) < kPivotFloor) {
                throw std::runtime_error("numeric: pivot " + std::to_string(pivot) +
                                         " below floor at row " +
                                         std::to_string(leave_row));
            }
            const Real inv = 1.0 / pivot;
            for (std::size_t j = 0; j < ncols_; ++j) a(leave_row, j) *= inv;
            a(leave_row, enter) = 1.0;
            for (std::size_t r = 0; r < nrows_; ++r) {
                if (r == leave_row) continue;
                const Real f = a(r, enter);
                if (f == 0.0) continue;
                for (std::size_t j = 0; j < ncols_; ++j) a(r, j) -= f * a(leave_row, j);
                a(r, enter) = 0.0;
            }
            const Real fd = d_[enter];
            if (fd != 0.0) {
                for (std::size_t j = 0; j < ncols_; ++j) d_[j] -= fd * a(leave_row, j);
            }
            d_[enter] = 0.0;

            basis_[leave_row] = enter;
            stat_[enter] = VarStatus::basic;
        }
    }

    std::size_t nrows_, ncols_, nstruct_;
    std::vector<Real> tab_, b_, lo_, hi_, val_, d_;
    std::vector<VarStatus> stat_;
    std::vector<std::size_t> basis_;
    long iters_ = 0;
};

void validate_problem(const LpProblem& p) {
    const std::size_t n = p.num_candidates;
    if (n == 0) throw std::invalid_argument("malformed: LP has no candidates");
    if (p.k < 0 || p.k > static_cast<Real>(n)) {
        throw std::invalid_argument("malformed: cardinality target outside [0, n]");
    }
    bool has_gamma_row = false;
    for (const auto& row : p.rows) {
        if (row.coeffs.size() != n) {
            throw std::invalid_argument("malformed: LP row has " +
                                        std::to_string(row.coeffs.size()) +
                                        " coefficients, expected " + std::to_string(n));
        }
        if (row.gamma_coefficient != 0.0 && row.gamma_coefficient != 1.0) {
            throw std::invalid_argument("malformed: gamma coefficient must be 0 or 1");
        }
        if (row.gamma_coefficient == 1.0) has_gamma_row = true;
    }
    if (!has_gamma_row) {
        throw std::invalid_argument(
            "malformed: LP has no row involving gamma; objective would be vacuous");
    }
}

}  // namespace

bool check_feasible(const LpProblem& problem, const std::vector<Real>& x, Real gamma) {
    const std::size_t n = problem.num_candidates;
    if (x.size() != n) return false;
    Real sum = 0.0;
    for (Real xi : x) {
        if (xi < -kFeasibilityTol || xi > 1.0 + kFeasibilityTol) return false;
        sum += xi;
    }
    if (std::abs(sum - problem.k) > kFeasibilityTol) return false;
    for (const auto& row : problem.rows) {
        Real lhs = -row.gamma_coefficient * gamma;
        for (std::size_t i = 0; i < n; ++i) lhs += row.coeffs[i] * x[i];
        if (lhs < row.rhs - kFeasibilityTol) return false;
    }
    return true;
}

LpSolution solve(const LpProblem& problem, const LpSolution* warm_start) {
    validate_problem(problem);
    if (warm_start != nullptr &&
        !check_feasible(problem, warm_start->x.x, warm_start->gamma)) {
        throw std::invalid_argument("malformed: warm start is not feasible");
    }

    const std::size_t n = problem.num_candidates;
    const std::size_t nrows = problem.rows.size() + 1;  // rows + cardinality
    const std::size_t gamma_col = n;
    const std::size_t surplus0 = n + 1;
    const std::size_t nstruct = n + 1 + problem.rows.size();

    BoundedSimplex sx(nrows, nstruct);
    for (std::size_t i = 0; i < n; ++i) sx.set_bounds(i, 0.0, 1.0);
    sx.set_bounds(gamma_col, -1.0, static_cast<Real>(n));
    for (std::size_t r = 0; r < problem.rows.size(); ++r) {
        const auto& row = problem.rows[r];
        for (std::size_t i = 0; i < n; ++i) sx.a(r, i) = row.coeffs[i];
        sx.a(r, gamma_col) = -row.gamma_coefficient;
        sx.a(r, surplus0 + r) = -1.0;
        sx.set_bounds(surplus0 + r, 0.0, kInf);
        sx.set_rhs(r, row.rhs);
    }
    const std::size_t card_row = problem.rows.size();
    for (std::size_t i = 0; i < n; ++i) sx.a(card_row, i) = 1.0;
    sx.set_rhs(card_row, problem.k);

    std::vector<Real> cost(nstruct, 0.0);
    cost[gamma_col] = -1.0;  // maximize gamma

    LpSolution sol;
    if (!sx.optimize(cost)) {
        sol.status = LpStatus::infeasible;
        sol.iterations = sx.iterations();
        return sol;
    }
    sol.status = LpStatus::optimal;
    sol.x.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) sol.x.x[i] = sx.value(i);
    sol.x.k = problem.k;
    sol.gamma = sx.value(gamma_col);
    sol.iterations = sx.iterations();
    if (!check_feasible(problem, sol.x.x, sol.gamma)) {
        throw std::runtime_error("numeric: simplex returned an infeasible point");
    }
    return sol;
}

}  // namespace leximax
