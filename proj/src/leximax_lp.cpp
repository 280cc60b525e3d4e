#include "leximax/leximax_lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "leximax/lp_core.hpp"
#include "leximax/separation.hpp"

namespace leximax {

namespace {

// A subset-sum cut: the groups of one size-`level` subset. Materialized as
// a constant row once its level's target is fixed, and as a gamma row while
// its level is the active one.
struct Cut {
    std::size_t level;
    std::vector<std::size_t> groups;

    bool operator<(const Cut& o) const {
        return std::tie(level, groups) < std::tie(o.level, o.groups);
    }
};

std::vector<Real> cut_coefficients(const Instance& inst, const Cut& cut) {
    std::vector<Real> coeffs(inst.n(), 0.0);
    for (std::size_t i = 0; i < inst.n(); ++i) {
        for (std::size_t j : cut.groups) coeffs[i] += inst.values[i][j];
    }
    return coeffs;
}

LpProblem materialize(const Instance& inst, const std::set<Cut>& cuts,
                      std::size_t active_level, const std::vector<Real>& relaxed_cum) {
    LpProblem p;
    p.num_candidates = inst.n();
    p.k = static_cast<Real>(inst.k);
    for (const auto& cut : cuts) {
        LpRow row;
        row.coeffs = cut_coefficients(inst, cut);
        if (cut.level == active_level) {
            row.gamma_coefficient = 1.0;
            row.rhs = relaxed_cum[active_level - 1];
        } else {
            row.gamma_coefficient = 0.0;
            row.rhs = relaxed_cum[cut.level];
        }
        p.rows.push_back(std::move(row));
    }
    return p;
}

void validate_alpha(const Instance& inst, const SlackVector& alpha) {
    if (alpha.alpha.size() != inst.m()) {
        throw std::invalid_argument("dimension: slack vector has " +
                                    std::to_string(alpha.alpha.size()) +
                                    " entries, instance has " + std::to_string(inst.m()) +
                                    " groups");
    }
    for (Real a : alpha.alpha) {
        if (a < 0) throw std::invalid_argument("range: slack entries must be >= 0");
    }
}

// The l groups with smallest utility under x, as a sorted index set.
Cut prefix_cut(const Instance& inst, const std::vector<Real>& x, std::size_t level) {
    std::vector<Real> y(inst.m(), 0.0);
    for (std::size_t i = 0; i < inst.n(); ++i) {
        for (std::size_t j = 0; j < inst.m(); ++j) y[j] += inst.values[i][j] * x[i];
    }
    const auto sorted = sorted_utilities(y);
    Cut cut;
    cut.level = level;
    cut.groups.assign(sorted.permutation.begin(),
                      sorted.permutation.begin() + static_cast<long>(level));
    std::sort(cut.groups.begin(), cut.groups.end());
    return cut;
}

LeximaxResult staged_solve(const Instance& inst, const SlackVector& alpha,
                           LeximaxMode mode, Real eps, bool lazy) {
    validate(inst);
    validate_alpha(inst, alpha);
    const std::size_t n = inst.n();
    const std::size_t m = inst.m();
    if (!lazy && m > 12) {
        throw std::invalid_argument("limit: full enumeration requires m <= 12, got " +
                                    std::to_string(m));
    }

    LeximaxResult result;
    result.mode = mode;
    result.alpha = alpha;
    result.epsilon = eps;
    result.stage_cuts.assign(m, 0);
    result.gamma.cumulative.reserve(m);

    std::vector<Real> relaxed_cum(m + 1, 0.0);  // relaxed_cum[l] = sum_{s<=l} (g*_s - a_s)
    std::set<Cut> cuts;

    std::vector<Real> warm_x(n, static_cast<Real>(inst.k) / static_cast<Real>(n));
    Real cumulative = 0.0;

    for (std::size_t l = 1; l <= m; ++l) {
        if (lazy) {
            // Seed the stage with the prefix set of the warm point so the
            // active level always has at least one gamma row.
            if (cuts.insert(prefix_cut(inst, warm_x, l)).second) {
                ++result.stage_cuts[l - 1];
            }
        } else {
            // Materialize every size-l subset as an active-level cut; lower
            // levels were added in earlier stages.
            for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountl(mask)) != l) continue;
                Cut cut;
                cut.level = l;
                for (std::size_t j = 0; j < m; ++j) {
                    if (mask & (1ul << j)) cut.groups.push_back(j);
                }
                cuts.insert(std::move(cut));
                ++result.stage_cuts[l - 1];
            }
        }

        LpSolution sol;
        for (;;) {
            const LpProblem p = materialize(inst, cuts, l, relaxed_cum);
            LpSolution warm;
            warm.status = LpStatus::optimal;
            warm.x.x = warm_x;
            warm.x.k = p.k;
            warm.gamma = 0.0;
            const bool warm_ok = check_feasible(p, warm.x.x, warm.gamma);
            sol = solve(p, warm_ok ? &warm : nullptr);
            if (sol.status != LpStatus::optimal) {
                throw std::runtime_error("internal: stage " + std::to_string(l) +
                                         " LP infeasible");
            }
            if (!lazy) break;

            std::vector<Real> targets(l);
            for (std::size_t lp = 1; lp < l; ++lp) targets[lp - 1] = relaxed_cum[lp];
            targets[l - 1] = relaxed_cum[l - 1] + sol.gamma;
            const SeparationResult sep = separate(inst, sol.x.x, targets);
            if (sep.feasible()) break;
            if (sep.kind != SeparationResult::Kind::subset) {
                throw std::runtime_error("numeric: separation rejected an LP-feasible point");
            }
            Cut cut;
            cut.level = sep.level;
            cut.groups = sep.groups;
            std::sort(cut.groups.begin(), cut.groups.end());
            if (!cuts.insert(std::move(cut)).second) {
                throw std::runtime_error("numeric: separation repeated an existing cut");
            }
            ++result.stage_cuts[l - 1];
        }

        result.gamma.gammas.push_back(sol.gamma);
        cumulative += sol.gamma;
        result.gamma.cumulative.push_back(cumulative);
        relaxed_cum[l] = relaxed_cum[l - 1] + sol.gamma - alpha.alpha[l - 1];
        warm_x = sol.x.x;
        result.x = sol.x;
    }
    return result;
}

SlackVector zero_alpha(const Instance& inst) {
    SlackVector a;
    a.alpha.assign(inst.m(), 0.0);
    return a;
}

}  // namespace

LeximaxResult leximax_marginals(const Instance& inst) {
    return staged_solve(inst, zero_alpha(inst), LeximaxMode::exact, 0.0, true);
}

LeximaxResult approx_leximax_marginals(const Instance& inst, const SlackVector& alpha) {
    return staged_solve(inst, alpha, LeximaxMode::recursive, 0.0, true);
}

LeximaxResult significant_leximax_marginals(const Instance& inst, Real eps) {
    if (eps < 0) throw std::invalid_argument("range: epsilon must be >= 0");
    SlackVector alpha;
    alpha.alpha.assign(inst.m(), eps);
    return staged_solve(inst, alpha, LeximaxMode::significant, eps, true);
}

LeximaxResult full_enumeration_reference(const Instance& inst, const SlackVector& alpha) {
    return staged_solve(inst, alpha, LeximaxMode::recursive, 0.0, false);
}

}  // namespace leximax
