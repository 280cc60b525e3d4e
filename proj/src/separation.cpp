#include "leximax/separation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "leximax/lp_core.hpp"

namespace leximax {

SeparationResult separate(const Instance& inst, const std::vector<Real>& x,
                          const std::vector<Real>& gamma_targets) {
    const std::size_t n = inst.n();
    const std::size_t m = inst.m();
    if (x.size() != n) {
        throw std::invalid_argument("dimension: separation point has " +
                                    std::to_string(x.size()) + " entries, expected " +
                                    std::to_string(n));
    }
    if (gamma_targets.size() > m) {
        throw std::invalid_argument("dimension: more targets than groups");
    }

    SeparationResult res;
    Real sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] < -kFeasibilityTol || x[i] > 1.0 + kFeasibilityTol) {
            res.verdict = SeparationResult::Verdict::violated;
            res.kind = SeparationResult::Kind::box;
            res.box_index = i;
            return res;
        }
        sum += x[i];
    }
    if (std::abs(sum - static_cast<Real>(inst.k)) > kFeasibilityTol) {
        res.verdict = SeparationResult::Verdict::violated;
        res.kind = SeparationResult::Kind::cardinality;
        return res;
    }

    std::vector<Real> y(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) y[j] += inst.values[i][j] * x[i];
    }
    const SortedUtilityVector sorted = sorted_utilities(y);

    Real prefix = 0.0;
    for (std::size_t l = 0; l < gamma_targets.size(); ++l) {
        prefix += sorted.entries[l];
        if (prefix < gamma_targets[l] - kFeasibilityTol) {
            res.verdict = SeparationResult::Verdict::violated;
            res.kind = SeparationResult::Kind::subset;
            res.level = l + 1;
            res.groups.assign(sorted.permutation.begin(),
                              sorted.permutation.begin() + static_cast<long>(l) + 1);
            res.lhs = prefix;
            res.rhs = gamma_targets[l];
            return res;
        }
    }
    return res;
}

}  // namespace leximax
