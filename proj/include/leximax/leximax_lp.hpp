#pragma once

#include <cstddef>
#include <vector>

#include "leximax/finite_approx.hpp"
#include "leximax/model.hpp"

namespace leximax {

/// Stage optima of the staged LP sequence; cumulative[l] = sum of the
/// first l+1 gammas (stage optima need not be monotone).
struct GammaVector {
    std::vector<Real> gammas;
    std::vector<Real> cumulative;
};

enum class LeximaxMode { exact, recursive, significant };

struct LeximaxResult {
    MarginalVector x;
    GammaVector gamma;
    std::vector<long> stage_cuts;  // lazy constraints generated per stage
    LeximaxMode mode = LeximaxMode::exact;
    SlackVector alpha;  // empty for exact mode
    Real epsilon = 0;   // set for significant mode
};

/// Staged sequence of m LPs with lazy subset-sum constraints certified by
/// the separation oracle. Exact leximax marginals.
LeximaxResult leximax_marginals(const Instance& inst);

/// Relaxed targets: level-l right-hand sides become the cumulative sums of
/// (gamma*_s - alpha_s). alpha = 0 reproduces the exact output.
LeximaxResult approx_leximax_marginals(const Instance& inst, const SlackVector& alpha);

/// Constant slack epsilon at every level.
LeximaxResult significant_leximax_marginals(const Instance& inst, Real eps);

/// Same contract as approx_leximax_marginals but with every subset row of
/// every level materialized up front (no separation oracle). Requires
/// m <= 12; the independent reference for the cutting-plane path.
LeximaxResult full_enumeration_reference(const Instance& inst, const SlackVector& alpha);

}  // namespace leximax
