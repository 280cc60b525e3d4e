#pragma once

#include <cstddef>
#include <vector>

#include "leximax/model.hpp"

namespace leximax {

/// Per-level allowed slack below the running maximum in the recursive chain.
struct SlackVector {
    std::vector<Real> alpha;
};

/// The nested solution sets S_0 >= S_1 >= ... >= S_m built by the recursive
/// approximation, together with the maximum rank-i utility attained over
/// S_{i-1} at each level.
struct RecursiveChain {
    std::vector<std::vector<std::size_t>> sets;  // m+1 entries, sets[0] = everything
    std::vector<Real> level_maxima;              // m entries
};

/// Additive noise bounded entrywise by delta. Perturbed utilities are not
/// clamped back into [0,1].
struct NoiseMatrix {
    Real delta = 0;
    std::vector<std::vector<Real>> noise;  // |S| rows, m columns
};

/// Ascending-sorted utility row of every solution; the common currency of
/// all the checkers below.
std::vector<std::vector<Real>> sorted_rows(const FiniteInstance& inst);

/// All solutions whose sorted utility vector is lexicographically maximal.
std::vector<std::size_t> exact_leximax_set(const FiniteInstance& inst);

/// Tradeoff approximation: any rank where some other solution is better by
/// more than eps must be answered by a strictly better earlier rank.
bool is_tradeoff_approx(const FiniteInstance& inst, std::size_t s, Real eps);

/// Variant requiring the earlier rank to be better by more than eps2; may
/// admit no solution at all.
bool is_sig_tradeoff(const FiniteInstance& inst, std::size_t s, Real eps1, Real eps2);

RecursiveChain recursive_chain(const FiniteInstance& inst, const SlackVector& alpha);

/// True iff some slack vector with entries <= eps keeps s in the final set.
/// Uses the greedy minimal-slack construction: at each level the slack is
/// set to exactly the gap between s and the running maximum.
bool is_recursive_approx(const FiniteInstance& inst, std::size_t s, Real eps);

/// Final chain set under constant slack eps at every level.
std::vector<std::size_t> significant_set(const FiniteInstance& inst, Real eps);

/// Significance with per-level, per-solution slack functions ranged in
/// [a1, a2]. Searches the reachable survivor sets (dropping a competitor
/// can lower later maxima, so no single assignment is always optimal).
/// Requires |S| <= 64.
bool is_function_slack_significant(const FiniteInstance& inst, std::size_t s, Real a1,
                                   Real a2);

bool is_elementwise_approx(const FiniteInstance& inst, std::size_t s, Real a);

FiniteInstance perturb(const FiniteInstance& inst, const NoiseMatrix& noise);

}  // namespace leximax
