#include "leximax/finite_approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace leximax {

std::vector<std::vector<Real>> sorted_rows(const FiniteInstance& inst) {
    std::vector<std::vector<Real>> rows;
    rows.reserve(inst.size());
    for (const auto& row : inst.utilities) rows.push_back(sorted_utilities(row).entries);
    return rows;
}

std::vector<std::size_t> exact_leximax_set(const FiniteInstance& inst) {
    const auto rows = sorted_rows(inst);
    std::size_t best = 0;
    for (std::size_t s = 1; s < rows.size(); ++s) {
        if (lex_compare(rows[s], rows[best]) == Ordering::greater) best = s;
    }
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < rows.size(); ++s) {
        if (lex_compare(rows[s], rows[best]) == Ordering::equal) out.push_back(s);
    }
    return out;
}

namespace {

// Tie tolerance for the finite checkers. Utilities entered as short
// decimals carry ~1e-17 representation error, which would otherwise flip
// strict comparisons sitting exactly on an eps boundary; 1e-12 restores the
// intended rational-arithmetic semantics without affecting genuinely
// distinct values.
constexpr Real kTieTol = 1e-12;

// Shared double loop for the tradeoff family. Accepts iff every rank where
// some competitor beats s by more than eps1 has an earlier rank where s
// beats that competitor by more than eps2.
bool tradeoff_check(const std::vector<std::vector<Real>>& rows, std::size_t s, Real eps1,
                    Real eps2) {
    const std::size_t m = rows[s].size();
    for (std::size_t other = 0; other < rows.size(); ++other) {
        for (std::size_t i = 0; i < m; ++i) {
            if (rows[other][i] - rows[s][i] > eps1 + kTieTol) {
                bool answered = false;
                for (std::size_t j = 0; j < i; ++j) {
                    if (rows[s][j] - rows[other][j] > eps2 + kTieTol) {
                        answered = true;
                        break;
                    }
                }
                if (!answered) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_tradeoff_approx(const FiniteInstance& inst, std::size_t s, Real eps) {
    return tradeoff_check(sorted_rows(inst), s, eps, 0.0);
}

bool is_sig_tradeoff(const FiniteInstance& inst, std::size_t s, Real eps1, Real eps2) {
    return tradeoff_check(sorted_rows(inst), s, eps1, eps2);
}

RecursiveChain recursive_chain(const FiniteInstance& inst, const SlackVector& alpha) {
    const std::size_t m = inst.m();
    if (alpha.alpha.size() != m) {
        throw std::invalid_argument("dimension: slack vector has " +
                                    std::to_string(alpha.alpha.size()) +
                                    " entries, instance has " + std::to_string(m) +
                                    " groups");
    }
    const auto rows = sorted_rows(inst);
    RecursiveChain chain;
    chain.sets.resize(m + 1);
    chain.level_maxima.resize(m);
    chain.sets[0].resize(inst.size());
    std::iota(chain.sets[0].begin(), chain.sets[0].end(), std::size_t{0});
    for (std::size_t i = 0; i < m; ++i) {
        Real level_max = rows[chain.sets[i].front()][i];
        for (std::size_t s : chain.sets[i]) level_max = std::max(level_max, rows[s][i]);
        chain.level_maxima[i] = level_max;
        for (std::size_t s : chain.sets[i]) {
            if (rows[s][i] >= level_max - alpha.alpha[i] - kTieTol) {
                chain.sets[i + 1].push_back(s);
            }
        }
    }
    return chain;
}

bool is_recursive_approx(const FiniteInstance& inst, std::size_t s, Real eps) {
    const std::size_t m = inst.m();
    const auto rows = sorted_rows(inst);
    std::vector<std::size_t> current(inst.size());
    std::iota(current.begin(), current.end(), std::size_t{0});
    for (std::size_t i = 0; i < m; ++i) {
        Real level_max = rows[current.front()][i];
        for (std::size_t t : current) level_max = std::max(level_max, rows[t][i]);
        if (level_max - rows[s][i] > eps + kTieTol) return false;
        // The minimal slack keeping s puts the survival threshold exactly at
        // s's own value; using it directly avoids a round trip through
        // level_max - alpha.
        std::vector<std::size_t> next;
        for (std::size_t t : current) {
            if (rows[t][i] >= rows[s][i] - kTieTol) next.push_back(t);
        }
        current = std::move(next);
    }
    return true;
}

std::vector<std::size_t> significant_set(const FiniteInstance& inst, Real eps) {
    SlackVector alpha;
    alpha.alpha.assign(inst.m(), eps);
    return recursive_chain(inst, alpha).sets.back();
}

bool is_function_slack_significant(const FiniteInstance& inst, std::size_t s, Real a1,
                                   Real a2) {
    if (a1 > a2) {
        throw std::invalid_argument("range: slack interval [" + std::to_string(a1) + ", " +
                                    std::to_string(a2) + "] is empty");
    }
    if (inst.size() > 64) {
        throw std::invalid_argument(
            "limit: function-slack significance requires |S| <= 64");
    }
    const std::size_t m = inst.m();
    const std::size_t count = inst.size();
    const auto rows = sorted_rows(inst);

    // Each level's slack function is chosen independently per solution, so a
    // competitor within (a1, a2] of the level maximum may be kept or
    // dropped at will, and dropping one can lower a later maximum. Search
    // the reachable survivor sets; memoise on (level, set).
    std::vector<std::set<std::uint64_t>> seen(m);
    const std::uint64_t all =
        (count == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);

    std::function<bool(std::size_t, std::uint64_t)> reach = [&](std::size_t level,
                                                                std::uint64_t mask) -> bool {
        if (level == m) return true;
        if (!seen[level].insert(mask).second) return false;
        Real level_max = rows[s][level];
        for (std::size_t t = 0; t < count; ++t) {
            if (mask & (std::uint64_t{1} << t)) level_max = std::max(level_max, rows[t][level]);
        }
        // The target survives only with beta = a2; everything within a1 of
        // the maximum is unavoidable.
        if (rows[s][level] < level_max - a2 - kTieTol) return false;
        std::uint64_t mandatory = std::uint64_t{1} << s;
        std::vector<std::size_t> optional;
        for (std::size_t t = 0; t < count; ++t) {
            if (t == s || !(mask & (std::uint64_t{1} << t))) continue;
            if (rows[t][level] >= level_max - a1 - kTieTol) {
                mandatory |= std::uint64_t{1} << t;
            } else if (rows[t][level] >= level_max - a2 - kTieTol) {
                optional.push_back(t);
            }
        }
        for (std::uint64_t sub = 0;; ++sub) {
            std::uint64_t next = mandatory;
            for (std::size_t b = 0; b < optional.size(); ++b) {
                if (sub & (std::uint64_t{1} << b)) next |= std::uint64_t{1} << optional[b];
            }
            if (reach(level + 1, next)) return true;
            if (sub + 1 >= (std::uint64_t{1} << optional.size())) break;
        }
        return false;
    };
    return reach(0, all);
}

bool is_elementwise_approx(const FiniteInstance& inst, std::size_t s, Real a) {
    const auto rows = sorted_rows(inst);
    const auto& ell = rows[exact_leximax_set(inst).front()];
    Real worst_gap = 0.0;
    for (std::size_t i = 0; i < ell.size(); ++i) {
        worst_gap = std::max(worst_gap, ell[i] - rows[s][i]);
    }
    return worst_gap <= a + kTieTol;
}

FiniteInstance perturb(const FiniteInstance& inst, const NoiseMatrix& noise) {
    if (noise.noise.size() != inst.size()) {
        throw std::invalid_argument("dimension: noise matrix has " +
                                    std::to_string(noise.noise.size()) + " rows, expected " +
                                    std::to_string(inst.size()));
    }
    FiniteInstance out = inst;
    for (std::size_t s = 0; s < inst.size(); ++s) {
        if (noise.noise[s].size() != inst.m()) {
            throw std::invalid_argument("dimension: noise row " + std::to_string(s) +
                                        " has wrong width");
        }
        for (std::size_t j = 0; j < inst.m(); ++j) {
            const Real e = noise.noise[s][j];
            if (std::abs(e) > noise.delta) {
                throw std::invalid_argument("range: noise entry [" + std::to_string(s) +
                                            "][" + std::to_string(j) + "] = " +
                                            std::to_string(e) + " exceeds delta = " +
                                            std::to_string(noise.delta));
            }
            out.utilities[s][j] += e;
        }
    }
    return out;
}

}  // namespace leximax
