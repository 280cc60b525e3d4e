#include "leximax/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace leximax {

namespace {

constexpr Real kCardinalityTol = 1e-9;

void check_no_duplicates(const std::vector<std::string>& ids, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second) {
            throw std::invalid_argument(std::string("dimension: duplicate ") + what +
                                        " identifier '" + id + "'");
        }
    }
}

void check_matrix(const std::vector<std::vector<Real>>& mat,
                  const std::vector<std::string>& row_ids,
                  const std::vector<std::string>& col_ids, const char* what) {
    const std::size_t rows = row_ids.size(), cols = col_ids.size();
    if (mat.size() != rows) {
        throw std::invalid_argument(std::string("dimension: ") + what + " has " +
                                    std::to_string(mat.size()) + " rows, expected " +
                                    std::to_string(rows));
    }
    for (std::size_t i = 0; i < rows; ++i) {
        if (mat[i].size() != cols) {
            throw std::invalid_argument(std::string("dimension: ") + what + " row " +
                                        std::to_string(i) + " has " +
                                        std::to_string(mat[i].size()) +
                                        " entries, expected " + std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const Real v = mat[i][j];
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument(std::string("range: ") + what + " entry [" +
                                            row_ids[i] + "][" + col_ids[j] + "] = " +
                                            std::to_string(v) + " outside [0,1]");
            }
        }
    }
}

}  // namespace

void validate(const Instance& inst) {
    if (inst.n() < 1) throw std::invalid_argument("dimension: need at least one candidate");
    if (inst.m() < 1) throw std::invalid_argument("dimension: need at least one group");
    check_no_duplicates(inst.candidate_ids, "candidate");
    check_no_duplicates(inst.group_ids, "group");
    check_matrix(inst.values, inst.candidate_ids, inst.group_ids, "values");
    if (inst.k < 1 || static_cast<std::size_t>(inst.k) > inst.n()) {
        throw std::invalid_argument("range: k = " + std::to_string(inst.k) +
                                    " outside [1, n = " + std::to_string(inst.n()) + "]");
    }
}

void validate(const FiniteInstance& inst) {
    if (inst.size() < 1) throw std::invalid_argument("dimension: need at least one solution");
    if (inst.m() < 1) throw std::invalid_argument("dimension: need at least one group");
    check_no_duplicates(inst.solution_ids, "solution");
    check_no_duplicates(inst.group_ids, "group");
    check_matrix(inst.utilities, inst.solution_ids, inst.group_ids, "utilities");
}

void validate(const MarginalVector& mv) {
    Real sum = 0.0;
    for (std::size_t i = 0; i < mv.x.size(); ++i) {
        const Real xi = mv.x[i];
        if (!(xi >= 0.0 && xi <= 1.0)) {
            throw std::invalid_argument("range: x[" + std::to_string(i) + "] = " +
                                        std::to_string(xi) + " outside [0,1]");
        }
        sum += xi;
    }
    if (std::abs(sum - mv.k) > kCardinalityTol) {
        throw std::invalid_argument("range: sum(x) = " + std::to_string(sum) +
                                    " differs from k = " + std::to_string(mv.k));
    }
}

Real group_utility(const Instance& inst, const std::vector<Real>& x, std::size_t j) {
    if (x.size() != inst.n()) {
        throw std::invalid_argument("dimension: marginal vector has " +
                                    std::to_string(x.size()) + " entries, instance has " +
                                    std::to_string(inst.n()) + " candidates");
    }
    if (j >= inst.m()) {
        throw std::invalid_argument("dimension: group index " + std::to_string(j) +
                                    " out of range");
    }
    Real u = 0.0;
    for (std::size_t i = 0; i < inst.n(); ++i) u += x[i] * inst.values[i][j];
    return u;
}

Real group_utility(const Instance& inst, const MarginalVector& x, std::size_t j) {
    return group_utility(inst, x.x, j);
}

SortedUtilityVector sorted_utilities(const std::vector<Real>& row) {
    SortedUtilityVector out;
    out.permutation.resize(row.size());
    std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
    std::stable_sort(out.permutation.begin(), out.permutation.end(),
                     [&](std::size_t a, std::size_t b) { return row[a] < row[b]; });
    out.entries.reserve(row.size());
    for (std::size_t j : out.permutation) out.entries.push_back(row[j]);
    return out;
}

Ordering lex_compare(const std::vector<Real>& u, const std::vector<Real>& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("dimension: lex_compare on vectors of lengths " +
                                    std::to_string(u.size()) + " and " +
                                    std::to_string(v.size()));
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) return Ordering::greater;
        if (u[i] < v[i]) return Ordering::less;
    }
    return Ordering::equal;
}

Ordering lex_compare(const SortedUtilityVector& u, const SortedUtilityVector& v) {
    return lex_compare(u.entries, v.entries);
}

}  // namespace leximax
