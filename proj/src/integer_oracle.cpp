#include "leximax/integer_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace leximax {

namespace {

void guard(const Instance& inst, int k) {
    validate(inst);
    if (inst.n() > 20) {
        throw std::invalid_argument("limit: brute force requires n <= 20, got " +
                                    std::to_string(inst.n()));
    }
    if (k < 1 || static_cast<std::size_t>(k) > inst.n()) {
        throw std::invalid_argument("range: k = " + std::to_string(k) + " outside [1, n]");
    }
}

template <typename Visit>
void for_each_cohort(std::size_t n, int k, Visit&& visit) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<std::size_t> cohort;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) cohort.push_back(i);
        }
        visit(cohort);
    }
}

std::vector<Real> cohort_utilities(const Instance& inst,
                                   const std::vector<std::size_t>& cohort) {
    std::vector<Real> u(inst.m(), 0.0);
    for (std::size_t i : cohort) {
        for (std::size_t j = 0; j < inst.m(); ++j) u[j] += inst.values[i][j];
    }
    return u;
}

}  // namespace

IntegerLeximaxResult integer_leximax_bruteforce(const Instance& inst, int k) {
    guard(inst, k);
    IntegerLeximaxResult res;
    for_each_cohort(inst.n(), k, [&](const std::vector<std::size_t>& cohort) {
        auto sorted = sorted_utilities(cohort_utilities(inst, cohort)).entries;
        if (res.cohorts.empty()) {
            res.sorted_vector = std::move(sorted);
            res.cohorts.push_back(cohort);
            return;
        }
        switch (lex_compare(sorted, res.sorted_vector)) {
            case Ordering::greater:
                res.sorted_vector = std::move(sorted);
                res.cohorts.assign(1, cohort);
                break;
            case Ordering::equal:
                res.cohorts.push_back(cohort);
                break;
            case Ordering::less:
                break;
        }
    });
    return res;
}

IntegerMaxminResult integer_maxmin_bruteforce(const Instance& inst, int k) {
    guard(inst, k);
    IntegerMaxminResult res;
    bool first = true;
    for_each_cohort(inst.n(), k, [&](const std::vector<std::size_t>& cohort) {
        const auto u = cohort_utilities(inst, cohort);
        const Real v = *std::min_element(u.begin(), u.end());
        if (first || v > res.value) {
            res.value = v;
            res.cohorts.assign(1, cohort);
            first = false;
        } else if (v == res.value) {
            res.cohorts.push_back(cohort);
        }
    });
    return res;
}

Instance hitting_set_to_instance(const std::vector<std::string>& universe,
                                 const std::vector<std::vector<std::size_t>>& collection,
                                 int k) {
    if (universe.empty()) throw std::invalid_argument("dimension: empty universe");
    if (collection.empty()) throw std::invalid_argument("dimension: empty collection");
    Instance inst;
    inst.candidate_ids = universe;
    inst.values.assign(universe.size(), std::vector<Real>(collection.size(), 0.0));
    for (std::size_t j = 0; j < collection.size(); ++j) {
        inst.group_ids.push_back("C" + std::to_string(j + 1));
        for (std::size_t i : collection[j]) {
            if (i >= universe.size()) {
                throw std::invalid_argument("range: collection set " + std::to_string(j) +
                                            " references element " + std::to_string(i) +
                                            " outside the universe");
            }
            inst.values[i][j] = 1.0;
        }
    }
    inst.k = k;
    validate(inst);
    return inst;
}

}  // namespace leximax
