// Command-line surface over the leximax library: staged LP solves,
// definition checkers, rounding, sampling experiments, and the brute-force
// integer oracles. All randomized commands take an explicit --seed.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leximax/finite_approx.hpp"
#include "leximax/integer_oracle.hpp"
#include "leximax/io.hpp"
#include "leximax/leximax_lp.hpp"
#include "leximax/model.hpp"
#include "leximax/rounding.hpp"
#include "leximax/sampling.hpp"

using nlohmann::json;
using namespace leximax;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("io: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance load_instance(const std::string& path) {
    auto doc = parse_instance(read_input(path));
    if (auto* inst = std::get_if<Instance>(&doc)) return *inst;
    throw std::invalid_argument("parse: expected a candidate instance, got a finite one");
}

FiniteInstance load_finite(const std::string& path) {
    auto doc = parse_instance(read_input(path));
    if (auto* inst = std::get_if<FiniteInstance>(&doc)) return *inst;
    throw std::invalid_argument("parse: expected a finite instance, got a candidate one");
}

json reals_to_json(const std::vector<Real>& v) {
    json out = json::array();
    for (Real r : v) out.push_back(round12(r));
    return out;
}

json result_to_json(const LeximaxResult& res) {
    json doc;
    doc["x"] = reals_to_json(res.x.x);
    doc["k"] = round12(res.x.k);
    doc["gamma"] = reals_to_json(res.gamma.gammas);
    doc["cumulative"] = reals_to_json(res.gamma.cumulative);
    doc["stage_cuts"] = res.stage_cuts;
    switch (res.mode) {
        case LeximaxMode::exact: doc["mode"] = "exact"; break;
        case LeximaxMode::recursive:
            doc["mode"] = "recursive";
            doc["alpha"] = reals_to_json(res.alpha.alpha);
            break;
        case LeximaxMode::significant:
            doc["mode"] = "significant";
            doc["epsilon"] = round12(res.epsilon);
            break;
    }
    return doc;
}

std::vector<Real> parse_alpha_list(const std::string& csv) {
    std::vector<Real> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("usage: bad --alpha entry '" + item + "'");
        }
    }
    return out;
}

int cmd_solve(const std::string& path, const std::string& mode, const std::string& alpha_csv,
              double epsilon, bool have_eps) {
    const Instance inst = load_instance(path);
    LeximaxResult res;
    if (mode == "exact") {
        res = leximax_marginals(inst);
    } else if (mode == "recursive") {
        SlackVector alpha;
        alpha.alpha = parse_alpha_list(alpha_csv);
        res = approx_leximax_marginals(inst, alpha);
    } else if (mode == "significant") {
        if (!have_eps) throw std::invalid_argument("usage: significant mode needs --epsilon");
        res = significant_leximax_marginals(inst, epsilon);
    } else {
        throw std::invalid_argument("usage: unknown mode '" + mode + "'");
    }
    std::cout << result_to_json(res).dump(2) << "\n";
    return 0;
}

int cmd_check(const std::string& path, const std::string& definition, double epsilon,
              double eps2, double a1, double a2) {
    const FiniteInstance inst = load_finite(path);
    json table = json::array();
    const auto exact = exact_leximax_set(inst);
    for (std::size_t s = 0; s < inst.size(); ++s) {
        bool value = false;
        if (definition == "exact") {
            value = std::find(exact.begin(), exact.end(), s) != exact.end();
        } else if (definition == "elementwise") {
            value = is_elementwise_approx(inst, s, epsilon);
        } else if (definition == "tradeoff") {
            value = is_tradeoff_approx(inst, s, epsilon);
        } else if (definition == "sig-tradeoff") {
            value = is_sig_tradeoff(inst, s, epsilon, eps2);
        } else if (definition == "recursive") {
            value = is_recursive_approx(inst, s, epsilon);
        } else if (definition == "significant") {
            const auto sig = significant_set(inst, epsilon);
            value = std::find(sig.begin(), sig.end(), s) != sig.end();
        } else if (definition == "function-slack") {
            value = is_function_slack_significant(inst, s, a1, a2);
        } else {
            throw std::invalid_argument("usage: unknown definition '" + definition + "'");
        }
        json row;
        row["solution"] = inst.solution_ids[s];
        row["value"] = value;
        table.push_back(std::move(row));
    }
    json doc;
    doc["definition"] = definition;
    doc["results"] = table;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_round(const std::string& path, std::uint64_t seed) {
    const MarginalVector mv = parse_marginals(read_input(path));
    const Cohort cohort = dependent_round(mv, seed);
    json doc;
    doc["selected"] = cohort.selected;
    doc["indicator"] = cohort.indicator;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_sample(const std::string& inst_path, const std::string& marg_path, long trials,
               double delta, std::uint64_t seed) {
    const Instance inst = load_instance(inst_path);
    const MarginalVector mv = parse_marginals(read_input(marg_path));
    const auto report = concentration_report(inst, mv, delta, trials, seed);
    json groups = json::array();
    for (std::size_t j = 0; j < report.size(); ++j) {
        json g;
        g["group"] = inst.group_ids[j];
        g["empirical_tail"] = round12(report[j].empirical_tail);
        g["bound"] = round12(report[j].bound);
        groups.push_back(std::move(g));
    }
    json doc;
    doc["delta"] = round12(delta);
    doc["trials"] = trials;
    doc["groups"] = groups;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_oracle(const std::string& path, const std::string& alpha_csv) {
    const Instance inst = load_instance(path);
    SlackVector alpha;
    if (alpha_csv.empty()) {
        alpha.alpha.assign(inst.m(), 0.0);
    } else {
        alpha.alpha = parse_alpha_list(alpha_csv);
    }
    const LeximaxResult lazy = approx_leximax_marginals(inst, alpha);
    const LeximaxResult full = full_enumeration_reference(inst, alpha);
    Real max_disc = 0.0;
    for (std::size_t l = 0; l < inst.m(); ++l) {
        max_disc = std::max(max_disc,
                            std::abs(lazy.gamma.gammas[l] - full.gamma.gammas[l]));
    }
    json doc;
    doc["lazy_gamma"] = reals_to_json(lazy.gamma.gammas);
    doc["full_gamma"] = reals_to_json(full.gamma.gammas);
    doc["max_discrepancy"] = round12(max_disc);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_integer(const std::string& path, int k, bool maxmin) {
    const Instance inst = load_instance(path);
    json doc;
    json cohorts = json::array();
    auto names = [&](const std::vector<std::size_t>& cohort) {
        json c = json::array();
        for (std::size_t i : cohort) c.push_back(inst.candidate_ids[i]);
        return c;
    };
    if (maxmin) {
        const auto res = integer_maxmin_bruteforce(inst, k);
        doc["value"] = round12(res.value);
        for (const auto& c : res.cohorts) cohorts.push_back(names(c));
    } else {
        const auto res = integer_leximax_bruteforce(inst, k);
        doc["sorted_vector"] = reals_to_json(res.sorted_vector);
        for (const auto& c : res.cohorts) cohorts.push_back(names(c));
    }
    doc["cohorts"] = cohorts;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leximax cohort selection toolkit"};
    app.require_subcommand(1);

    std::string path, path2, mode = "exact", alpha_csv, definition;
    double epsilon = 0.0, eps2 = 0.0, a1 = 0.0, a2 = 0.0, delta = 0.0;
    bool have_eps = false;
    std::uint64_t seed = 0;
    long trials = 0;
    int k = 0;
    bool maxmin = false;

    auto* solve_cmd = app.add_subcommand("solve", "Leximax marginal probabilities");
    solve_cmd->add_option("instance", path)->required();
    solve_cmd->add_option("--mode", mode);
    solve_cmd->add_option("--alpha", alpha_csv);
    solve_cmd->add_option("--epsilon", epsilon)->each([&](const std::string&) {
        have_eps = true;
    });

    auto* check_cmd = app.add_subcommand("check", "Run a definition checker");
    check_cmd->add_option("instance", path)->required();
    check_cmd->add_option("--definition", definition)->required();
    check_cmd->add_option("--epsilon", epsilon);
    check_cmd->add_option("--eps2", eps2);
    check_cmd->add_option("--a1", a1);
    check_cmd->add_option("--a2", a2);

    auto* round_cmd = app.add_subcommand("round", "Dependent rounding to size k");
    round_cmd->add_option("marginals", path)->required();
    round_cmd->add_option("--seed", seed)->required();

    auto* sample_cmd = app.add_subcommand("sample", "Concentration experiment");
    sample_cmd->add_option("instance", path)->required();
    sample_cmd->add_option("marginals", path2)->required();
    sample_cmd->add_option("--trials", trials)->required();
    sample_cmd->add_option("--delta", delta)->required();
    sample_cmd->add_option("--seed", seed)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Lazy vs full-enumeration gammas");
    oracle_cmd->add_option("instance", path)->required();
    oracle_cmd->add_option("--alpha", alpha_csv);

    auto* integer_cmd = app.add_subcommand("integer", "Brute-force integer cohorts");
    integer_cmd->add_option("instance", path)->required();
    integer_cmd->add_option("-k", k)->required();
    integer_cmd->add_flag("--maxmin", maxmin);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return cmd_solve(path, mode, alpha_csv, epsilon, have_eps);
        if (check_cmd->parsed()) return cmd_check(path, definition, epsilon, eps2, a1, a2);
        if (round_cmd->parsed()) return cmd_round(path, seed);
        if (sample_cmd->parsed()) return cmd_sample(path, path2, trials, delta, seed);
        if (oracle_cmd->parsed()) return cmd_oracle(path, alpha_csv);
        if (integer_cmd->parsed()) return cmd_integer(path, k, maxmin);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
