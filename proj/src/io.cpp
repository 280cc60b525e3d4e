#include "leximax/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace leximax {

using nlohmann::json;

Real round12(Real v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("parse: ") + e.what());
    }
}

std::vector<std::string> get_string_list(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw std::invalid_argument(std::string("parse: missing or non-list field '") +
                                    key + "'");
    }
    std::vector<std::string> out;
    for (const auto& item : doc[key]) {
        if (!item.is_string()) {
            throw std::invalid_argument(std::string("parse: field '") + key +
                                        "' must contain strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<std::vector<Real>> get_matrix(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw std::invalid_argument(std::string("parse: missing or non-list field '") +
                                    key + "'");
    }
    std::vector<std::vector<Real>> out;
    for (const auto& row : doc[key]) {
        if (!row.is_array()) {
            throw std::invalid_argument(std::string("parse: field '") + key +
                                        "' must be a matrix");
        }
        std::vector<Real> r;
        for (const auto& cell : row) {
            if (!cell.is_number()) {
                throw std::invalid_argument(std::string("parse: field '") + key +
                                            "' must contain numbers");
            }
            r.push_back(cell.get<Real>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

json matrix_to_json(const std::vector<std::vector<Real>>& mat) {
    json rows = json::array();
    for (const auto& row : mat) {
        json r = json::array();
        for (Real v : row) r.push_back(round12(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

ParsedDocument parse_instance(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw std::invalid_argument("parse: document must be an object");
    if (doc.contains("candidates")) {
        Instance inst;
        inst.candidate_ids = get_string_list(doc, "candidates");
        inst.group_ids = get_string_list(doc, "groups");
        inst.values = get_matrix(doc, "values");
        if (!doc.contains("k") || !doc["k"].is_number_integer()) {
            throw std::invalid_argument("parse: missing or non-integer field 'k'");
        }
        inst.k = doc["k"].get<int>();
        validate(inst);
        return inst;
    }
    if (doc.contains("solutions")) {
        FiniteInstance inst;
        inst.solution_ids = get_string_list(doc, "solutions");
        inst.group_ids = get_string_list(doc, "groups");
        inst.utilities = get_matrix(doc, "utilities");
        validate(inst);
        return inst;
    }
    throw std::invalid_argument(
        "parse: document has neither 'candidates' nor 'solutions'");
}

MarginalVector parse_marginals(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("x") || !doc["x"].is_array()) {
        throw std::invalid_argument("parse: marginals document needs a list field 'x'");
    }
    MarginalVector mv;
    for (const auto& cell : doc["x"]) {
        if (!cell.is_number()) {
            throw std::invalid_argument("parse: field 'x' must contain numbers");
        }
        mv.x.push_back(cell.get<Real>());
    }
    if (!doc.contains("k") || !doc["k"].is_number()) {
        throw std::invalid_argument("parse: missing or non-numeric field 'k'");
    }
    mv.k = doc["k"].get<Real>();
    validate(mv);
    return mv;
}

std::string serialize(const Instance& inst) {
    json doc;
    doc["candidates"] = inst.candidate_ids;
    doc["groups"] = inst.group_ids;
    doc["values"] = matrix_to_json(inst.values);
    doc["k"] = inst.k;
    return doc.dump(2) + "\n";
}

std::string serialize(const FiniteInstance& inst) {
    json doc;
    doc["solutions"] = inst.solution_ids;
    doc["groups"] = inst.group_ids;
    doc["utilities"] = matrix_to_json(inst.utilities);
    return doc.dump(2) + "\n";
}

std::string serialize(const MarginalVector& mv) {
    json doc;
    json xs = json::array();
    for (Real v : mv.x) xs.push_back(round12(v));
    doc["x"] = std::move(xs);
    doc["k"] = round12(mv.k);
    return doc.dump(2) + "\n";
}

}  // namespace leximax
