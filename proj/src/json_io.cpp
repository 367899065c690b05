#include "covsolve/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace covsolve {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json set_to_array(const AttrSet& s) { return ordered_json(s.members()); }

ordered_json family_to_array(const SetFamily& family) {
    ordered_json arr = ordered_json::array();
    for (const AttrSet& s : family) arr.push_back(set_to_array(s));
    return arr;
}

AttrSet set_from_array(const ordered_json& value, const std::string& field) {
    if (!value.is_array())
        throw ValidationError(ErrorCode::BadInput,
                              "field \"" + field + "\": expected an array of integers");
    AttrSet s;
    for (const auto& v : value) {
        if (!v.is_number_integer())
            throw ValidationError(ErrorCode::BadInput,
                                  "field \"" + field + "\": expected an array of integers");
        const long long i = v.get<long long>();
        if (i < 0 || i >= AttrSet::max_universe)
            throw ValidationError(ErrorCode::AttributeOutOfRange,
                                  "field \"" + field + "\": attribute " + std::to_string(i) +
                                      " outside [0, " + std::to_string(AttrSet::max_universe) +
                                      ")");
        s.set(static_cast<int>(i));
    }
    return s;
}

SetFamily family_from_array(const ordered_json& value, const std::string& field) {
    if (!value.is_array())
        throw ValidationError(ErrorCode::BadInput,
                              "field \"" + field + "\": expected an array of sets");
    SetFamily family;
    for (std::size_t i = 0; i < value.size(); ++i)
        family.push_back(set_from_array(value[i], field + "[" + std::to_string(i) + "]"));
    return family;
}

}  // namespace

Instance instance_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(ErrorCode::BadInput, std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object())
        throw ValidationError(ErrorCode::BadInput, "instance document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ValidationError(ErrorCode::BadInput, "missing or non-integer field \"n\"");
    if (!doc.contains("forbidden"))
        throw ValidationError(ErrorCode::BadInput, "missing field \"forbidden\"");
    if (!doc.contains("required"))
        throw ValidationError(ErrorCode::BadInput, "missing field \"required\"");
    Instance inst;
    inst.n = doc["n"].get<int>();
    inst.forbidden = family_from_array(doc["forbidden"], "forbidden");
    inst.required = family_from_array(doc["required"], "required");
    if (doc.contains("attribute_names")) {
        const auto& names = doc["attribute_names"];
        if (!names.is_array())
            throw ValidationError(ErrorCode::BadInput,
                                  "field \"attribute_names\": expected an array of strings");
        for (const auto& name : names) {
            if (!name.is_string())
                throw ValidationError(ErrorCode::BadInput,
                                      "field \"attribute_names\": expected an array of strings");
            inst.attribute_names.push_back(name.get<std::string>());
        }
    }
    return validate(inst);
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(ErrorCode::BadInput, "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return instance_from_json(buf.str());
}

std::string instance_to_json(const Instance& inst) {
    ordered_json doc;
    doc["n"] = inst.n;
    if (!inst.attribute_names.empty()) doc["attribute_names"] = inst.attribute_names;
    doc["forbidden"] = family_to_array(inst.forbidden);
    doc["required"] = family_to_array(inst.required);
    return doc.dump(2) + "\n";
}

std::string covering_to_json(const Covering& cov, const std::string& method,
                             const GreedyTrace* trace) {
    ordered_json doc;
    doc["fragments"] = family_to_array(cov.fragments);
    doc["size"] = cov.size();
    doc["method"] = method;
    int storage = 0;
    for (const AttrSet& x : cov.fragments) storage += x.count();
    doc["storage"] = storage;
    doc["max_degree"] = family_degree(cov.fragments, AttrSet::max_universe);
    if (trace) {
        ordered_json steps = ordered_json::array();
        for (const GreedyStep& step : trace->steps) {
            ordered_json s;
            s["required"] = step.required_index;
            switch (step.action) {
                case GreedyAction::Merged:
                    s["action"] = "merged";
                    s["fragment"] = step.fragment;
                    break;
                case GreedyAction::AlreadyContained:
                    s["action"] = "contained";
                    break;
                case GreedyAction::AppendedNew:
                    s["action"] = "appended";
                    break;
            }
            steps.push_back(std::move(s));
        }
        doc["trace"] = std::move(steps);
    }
    return doc.dump(2) + "\n";
}

std::string bounds_to_json(const BoundsReport& report) {
    ordered_json doc;
    doc["lower"] = report.lower;
    doc["greedy_upper"] = report.greedy_upper;
    doc["heuristic_upper"] = report.heuristic_upper;
    doc["refined_upper"] = report.refined_upper;
    doc["probabilistic_size_bound"] = report.probabilistic_size_bound;
    doc["probabilistic_degree_bound"] = report.probabilistic_degree_bound;
    doc["k"] = report.k;
    doc["degF"] = report.degF;
    doc["degA"] = report.degA;
    return doc.dump(2) + "\n";
}

std::string optimal_report_to_json(const OptimalReport& report) {
    ordered_json doc;
    doc["optimal_size"] = report.optimal_size;
    doc["cover"] = family_to_array(report.one_cover.fragments);
    if (report.canonical_optimal_covers) {
        doc["num_canonical_optimal"] = report.canonical_optimal_covers->size();
        ordered_json covers = ordered_json::array();
        for (const Covering& cov : *report.canonical_optimal_covers)
            covers.push_back(family_to_array(cov.fragments));
        doc["canonical_optimal_covers"] = std::move(covers);
    } else {
        doc["num_canonical_optimal"] = nullptr;
    }
    doc["nodes"] = report.nodes_explored;
    return doc.dump(2) + "\n";
}

std::string feasibility_to_json(const Instance& inst) {
    ordered_json doc;
    const auto violation = feasibility_violation(inst);
    doc["feasible"] = !violation.has_value();
    if (violation) {
        ordered_json v;
        v["forbidden"] = set_to_array(violation->first);
        v["required"] = set_to_array(violation->second);
        doc["violation"] = std::move(v);
    }
    return doc.dump(2) + "\n";
}

std::string algebraic_to_json(int optimal_size, const std::string& method) {
    ordered_json doc;
    doc["optimal_size"] = optimal_size;
    doc["method"] = method;
    return doc.dump(2) + "\n";
}

std::string roots_to_json(const IdealGenerators& gens, const std::vector<Assignment>& roots,
                          bool include_generators) {
    ordered_json doc;
    doc["n"] = gens.n;
    doc["k"] = gens.k;
    if (include_generators) {
        ordered_json lines = ordered_json::array();
        for (const BoolPoly& p : gens.g1) lines.push_back(poly_to_string(p, gens.n));
        for (const BoolPoly& p : gens.g2) lines.push_back(poly_to_string(p, gens.n));
        doc["generators"] = std::move(lines);
    }
    doc["count"] = roots.size();
    ordered_json list = ordered_json::array();
    for (const Assignment& root : roots) {
        ordered_json r;
        ordered_json bits = ordered_json::array();
        for (std::uint8_t v : root.values) bits.push_back(static_cast<int>(v));
        r["assignment"] = std::move(bits);
        r["covering"] = family_to_array(multicoloring_to_covering(to_multicoloring(root)).fragments);
        list.push_back(std::move(r));
    }
    doc["roots"] = std::move(list);
    return doc.dump(2) + "\n";
}

}  // namespace covsolve
