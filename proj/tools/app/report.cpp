#include "report.hpp"

namespace crossint::app {

json report_header(const std::string& command, json config) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    return j;
}

json to_json(const BigInt& v) { return to_string(v); }

json to_json(const BigRational& v) {
    return json{{"num", to_string(BigInt(numerator(v)))}, {"den", to_string(BigInt(denominator(v)))}};
}

json to_json(SubsetWord s) { return s.elements(); }

json to_json(const Family& f) {
    json members = json::array();
    for (SubsetWord s : f) members.push_back(to_json(s));
    json j{{"n", f.ground()}, {"size", f.size()}, {"members", members}, {"text", to_text(f)}};
    j["k"] = f.uniformity() ? json(*f.uniformity()) : json("mixed");
    return j;
}

json to_json(const Basis& b) {
    json layers = json::object();
    for (const auto& [size, count] : b.layers) layers[std::to_string(size)] = count;
    return json{{"t", b.t}, {"k", b.k}, {"s", b.s}, {"layers", layers}, {"members", to_json(b.members)}};
}

json to_json(const IneqReport& r) {
    json params = json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    json links = json::array();
    for (const IneqLink& l : r.links) {
        links.push_back(json{{"label", l.label},
                             {"lhs", to_json(l.lhs)},
                             {"rhs", to_json(l.rhs)},
                             {"strict", l.strict},
                             {"identity", l.identity},
                             {"holds", l.holds()}});
    }
    json witness = json::array();
    for (const BigInt& w : r.witness) witness.push_back(to_json(w));
    return json{{"check", r.check},   {"params", params},        {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)}, {"strict", r.strict},    {"verdict", r.verdict},
                {"slack", to_json(r.slack)}, {"links", links},    {"witness", witness},
                {"note", r.note}};
}

json to_json(const BranchReport& r) {
    json survivors = json::array();
    for (const Sequence& s : r.survivors) {
        survivors.push_back(json{{"sequence", s.elements}, {"weight", to_json(s.weight)}});
    }
    json by_length = json::object();
    for (const auto& [len, count] : r.survivors_by_length) {
        by_length[std::to_string(len)] = json{{"count", count}, {"mass", to_json(r.mass_by_length.at(len))}};
    }
    json cover = json::array();
    for (const auto& [set, index] : r.cover) {
        cover.push_back(json{{"member", to_json(set)}, {"survivor", index ? json(*index) : json(nullptr)}});
    }
    json sums = json::array();
    for (const BigRational& w : r.stage_weight_sums) sums.push_back(to_json(w));
    json j{{"t", r.t},
           {"k", r.k},
           {"s1", r.s1},
           {"r1", r.r1 ? json(*r.r1) : json(nullptr)},
           {"stages", r.stages},
           {"stage_weight_sums", sums},
           {"weight_conserved", r.weight_conserved},
           {"survivors_by_length", by_length},
           {"survivors", survivors},
           {"cover", cover},
           {"cover_ok", r.cover_ok},
           {"weight_bound_ok", r.weight_bound_ok},
           {"lhs15", to_json(r.lhs15)},
           {"lhs15_le_1", r.lhs15 <= 1}};
    if (r.r1) {
        j["lhs14"] = to_json(r.lhs14);
        j["lhs14_le_1"] = r.lhs14 <= 1;
    }
    return j;
}

json to_json(const SearchResult& r) {
    json witnesses = json::array();
    for (const Family& f : r.witnesses) witnesses.push_back(to_json(f));
    return json{{"optimum", to_json(r.optimum)},
                {"witnesses", witnesses},
                {"nodes_explored", r.nodes_explored},
                {"bound_cuts", r.bound_cuts},
                {"exhaustive", r.exhaustive},
                {"method", r.method}};
}

std::string csv_preamble(const std::string& context, const std::string& columns) {
    return std::string("# ") + kToolName + " " + kToolVersion + " " + context + "\n" + columns + "\n";
}

std::string params_text(const IneqReport& r) {
    std::string out;
    for (const auto& [key, value] : r.params) {
        if (!out.empty()) out += ';';
        out += key + "=" + value;
    }
    return out;
}

std::string csv_row(const IneqReport& r) {
    return r.check + "," + params_text(r) + "," + to_string(r.lhs) + "," + to_string(r.rhs) + "," +
           to_string(r.slack) + "," + (r.verdict ? "true" : "false") + "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace crossint::app
