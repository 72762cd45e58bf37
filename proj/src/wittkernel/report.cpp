#include "wittkernel/report.hpp"

namespace wk {

const char* const kReportVersion = "0.1.0";

void Report::input(std::string name, std::string value) {
    inputs.emplace_back(std::move(name), std::move(value));
}

void Report::verdict(std::string name, VerdictValue value) {
    verdicts.emplace_back(std::move(name), std::move(value));
}

void Report::invariant(std::string name, std::string place, std::string value) {
    invariants.push_back({std::move(name), std::move(place), std::move(value)});
}

void Report::witness(std::string name, nlohmann::ordered_json value) {
    witnesses.emplace_back(std::move(name), std::move(value));
}

void Report::tag(std::string theorem) { theorem_tags.push_back(std::move(theorem)); }

namespace {

nlohmann::ordered_json verdict_json(const Report::VerdictValue& v) {
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v);
    if (std::holds_alternative<int64_t>(v)) return std::get<int64_t>(v);
    return std::get<std::string>(v);
}

std::string verdict_string(const Report::VerdictValue& v) {
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
    if (std::holds_alternative<int64_t>(v)) return std::to_string(std::get<int64_t>(v));
    return std::get<std::string>(v);
}

} // namespace

std::string render_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.verdicts) verdicts[k] = verdict_json(v);
    j["verdicts"] = verdicts;
    nlohmann::ordered_json invariants = nlohmann::ordered_json::array();
    for (const Report::InvariantRow& row : r.invariants) {
        nlohmann::ordered_json o;
        o["name"] = row.name;
        o["place"] = row.place;
        o["value"] = row.value;
        invariants.push_back(o);
    }
    j["invariants"] = invariants;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.witnesses) witnesses[k] = v;
    j["witnesses"] = witnesses;
    j["theorem_tags"] = r.theorem_tags;
    j["version"] = kReportVersion;
    return j.dump(2) + "\n";
}

std::string render_text(const Report& r) {
    std::string out;
    out += "command: " + r.command + "\n";
    out += "inputs:\n";
    for (const auto& [k, v] : r.inputs) out += "  " + k + " = " + v + "\n";
    out += "verdicts:\n";
    for (const auto& [k, v] : r.verdicts) out += "  " + k + " = " + verdict_string(v) + "\n";
    if (!r.invariants.empty()) {
        out += "invariants:\n";
        for (const Report::InvariantRow& row : r.invariants)
            out += "  " + row.name + " @ " + row.place + " = " + row.value + "\n";
    }
    if (!r.witnesses.empty()) {
        out += "witnesses:\n";
        for (const auto& [k, v] : r.witnesses)
            out += "  " + k + " = " + v.dump() + "\n";
    }
    out += "theorems: ";
    for (std::size_t i = 0; i < r.theorem_tags.size(); ++i) {
        if (i) out += ", ";
        out += r.theorem_tags[i];
    }
    out += "\n";
    return out;
}

} // namespace wk
