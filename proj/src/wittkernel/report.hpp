#ifndef WITTKERNEL_REPORT_HPP
#define WITTKERNEL_REPORT_HPP

// Classification reports: the one output shape every command produces.
// Serialization is byte-deterministic for identical inputs; all rational
// values stay exact (no decimals), places are ordered 2 < 3 < ... < inf.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace wk {

struct Report {
    using VerdictValue = std::variant<bool, int64_t, std::string>;

    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs; // echo of parsed inputs
    std::vector<std::pair<std::string, VerdictValue>> verdicts;

    struct InvariantRow {
        std::string name;
        std::string place;
        std::string value;
    };
    std::vector<InvariantRow> invariants;

    // Free-shape witnesses (kernel generators, ramification sets, orbits).
    std::vector<std::pair<std::string, nlohmann::ordered_json>> witnesses;

    std::vector<std::string> theorem_tags;

    void input(std::string name, std::string value);
    void verdict(std::string name, VerdictValue value);
    void invariant(std::string name, std::string place, std::string value);
    void witness(std::string name, nlohmann::ordered_json value);
    void tag(std::string theorem);
};

extern const char* const kReportVersion;

// JSON per the published schema: {command, inputs, verdicts, invariants,
// witnesses, theorem_tags, version}, two-space indent, trailing newline.
std::string render_json(const Report& r);

// Plain-text rendering with the same content and the same determinism.
std::string render_text(const Report& r);

} // namespace wk

#endif
