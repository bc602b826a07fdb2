#pragma once

// Deterministic verification reports: ordered check results with witnesses
// and computed objects, rendered as text or JSON.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hopf {

inline constexpr const char* tool_name = "hopf-forge";
inline constexpr const char* tool_version = "0.1.0";

using json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_string(std::string_view bytes);  // "fnv1a64:<16 hex digits>"

enum class Verdict { pass, fail, info, skipped };
std::string to_string(Verdict v);

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    bool mandatory = true;
    std::vector<std::string> witnesses;
    json objects = json::object();  // computed objects, scalars as literals
};

struct Report {
    std::string command;
    std::string input;
    std::string input_digest;
    std::vector<std::string> spec_points;
    int degree = -1;  // -1 when not applicable
    bool star_assert = true;
    std::vector<CheckResult> checks;

    CheckResult& add(std::string name, bool passed, bool mandatory = true);
    CheckResult& add_info(std::string name);
    CheckResult& add_skipped(std::string name, std::string reason);

    // every mandatory check passed
    bool passed() const;
    std::vector<std::string> failed() const;

    json to_json() const;
    std::string render_json() const;
    std::string render_text() const;
};

}  // namespace hopf
