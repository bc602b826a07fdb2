#include "hopf/report.hpp"

#include <cstdio>
#include <sstream>

namespace hopf {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest_string(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string("fnv1a64:") + buf;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::info: return "info";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

CheckResult& Report::add(std::string name, bool passed, bool mandatory) {
    checks.push_back({std::move(name), passed ? Verdict::pass : Verdict::fail, mandatory, {}, json::object()});
    return checks.back();
}

CheckResult& Report::add_info(std::string name) {
    checks.push_back({std::move(name), Verdict::info, false, {}, json::object()});
    return checks.back();
}

CheckResult& Report::add_skipped(std::string name, std::string reason) {
    checks.push_back({std::move(name), Verdict::skipped, false, {std::move(reason)}, json::object()});
    return checks.back();
}

bool Report::passed() const { return failed().empty(); }

std::vector<std::string> Report::failed() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (c.mandatory && c.verdict == Verdict::fail) out.push_back(c.name);
    return out;
}

json Report::to_json() const {
    json j;
    j["tool"] = tool_name;
    j["version"] = tool_version;
    j["command"] = command;
    j["input"] = {{"name", input}, {"digest", input_digest}};
    json settings;
    settings["spec_points"] = spec_points;
    settings["degree"] = degree >= 0 ? json(degree) : json(nullptr);
    settings["star_assert"] = star_assert;
    j["settings"] = settings;
    json arr = json::array();
    for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["verdict"] = to_string(c.verdict);
        e["mandatory"] = c.mandatory;
        e["witnesses"] = c.witnesses;
        e["objects"] = c.objects;
        arr.push_back(e);
    }
    j["checks"] = arr;
    j["result"] = {{"passed", passed()}, {"failed", failed()}};
    return j;
}

std::string Report::render_json() const { return to_json().dump(2) + "\n"; }

namespace {

void render_object(std::ostringstream& os, const std::string& key, const json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_string()) {
        os << pad << key << " = " << v.get<std::string>() << "\n";
    } else if (v.is_object()) {
        os << pad << key << ":\n";
        for (const auto& [k, x] : v.items()) render_object(os, k, x, indent + 2);
    } else if (v.is_array() && !v.empty() && (v[0].is_array() || v[0].is_object())) {
        os << pad << key << ":\n";
        for (const auto& x : v) os << pad << "  " << x.dump() << "\n";
    } else {
        os << pad << key << " = " << v.dump() << "\n";
    }
}

}  // namespace

std::string Report::render_text() const {
    std::ostringstream os;
    os << tool_name << " " << tool_version << "\n";
    os << "command: " << command << "\n";
    os << "input: " << input << " (" << input_digest << ")\n";
    os << "spec points:";
    for (const auto& p : spec_points) os << " " << p;
    os << "\n";
    if (degree >= 0) os << "degree: " << degree << "\n";
    os << "star assertions: " << (star_assert ? "on" : "off") << "\n\n";
    for (const auto& c : checks) {
        os << "[" << to_string(c.verdict) << "] " << c.name << (c.mandatory ? "" : " (informational)") << "\n";
        for (const auto& w : c.witnesses) os << "    witness: " << w << "\n";
        for (const auto& [k, v] : c.objects.items()) render_object(os, k, v, 4);
    }
    auto f = failed();
    os << "\nresult: " << (f.empty() ? "PASS" : "FAIL");
    if (!f.empty()) {
        os << " (";
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? ", " : "") << f[i];
        os << ")";
    }
    os << "\n";
    return os.str();
}

}  // namespace hopf
