#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopf/cli.hpp"
#include "hopf/definition.hpp"
#include "hopf/fixtures.hpp"
#include "hopf/pairing.hpp"
#include "hopf/report.hpp"

using namespace hopf;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& name) { return std::string(HOPF_FIXTURES_DIR) + "/" + name + ".qg"; }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string scratch(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / ("hopf_forge_test_" + name);
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

json report_of(const Run& r) { return json::parse(r.out); }

const json* check_named(const json& rep, const std::string& name) {
    for (const auto& c : rep["checks"])
        if (c["name"] == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("shipped fixture files round-trip byte-identically") {
    std::vector<std::string> names = fixture_names();
    for (const auto& n : presentation_preset_names()) names.push_back(n);
    for (const auto& n : names) {
        CAPTURE(n);
        std::string bytes = slurp(fixture_path(n));
        REQUIRE(!bytes.empty());
        CHECK(save_definition(parse_definition(bytes)) == bytes);
        Run e = run({"examples", "emit", n});
        CHECK(e.code == 0);
        CHECK(e.out == bytes);
    }
}

TEST_CASE("load of c_z2 gives a 2-dimensional structure-constants object") {
    Definition d = parse_definition(slurp(fixture_path("c_z2")));
    REQUIRE(std::holds_alternative<StructureDef>(d));
    CHECK(std::get<StructureDef>(d).dim() == 2);
}

TEST_CASE("analyze c_s3: mu = 1, sigma = identity, delta = unit") {
    Run r = run({"analyze", fixture_path("c_s3"), "--format", "json"});
    CHECK(r.code == 0);
    json rep = report_of(r);
    CHECK(rep["tool"] == "hopf-forge");
    CHECK(rep["result"]["passed"] == true);
    const json* m = check_named(rep, "modular-data");
    REQUIRE(m);
    CHECK((*m)["objects"]["mu"] == "1");
    json id = json::array();
    for (int i = 0; i < 6; ++i) {
        json row = json::array();
        for (int j = 0; j < 6; ++j) row.push_back(i == j ? "1" : "0");
        id.push_back(row);
    }
    CHECK((*m)["objects"]["sigma"] == id);
    json unit = json::object();
    for (const auto& l : fixture("c_s3").basis) unit[l] = "1";
    CHECK((*m)["objects"]["delta"] == unit);
}

TEST_CASE("analyze sweedler_h4 exits 1 with star assertions and 0 without") {
    Run on = run({"analyze", fixture_path("sweedler_h4"), "--format", "json"});
    CHECK(on.code == 1);
    json rep = report_of(on);
    CHECK(rep["result"]["failed"] == json::array({"phi-positivity"}));
    CHECK((*check_named(rep, "phi-positivity"))["objects"]["verdict"] == "indefinite");
    CHECK((*check_named(rep, "modular-data"))["objects"]["mu"] == "-1");

    Run off = run({"analyze", fixture_path("sweedler_h4"), "--no-star-assert", "--format", "json"});
    CHECK(off.code == 0);
    json rep2 = report_of(off);
    CHECK(rep2["settings"]["star_assert"] == false);
    CHECK((*check_named(rep2, "phi-positivity"))["verdict"] == "info");
    CHECK((*check_named(rep2, "modular-data"))["objects"]["mu"] == "-1");
}

TEST_CASE("reports are deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"analyze", fixture_path("group_s3")},
                                                                  {"analyze", "sweedler_h4", "--format", "json"},
                                                                  {"pair", "pairing-uqsu2-suq2", "--degree", "2"}}) {
        Run a = run(args), b = run(args);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("input digest covers the input bytes") {
    std::string bytes = slurp(fixture_path("c_z2"));
    Run r = run({"validate", fixture_path("c_z2"), "--format", "json"});
    CHECK(report_of(r)["input"]["digest"] == digest_string(bytes));
}

TEST_CASE("exit codes") {
    CHECK(run({"validate", fixture_path("c_z4")}).code == 0);
    CHECK(run({"validate", fixture_path("semilattice2")}).code == 1);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"analyze"}).code == 2);
    CHECK(run({"analyze", "no_such_input"}).code == 2);
    CHECK(run({"analyze", "c_z2", "--format", "yaml"}).code == 2);
    CHECK(run({"analyze", "c_z2", "--spec-points", "3/2"}).code == 2);
    CHECK(run({"analyze", "uq-su2"}).code == 2);
    CHECK(run({"pair", "uq-su2"}).code == 2);
    CHECK(run({"subcheck", "c_z4", "--subalgebra", "nope"}).code == 2);
    CHECK(run({"examples", "emit", "nope"}).code == 2);

    Run bad = run({"validate", scratch("broken.qg", "{\"format\": ")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("parse error") != std::string::npos);

    std::string text = slurp(fixture_path("c_z2"));
    auto at = text.find("hopf-forge/1");
    REQUIRE(at != std::string::npos);
    text.replace(at, 12, "hopf-forge/9");
    Run version = run({"validate", scratch("version.qg", text)});
    CHECK(version.code == 2);
    CHECK(version.err.find("format") != std::string::npos);
}

TEST_CASE("non-associative multiplication is reported with a witness") {
    StructureDef d = fixture("c_z2");
    // e0 e0 = e1 breaks associativity against the unit
    for (auto& t : d.mul)
        if (t.i == 0 && t.j == 0) t.k = 1;
    Run r = run({"validate", scratch("nonassoc.qg", save_definition(d)), "--format", "json"});
    CHECK(r.code == 1);
    json rep = report_of(r);
    const json* a = check_named(rep, "algebra");
    REQUIRE(a);
    CHECK((*a)["verdict"] == "fail");
    CHECK(!(*a)["witnesses"].empty());
    CHECK((*check_named(rep, "tmaps"))["verdict"] == "skipped");
}

TEST_CASE("spec points from flag and environment") {
    Run r = run({"analyze", "c_z2", "--spec-points", "1/5,4/5", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(report_of(r)["settings"]["spec_points"] == json::array({"1/5", "4/5"}));
    setenv("HOPF_FORGE_SPEC_POINTS", "2/7", 1);
    Run e = run({"analyze", "c_z2", "--format", "json"});
    unsetenv("HOPF_FORGE_SPEC_POINTS");
    CHECK(report_of(e)["settings"]["spec_points"] == json::array({"2/7"}));
    Run d = run({"analyze", "c_z2", "--format", "json"});
    CHECK(report_of(d)["settings"]["spec_points"] == json::array({"1/3", "1/2", "2/3"}));
}

TEST_CASE("dual writes a definition file that validates") {
    auto out = std::filesystem::temp_directory_path() / "hopf_forge_test_dual.qg";
    Run r = run({"dual", fixture_path("group_s3"), "--output", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    std::string bytes = slurp(out.string());
    CHECK(save_definition(parse_definition(bytes)) == bytes);
    CHECK(run({"validate", out.string()}).code == 0);
    CHECK(run({"analyze", out.string()}).code == 0);
}

TEST_CASE("report to --output file matches stdout rendering") {
    auto out = std::filesystem::temp_directory_path() / "hopf_forge_test_report.json";
    Run to_file = run({"analyze", "c_z4", "--format", "json", "--output", out.string()});
    Run to_stdout = run({"analyze", "c_z4", "--format", "json"});
    CHECK(to_file.out.empty());
    CHECK(slurp(out.string()) == to_stdout.out);
}

TEST_CASE("subcheck on the negative subspace fails, on C(H) passes") {
    CHECK(run({"subcheck", "c_z4", "--subalgebra", "c_h"}).code == 0);
    Run neg = run({"subcheck", "c_z4", "--subalgebra", "span_e1", "--format", "json"});
    CHECK(neg.code == 1);
    CHECK((*check_named(report_of(neg), "sub:span_e1:subalgebra"))["verdict"] == "pass");
}
