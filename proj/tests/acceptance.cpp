// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "hopf/cli.hpp"
#include "hopf/duality.hpp"
#include "hopf/fixtures.hpp"
#include "hopf/report.hpp"

using namespace hopf;

namespace {

struct Run {
    int code;
    std::string out;
    double seconds;
};

std::string fixture_path(const std::string& name) { return std::string(HOPF_FIXTURES_DIR) + "/" + name + ".qg"; }

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    auto t0 = std::chrono::steady_clock::now();
    int code = run_command(args, out, err);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {code, out.str() + err.str(), s};
}

Run run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    return run(std::move(args));
}

// Collects failed expectations for one criterion.
struct Criterion {
    std::vector<std::string> problems;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

const json& check_named(const json& rep, const std::string& name) {
    static const json missing = json{{"verdict", "missing"}, {"objects", json::object()}, {"witnesses", json::array()}};
    for (const auto& c : rep["checks"])
        if (c["name"] == name) return c;
    return missing;
}

bool verdict_is(const json& rep, const std::string& name, const std::string& v) {
    return check_named(rep, name)["verdict"] == v;
}

std::string seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << s << "s";
    return os.str();
}

json identity_json(std::size_t n) {
    json id = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(i == j ? "1" : "0");
        id.push_back(row);
    }
    return id;
}

json unit_json(const std::string& fixture_name) {
    QGData q = fixture(fixture_name).carrier();
    json o = json::object();
    const Vec& u = q.unit();
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero()) o[q.algebra().labels()[k]] = u[k].to_string();
    return o;
}

const std::vector<std::string> hopf_fixtures{"c_z2", "c_z4", "c_s3", "group_s3", "sweedler_h4"};
const std::vector<std::string> positive_fixtures{"c_z2", "c_z4", "c_s3", "group_s3"};

void crit_axiom_suite(Criterion& c) {
    for (const auto& f : positive_fixtures) {
        Run r = run_json({"validate", fixture_path(f)});
        json rep = json::parse(r.out);
        c.expect(r.code == 0, f + ": validate exit " + std::to_string(r.code));
        for (const char* n : {"tmaps", "counit-antipode", "star:S(S(a)*)* = a", "star:D(a*) = D(a)*",
                              "star:eps(a*) = conj eps(a)"})
            c.expect(verdict_is(rep, n, "pass"), f + ": " + n);
        c.expect(r.seconds < 2.0, f + ": took " + seconds(r.seconds));
        c.note(f + " " + seconds(r.seconds));
    }
    Run r = run_json({"validate", fixture_path("semilattice2")});
    json rep = json::parse(r.out);
    c.expect(r.code == 1, "semilattice2: validate exit " + std::to_string(r.code));
    c.expect(rep["result"]["failed"] == json::array({"tmaps"}), "semilattice2: failed set " + rep["result"]["failed"].dump());
    c.expect(check_named(rep, "tmaps")["objects"]["T_D2"] == "2/4", "semilattice2: T_D2 rank");
    c.expect(verdict_is(rep, "counit-antipode", "skipped"), "semilattice2: stops at the T-maps");
    c.expect(r.seconds < 2.0, "semilattice2: took " + seconds(r.seconds));
    c.note("semilattice2 T_D2 rank 2/4");
}

void crit_haar_uniqueness(Criterion& c) {
    for (const auto& f : hopf_fixtures) {
        QGData q = fixture(f).carrier();
        const StructureDef d = fixture(f);
        std::optional<Functional> eps;
        if (d.counit) eps = Functional(*d.counit);
        q = derive_counit_antipode(std::move(q), eps, d.antipode);
        HaarSolution h = solve_left_haar(q);
        c.expect(h.dimension == 1, f + ": solution space dimension " + std::to_string(h.dimension));
    }
    c.note("dimension 1 on c_z2, c_z4, c_s3, group_s3, sweedler_h4");
}

void crit_modular_suite(Criterion& c) {
    for (const std::string f : {"c_s3", "group_s3"}) {
        Run r = run_json({"analyze", fixture_path(f)});
        json rep = json::parse(r.out);
        const json& m = check_named(rep, "modular-data")["objects"];
        c.expect(r.code == 0, f + ": analyze exit " + std::to_string(r.code));
        c.expect(m["sigma"] == identity_json(6), f + ": sigma");
        c.expect(m["delta"] == unit_json(f), f + ": delta");
        c.expect(m["mu"] == "1", f + ": mu");
        c.expect(check_named(rep, "phi-positivity")["objects"]["verdict"] == "positive-definite", f + ": phi-Gram");
        c.expect(check_named(rep, "psi-positivity")["objects"]["verdict"] == "positive-definite", f + ": psi-Gram");
        c.expect(verdict_is(rep, "coproduct-intertwines-sigma", "pass"), f + ": D sigma = (S^2 (x) sigma) D");
    }
}

void crit_scaling_constant(Criterion& c) {
    for (const auto& f : positive_fixtures) {
        json rep = json::parse(run_json({"analyze", fixture_path(f)}).out);
        c.expect(check_named(rep, "phi-positivity")["objects"]["verdict"] == "positive-definite", f + ": phi-Gram");
        const json& mu = check_named(rep, "scaling-constant-is-one");
        c.expect(mu["verdict"] == "pass" && mu["mandatory"] == true, f + ": mu = 1 asserted");
    }
    json rep = json::parse(run_json({"analyze", fixture_path("sweedler_h4")}).out);
    c.expect(check_named(rep, "phi-positivity")["objects"]["verdict"] == "indefinite", "sweedler_h4: Gram not indefinite");
    c.expect(verdict_is(rep, "scaling-constant-is-one", "info"), "sweedler_h4: mu = 1 must not be asserted");
    c.expect(verdict_is(rep, "scaling-constant-oracle", "pass"), "sweedler_h4: mu disagrees with phi o S^2 oracle");
    std::string mu = check_named(rep, "modular-data")["objects"]["mu"];
    c.note("sweedler_h4 mu = " + mu + " (oracle agrees)");
}

void crit_eigenbasis(Criterion& c) {
    for (const auto& f : positive_fixtures) {
        json rep = json::parse(run_json({"analyze", fixture_path(f), "--spec-points", "1/3,1/2,2/3"}).out);
        const json& e = check_named(rep, "simultaneous-eigenbasis");
        c.expect(e["verdict"] == "pass" && e["mandatory"] == true, f + ": eigenbasis");
        c.expect(e["objects"]["positive"] == true, f + ": positivity");
    }
    json rep = json::parse(run_json({"analyze", fixture_path("sweedler_h4"), "--no-star-assert"}).out);
    const json& e = check_named(rep, "simultaneous-eigenbasis");
    bool recorded = false;
    for (const auto& s : e["objects"]["positivity_obstruction"])
        recorded = recorded || s.get<std::string>().rfind("S^2 has eigenvalue -1", 0) == 0;
    c.expect(e["objects"]["positive"] == false, "sweedler_h4: eigenvalues reported positive");
    c.expect(recorded, "sweedler_h4: S^2 eigenvalue -1 not recorded as obstruction");
    c.note("sweedler_h4 obstruction: S^2 eigenvalue -1");
}

void crit_psi_positivity_check(Criterion& c) {
    for (const auto& f : positive_fixtures) {
        json rep = json::parse(run_json({"analyze", fixture_path(f)}).out);
        const json& p = check_named(rep, "psi-positivity");
        c.expect(p["verdict"] == "pass", f + ": psi-positivity");
        c.expect(p["objects"]["identity"] == true, f + ": psi(a*b) = phi(a*b delta)");
    }
    c.note("sweedler_h4 excluded: star present but phi-Gram indefinite");
}

void crit_duality(Criterion& c) {
    Run r = run_json({"dual", fixture_path("group_s3")});
    json rep = json::parse(r.out);
    c.expect(r.code == 0, "group_s3: dual exit " + std::to_string(r.code));
    for (const auto& ch : rep["checks"])
        if (ch["name"].get<std::string>().rfind("biduality:", 0) == 0)
            c.expect(ch["verdict"] == "pass", "group_s3: " + ch["name"].get<std::string>());

    const StructureDef gd = fixture("group_s3");
    QGData g = derive_counit_antipode(gd.carrier(), Functional(*gd.counit), gd.antipode);
    DualQG d = build_dual(g, compute_modular_data(g).phi);
    QGData cs3 = derive_counit_antipode(fixture("c_s3").carrier(), std::nullopt, std::nullopt);
    for (const auto& l : check_qg_isomorphism(d.dual, cs3, Matrix::identity(6)))
        c.expect(l.passed, "dual(group_s3) ~ c_s3: " + l.law);

    for (const std::string f : {"c_z2", "group_s3", "sweedler_h4"}) {
        std::vector<std::string> args{"dual", fixture_path(f)};
        if (f == "sweedler_h4") args.push_back("--no-star-assert");
        Run dr = run_json(args);
        json drep = json::parse(dr.out);
        c.expect(dr.code == 0, f + ": dual exit " + std::to_string(dr.code));
        c.expect(verdict_is(drep, "dual-modular-element", "pass"), f + ": dual delta = eps o kappa");
        c.expect(dr.seconds < 5.0, f + ": took " + seconds(dr.seconds));
        c.note(f + " " + seconds(dr.seconds));
    }
}

void crit_sub_mha(Criterion& c) {
    Run r = run_json({"subcheck", fixture_path("c_z4"), "--subalgebra", "c_h"});
    json rep = json::parse(r.out);
    c.expect(r.code == 0, "subcheck exit " + std::to_string(r.code));
    for (const char* n : {"D(a)(1(x)b) in A0(x)A0", "D(a)(b(x)1) in A0(x)A0", "(a(x)1)D(b) in A0(x)A0",
                          "(1(x)a)D(b) in A0(x)A0", "restricted-haar-nonzero", "induced-tmaps", "j:injective",
                          "j:coproduct-compatible-right", "j:coproduct-compatible-left"})
        c.expect(verdict_is(rep, std::string("sub:c_h:") + n, "pass"), std::string("c_h: ") + n);
    const json& ind = check_named(rep, "sub:c_h:induced-tmaps")["objects"];
    c.expect(ind["basis"].size() == 2, "induced structure is not 2-dimensional");
    QGData z2 = derive_counit_antipode(fixture("c_z2").carrier(), std::nullopt, std::nullopt);
    c.expect(ind["antipode"] == json::array({json::array({"1", "0"}), json::array({"0", "1"})}) &&
                 z2.antipode_matrix() == Matrix::identity(2),
             "induced antipode differs from C(Z2)");
}

void crit_pairing(Criterion& c) {
    Run r = run_json({"pair", "pairing-uqsu2-suq2", "--degree", "3"});
    json rep = json::parse(r.out);
    c.expect(r.code == 0, "degree 3 exit " + std::to_string(r.code));
    const json& t = check_named(rep, "pairing-table");
    c.expect(t["verdict"] == "pass", "table entries not reproduced");
    const json& e = t["objects"]["entries"];
    const std::vector<std::tuple<const char*, const char*, const char*>> published{
        {"K", "a", "1/s"}, {"K", "a*", "s"}, {"K", "b", "0"}, {"K", "b*", "0"},
        {"E", "a", "0"},   {"E", "a*", "0"}, {"E", "b", "0"}, {"E", "b*", "-s^2"}};
    for (const auto& [x, y, v] : published)
        c.expect(e[x][y] == v, std::string("<") + x + ", " + y + "> = " + e[x][y].dump());
    for (const auto& ch : rep["checks"])
        if (ch["name"].get<std::string>().rfind("pairing:", 0) == 0)
            c.expect(ch["verdict"] == "pass", ch["name"].get<std::string>());
    Run r4 = run_json({"pair", "pairing-uqsu2-suq2", "--degree", "4"});
    json rep4 = json::parse(r4.out);
    const json& k = check_named(rep4, "counit-kappa-is-pairing-with-K^-4");
    c.expect(k["verdict"] == "pass", "degree 4: eps o kappa = <K^-4, .>");
    c.expect(r.seconds < 30.0 && r4.seconds < 30.0, "took " + seconds(r.seconds) + " / " + seconds(r4.seconds));
    c.note("degree 3 " + seconds(r.seconds) + ", degree 4 " + seconds(r4.seconds) + " over " +
           k["objects"]["words"].dump() + " words");
}

void crit_antipode_suq2(Criterion& c) {
    json rep = json::parse(run_json({"pair", "pairing-uqsu2-suq2", "--degree", "3"}).out);
    const json& s2 = check_named(rep, "suq2:antipode-squared");
    c.expect(s2["verdict"] == "pass", "S^2 differs from theta");
    c.expect(s2["objects"]["a"] == "a", "S^2(a) = " + s2["objects"]["a"].dump());
    c.expect(s2["objects"]["b"] == "(1/s^4)·b", "S^2(b) = " + s2["objects"]["b"].dump());
    for (const std::string p : {"uq-su2", "suq2"}) {
        Run r = run_json({"validate", fixture_path(p), "--degree", "6"});
        json v = json::parse(r.out);
        c.expect(r.code == 0, p + ": validate exit " + std::to_string(r.code));
        c.expect(verdict_is(v, "confluence", "pass"), p + ": confluence to degree 6");
        c.expect(r.seconds < 30.0, p + ": took " + seconds(r.seconds));
        c.note(p + " " + seconds(r.seconds));
    }
}

void crit_determinism(Criterion& c) {
    std::vector<std::vector<std::string>> runs;
    for (const auto& f : fixture_names()) {
        runs.push_back({"analyze", fixture_path(f)});
        runs.push_back({"analyze", fixture_path(f), "--format", "json"});
    }
    runs.push_back({"analyze", fixture_path("sweedler_h4"), "--no-star-assert", "--format", "json"});
    for (const char* deg : {"3", "4"}) {
        runs.push_back({"pair", "pairing-uqsu2-suq2", "--degree", deg});
        runs.push_back({"pair", "pairing-uqsu2-suq2", "--degree", deg, "--format", "json"});
    }
    for (const auto& a : runs) {
        std::string line;
        for (const auto& s : a) line += s + " ";
        Run x = run(a), y = run(a);
        c.expect(x.out == y.out && x.code == y.code, "differs: " + line);
    }
    c.note(std::to_string(runs.size()) + " command lines run twice");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"axiom suite and T-map rejection", crit_axiom_suite},
        {"Haar functional unique", crit_haar_uniqueness},
        {"modular suite on c_s3 and group_s3", crit_modular_suite},
        {"scaling constant is 1 under positivity", crit_scaling_constant},
        {"simultaneous positive eigenbasis", crit_eigenbasis},
        {"psi-positivity", crit_psi_positivity_check},
        {"duality and biduality", crit_duality},
        {"sub-MHA and dual imbedding", crit_sub_mha},
        {"U_q(su2) / SU_q(2) pairing", crit_pairing},
        {"SU_q(2) antipode and confluence", crit_antipode_suq2},
        {"deterministic reports", crit_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = c.problems.empty();
        failed += !ok;
        std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << " - " << criteria[i].first << " ["
                  << seconds(s) << "]";
        const auto& detail = ok ? c.notes : c.problems;
        for (std::size_t k = 0; k < detail.size(); ++k) std::cout << (k ? "; " : " : ") << detail[k];
        std::cout << "\n";
    }
    std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << " (" << (11 - failed) << "/11)\n";
    return failed ? 1 : 0;
}
