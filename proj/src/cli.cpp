#include "hopf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hopf/duality.hpp"
#include "hopf/errors.hpp"
#include "hopf/fixtures.hpp"
#include "hopf/pairing.hpp"
#include "hopf/report.hpp"

namespace hopf {

namespace {

// Bad command line or unknown input name.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string command;
    std::string input;
    int degree = -1;
    std::string spec_points;
    bool no_star_assert = false;
    std::string output;
    std::string format = "text";
    std::string subalgebra;
    std::vector<std::string> example_args;
};

struct Input {
    std::string name;
    std::string bytes;
    Definition def;
};

// ------------------------------------------------------------------ json helpers

json lit(const Scalar& x) { return x.to_string(); }

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

json mat_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
    return a;
}

json named_vec(const FinAlgebra& A, const Vec& v) {
    json o = json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) o[A.labels()[k]] = v[k].to_string();
    return o;
}

std::string spec_point_string(const SpecPoint& p) { return p.value().get_str(); }

// ------------------------------------------------------------------ input

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Input load_input(const std::string& arg) {
    Input in;
    in.name = arg;
    if (std::filesystem::exists(arg)) {
        in.bytes = read_file(arg);
        in.def = parse_definition(in.bytes);
        return in;
    }
    for (const auto& n : fixture_names())
        if (n == arg) {
            in.def = fixture(n);
            in.bytes = save_definition(in.def);
            return in;
        }
    for (const auto& n : presentation_preset_names())
        if (n == arg) {
            in.def = presentation_preset(n);
            in.bytes = save_definition(in.def);
            return in;
        }
    throw UsageError("no file or built-in example named " + arg);
}

const StructureDef& structure_of(const Input& in, const std::string& command) {
    if (!std::holds_alternative<StructureDef>(in.def))
        throw UsageError(command + " needs a structure-constants definition");
    return std::get<StructureDef>(in.def);
}

// ------------------------------------------------------------------ suites

void add_laws(Report& r, const std::string& prefix, const std::vector<LawCheck>& checks, bool mandatory = true) {
    for (const auto& c : checks) {
        auto& e = r.add(prefix + c.law, c.passed, mandatory);
        if (!c.witness.empty()) e.witnesses.push_back(c.witness);
    }
}

void add_laws(Report& r, const std::string& prefix, const std::vector<HopfLawCheck>& checks) {
    for (const auto& c : checks) {
        auto& e = r.add(prefix + c.law, c.passed);
        if (!c.witness.empty()) e.witnesses.push_back(c.witness);
    }
}

void skip_rest(Report& r, const std::vector<std::string>& names, const std::string& why) {
    for (const auto& n : names) r.add_skipped(n, why);
}

// Algebra, coproduct, T-maps, counit and antipode, star compatibility.
std::optional<QGData> axiom_suite(const StructureDef& d, Report& r, const std::string& prefix = "") {
    const std::vector<std::string> later{prefix + "coproduct", prefix + "tmaps", prefix + "counit-antipode"};
    FinAlgebra alg;
    try {
        alg = build_algebra(d.basis, d.mul, d.unit, d.star);
        auto& c = r.add(prefix + "algebra", true);
        c.objects["dimension"] = d.dim();
        c.objects["basis"] = d.basis;
        c.objects["star"] = alg.has_star();
    } catch (const VerificationError& e) {
        r.add(prefix + "algebra", false).witnesses.push_back(e.what());
        skip_rest(r, later, "algebra failed");
        return std::nullopt;
    }
    QGData q;
    try {
        q = attach_coproduct(alg, d.coproduct_matrix());
        r.add(prefix + "coproduct", true);
    } catch (const VerificationError& e) {
        r.add(prefix + "coproduct", false).witnesses.push_back(e.what());
        skip_rest(r, {later[1], later[2]}, "coproduct failed");
        return std::nullopt;
    }
    TmapReport t = check_tmaps(q);
    auto& tc = r.add(prefix + "tmaps", t.all_bijective());
    for (std::size_t k = 0; k < 4; ++k) {
        tc.objects[TmapReport::names[k]] = std::to_string(t.ranks[k]) + "/" + std::to_string(t.full);
        if (!t.bijective(k))
            tc.witnesses.push_back(std::string(TmapReport::names[k]) + " has rank " + std::to_string(t.ranks[k]) +
                                   " of " + std::to_string(t.full));
    }
    if (!t.all_bijective()) {
        skip_rest(r, {later[2]}, "T-maps not bijective");
        return std::nullopt;
    }
    try {
        std::optional<Functional> eps;
        if (d.counit) eps = Functional(*d.counit);
        q = derive_counit_antipode(std::move(q), eps, d.antipode);
        auto& c = r.add(prefix + "counit-antipode", true);
        c.objects["counit"] = vec_json(q.counit().values());
        c.objects["antipode"] = mat_json(q.antipode_matrix());
        c.objects["declared"] = json{{"counit", d.counit.has_value()}, {"antipode", d.antipode.has_value()}};
    } catch (const VerificationError& e) {
        r.add(prefix + "counit-antipode", false).witnesses.push_back(e.what());
        return std::nullopt;
    }
    if (q.has_star()) add_laws(r, prefix + "star:", check_star_compat(q));
    auto& s2 = r.add_info(prefix + "antipode-squared");
    s2.objects["identity"] = antipode_squares_to_identity(q);
    return q;
}

void projection_checks(const StructureDef& d, const QGData& q, Report& r) {
    for (const auto& p : d.projections) {
        LawCheck c = check_grouplike_projection(q, p.vector);
        auto& e = r.add("grouplike-projection:" + p.name, c.passed, false);
        e.objects["vector"] = named_vec(q.algebra(), p.vector);
        if (!c.witness.empty()) e.witnesses.push_back(c.witness);
    }
}

struct ModularRun {
    ModularData md;
    bool star_positive = false;
};

// Haar functionals, modular data and the positivity theorems. The analysis
// runs on q; positivity of phi is certified on `starred` when it carries a star.
std::optional<ModularRun> modular_suite(const QGData& q, const QGData& starred, Report& r, const SpecPoints& pts,
                                        bool star_assert, const std::string& prefix = "") {
    ModularRun run;
    try {
        run.md = compute_modular_data(q, pts);
    } catch (const VerificationError& e) {
        r.add(prefix + e.law(), false).witnesses.push_back(e.what());
        return std::nullopt;
    }
    const ModularData& md = run.md;
    const FinAlgebra& A = q.algebra();
    auto& h = r.add(prefix + "left-haar", md.haar_dimension == 1);
    h.objects["solution_dimension"] = md.haar_dimension;
    h.objects["normalization"] = md.normalization;
    h.objects["phi"] = vec_json(md.phi.values());
    r.add(prefix + "right-haar", true).objects["psi"] = vec_json(md.psi.values());
    auto& mod = r.add_info(prefix + "modular-data");
    mod.objects["sigma"] = mat_json(md.sigma);
    mod.objects["sigma_prime"] = mat_json(md.sigma_prime);
    mod.objects["S^2"] = mat_json(md.s2);
    mod.objects["kappa"] = mat_json(md.kappa);
    mod.objects["rho"] = mat_json(md.rho);
    mod.objects["delta"] = named_vec(A, md.delta);
    if (md.delta_half) mod.objects["delta_half"] = named_vec(A, *md.delta_half);
    else mod.objects["delta_half_obstruction"] = md.delta_half_obstruction;
    mod.objects["mu"] = lit(md.mu);

    bool oracle = true;
    for (const auto& m : mu_by_evaluation(q, md.phi)) oracle = oracle && m == md.mu;
    r.add(prefix + "scaling-constant-oracle", oracle).objects["mu"] = lit(md.mu);

    if (starred.has_star()) {
        PsdCertificate g = gram_psd(starred.algebra(), md.phi, pts);
        run.star_positive = g.verdict == Definiteness::positive_definite;
        bool enforce = star_assert && q.has_star();
        auto& c = enforce ? r.add(prefix + "phi-positivity", run.star_positive) : r.add_info(prefix + "phi-positivity");
        c.objects["verdict"] = to_string(g.verdict);
        c.objects["hermitian"] = g.hermitian;
        if (!g.hermitian) c.witnesses.push_back("phi-Gram matrix is not Hermitian");
        if (g.witness) c.witnesses.push_back("v = " + to_string(*g.witness) + (g.witness_value ? ", v* G v = " + g.witness_value->to_string() : ""));
        if (g.failing_point) c.witnesses.push_back("fails at s = " + spec_point_string(*g.failing_point));
    } else {
        r.add_skipped(prefix + "phi-positivity", "no star");
    }
    // theorem statements are asserted only with a star and positive phi
    const bool positive_mode = run.star_positive && q.has_star();

    const std::set<std::string> positive_only{"modular-maps-commute", "modular-element-square-root"};
    for (const auto& c : modular_identities(q, md)) {
        bool mandatory = positive_mode || !positive_only.count(c.law);
        auto& e = r.add(prefix + c.law, c.passed, mandatory);
        if (!c.witness.empty()) e.witnesses.push_back(c.witness);
    }

    if (positive_mode) {
        r.add(prefix + "scaling-constant-is-one", md.mu == Scalar(1)).objects["mu"] = lit(md.mu);
    } else {
        auto& c = r.add_info(prefix + "scaling-constant-is-one");
        c.objects["mu"] = lit(md.mu);
        c.witnesses.push_back("not asserted: no star with positive-definite phi-Gram");
    }

    EigenTable t = simultaneous_eigenbasis(q, md, pts);
    auto& et = positive_mode ? r.add(prefix + "simultaneous-eigenbasis", t.simultaneous && t.positive)
                             : r.add_info(prefix + "simultaneous-eigenbasis");
    json rows = json::array();
    for (const auto& row : t.rows) {
        json jr;
        jr["vector"] = named_vec(A, row.vector);
        for (std::size_t m = 0; m < row.values.size(); ++m)
            jr[EigenTable::maps[m]] = row.values[m] ? lit(*row.values[m]) : json(nullptr);
        rows.push_back(jr);
    }
    et.objects["eigentable"] = rows;
    et.objects["simultaneous"] = t.simultaneous;
    et.objects["positive"] = t.positive;
    if (!t.positive) et.objects["positivity_obstruction"] = t.notes;
    else if (!t.notes.empty()) et.objects["notes"] = t.notes;

    if (positive_mode) {
        PsiPositivity pp = psi_positivity(q, md, pts);
        auto& c = r.add(prefix + "psi-positivity", pp.identity && pp.gram.verdict == Definiteness::positive_definite);
        c.objects["identity"] = pp.identity;
        c.objects["verdict"] = to_string(pp.gram.verdict);
        if (!pp.witness.empty()) c.witnesses.push_back(pp.witness);
    } else {
        r.add_skipped(prefix + "psi-positivity", "needs a star with positive-definite phi-Gram");
    }

    auto& orb = r.add_info(prefix + "kappa-orbits");
    bool nonvanishing = true;
    std::string witness;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        OrbitReport o = orbit_analysis(q, md, unit_vec(q.dim(), i), 4, positive_mode);
        orb.objects[A.labels()[i]] = json{{"span_dimension", o.span.size()}, {"steps", o.steps}};
        if (!o.nonvanishing && nonvanishing) {
            nonvanishing = false;
            witness = o.witness;
        }
    }
    if (positive_mode) {
        auto& c = r.add(prefix + "orbit-nonvanishing", nonvanishing);
        c.objects["window"] = 4;
        if (!witness.empty()) c.witnesses.push_back(witness);
    } else {
        r.add_skipped(prefix + "orbit-nonvanishing", "needs a star with positive-definite phi-Gram");
    }
    return run;
}

// ------------------------------------------------------------------ commands

struct Context {
    Options opt;
    SpecPoints points;
    std::ostream& out;
    std::ostream& err;
};

Report new_report(const Context& ctx, const Input& in) {
    Report r;
    r.command = ctx.opt.command;
    r.input = in.name;
    r.input_digest = digest_string(in.bytes);
    for (const auto& p : ctx.points) r.spec_points.push_back(spec_point_string(p));
    r.star_assert = !ctx.opt.no_star_assert;
    return r;
}

// In non-* mode the star is dropped after the axiom suite.
QGData working_copy(const QGData& q, const Context& ctx) { return ctx.opt.no_star_assert ? q.without_star() : q; }

void validate_presentation(const PresentationDef& d, Report& r, int degree) {
    std::unique_ptr<PresentedHopf> h;
    try {
        h = make_presented_hopf(d);
        r.add("rule-orientation", true).objects["rules"] = h->p().rules().size();
    } catch (const VerificationError& e) {
        r.add(e.law(), false).witnesses.push_back(e.what());
        return;
    }
    ConfluenceReport c = h->p().check_confluence(degree);
    auto& cc = r.add("confluence", c.confluent());
    cc.objects["overlaps_checked"] = c.overlaps_checked;
    cc.objects["degree"] = c.degree;
    if (c.failure)
        cc.witnesses.push_back("overlap " + h->p().to_string(c.failure->word) + ": " + h->p().to_string(c.failure->via_a) +
                               " vs " + h->p().to_string(c.failure->via_b));
    auto& eps = r.add_info("counit");
    for (std::size_t g = 0; g < h->p().generators(); ++g)
        eps.objects[h->p().generator(g)] = lit(h->counit_of(Word{static_cast<std::uint8_t>(g)}));
    add_laws(r, "", check_presented_hopf(*h));
    for (const auto& a : h->actions) {
        ActionCheck ac = check_action(h->p(), a, default_spec_points());
        auto& e = r.add("action:" + a.name, ac.homogeneous);
        e.objects["positive"] = ac.positive;
        if (!ac.failure.empty()) e.witnesses.push_back(ac.failure);
    }
}

Report cmd_validate(const Context& ctx, const Input& in) {
    Report r = new_report(ctx, in);
    if (std::holds_alternative<PresentationDef>(in.def)) {
        r.degree = ctx.opt.degree >= 0 ? ctx.opt.degree : 6;
        validate_presentation(std::get<PresentationDef>(in.def), r, r.degree);
        return r;
    }
    const StructureDef& d = std::get<StructureDef>(in.def);
    if (auto q = axiom_suite(d, r)) projection_checks(d, *q, r);
    return r;
}

Report cmd_analyze(const Context& ctx, const Input& in) {
    Report r = new_report(ctx, in);
    const StructureDef& d = structure_of(in, "analyze");
    auto q = axiom_suite(d, r);
    if (!q) return r;
    modular_suite(working_copy(*q, ctx), *q, r, ctx.points, !ctx.opt.no_star_assert);
    return r;
}

Report cmd_dual(const Context& ctx, const Input& in) {
    Report r = new_report(ctx, in);
    const StructureDef& d = structure_of(in, "dual");
    auto full = axiom_suite(d, r);
    if (!full) return r;
    QGData q = working_copy(*full, ctx);
    ModularData md;
    try {
        md = compute_modular_data(q, ctx.points);
        r.add("left-haar", true).objects["phi"] = vec_json(md.phi.values());
    } catch (const VerificationError& e) {
        r.add(e.law(), false).witnesses.push_back(e.what());
        return r;
    }
    DualQG dq;
    try {
        dq = build_dual(q, md.phi);
        auto& c = r.add("dual-construction", true);
        c.objects["basis"] = dq.dual.algebra().labels();
        c.objects["pairing_rank"] = rank(dq.values);
    } catch (const VerificationError& e) {
        r.add("dual-construction", false).witnesses.push_back(e.what());
        return r;
    }
    // the dual through the full axiom suite, starting from its own definition
    StructureDef dd = structure_def_from(dq.dual, d.name + "_dual", "dual of " + d.name);
    auto dual_q = axiom_suite(dd, r, "dual:");
    if (!dual_q) return r;
    auto dual_run = modular_suite(*dual_q, *dual_q, r, ctx.points, !ctx.opt.no_star_assert, "dual:");
    BidualityReport b = dual_haar_and_biduality(q, dq);
    auto& bh = r.add("biduality:dual-haar", b.dual_haar.dimension == 1);
    bh.objects["phi_hat"] = vec_json(b.dual_haar.phi.values());
    bh.objects["canonical_map"] = mat_json(b.canonical);
    add_laws(r, "biduality:", b.checks);
    if (dual_run) add_laws(r, "", dual_modular_check(q, md, dq, dual_run->md));
    if (!ctx.opt.output.empty()) {
        std::ofstream f(ctx.opt.output, std::ios::binary);
        if (!f) throw UsageError("cannot write " + ctx.opt.output);
        f << save_definition(dd);
        r.add_info("dual-written").objects["path"] = ctx.opt.output;
    }
    return r;
}

Report cmd_subcheck(const Context& ctx, const Input& in) {
    Report r = new_report(ctx, in);
    const StructureDef& d = structure_of(in, "subcheck");
    auto full = axiom_suite(d, r);
    if (!full) return r;
    QGData q = working_copy(*full, ctx);
    ModularData md;
    try {
        md = compute_modular_data(q, ctx.points);
        r.add("left-haar", true).objects["phi"] = vec_json(md.phi.values());
    } catch (const VerificationError& e) {
        r.add(e.law(), false).witnesses.push_back(e.what());
        return r;
    }
    bool found = false;
    for (const auto& sub : d.subalgebras) {
        if (!ctx.opt.subalgebra.empty() && sub.name != ctx.opt.subalgebra) continue;
        found = true;
        const std::string p = "sub:" + sub.name + ":";
        SubMhaResult s = check_sub_mha(q, sub.vectors);
        r.add(p + "subalgebra", s.subalgebra).objects["basis"] = mat_json(s.inclusion);
        add_laws(r, p, s.checks);
        if (!s.passed() || !s.induced) continue;
        auto& ind = r.add(p + "induced-tmaps", s.induced_tmaps && s.induced_tmaps->all_bijective());
        ind.objects["basis"] = s.induced->algebra().labels();
        ind.objects["counit"] = vec_json(s.induced->counit().values());
        ind.objects["antipode"] = mat_json(s.induced->antipode_matrix());
        ModularData small = compute_modular_data(*s.induced, ctx.points);
        bool small_trivial = small.delta == s.induced->unit(), big_trivial = md.delta == q.unit();
        auto& me = r.add(p + "modular-element", small_trivial == big_trivial);
        me.objects["delta"] = named_vec(s.induced->algebra(), small.delta);
        ImbeddingReport j = dual_imbedding(q, md, s);
        auto& ph = r.add(p + "restricted-haar-nonzero", j.phi0_nonzero);
        ph.objects["phi0"] = vec_json(j.phi0.values());
        if (!j.phi0_nonzero) continue;
        r.add(p + "restricted-haar-invariant", j.phi0_invariant);
        r.add_info(p + "dual-imbedding").objects["j"] = mat_json(j.j);
        add_laws(r, p + "j:", j.checks);
    }
    if (!ctx.opt.subalgebra.empty() && !found) throw UsageError("no subalgebra named " + ctx.opt.subalgebra);
    projection_checks(d, *full, r);
    return r;
}

Report cmd_pair(const Context& ctx, const Input& in) {
    Report r = new_report(ctx, in);
    const int degree = ctx.opt.degree >= 0 ? ctx.opt.degree : 3;
    r.degree = degree;
    auto p = pairing_preset(in.name, degree);
    const Presentation& U = p->left().p();
    const Presentation& B = p->right().p();

    for (const PresentedHopf* h : {&p->left(), &p->right()}) {
        const std::string pre = h->p().name() + ":";
        ConfluenceReport c = h->p().check_confluence(std::max(degree, 4));
        auto& cc = r.add(pre + "confluence", c.confluent());
        cc.objects["overlaps_checked"] = c.overlaps_checked;
        add_laws(r, pre, check_presented_hopf(*h));
    }

    auto& table = r.add("pairing-table", true);
    json entries = json::object();
    for (std::size_t g = 0; g < U.generators(); ++g) {
        json row = json::object();
        for (std::size_t h = 0; h < B.generators(); ++h) row[B.generator(h)] = lit(p->table(g, h));
        entries[U.generator(g)] = row;
    }
    table.objects["entries"] = entries;
    // the published entries, recomputed through the recursion
    const std::vector<std::tuple<const char*, const char*, const char*>> published{
        {"K", "a", "1/s"}, {"K", "a*", "s"}, {"K", "b", "0"}, {"K", "b*", "0"},
        {"E", "a", "0"},   {"E", "a*", "0"}, {"E", "b", "0"}, {"E", "b*", "-s^2"}};
    for (const auto& [x, c, v] : published) {
        Scalar got = p->pair(U.word({x}), B.word({c}));
        if (!(got == parse_scalar(v))) {
            table.verdict = Verdict::fail;
            table.witnesses.push_back(std::string("<") + x + ", " + c + "> = " + got.to_string() + ", expected " + v);
        }
    }

    PairingAxiomReport ax = check_pairing_axioms(*p, degree);
    for (std::size_t i = 0; i < ax.checks.size(); ++i) {
        auto& e = r.add("pairing:" + ax.checks[i].law, ax.checks[i].passed);
        e.objects["instances"] = ax.counts[i];
        if (!ax.checks[i].witness.empty()) e.witnesses.push_back(ax.checks[i].witness);
    }

    Word k4 = U.word({"Kinv", "Kinv", "Kinv", "Kinv"});
    KappaReport kr = kappa_functional_check(*p, k4, degree);
    auto& kc = r.add("counit-kappa-is-pairing-with-K^-4", kr.passed);
    kc.objects["words"] = kr.words;
    json samples = json::array();
    for (const auto& [w, a, b] : kr.samples) samples.push_back(json{{"c", w}, {"eps_kappa", lit(a)}, {"pairing", lit(b)}});
    kc.objects["samples"] = samples;
    if (!kr.witness.empty()) kc.witnesses.push_back(kr.witness);

    // S^2 from the generator table against the modular action theta
    const PresentedHopf& su = p->right();
    auto& s2 = r.add("suq2:antipode-squared", true);
    for (std::size_t g = 0; g < B.generators(); ++g) {
        WordComb c{{Word{static_cast<std::uint8_t>(g)}, Scalar(1)}};
        WordComb twice = apply_map(B, su.antipode, apply_map(B, su.antipode, c));
        s2.objects[B.generator(g)] = B.to_string(twice);
        if (!(twice == su.action("theta").apply(c))) {
            s2.verdict = Verdict::fail;
            s2.witnesses.push_back("S^2(" + B.generator(g) + ") = " + B.to_string(twice));
        }
    }

    r.add_info("pairing-gram-rank").objects["rank"] = pairing_gram_rank(*p, std::min(degree, 2));
    r.checks.back().objects["degree"] = std::min(degree, 2);
    ShiftReport sh = shifted_words_distinct(U, U.word({"K", "K", "K", "K"}), degree, 4);
    auto& sc = r.add("K^4-shifts-distinct", sh.distinct);
    sc.objects["words"] = sh.words;
    if (!sh.witness.empty()) sc.witnesses.push_back(sh.witness);
    return r;
}

// examples [list] | examples emit <name> | examples emit-all --output <dir>
int cmd_examples(const Context& ctx) {
    auto def_of = [](const std::string& n) -> Definition {
        for (const auto& f : fixture_names())
            if (f == n) return fixture(n);
        return presentation_preset(n);
    };
    std::vector<std::string> names = fixture_names();
    for (const auto& n : presentation_preset_names()) names.push_back(n);
    const auto& a = ctx.opt.example_args;
    const std::string verb = a.empty() ? "list" : a[0];
    if (verb == "list" && a.size() <= 1) {
        for (const auto& n : fixture_names()) ctx.out << n << "\tstructure-constants\t" << fixture(n).description << "\n";
        for (const auto& n : presentation_preset_names())
            ctx.out << n << "\tpresentation\t" << presentation_preset(n).description << "\n";
        ctx.out << "pairing-uqsu2-suq2\tpairing\tpairing of uq-su2 with suq2 (pair command only)\n";
        return 0;
    }
    if (verb == "emit-all" && a.size() == 1) {
        if (ctx.opt.output.empty()) throw UsageError("emit-all needs --output <dir>");
        std::filesystem::create_directories(ctx.opt.output);
        for (const auto& n : names) {
            std::ofstream f(std::filesystem::path(ctx.opt.output) / (n + ".qg"), std::ios::binary);
            if (!f) throw UsageError("cannot write into " + ctx.opt.output);
            f << save_definition(def_of(n));
        }
        return 0;
    }
    if (verb != "emit" || a.size() != 2) throw UsageError("usage: examples [list] | emit <name> | emit-all --output <dir>");
    if (std::find(names.begin(), names.end(), a[1]) == names.end())
        throw UsageError("no built-in example named " + a[1]);
    std::string text = save_definition(def_of(a[1]));
    if (ctx.opt.output.empty()) {
        ctx.out << text;
    } else {
        std::ofstream f(ctx.opt.output, std::ios::binary);
        if (!f) throw UsageError("cannot write " + ctx.opt.output);
        f << text;
    }
    return 0;
}

int emit_report(const Context& ctx, const Report& r) {
    std::string text = ctx.opt.format == "json" ? r.render_json() : r.render_text();
    bool to_file = !ctx.opt.output.empty() && ctx.opt.command != "dual";
    if (to_file) {
        std::ofstream f(ctx.opt.output, std::ios::binary);
        if (!f) throw UsageError("cannot write " + ctx.opt.output);
        f << text;
    } else {
        ctx.out << text;
    }
    return r.passed() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"hopf-forge: exact verification of finite and presented quantum groups", "hopf-forge"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--degree", opt.degree, "degree bound for presentations and pairings");
    app.add_option("--spec-points", opt.spec_points, "comma-separated rationals in (0,1) for sign certificates");
    app.add_flag("--no-star-assert", opt.no_star_assert, "drop the star after the axiom suite; positivity is reported only");
    app.add_option("--output", opt.output, "report path; for dual the dual definition; for examples a directory or file");
    app.add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    struct Sub {
        const char* name;
        const char* help;
    };
    const std::vector<Sub> subs{{"validate", "Hopf axiom suite"},
                                {"analyze", "Haar functionals, modular data and positivity theorems"},
                                {"dual", "dual quantum group, biduality and the dual modular element"},
                                {"subcheck", "sub-Hopf algebras and the dual imbedding"},
                                {"pair", "pairing of U_q(su2) with SU_q(2)"}};
    for (const auto& s : subs) {
        auto* c = app.add_subcommand(s.name, s.help);
        c->add_option("input", opt.input, "definition file or built-in name")->required();
        if (std::string(s.name) == "subcheck") c->add_option("--subalgebra", opt.subalgebra, "only this subalgebra");
        c->callback([&opt, name = s.name] { opt.command = name; });
    }
    auto* ex = app.add_subcommand("examples", "list built-in examples, or emit one");
    ex->add_option("args", opt.example_args, "list | emit <name> | emit-all");
    ex->callback([&opt] { opt.command = "examples"; });

    std::vector<std::string> argv_store{"hopf-forge"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        SpecPoints points = default_spec_points();
        const char* env = std::getenv("HOPF_FORGE_SPEC_POINTS");
        const std::string list = !opt.spec_points.empty() ? opt.spec_points : (env ? env : "");
        if (!list.empty()) {
            try {
                points = parse_spec_points(list);
            } catch (const Error& e) {
                throw UsageError(std::string("bad spec points: ") + e.what());
            }
        }
        Context ctx{opt, points, out, err};
        if (opt.command == "examples") return cmd_examples(ctx);
        if (opt.command == "pair") {
            Input in{opt.input, opt.input, PresentationDef{}};
            std::vector<std::string> known{"pairing-uqsu2-suq2"};
            if (opt.input != known[0]) throw UsageError("unknown pairing " + opt.input + " (built-in: pairing-uqsu2-suq2)");
            PresentationDef u = presentation_preset("uq-su2"), b = presentation_preset("suq2");
            in.bytes = save_definition(u) + save_definition(b);
            return emit_report(ctx, cmd_pair(ctx, in));
        }
        Input in = load_input(opt.input);
        Report r;
        if (opt.command == "validate") r = cmd_validate(ctx, in);
        else if (opt.command == "analyze") r = cmd_analyze(ctx, in);
        else if (opt.command == "dual") r = cmd_dual(ctx, in);
        else if (opt.command == "subcheck") r = cmd_subcheck(ctx, in);
        else throw UsageError("unknown command " + opt.command);
        return emit_report(ctx, r);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace hopf
