#include "doctest.h"

#include "hopf/errors.hpp"
#include "hopf/fixtures.hpp"
#include "hopf/pairing.hpp"

using namespace hopf;

namespace {

QGData solved(const StructureDef& d) {
    std::optional<Functional> eps;
    if (d.counit) eps = Functional(*d.counit);
    return derive_counit_antipode(d.carrier(), eps, d.antipode);
}

std::string failures(const std::vector<LawCheck>& checks) {
    std::string out;
    for (const auto& c : checks)
        if (!c.passed) out += c.law + ": " + c.witness + "\n";
    return out;
}

}  // namespace

TEST_CASE("finite group oracles") {
    FiniteGroup s3 = symmetric_group_s3();
    CHECK(s3.size() == 6);
    // (12)(23) = (123) as maps composed right to left
    CHECK(s3.elements[s3.mul(1, 2)] == "(123)");
    CHECK(s3.elements[s3.inverse(4)] == "(132)");
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            for (std::size_t c = 0; c < 6; ++c) CHECK(s3.mul(s3.mul(a, b), c) == s3.mul(a, s3.mul(b, c)));
    FiniteGroup z4 = cyclic_group(4);
    CHECK(z4.inverse(1) == 3);
}

TEST_CASE("Hopf fixtures pass the axiom suite") {
    for (const auto* name : {"c_z2", "c_z4", "c_s3", "group_s3", "sweedler_h4"}) {
        INFO(name);
        StructureDef d = fixture(name);
        QGData q = d.carrier();
        CHECK(check_tmaps(q).all_bijective());
        QGData h = solved(d);
        REQUIRE(h.has_counit());
        REQUIRE(h.has_antipode());
        CHECK(failures(check_star_compat(h)) == "");
    }
}

TEST_CASE("semilattice fails at the T-maps") {
    QGData q = fixture("semilattice2").carrier();
    TmapReport r = check_tmaps(q);
    CHECK(r.full == 4);
    CHECK(r.ranks[0] == 2);
    CHECK_FALSE(r.bijective(0));
    CHECK_THROWS_AS(derive_counit_antipode(q), VerificationError);
}

TEST_CASE("antipode squares") {
    for (const auto* name : {"c_z2", "c_z4", "c_s3", "group_s3"}) CHECK(antipode_squares_to_identity(solved(fixture(name))));
    QGData h4 = solved(fixture("sweedler_h4"));
    CHECK_FALSE(antipode_squares_to_identity(h4));
    Matrix s2 = h4.antipode_matrix() * h4.antipode_matrix();
    CHECK(s2 == Matrix::diagonal({Scalar(1), Scalar(1), Scalar(-1), Scalar(-1)}));
    CHECK(s2 * s2 == Matrix::identity(4));
}

TEST_CASE("declared structure must agree with the solved one") {
    StructureDef d = fixture("group_s3");
    d.counit->at(1) = Scalar(2);
    CHECK_THROWS_AS(solved(d), VerificationError);
    StructureDef e = fixture("group_s3");
    (*e.antipode)(1, 1) = Scalar(1);
    (*e.antipode)(1, 1) = Scalar(1);
    (*e.antipode)(0, 1) = Scalar(1);
    CHECK_THROWS_AS(solved(e), VerificationError);
}

TEST_CASE("coproduct checks") {
    StructureDef d = fixture("c_z2");
    d.coproduct.push_back({0, 0, 1, Scalar(1)});
    CHECK_THROWS_AS(d.carrier(), VerificationError);
}

TEST_CASE("grouplike projections") {
    QGData z4 = solved(fixture("c_z4"));
    StructureDef d = fixture("c_z4");
    CHECK(check_grouplike_projection(z4, d.projections[0].vector).passed);
    CHECK_FALSE(check_grouplike_projection(z4, d.projections[1].vector).passed);
    CHECK(check_grouplike_projection(z4, d.projections[2].vector).passed);
    StructureDef g = fixture("group_s3");
    QGData gs3 = solved(g);
    for (const auto& p : g.projections) CHECK(check_grouplike_projection(gs3, p.vector).passed);
    StructureDef c = fixture("c_s3");
    CHECK(check_grouplike_projection(solved(c), c.projections[0].vector).passed);
}

TEST_CASE("sub-MHA of C(Z4)") {
    StructureDef d = fixture("c_z4");
    QGData big = solved(d);
    SubMhaResult h = check_sub_mha(big, d.subalgebras[0].vectors);
    CHECK(failures(h.checks) == "");
    CHECK(h.passed());
    REQUIRE(h.induced);
    CHECK(h.induced->dim() == 2);
    CHECK(h.induced_tmaps->all_bijective());
    // the induced structure is C(Z2)
    QGData z2 = solved(fixture("c_z2"));
    CHECK(failures(check_qg_isomorphism(*h.induced, z2, Matrix::identity(2))) == "");

    SubMhaResult one = check_sub_mha(big, d.subalgebras[1].vectors);
    CHECK_FALSE(one.passed());
    SubMhaResult full = check_sub_mha(big, d.subalgebras[2].vectors);
    CHECK(full.passed());
}

TEST_CASE("isomorphism checks") {
    QGData z2 = solved(fixture("c_z2"));
    CHECK(failures(check_qg_isomorphism(z2, z2, Matrix::identity(2))) == "");
    // swapping the two points is an algebra map but moves the counit
    Matrix swap(2, 2);
    swap(0, 1) = swap(1, 0) = Scalar(1);
    CHECK(failures(check_qg_isomorphism(z2, z2, swap)) != "");
}

TEST_CASE("definition files round-trip") {
    for (const auto& name : fixture_names()) {
        INFO(name);
        std::string text = save_definition(fixture(name));
        Definition back = parse_definition(text);
        CHECK(save_definition(back) == text);
        CHECK(std::get<StructureDef>(back).dim() == fixture(name).dim());
    }
    for (const auto& name : presentation_preset_names()) {
        INFO(name);
        std::string text = save_definition(presentation_preset(name));
        CHECK(save_definition(parse_definition(text)) == text);
    }
}

TEST_CASE("definition file errors") {
    std::string text = save_definition(fixture("c_z2"));
    std::string bad_version = text;
    bad_version.replace(bad_version.find("hopf-forge/1"), 12, "hopf-forge/9");
    CHECK_THROWS_AS(parse_definition(bad_version), ParseError);
    CHECK_THROWS_AS(parse_definition("{ not json"), ParseError);
    std::string bad_lit = text;
    bad_lit.replace(bad_lit.find("\"1\""), 3, "\"1+\"");
    try {
        parse_definition(bad_lit);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find('[') != std::string::npos);
    }
    // a non-associative product surfaces from build_algebra with a witness
    StructureDef d = fixture("c_z2");
    d.mul.push_back({0, 1, 1, Scalar(1)});
    Definition nd = parse_definition(save_definition(d));
    try {
        std::get<StructureDef>(nd).carrier();
        FAIL("expected a verification error");
    } catch (const VerificationError& e) {
        CHECK(std::string(e.what()).size() > 0);
    }
}

TEST_CASE("structure_def_from reproduces solved data") {
    QGData h = solved(fixture("sweedler_h4"));
    StructureDef d = structure_def_from(h, "h4", "copy");
    QGData back = solved(d);
    CHECK(back.antipode_matrix() == h.antipode_matrix());
    CHECK(back.counit() == h.counit());
}
