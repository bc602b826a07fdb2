#include "doctest.h"

#include "hopf/errors.hpp"
#include "hopf/fixtures.hpp"
#include "hopf/modular.hpp"

using namespace hopf;

namespace {

Scalar sc(const char* lit) { return parse_scalar(lit); }

QGData solved(const std::string& name) {
    StructureDef d = fixture(name);
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

TEST_CASE("Haar functional of C(Z2)") {
    QGData q = solved("c_z2");
    HaarSolution h = solve_left_haar(q);
    CHECK(h.dimension == 1);
    CHECK(h.phi.values() == Vec{sc("1/2"), sc("1/2")});
    CHECK(h.normalization == "phi(1) = 1");
    CHECK(right_haar(q, h.phi) == h.phi);
}

TEST_CASE("Haar functional of C[S3] is the Kronecker delta at e") {
    QGData q = solved("group_s3");
    HaarSolution h = solve_left_haar(q);
    CHECK(h.phi.values() == unit_vec(6, 0));
    CHECK(right_haar(q, h.phi) == h.phi);
    CHECK(modular_automorphism(q, h.phi) == Matrix::identity(6));
}

TEST_CASE("Haar uniqueness on every Hopf fixture") {
    for (const auto* name : {"c_z2", "c_z4", "c_s3", "group_s3", "sweedler_h4"}) {
        INFO(name);
        CHECK(solve_left_haar(solved(name)).dimension == 1);
    }
}

TEST_CASE("a degenerate functional has no modular automorphism") {
    QGData q = solved("c_z2");
    CHECK_THROWS_AS(modular_automorphism(q, Functional(Vec{Scalar(1), Scalar(0)})), VerificationError);
}

TEST_CASE("modular data of the finite group fixtures") {
    for (const auto* name : {"c_z2", "c_z4", "c_s3", "group_s3"}) {
        INFO(name);
        QGData q = solved(name);
        ModularData md = compute_modular_data(q);
        const std::size_t d = q.dim();
        CHECK(md.sigma == Matrix::identity(d));
        CHECK(md.sigma_prime == Matrix::identity(d));
        CHECK(md.delta == q.unit());
        REQUIRE(md.delta_half);
        CHECK(*md.delta_half == q.unit());
        CHECK(md.mu == Scalar(1));
        CHECK(md.psi == md.phi);
        CHECK(failures(modular_identities(q, md)) == "");
        CHECK(gram_psd(q.algebra(), md.phi).verdict == Definiteness::positive_definite);
        PsiPositivity pp = psi_positivity(q, md);
        CHECK(pp.identity);
        CHECK(pp.gram.verdict == Definiteness::positive_definite);
        EigenTable t = simultaneous_eigenbasis(q, md);
        CHECK(t.simultaneous);
        CHECK(t.positive);
        CHECK(t.rows.size() == d);
        for (const auto& r : t.rows)
            for (const auto& v : r.values) CHECK(*v == Scalar(1));
        OrbitReport o = orbit_analysis(q, md, unit_vec(d, 0));
        CHECK(o.span.size() == 1);
        CHECK(o.steps == 0);
        CHECK(o.nonvanishing);
    }
}

TEST_CASE("modular data of Sweedler's algebra") {
    QGData q = solved("sweedler_h4");
    ModularData md = compute_modular_data(q);
    CHECK(md.normalization == "first nonzero value = 1");
    CHECK(md.phi.values()[0] == Scalar(0));
    // brute-force oracle for mu
    for (const auto& m : mu_by_evaluation(q, md.phi)) CHECK(m == md.mu);
    CHECK(md.mu == Scalar(-1));
    CHECK_FALSE(md.sigma == Matrix::identity(4));
    CHECK(md.delta == unit_vec(4, 1));
    CHECK_FALSE(md.delta_half);
    CHECK(md.delta_half_obstruction.find("not positive") != std::string::npos);
    // all identities except the square root of delta and commutation
    std::string f = failures(modular_identities(q, md));
    CHECK(f.find("left-invariance") == std::string::npos);
    CHECK(f.find("right-invariance") == std::string::npos);
    CHECK(f.find("coproduct-intertwines-sigma") == std::string::npos);
    CHECK(f.find("modular-element-square-root") != std::string::npos);
    PsdCertificate g = gram_psd(q.algebra(), md.phi);
    CHECK(g.verdict == Definiteness::indefinite);
    CHECK_FALSE(g.hermitian);

    EigenTable t = simultaneous_eigenbasis(q.without_star(), md);
    CHECK_FALSE(t.positive);
    bool minus_one = false;
    for (const auto& r : t.rows)
        if (r.values[2] && *r.values[2] == Scalar(-1)) minus_one = true;
    CHECK(minus_one);

    OrbitReport o = orbit_analysis(q, md, unit_vec(4, 2), 4, false);
    CHECK(o.span.size() <= 2);
}

TEST_CASE("sub-Hopf modular element agrees with the ambient one") {
    StructureDef d = fixture("c_z4");
    QGData big = solved("c_z4");
    SubMhaResult h = check_sub_mha(big, d.subalgebras[0].vectors);
    REQUIRE(h.induced);
    ModularData small = compute_modular_data(*h.induced);
    CHECK(small.delta == h.induced->unit());
    ModularData amb = compute_modular_data(big);
    CHECK(amb.delta == big.unit());
}
