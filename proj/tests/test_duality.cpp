#include "doctest.h"

#include "hopf/duality.hpp"
#include "hopf/errors.hpp"
#include "hopf/fixtures.hpp"

using namespace hopf;

namespace {

QGData solved(const StructureDef& d) {
    std::optional<Functional> eps;
    if (d.counit) eps = Functional(*d.counit);
    return derive_counit_antipode(d.carrier(), eps, d.antipode);
}

QGData solved(const std::string& name) { return solved(fixture(name)); }

std::string failures(const std::vector<LawCheck>& checks) {
    std::string out;
    for (const auto& c : checks)
        if (!c.passed) out += c.law + ": " + c.witness + "\n";
    return out;
}

}  // namespace

TEST_CASE("dual of C[S3] is C(S3)") {
    QGData g = solved("group_s3");
    ModularData md = compute_modular_data(g);
    DualQG d = build_dual(g, md.phi);
    CHECK(d.dual.dim() == 6);
    // commutative
    const FinAlgebra& A = d.dual.algebra();
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(A.multiply(A.basis(i), A.basis(j)) == A.multiply(A.basis(j), A.basis(i)));
    // w_g = phi(. u_g) is the point mass at g^-1, which the C(S3) coproduct sends to d_g
    QGData c = solved("c_s3");
    CHECK(failures(check_qg_isomorphism(d.dual, c, Matrix::identity(6))) == "");
    CHECK(failures(check_star_compat(d.dual)) == "");
}

TEST_CASE("dual of C(Z2) is the group algebra of Z2") {
    QGData z2 = solved("c_z2");
    DualQG d = build_dual(z2, compute_modular_data(z2).phi);
    QGData g = solved(group_algebra(cyclic_group(2), "group_z2"));
    // w_i = phi(. e_i) is half the point evaluation at i, so u_i -> 2 w_i
    CHECK(failures(check_qg_isomorphism(g, d.dual, Scalar(2) * Matrix::identity(2))) == "");
    CHECK_FALSE(failures(check_qg_isomorphism(g, d.dual, Matrix::identity(2))) == "");
}

TEST_CASE("dual of the trivial quantum group") {
    QGData one = solved(function_algebra(cyclic_group(1), "trivial", "e"));
    DualQG d = build_dual(one, compute_modular_data(one).phi);
    CHECK(d.dual.dim() == 1);
    CHECK(failures(check_qg_isomorphism(one, d.dual, Matrix::identity(1))) == "");
    BidualityReport b = dual_haar_and_biduality(one, d);
    CHECK(b.passed());
    CHECK(b.canonical == Matrix::identity(1));
}

TEST_CASE("a degenerate functional has no dual basis") {
    QGData z2 = solved("c_z2");
    CHECK_THROWS_AS(build_dual(z2, Functional(Vec{Scalar(1), Scalar(0)})), VerificationError);
}

TEST_CASE("biduality on every Hopf fixture") {
    for (const auto* name : {"c_z2", "c_z4", "c_s3", "group_s3", "sweedler_h4"}) {
        INFO(name);
        QGData q = solved(name);
        if (std::string(name) == "sweedler_h4") q = q.without_star();
        ModularData md = compute_modular_data(q);
        DualQG d = build_dual(q, md.phi);
        CHECK(check_tmaps(d.dual).all_bijective());
        if (d.dual.has_star()) CHECK(failures(check_star_compat(d.dual)) == "");
        BidualityReport b = dual_haar_and_biduality(q, d);
        CHECK(b.dual_haar.dimension == 1);
        CHECK(failures(b.checks) == "");
    }
}

TEST_CASE("biduality on C(Z2) is diagonal in coordinates") {
    QGData z2 = solved("c_z2");
    DualQG d = build_dual(z2, compute_modular_data(z2).phi);
    BidualityReport b = dual_haar_and_biduality(z2, d);
    // identity up to the two Haar normalizations phi(1) = 1 and phi^(1) = 1
    CHECK(b.canonical == Scalar(2) * Matrix::identity(2));
}

TEST_CASE("modular element of the dual is eps kappa") {
    for (const auto* name : {"c_z2", "group_s3", "sweedler_h4"}) {
        INFO(name);
        QGData q = solved(name);
        if (std::string(name) == "sweedler_h4") q = q.without_star();
        ModularData md = compute_modular_data(q);
        DualQG d = build_dual(q, md.phi);
        ModularData dm = compute_modular_data(d.dual);
        CHECK(failures(dual_modular_check(q, md, d, dm)) == "");
    }
}

TEST_CASE("dual imbedding for C(H) in C(Z4)") {
    StructureDef def = fixture("c_z4");
    QGData big = solved(def);
    ModularData md = compute_modular_data(big);
    for (const auto& sub : def.subalgebras) {
        SubMhaResult s = check_sub_mha(big, sub.vectors);
        if (!s.passed()) continue;
        INFO(sub.name);
        ImbeddingReport r = dual_imbedding(big, md, s);
        CHECK(r.phi0_nonzero);
        CHECK(r.phi0_invariant);
        CHECK(failures(r.checks) == "");
        CHECK(r.passed());
    }
}

TEST_CASE("dual imbedding of the scalars in C[S3]") {
    StructureDef def = fixture("group_s3");
    QGData big = solved(def);
    ModularData md = compute_modular_data(big);
    SubMhaResult s = check_sub_mha(big, def.subalgebras[0].vectors);
    REQUIRE(s.passed());
    ImbeddingReport r = dual_imbedding(big, md, s);
    CHECK(r.passed());
    // the unit of the trivial dual goes to phi(. 1) = phi, the point mass at e
    DualQG d = build_dual(big, md.phi);
    CHECK(d.values * r.j.column(0) == md.phi.values());
    CHECK_FALSE(d.values * r.j.column(0) == big.counit().values());
}
