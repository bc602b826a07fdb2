#include "doctest.h"

#include <array>
#include <random>

#include "hopf/algebra.hpp"
#include "hopf/eigen.hpp"
#include "hopf/positivity.hpp"

using namespace hopf;

namespace {

Scalar sc(const char* lit) { return parse_scalar(lit); }

Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const auto* x : r) m(i, j++) = sc(x);
        ++i;
    }
    return m;
}

// Sweedler's algebra on (1, g, x, gx): g^2 = 1, x^2 = 0, xg = -gx.
// Products computed from words in g, x reduced by those rules.
std::vector<MulEntry> sweedler_mul() {
    // basis element b = g^a x^c with index a + 2c
    std::vector<MulEntry> mul;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int c1 = 0; c1 < 2; ++c1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int c2 = 0; c2 < 2; ++c2) {
                    if (c1 + c2 > 1) continue;
                    // g^a1 x^c1 g^a2 x^c2: move g^a2 left past x^c1
                    const long sign = (c1 == 1 && a2 == 1) ? -1 : 1;
                    const int a = (a1 + a2) % 2, c = c1 + c2;
                    mul.push_back({std::size_t(a1 + 2 * c1), std::size_t(a2 + 2 * c2), std::size_t(a + 2 * c),
                                   Scalar(sign)});
                }
    return mul;
}

// Group algebra of S3 from explicit permutations.
std::vector<MulEntry> s3_mul(std::vector<std::array<int, 3>>& elems) {
    elems = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    std::vector<MulEntry> mul;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int t = 0; t < 3; ++t) c[t] = elems[i][elems[j][t]];
            for (std::size_t k = 0; k < 6; ++k)
                if (elems[k] == c) mul.push_back({i, j, k, Scalar(1)});
        }
    return mul;
}

}  // namespace

TEST_CASE("affine solving") {
    std::vector<LinearEquation> eqs{{{Scalar(1), Scalar(1)}, Scalar(1)}, {{Scalar(1), Scalar(-1)}, Scalar(0)}};
    auto sol = solve_affine(eqs, 2);
    REQUIRE(sol.is_point());
    CHECK(sol.particular == Vec{sc("1/2"), sc("1/2")});

    std::vector<LinearEquation> bad{{{Scalar(1), Scalar(1)}, Scalar(1)}, {{Scalar(1), Scalar(1)}, Scalar(2)}};
    CHECK_FALSE(solve_affine(bad, 2).consistent);

    std::vector<LinearEquation> line{{{Scalar(1), Scalar::s()}, Scalar::q()}};
    auto l = solve_affine(line, 2);
    REQUIRE(l.consistent);
    CHECK(l.dimension() == 1);
    CHECK(dot(line[0].coeffs, l.particular) == Scalar::q());
    CHECK(dot(line[0].coeffs, l.kernel[0]).is_zero());
}

TEST_CASE("incremental system matches batch elimination") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4;
        Matrix m(6, n);
        Vec rhs(6);
        LinearSystem sys(n);
        const Vec truth{Scalar(c(rng)), Scalar(c(rng)) * Scalar::s(), Scalar(c(rng)), Scalar(1)};
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(c(rng)) + (j == 1 ? Scalar::q() : Scalar(0));
            rhs[i] = dot(m.row(i), truth);
            sys.add(m.row(i), rhs[i]);
        }
        CHECK(sys.rank() == rank(m));
        auto sol = sys.solution();
        REQUIRE(sol.consistent);
        CHECK(m * sol.particular == rhs);
        for (const auto& k : sol.kernel) CHECK(is_zero(m * k));
        CHECK(sol.kernel.size() == n - rank(m));
    }
}

TEST_CASE("inverse and kernel") {
    Matrix a = mat({{"s", "1"}, {"0", "1/s"}});
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(2));
    CHECK(pow(a, -2) * pow(a, 2) == Matrix::identity(2));
    Matrix sing = mat({{"1", "s"}, {"s", "s^2"}});
    CHECK_FALSE(inverse(sing));
    auto k = kernel(sing);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(sing * k[0]));
}

TEST_CASE("characteristic polynomial and rational roots") {
    // (x - 2)(x + 1/3)(x - i)
    std::vector<std::vector<GaussRational>> d{{2, 0, 0}, {0, GaussRational(mpq_class(-1, 3)), 0}, {0, 0, GaussRational::i()}};
    Poly p = characteristic_polynomial(d);
    CHECK(p.degree() == 3);
    CHECK(p.eval(2).is_zero());
    CHECK(p.eval(GaussRational::i()).is_zero());
    auto roots = gaussian_rational_roots(p);
    CHECK(roots.size() == 3);
    // x^2 - 2 has no rational roots
    CHECK(gaussian_rational_roots(Poly({GaussRational(-2), 0, GaussRational(1)})).empty());
}

TEST_CASE("eigensplit of s-dependent diagonalizable maps") {
    Matrix d = Matrix::diagonal({Scalar::q(), Scalar::q().inverse()});
    auto es = eigensplit(d);
    REQUIRE(es.size() == 2);
    CHECK(es[0].value == Scalar::q().inverse());
    CHECK(es[1].value == Scalar::q());

    // conjugate by a unipotent change of basis
    Matrix p = mat({{"1", "s"}, {"0", "1"}});
    Matrix m = p * Matrix::diagonal({Scalar::q(), Scalar(3)}) * *inverse(p);
    auto em = eigensplit(m);
    REQUIRE(em.size() == 2);
    for (const auto& e : em)
        for (const auto& v : e.basis) CHECK(m * v == e.value * v);

    Matrix jordan = mat({{"1", "1"}, {"0", "1"}});
    CHECK_THROWS_AS(eigensplit(jordan), NotDiagonalizable);
}

TEST_CASE("eigensplit on an invariant subspace") {
    Matrix m = Matrix::diagonal({Scalar::q(), Scalar(2), Scalar(5)});
    std::vector<Vec> sub{unit_vec(3, 0), unit_vec(3, 1)};
    auto es = eigensplit_on(m, sub);
    REQUIRE(es.size() == 2);
    for (const auto& e : es)
        for (const auto& v : e.basis) {
            CHECK(v.size() == 3);
            CHECK(v[2].is_zero());
        }
    std::vector<Vec> not_inv{unit_vec(3, 0) + unit_vec(3, 1)};
    CHECK_THROWS_AS(eigensplit_on(m, not_inv), DomainError);
}

TEST_CASE("hermitian positivity certificates") {
    auto id = hermitian_psd(Matrix::identity(3));
    CHECK(id.verdict == Definiteness::positive_definite);
    CHECK(id.pivots.size() == 3);

    auto psd = hermitian_psd(mat({{"1", "1"}, {"1", "1"}}));
    CHECK(psd.verdict == Definiteness::positive_semidefinite);
    REQUIRE(psd.witness);
    CHECK(psd.witness_value->is_zero());

    Matrix ind = mat({{"0", "i"}, {"-i", "0"}});
    auto c = hermitian_psd(ind);
    CHECK(c.verdict == Definiteness::indefinite);
    REQUIRE(c.witness);
    const Scalar val = dot(conj(*c.witness), ind * *c.witness);
    CHECK(val == *c.witness_value);
    CHECK(val.is_self_adjoint());
    CHECK(sign_at(val, default_spec_points()[0]) == Sign::negative);

    auto nonherm = hermitian_psd(mat({{"1", "1"}, {"-1", "1"}}));
    CHECK_FALSE(nonherm.hermitian);
    CHECK(nonherm.verdict == Definiteness::indefinite);
    REQUIRE(nonherm.witness_value);
    CHECK_FALSE(nonherm.witness_value->is_self_adjoint());

    // singular at s = 1/2, negative beyond
    auto sdep = hermitian_psd(mat({{"1", "0"}, {"0", "1 - 4*s^2"}}));
    CHECK(sdep.at_specializations);
    CHECK(sdep.verdict == Definiteness::indefinite);
    REQUIRE(sdep.failing_point);
    CHECK(sdep.failing_point->value() == mpq_class(2, 3));
}

TEST_CASE("random Gram matrices are positive semidefinite") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int trial = 0; trial < 15; ++trial) {
        Matrix x(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) x(i, j) = Scalar(GaussRational(c(rng), c(rng)));
        Matrix g = x.transpose().conj() * x;
        auto cert = hermitian_psd(g);
        CHECK(cert.hermitian);
        CHECK(cert.verdict == Definiteness::positive_semidefinite);
        REQUIRE(cert.witness);
        CHECK(is_zero(g * *cert.witness));
    }
}

TEST_CASE("algebra construction and law checks") {
    std::vector<std::array<int, 3>> elems;
    auto s3 = build_algebra({"e", "(01)", "(12)", "(02)", "(012)", "(021)"}, s3_mul(elems), unit_vec(6, 0));
    CHECK(s3.dim() == 6);
    // (01)(12) as permutations
    const auto prod = s3.multiply(s3.basis(1), s3.basis(2));
    std::array<int, 3> c{};
    for (int t = 0; t < 3; ++t) c[t] = elems[1][elems[2][t]];
    for (std::size_t k = 0; k < 6; ++k) CHECK(prod[k] == Scalar(elems[k] == c ? 1 : 0));

    // C(Z2): minimal projections
    std::vector<MulEntry> cz2{{0, 0, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}};
    auto a = build_algebra({"d0", "d1"}, cz2, Vec{Scalar(1), Scalar(1)}, Matrix::identity(2));
    CHECK(a.has_star());

    // broken associativity: e0 e0 = e1, e1 e0 = e0, everything else zero
    std::vector<MulEntry> bad{{0, 0, 1, Scalar(1)}, {1, 0, 0, Scalar(1)}};
    try {
        build_algebra({"a", "b"}, bad);
        FAIL("expected associativity failure");
    } catch (const VerificationError& e) {
        CHECK(e.law() == "associativity");
    }

    std::vector<MulEntry> dup{{0, 0, 0, Scalar(1)}, {0, 0, 0, Scalar(2)}};
    CHECK_THROWS_AS(build_algebra({"a"}, dup), VerificationError);

    // degenerate: e1 annihilates everything
    std::vector<MulEntry> degen{{0, 0, 0, Scalar(1)}};
    try {
        build_algebra({"a", "b"}, degen);
        FAIL("expected non-degeneracy failure");
    } catch (const VerificationError& e) {
        CHECK(e.law() == "non-degeneracy");
    }

    // star that is not anti-multiplicative on a noncommutative algebra
    Matrix swap_star(6, 6);
    for (std::size_t k = 0; k < 6; ++k) swap_star(k, k) = Scalar(1);
    swap_star(4, 4) = Scalar(0);
    swap_star(5, 5) = Scalar(0);
    swap_star(4, 5) = Scalar(1);
    swap_star(5, 4) = Scalar(1);
    CHECK_NOTHROW(build_algebra({"e", "(01)", "(12)", "(02)", "(012)", "(021)"}, s3_mul(elems), unit_vec(6, 0),
                                swap_star));
    CHECK_THROWS_AS(build_algebra({"e", "(01)", "(12)", "(02)", "(012)", "(021)"}, s3_mul(elems), unit_vec(6, 0),
                                  Matrix::identity(6)),
                    VerificationError);
}

TEST_CASE("Sweedler algebra Gram matrix") {
    // g* = g, x* = x, hence (gx)* = xg = -gx
    Matrix star = Matrix::diagonal({Scalar(1), Scalar(1), Scalar(1), Scalar(-1)});
    auto h = build_algebra({"1", "g", "x", "gx"}, sweedler_mul(), unit_vec(4, 0), star);
    // x g = -g x
    CHECK(h.multiply(h.basis(2), h.basis(1)) == -1 * h.basis(3));
    // functional dual to gx
    Functional phi(unit_vec(4, 3));
    Matrix g = gram_matrix(h, phi);
    CHECK(g.transpose() == -1 * g);
    auto cert = gram_psd(h, phi);
    CHECK(cert.verdict == Definiteness::indefinite);
    CHECK_FALSE(cert.hermitian);
    CHECK_THROWS_AS(gram_psd(h.without_star(), phi), DomainError);

    auto t = tensor_algebra(h, h);
    CHECK(t.dim() == 16);
    CHECK(t.multiply(tensor(h.basis(1), h.basis(2)), tensor(h.basis(1), h.basis(2))) ==
          tensor(h.basis(0), h.multiply(h.basis(2), h.basis(2))));
}
