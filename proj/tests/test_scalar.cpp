#include "doctest.h"

#include <random>

#include "hopf/scalar.hpp"

using namespace hopf;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3);
    auto poly = [&](bool nonzero) {
        for (;;) {
            std::vector<GaussRational> c;
            const int d = deg(rng);
            for (int k = 0; k <= d; ++k) c.emplace_back(mpq_class(coef(rng), 1 + (coef(rng) & 1)), mpq_class(coef(rng) / 2));
            Poly p(std::move(c));
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return Scalar(poly(false), poly(true));
}

bool canonical(const Scalar& x) {
    if (x.is_zero()) return x.denominator() == Poly(GaussRational(1));
    return x.denominator().lead().is_one() && gcd(x.numerator(), x.denominator()).is_constant();
}

}  // namespace

TEST_CASE("literal parsing") {
    Scalar a = parse_scalar("1/2 + 3*i");
    CHECK(a.is_constant());
    CHECK(a.constant() == GaussRational(mpq_class(1, 2), 3));

    CHECK(parse_scalar("s^2") == Scalar::q());

    // (1 - s^4) = (1 - s^2)(1 + s^2)
    const Poly one_minus_s2({GaussRational(1), GaussRational(), GaussRational(-1)});
    const Poly one_plus_s2({GaussRational(1), GaussRational(), GaussRational(1)});
    CHECK(one_minus_s2 * one_plus_s2 == Poly({GaussRational(1), 0, 0, 0, GaussRational(-1)}));
    Scalar c = parse_scalar("(1 - s^4)/(1 - s^2)");
    CHECK(c.numerator() == one_plus_s2);
    CHECK(c.denominator() == Poly(GaussRational(1)));

    CHECK(parse_scalar(" - 2 * s ^ -2 ") == Scalar(-2) / Scalar::q());
    CHECK(parse_scalar("s^(-1)") == Scalar::s().inverse());
    CHECK(parse_scalar("i^2") == Scalar(-1));
}

TEST_CASE("literal errors") {
    CHECK_THROWS_AS(parse_scalar("1 +"), ParseError);
    CHECK_THROWS_AS(parse_scalar("2 x"), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1 + s"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/(s - s)"), DomainError);
    CHECK_THROWS_AS(parse_scalar("0^-1"), DomainError);
    try {
        parse_scalar("1 + $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("field operations") {
    const Scalar one_i = parse_scalar("1+i"), one_mi = parse_scalar("1-i");
    CHECK(one_i * one_mi == Scalar(2));
    CHECK(Scalar::s().inverse().to_string() == "1/s");
    CHECK((one_i * Scalar::s().pow(3)).conj() == one_mi * Scalar::s().pow(3));
    CHECK_THROWS_AS(Scalar().inverse(), DomainError);
}

TEST_CASE("canonical literal round-trips") {
    for (const char* lit : {"0", "1", "-3/4", "i", "-2*i", "(1/2 + 3*i)", "s", "-s^3 + 2*s - 1",
                            "1/s", "(s^2 + 1)/(s - 2)", "(1 - i)*s^2", "2*s/(3*s^2 + 1)"}) {
        Scalar x = parse_scalar(lit);
        CHECK(parse_scalar(x.to_string()) == x);
    }
    CHECK(parse_scalar("(1 - s^4)/(1 - s^2)").to_string() == "s^2 + 1");
    CHECK(parse_scalar("1/(2*s)").to_string() == "(1/2)/s");
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        const Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK(canonical(x + y));
        CHECK(canonical(x * y));
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x - x == Scalar());
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK(x.conj().conj() == x);
        CHECK(parse_scalar(x.to_string()) == x);
        // specialization commutes with the field operations away from poles
        const SpecPoint p(mpq_class(2, 7));
        try {
            CHECK((x * y + z).specialize(p) == x.specialize(p) * y.specialize(p) + z.specialize(p));
            CHECK(x.conj().specialize(p) == x.specialize(p).conj());
        } catch (const PoleError&) {
        }
    }
}

TEST_CASE("self-adjoint scalars specialize to rationals") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const Scalar x = random_scalar(rng);
        const Scalar h = x * x.conj() + x + x.conj();
        CHECK(h.is_self_adjoint());
        for (const auto& p : default_spec_points()) {
            try {
                CHECK(h.specialize(p).is_real());
            } catch (const PoleError&) {
            }
        }
    }
}

TEST_CASE("specialization and sign") {
    auto v = specialize_and_sign(parse_scalar("(1 - s^4)/(1 - s^2)"), SpecPoint(mpq_class(1, 2)));
    CHECK(v.value == GaussRational(mpq_class(5, 4)));
    REQUIRE(v.sign);
    CHECK(*v.sign == Sign::positive);

    auto w = specialize_and_sign(Scalar::i(), SpecPoint(mpq_class(1, 3)));
    CHECK(w.value == GaussRational::i());
    CHECK_FALSE(w.sign.has_value());
    CHECK_THROWS_AS(sign_at(Scalar::i(), SpecPoint(mpq_class(1, 3))), DomainError);

    CHECK_THROWS_AS(specialize_and_sign(parse_scalar("1/(2*s - 1)"), SpecPoint(mpq_class(1, 2))), PoleError);
    CHECK(positive_at(Scalar::q().inverse(), default_spec_points()));
    CHECK_FALSE(positive_at(-Scalar::q(), default_spec_points()));
}

TEST_CASE("spec points") {
    CHECK_THROWS_AS(SpecPoint(mpq_class(0)), DomainError);
    CHECK_THROWS_AS(SpecPoint(mpq_class(1)), DomainError);
    auto pts = parse_spec_points("1/3, 1/2,2/3");
    CHECK(pts == default_spec_points());
    CHECK_THROWS_AS(parse_spec_points("1/3,,1/2"), ParseError);
    CHECK_THROWS_AS(parse_spec_points("abc"), ParseError);
}

TEST_CASE("monomial form") {
    auto f = (Scalar(3) * Scalar::s().pow(-2)).monomial_form();
    REQUIRE(f);
    CHECK(f->first == GaussRational(3));
    CHECK(f->second == -2);
    CHECK_FALSE(parse_scalar("1 + s").monomial_form());
    CHECK(Scalar(5).monomial_form()->second == 0);
}
