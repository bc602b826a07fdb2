#pragma once

// Exact coefficient field Q(i)(s): rational functions in a real parameter s
// with Gaussian-rational coefficients. The deformation parameter is q = s^2.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}
    GaussRational(mpq_class re, mpq_class im = 0);

    static GaussRational i() { return GaussRational(0, 1); }

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    mpq_class norm() const { return mpq_class(re_ * re_ + im_ * im_); }
    GaussRational inverse() const;

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string to_string() const;

private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& x);

// Dense univariate polynomial in s, lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(GaussRational c);
    explicit Poly(std::vector<GaussRational> coeffs);

    static Poly monomial(GaussRational c, std::size_t k);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    // -1 for the zero polynomial
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<GaussRational>& coeffs() const noexcept { return c_; }
    GaussRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussRational(); }
    const GaussRational& lead() const { return c_.back(); }

    Poly conj() const;
    Poly derivative() const;
    Poly scaled(const GaussRational& c) const;
    GaussRational eval(const GaussRational& x) const;
    // lowest index with nonzero coefficient (0 for zero poly)
    std::size_t valuation() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<GaussRational> c_;
};

// Quotient and remainder; throws DomainError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);

// A value of the parameter s; 0 < s < 1 so that q = s^2 lies in (0,1).
class SpecPoint {
public:
    explicit SpecPoint(mpq_class value);
    const mpq_class& value() const noexcept { return v_; }
    std::string to_string() const { return v_.get_str(); }
    friend bool operator==(const SpecPoint& a, const SpecPoint& b) { return a.v_ == b.v_; }

private:
    mpq_class v_;
};

using SpecPoints = std::vector<SpecPoint>;

// {1/3, 1/2, 2/3}
const SpecPoints& default_spec_points();
// Comma-separated list of rationals, e.g. "1/3,1/2". Throws ParseError.
SpecPoints parse_spec_points(std::string_view text);

enum class Sign { negative, zero, positive };
std::string to_string(Sign s);

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : num_(GaussRational(v)), den_(GaussRational(1)) { if (v == 0) num_ = Poly(); }
    Scalar(const GaussRational& c);
    Scalar(const mpq_class& c) : Scalar(GaussRational(c)) {}
    // num/den, canonicalized; throws DomainError if den is zero
    Scalar(Poly num, Poly den);

    static Scalar s();
    static Scalar i() { return Scalar(GaussRational::i()); }
    // q = s^2
    static Scalar q();

    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return den_.is_constant() && num_.is_constant() && !num_.is_zero() && num_.lead().is_one(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    // value when is_constant()
    GaussRational constant() const { return num_.is_zero() ? GaussRational() : num_.lead(); }

    Scalar conj() const;
    Scalar inverse() const;
    Scalar pow(long n) const;
    bool is_self_adjoint() const { return conj() == *this; }

    // r * s^k representation when the value has that shape
    std::optional<std::pair<GaussRational, long>> monomial_form() const;

    // exact value at s = p; throws PoleError when the denominator vanishes
    GaussRational specialize(const SpecPoint& p) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // canonical literal, re-parseable by parse_scalar
    std::string to_string() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_{GaussRational(1)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

// Literal grammar: integers, i, s, + - * / ^ (integer exponents), parentheses.
// Throws ParseError (with position) or DomainError (division by zero).
Scalar parse_scalar(std::string_view text);

struct SignedValue {
    GaussRational value;
    std::optional<Sign> sign;  // present iff the value is real
};

// Throws PoleError at a pole. The sign is absent when the value is not real.
SignedValue specialize_and_sign(const Scalar& x, const SpecPoint& p);

// Sign of a self-adjoint scalar at p; DomainError otherwise.
Sign sign_at(const Scalar& x, const SpecPoint& p);

// True when x is self-adjoint and strictly positive at every point.
bool positive_at(const Scalar& x, const SpecPoints& points);

}  // namespace hopf
