#include "hopf/scalar.hpp"

#include <cctype>
#include <sstream>

namespace hopf {

// ---------------------------------------------------------------- GaussRational

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRational GaussRational::inverse() const {
    if (is_zero()) throw DomainError("inversion of zero");
    mpq_class n = norm();
    return GaussRational(mpq_class(re_ / n), mpq_class(-im_ / n));
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string GaussRational::to_string() const {
    if (is_real()) return rational_str(re_);
    mpq_class aim = abs(im_);
    std::string imag = (aim == 1 ? std::string() : rational_str(aim) + "*") + "i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return "(" + rational_str(re_) + (sgn(im_) < 0 ? " - " : " + ") + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& x) { return os << x.to_string(); }

// ------------------------------------------------------------------------ Poly

Poly::Poly(GaussRational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(GaussRational c, std::size_t k) {
    if (c.is_zero()) return Poly();
    Poly p;
    p.c_.assign(k + 1, GaussRational());
    p.c_[k] = std::move(c);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::conj() const {
    Poly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x.conj());
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_.push_back(c_[k] * GaussRational(static_cast<long>(k)));
    r.trim();
    return r;
}

Poly Poly::scaled(const GaussRational& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

GaussRational Poly::eval(const GaussRational& x) const {
    GaussRational acc;
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc *= x;
        acc += c_[k];
    }
    return acc;
}

std::size_t Poly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return k;
    return 0;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
        if (k < a.c_.size()) r.c_[k] += a.c_[k];
        if (k < b.c_.size()) r.c_[k] += b.c_[k];
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussRational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<GaussRational> rem = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<GaussRational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const GaussRational inv_lead = b.lead().inverse();
    for (long k = a.degree(); k >= db; --k) {
        const GaussRational c = rem[static_cast<std::size_t>(k)] * inv_lead;
        quo[static_cast<std::size_t>(k - db)] = c;
        if (c.is_zero()) continue;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.lead().inverse());
}

namespace {

std::string term_string(const GaussRational& c, std::size_t k, bool first) {
    // sign handling: real or pure-imaginary coefficients pull their sign out
    bool negative = false;
    std::string body;
    if (c.is_real()) {
        negative = sgn(c.re()) < 0;
        mpq_class m = abs(c.re());
        if (!(m == 1 && k > 0)) body = m.get_str();
    } else if (sgn(c.re()) == 0) {
        negative = sgn(c.im()) < 0;
        mpq_class m = abs(c.im());
        body = (m == 1 ? std::string() : m.get_str() + "*") + "i";
    } else {
        body = c.to_string();
    }
    if (k > 0) {
        if (!body.empty()) body += "*";
        body += "s";
        if (k > 1) body += "^" + std::to_string(k);
    }
    if (first) return (negative ? "-" : "") + body;
    return (negative ? " - " : " + ") + body;
}

}  // namespace

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        out += term_string(c_[k], k, first);
        first = false;
    }
    return out;
}

// ------------------------------------------------------------------- SpecPoint

SpecPoint::SpecPoint(mpq_class value) : v_(std::move(value)) {
    v_.canonicalize();
    if (!(sgn(v_) > 0 && v_ < 1))
        throw DomainError("spec point " + v_.get_str() + " must lie strictly between 0 and 1");
}

const SpecPoints& default_spec_points() {
    static const SpecPoints pts{SpecPoint(mpq_class(1, 3)), SpecPoint(mpq_class(1, 2)), SpecPoint(mpq_class(2, 3))};
    return pts;
}

SpecPoints parse_spec_points(std::string_view text) {
    SpecPoints out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string item(text.substr(pos, end - pos));
        std::string trimmed;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty()) throw ParseError("empty spec point", pos);
        mpq_class v;
        if (v.set_str(trimmed, 10) != 0) throw ParseError("malformed spec point '" + trimmed + "'", pos);
        v.canonicalize();
        if (sgn(v.get_den()) == 0) throw ParseError("zero denominator in spec point", pos);
        out.emplace_back(v);
        pos = end + 1;
    }
    if (out.empty()) throw ParseError("no spec points", 0);
    return out;
}

std::string to_string(Sign s) {
    switch (s) {
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
        case Sign::positive: return "positive";
    }
    return "?";
}

// ---------------------------------------------------------------------- Scalar

Scalar::Scalar(const GaussRational& c) : num_(c), den_(GaussRational(1)) {}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("division by the zero polynomial");
    canonicalize();
}

Scalar Scalar::s() { return Scalar(Poly::monomial(GaussRational(1), 1), Poly(GaussRational(1))); }

Scalar Scalar::q() { return Scalar(Poly::monomial(GaussRational(1), 2), Poly(GaussRational(1))); }

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(GaussRational(1));
        return;
    }
    if (den_.is_constant()) {
        if (!den_.lead().is_one()) {
            num_ = num_.scaled(den_.lead().inverse());
            den_ = Poly(GaussRational(1));
        }
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    if (!den_.lead().is_one()) {
        GaussRational inv = den_.lead().inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ + o.num_;
        if (num_.is_zero()) den_ = Poly(GaussRational(1));
        return *this;
    }
    if (den_ == o.den_) {
        num_ = num_ + o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_;
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::conj() const {
    Scalar r;
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    r.canonicalize();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("inversion of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

std::optional<std::pair<GaussRational, long>> Scalar::monomial_form() const {
    if (is_zero()) return std::nullopt;
    const std::size_t nv = num_.valuation();
    for (std::size_t k = nv + 1; k < num_.coeffs().size(); ++k)
        if (!num_.coeffs()[k].is_zero()) return std::nullopt;
    const std::size_t dv = den_.valuation();
    if (static_cast<long>(dv) != den_.degree()) return std::nullopt;
    return std::make_pair(num_.coeffs()[nv], static_cast<long>(nv) - static_cast<long>(dv));
}

GaussRational Scalar::specialize(const SpecPoint& p) const {
    const GaussRational x(p.value());
    GaussRational d = den_.eval(x);
    if (d.is_zero()) throw PoleError("pole of " + to_string() + " at s = " + p.to_string());
    return num_.eval(x) / d;
}

std::string Scalar::to_string() const {
    std::string n = num_.to_string();
    if (den_.is_constant()) return n;
    std::string d = den_.to_string();
    if (n.find_first_of(" /") != std::string::npos) n = "(" + n + ")";
    if (d.find(' ') != std::string::npos || d.find('*') != std::string::npos || d.front() == '-')
        d = "(" + d + ")";
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------- parser

namespace {

class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) : t_(text) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != t_.size()) throw ParseError(std::string("unexpected '") + t_[pos_] + "'", pos_);
        return v;
    }

private:
    void skip() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < t_.size() && t_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                skip();
                const std::size_t at = pos_;
                Scalar d = unary();
                if (d.is_zero()) throw DomainError("division by zero at position " + std::to_string(at));
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (!eat('^')) return base;
        skip();
        const std::size_t at = pos_;
        long e = exponent();
        if (e < 0 && base.is_zero()) throw DomainError("division by zero at position " + std::to_string(at));
        return base.pow(e);
    }

    long exponent() {
        bool paren = eat('(');
        bool negative = false;
        if (eat('-')) negative = true;
        else eat('+');
        skip();
        const std::size_t start = pos_;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", pos_);
        if (pos_ - start > 5) throw ParseError("exponent too large", start);
        long e = std::stol(std::string(t_.substr(start, pos_ - start)));
        if (paren && !eat(')')) throw ParseError("expected ')'", pos_);
        return negative ? -e : e;
    }

    Scalar atom() {
        skip();
        if (pos_ >= t_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = t_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == 'i') {
            ++pos_;
            return Scalar::i();
        }
        if (c == 's') {
            ++pos_;
            return Scalar::s();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
            return Scalar(mpq_class(mpz_class(std::string(t_.substr(start, pos_ - start)))));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view t_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return LiteralParser(text).parse(); }

SignedValue specialize_and_sign(const Scalar& x, const SpecPoint& p) {
    SignedValue out{x.specialize(p), std::nullopt};
    if (out.value.is_real()) {
        const int sg = sgn(out.value.re());
        out.sign = sg < 0 ? Sign::negative : (sg == 0 ? Sign::zero : Sign::positive);
    }
    return out;
}

Sign sign_at(const Scalar& x, const SpecPoint& p) {
    if (!x.is_self_adjoint()) throw DomainError("sign requested for a non-self-adjoint scalar " + x.to_string());
    return *specialize_and_sign(x, p).sign;
}

bool positive_at(const Scalar& x, const SpecPoints& points) {
    if (!x.is_self_adjoint()) return false;
    for (const auto& p : points) {
        auto v = specialize_and_sign(x, p);
        if (!v.sign || *v.sign != Sign::positive) return false;
    }
    return true;
}

}  // namespace hopf
